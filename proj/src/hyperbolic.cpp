#include "ghostalg/hyperbolic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <vector>

namespace ghost {

namespace {

// Hyperboloid model on (a,b,c) with form B(u,v) = u_b v_b − (u_a v_c + u_c v_a)/2.
// The point x+iy sits at (1, x, x²+y²)/y and the boundary point t at (1, t, t²).
using Real = long double;
using Vec = std::array<Real, 3>;

Real B(const Vec& u, const Vec& v) { return u[1] * v[1] - 0.5 * (u[0] * v[2] + u[2] * v[0]); }
Vec add(const Vec& u, const Vec& v, Real s = 1) { return {u[0] + s * v[0], u[1] + s * v[1], u[2] + s * v[2]}; }
Vec scale(const Vec& u, Real s) { return {u[0] * s, u[1] * s, u[2] * s}; }

Vec embed(const HyperbolicPoint& p) {
    Real x = p.x, y = p.y;
    return {1 / y, x / y, (x * x + y * y) / y};
}

HyperbolicPoint chart(const Vec& v) { return {static_cast<double>(v[1] / v[0]), static_cast<double>(1 / v[0])}; }

Vec normalize_point(const Vec& v) { return scale(v, 1 / std::sqrt(-B(v, v))); }

// Exact affine change of coordinates t ↦ (t − shift)/scale applied before rounding.
struct Affine {
    Rational shift{0}, scale{1};
};

Real to_real(const Rational& r) {
    double hi = r.get_d();
    Rational rest = r - Rational(hi);
    return static_cast<Real>(hi) + static_cast<Real>(rest.get_d());
}

Vec light(const BoundaryPoint& t, const Affine& a) {
    if (t.is_infinity()) return {0, 0, 1};
    Real x = to_real((t.value() - a.shift) / a.scale);
    return {1, x, x * x};
}

// Unit spacelike normal of the geodesic: B(n, ·) vanishes on both endpoints.
Vec normal(const OrientedGeodesic& g, const Affine& af = {}) {
    Vec u = light(g.src, af), v = light(g.dst, af);
    Vec cr = {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
    // Gram matrix [[0,0,-1/2],[0,1,0],[-1/2,0,0]] has inverse [[0,0,-2],[0,1,0],[-2,0,0]].
    Vec n = {-2 * cr[2], cr[1], -2 * cr[0]};
    return scale(n, 1 / std::sqrt(B(n, n)));
}

struct Frame {
    Vec p, e1, e2;  // point and orthonormal tangent basis
};

Frame frame_at(const Vec& p) {
    // Gram–Schmidt on two fixed spacelike directions projected to the tangent plane.
    auto proj = [&p](const Vec& v) { return add(v, p, B(v, p)); };
    Vec a = proj({0, 1, 0});
    a = scale(a, 1 / std::sqrt(B(a, a)));
    Vec b = proj({1, 0, 1});
    b = add(b, a, -B(b, a));
    if (B(b, b) < 1e-12) {
        b = proj({1, 0, -1});
        b = add(b, a, -B(b, a));
    }
    b = scale(b, 1 / std::sqrt(B(b, b)));
    return {p, a, b};
}

Vec exp_map(const Frame& f, Real u1, Real u2) {
    Real r = std::hypot(u1, u2);
    if (r == 0) return f.p;
    Vec dir = add(scale(f.e1, u1 / r), f.e2, u2 / r);
    return normalize_point(add(scale(f.p, std::cosh(r)), dir, std::sinh(r)));
}

class Objective {
public:
    explicit Objective(std::vector<Vec> normals) : n_(std::move(normals)) {}

    Real value(const Vec& p) const {
        Real s = 0;
        for (const auto& n : n_) s += std::asinh(std::abs(B(p, n)));
        return s;
    }

    // Smooth gradient part and the unit normals of the active (touching) geodesics.
    void derivatives(const Frame& f, std::array<Real, 2>& grad, std::array<Real, 3>& hess,
                     std::vector<std::array<Real, 2>>* active, Real active_tol,
                     const std::vector<std::size_t>& forced = {}) const {
        grad = {0, 0};
        hess = {0, 0, 0};
        for (std::size_t i = 0; i < n_.size(); ++i) {
            const Vec& n = n_[i];
            Real a = B(f.p, n);
            Real b1 = B(f.e1, n), b2 = B(f.e2, n);
            Real q = std::sqrt(1 + a * a);
            bool is_forced = std::find(forced.begin(), forced.end(), i) != forced.end();
            if (active && (is_forced || std::abs(a) <= active_tol)) {
                Real m = std::hypot(b1, b2);
                active->push_back({b1 / m, b2 / m});
                continue;
            }
            Real s = a < 0 ? -1 : 1;
            grad[0] += s * b1 / q;
            grad[1] += s * b2 / q;
            Real c = s * a / q, d = s * a / (q * q * q);
            hess[0] += c - d * b1 * b1;
            hess[1] += -d * b1 * b2;
            hess[2] += c - d * b2 * b2;
        }
    }

    // Norm of the smallest element of the subdifferential at p.
    Real subgradient_norm(const Vec& p, Real active_tol, const std::vector<std::size_t>& forced) const {
        Frame f = frame_at(p);
        std::array<Real, 2> g;
        std::array<Real, 3> h;
        std::vector<std::array<Real, 2>> act;
        derivatives(f, g, h, &act, active_tol, forced);
        return min_norm(g, act);
    }

    const std::vector<Vec>& normals() const { return n_; }

private:
    // min |g + Σ λ_i u_i| over λ ∈ [−1,1]^k, by enumerating which λ_i are free
    // (at most two can be free in the plane) and clamping the rest.
    static Real min_norm(const std::array<Real, 2>& g, const std::vector<std::array<Real, 2>>& u) {
        std::size_t k = u.size();
        if (k == 0) return std::hypot(g[0], g[1]);
        Real best = std::numeric_limits<Real>::infinity();
        std::size_t combos = 1;
        for (std::size_t i = 0; i < k; ++i) combos *= 3;  // free, −1, +1
        if (k > 8) combos = 0;
        for (std::size_t code = 0; code < combos; ++code) {
            std::vector<int> state(k);
            std::size_t c = code, nfree = 0;
            for (std::size_t i = 0; i < k; ++i, c /= 3) {
                state[i] = static_cast<int>(c % 3);
                if (state[i] == 0) ++nfree;
            }
            if (nfree > 2) continue;
            std::array<Real, 2> r = g;
            std::vector<std::size_t> fr;
            for (std::size_t i = 0; i < k; ++i) {
                if (state[i] == 0) fr.push_back(i);
                else {
                    Real l = state[i] == 1 ? -1 : 1;
                    r[0] += l * u[i][0];
                    r[1] += l * u[i][1];
                }
            }
            std::vector<Real> lam;
            if (fr.size() == 1) {
                const auto& v = u[fr[0]];
                lam = {-(r[0] * v[0] + r[1] * v[1])};
            } else if (fr.size() == 2) {
                const auto &v = u[fr[0]], &w = u[fr[1]];
                Real det = v[0] * w[1] - v[1] * w[0];
                if (std::abs(det) < 1e-14) continue;
                lam = {(-r[0] * w[1] + r[1] * w[0]) / det, (-v[0] * r[1] + v[1] * r[0]) / det};
            }
            bool ok = true;
            for (std::size_t j = 0; j < fr.size(); ++j) {
                if (std::abs(lam[j]) > 1 + 1e-12) ok = false;
                r[0] += lam[j] * u[fr[j]][0];
                r[1] += lam[j] * u[fr[j]][1];
            }
            if (ok) best = std::min(best, std::hypot(r[0], r[1]));
        }
        if (combos == 0) best = std::hypot(g[0], g[1]);
        return best;
    }

    std::vector<Vec> n_;
};

// Point of the geodesic with normal n closest to p, and the unit tangent there.
std::pair<Vec, Vec> foot_and_tangent(const Vec& p, const Vec& n) {
    Vec q = normalize_point(add(p, n, -B(p, n)));
    // Tangent: orthogonal to both q and n.
    Vec t = {0, 0, 0};
    for (const Vec& trial : {Vec{0, 1, 0}, Vec{1, 0, 1}, Vec{1, 0, -1}}) {
        Vec v = add(add(trial, q, B(trial, q)), n, -B(trial, n));
        if (B(v, v) > 1e-8) {
            t = scale(v, 1 / std::sqrt(B(v, v)));
            break;
        }
    }
    return {q, t};
}

// 1D convex minimization along a geodesic by bisection on the one-sided derivative.
std::optional<Vec> minimize_along(const Objective& obj, std::size_t skip, const Vec& base) {
    auto [q, t] = foot_and_tangent(base, obj.normals()[skip]);
    auto at = [&](Real s) { return add(scale(q, std::cosh(s)), t, std::sinh(s)); };
    auto deriv = [&](Real s) {
        Vec p = at(s), dp = add(scale(q, std::sinh(s)), t, std::cosh(s));
        Real d = 0;
        for (std::size_t j = 0; j < obj.normals().size(); ++j) {
            if (j == skip) continue;
            Real a = B(p, obj.normals()[j]);
            Real sg = a < 0 ? -1 : 1;
            d += sg * B(dp, obj.normals()[j]) / std::sqrt(1 + a * a);
        }
        return d;
    };
    Real lo = -40, hi = 40;
    if (deriv(lo) > 0 || deriv(hi) < 0) return std::nullopt;
    for (int i = 0; i < 200 && hi - lo > 0; ++i) {
        Real mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        if (deriv(mid) < 0) lo = mid;
        else hi = mid;
    }
    return normalize_point(at(0.5 * (lo + hi)));
}

Real grad_norm(const Objective& obj, const Vec& p) {
    std::array<Real, 2> g;
    std::array<Real, 3> h;
    obj.derivatives(frame_at(p), g, h, nullptr, 0);
    return std::hypot(g[0], g[1]);
}

// Damped Newton with backtracking; returns the last iterate.
Vec newton(const Objective& obj, Vec p, int max_iter, Real tol, int& iters) {
    Real fp = obj.value(p), f_mark = fp;
    int stalled = 0;
    for (int it = 0; it < max_iter; ++it) {
        // Stop when a run of iterations makes no real progress (iterates pinned at a kink).
        if (fp < f_mark - 1e-15L * (1 + f_mark)) {
            f_mark = fp;
            stalled = 0;
        } else if (++stalled > 20) {
            break;
        }
        ++iters;
        Frame f = frame_at(p);
        std::array<Real, 2> g;
        std::array<Real, 3> h;
        obj.derivatives(f, g, h, nullptr, 0);
        Real gn = std::hypot(g[0], g[1]);
        if (gn < tol * 1e-3) break;
        Real det = h[0] * h[2] - h[1] * h[1];
        Real d1 = -g[0], d2 = -g[1];
        if (h[0] > 0 && det > 1e-14 * (1 + h[0] * h[0])) {
            d1 = -(h[2] * g[0] - h[1] * g[1]) / det;
            d2 = -(-h[1] * g[0] + h[0] * g[1]) / det;
        }
        if (d1 * g[0] + d2 * g[1] >= 0) {
            d1 = -g[0];
            d2 = -g[1];
        }
        Real len = std::hypot(d1, d2);
        if (len > 1) {
            d1 /= len;
            d2 /= len;
        }
        Real step = 1;
        bool moved = false;
        for (int k = 0; k < 60; ++k, step *= 0.5) {
            Vec q = exp_map(f, step * d1, step * d2);
            Real fq = obj.value(q);
            // Near the optimum the decrease drops below rounding; accept a smaller gradient instead.
            bool flat = fq <= fp + 16 * std::numeric_limits<Real>::epsilon() * (1 + fp);
            if (fq < fp || (flat && grad_norm(obj, q) < gn)) {
                p = q;
                fp = fq;
                moved = true;
                break;
            }
        }
        if (!moved) break;
    }
    return p;
}

struct Solved {
    Vec p;
    Real f = 0, g = 0;
    int iterations = 0;
};

Solved solve(const std::vector<OrientedGeodesic>& gs, const Affine& af, const BarycenterOptions& opt) {
    std::vector<Vec> normals;
    for (const auto& g : gs) normals.push_back(normal(g, af));
    Objective obj(normals);
    const Real active_tol = 1e-13L;

    struct Candidate {
        Vec p;
        std::vector<std::size_t> active;
    };
    Solved res;
    std::vector<Candidate> cands;

    // Crossing points.
    for (std::size_t i = 0; i < gs.size(); ++i) {
        for (std::size_t j = i + 1; j < gs.size(); ++j) {
            if (!separates(gs[i], gs[j])) continue;
            const Vec &n = normals[i], &m = normals[j];
            // Timelike vector B-orthogonal to both normals.
            Vec cr = {n[1] * m[2] - n[2] * m[1], n[2] * m[0] - n[0] * m[2], n[0] * m[1] - n[1] * m[0]};
            Vec v = {-2 * cr[2], cr[1], -2 * cr[0]};
            if (B(v, v) >= 0) continue;
            if (v[0] < 0) v = scale(v, -1);
            cands.push_back({normalize_point(v), {i, j}});
        }
    }

    // Interior critical point from the normalized sum of the feet of the origin.
    Vec origin = embed({0, 1});
    Vec start = {0, 0, 0};
    for (const auto& n : normals) start = add(start, foot_and_tangent(origin, n).first);
    start = normalize_point(start);
    cands.push_back({newton(obj, start, opt.max_iterations, opt.tolerance, res.iterations), {}});

    // Minima along each geodesic, based at the current best point.
    Vec best = cands[0].p;
    for (const auto& v : cands)
        if (obj.value(v.p) < obj.value(best)) best = v.p;
    for (std::size_t i = 0; i < normals.size(); ++i) {
        ++res.iterations;
        if (auto v = minimize_along(obj, i, best)) cands.push_back({*v, {i}});
    }

    // Two disjoint classes of equal weight: the minimizers fill the common
    // perpendicular segment; take its midpoint.
    std::size_t first_other = 0, same = 0;
    for (std::size_t i = 0; i < gs.size(); ++i) {
        if (gs[i] == gs[0] || gs[i] == gs[0].reverse()) ++same;
        else if (first_other == 0) first_other = i;
    }
    bool two_classes = std::all_of(gs.begin(), gs.end(), [&](const OrientedGeodesic& g) {
        const auto& h = gs[first_other];
        return g == gs[0] || g == gs[0].reverse() || g == h || g == h.reverse();
    });
    if (two_classes && 2 * same == gs.size() && !separates(gs[0], gs[first_other])) {
        auto a = minimize_along(obj, 0, best), b = minimize_along(obj, first_other, best);
        if (a && b) {
            res.p = normalize_point(add(*a, *b));
            res.f = obj.value(res.p);
            res.g = obj.subgradient_norm(res.p, active_tol, {});
            return res;
        }
    }

    Real fbest = std::numeric_limits<Real>::infinity(), gbest = fbest;
    for (const auto& [v, act] : cands) {
        Real fv = obj.value(v), gv = obj.subgradient_norm(v, active_tol, act);
        // Prefer certified points; among them the lowest objective.
        bool better = (gv <= opt.tolerance) != (gbest <= opt.tolerance) ? gv <= opt.tolerance : fv < fbest;
        if (better) {
            best = v;
            fbest = fv;
            gbest = gv;
        }
    }
    res.p = best;
    res.f = fbest;
    res.g = gbest;
    return res;
}


}  // namespace

double hyperbolic_distance(const HyperbolicPoint& a, const HyperbolicPoint& b) {
    Real dx = Real(a.x) - b.x, dy = Real(a.y) - b.y;
    Real chord = std::sqrt(dx * dx + dy * dy) / (2 * std::sqrt(Real(a.y) * b.y));
    return static_cast<double>(2 * std::asinh(chord));
}

double distance_to_geodesic(const HyperbolicPoint& p, const OrientedGeodesic& g) {
    if (g.is_phantom()) throw std::invalid_argument("distance to a phantom geodesic");
    return static_cast<double>(std::asinh(std::abs(B(embed(p), normal(g)))));
}

HyperbolicPoint apply_mobius(const MobiusMap& m, const HyperbolicPoint& p) {
    std::complex<double> z = p.z();
    if (m.det() < 0) z = std::conj(z);
    std::complex<double> w = (double(m.a()) * z + double(m.b())) / (double(m.c()) * z + double(m.d()));
    return {w.real(), w.imag()};
}

BarycenterResult barycenter(const Configuration& c, const BarycenterOptions& opt) {
    std::vector<OrientedGeodesic> gs;
    for (const auto& g : c.geodesics()) {
        if (g.is_phantom()) throw std::invalid_argument("barycenter of a configuration with a phantom edge");
        gs.push_back(g.geo);
    }
    bool all_same = std::all_of(gs.begin(), gs.end(), [&](const OrientedGeodesic& g) {
        return g == gs[0] || g == gs[0].reverse();
    });
    if (all_same) throw std::invalid_argument("configuration is not generic: all geodesics coincide");

    for (const auto& end : {gs[0].src, gs[0].dst}) {
        bool common = std::all_of(gs.begin(), gs.end(),
                                  [&](const OrientedGeodesic& g) { return g.src == end || g.dst == end; });
        if (common)
            throw std::invalid_argument("minimum not attained: all geodesics end at " + end.to_string());
    }

    Solved rough = solve(gs, {}, opt);
    // Re-solve in coordinates centred at the rough estimate, where rounding is benign.
    HyperbolicPoint c0 = chart(rough.p);
    Affine af{Rational(c0.x), Rational(c0.y)};
    Solved fine = solve(gs, af, opt);
    if (fine.g > opt.tolerance)
        throw NonConvergence("barycenter not certified: subgradient norm " + std::to_string(static_cast<double>(fine.g)));
    BarycenterResult res;
    Real x = fine.p[1] / fine.p[0], y = 1 / fine.p[0];
    Real sh = to_real(af.shift), sc = to_real(af.scale);
    res.point = {static_cast<double>(sh + sc * x), static_cast<double>(sc * y)};
    res.objective = static_cast<double>(fine.f);
    res.gradient_norm = static_cast<double>(fine.g);
    res.iterations = rough.iterations + fine.iterations;
    return res;
}

double core_diameter(const Configuration& c, const BarycenterOptions& opt) {
    auto b = barycenter(c, opt);
    double r = 0;
    for (const auto& g : c.geodesics()) r = std::max(r, distance_to_geodesic(b.point, g.geo));
    return r;
}

}  // namespace ghost
