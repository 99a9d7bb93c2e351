#include "ghostalg/ghost_algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace ghost {

bool GhostGenerator::operator==(const GhostGenerator& o) const {
    if (c_ == o.c_) return true;
    if (!c_ || !o.c_) return false;
    return *c_ == *o.c_;
}

std::strong_ordering GhostGenerator::operator<=>(const GhostGenerator& o) const {
    if (c_ == o.c_) return std::strong_ordering::equal;
    if (!c_) return std::strong_ordering::less;
    if (!o.c_) return std::strong_ordering::greater;
    return *c_ <=> *o.c_;
}

GhostMonomial::GhostMonomial(std::vector<GhostGenerator> gens) : f_(std::move(gens)) {
    std::sort(f_.begin(), f_.end());
}

GhostMonomial GhostMonomial::operator*(const GhostMonomial& o) const {
    GhostMonomial r;
    r.f_.reserve(f_.size() + o.f_.size());
    std::merge(f_.begin(), f_.end(), o.f_.begin(), o.f_.end(), std::back_inserter(r.f_));
    return r;
}

GhostMonomial GhostMonomial::without(std::size_t i) const {
    GhostMonomial r;
    r.f_ = f_;
    r.f_.erase(r.f_.begin() + static_cast<std::ptrdiff_t>(i));
    return r;
}

std::string GhostMonomial::to_string() const {
    if (f_.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < f_.size(); ++i) {
        if (i) s += "·";
        s += f_[i].to_string();
    }
    return s;
}

std::strong_ordering GhostMonomial::operator<=>(const GhostMonomial& o) const {
    if (auto c = f_.size() <=> o.f_.size(); c != 0) return c;
    return std::lexicographical_compare_three_way(f_.begin(), f_.end(), o.f_.begin(), o.f_.end());
}

GhostElement::GhostElement(const Configuration& c) { t_.emplace(GhostMonomial({GhostGenerator(c)}), 1); }

GhostElement::GhostElement(const GhostGenerator& g) { t_.emplace(GhostMonomial({g}), 1); }

GhostElement GhostElement::scalar(const Rational& r) {
    GhostElement e;
    e.add(GhostMonomial(), r);
    return e;
}

void GhostElement::add(const GhostMonomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = t_.try_emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (it->second == 0) t_.erase(it);
}

GhostElement& GhostElement::operator+=(const GhostElement& o) {
    for (const auto& [m, c] : o.t_) add(m, c);
    return *this;
}

GhostElement& GhostElement::operator-=(const GhostElement& o) {
    for (const auto& [m, c] : o.t_) add(m, -c);
    return *this;
}

GhostElement& GhostElement::operator*=(const Rational& r) {
    if (r == 0) {
        t_.clear();
        return *this;
    }
    for (auto& [m, c] : t_) c *= r;
    return *this;
}

GhostElement operator*(const GhostElement& a, const GhostElement& b) {
    GhostElement r;
    for (const auto& [m, c] : a.t_)
        for (const auto& [n, d] : b.t_) r.add(m * n, c * d);
    return r;
}

GhostElement GhostElement::reverse() const {
    GhostElement r;
    for (const auto& [m, c] : t_) {
        std::vector<GhostGenerator> f;
        for (const auto& g : m.factors()) f.push_back(g.is_casimir() ? g : GhostGenerator(g.config().reverse()));
        r.add(GhostMonomial(std::move(f)), c);
    }
    return r;
}

std::string render_term(const Rational& coeff, const std::string& monomial, bool first) {
    std::string s;
    Rational a = abs(coeff);
    if (first) {
        if (coeff < 0) s += "-";
    } else {
        s += coeff < 0 ? " - " : " + ";
    }
    if (monomial == "1") return s + to_string(a);
    if (a != 1) s += to_string(a) + "·";
    return s + monomial;
}

std::string GhostElement::to_string() const {
    if (t_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : t_) {
        s += render_term(c, m.to_string(), first);
        first = false;
    }
    return s;
}

namespace {

int parity_sign(std::size_t k) { return k % 2 == 0 ? 1 : -1; }

struct EdgeData {
    std::vector<ThetaGeodesic> edge;
    std::vector<EdgeTuple> opp;
};

EdgeData edge_data(const Configuration& c) {
    EdgeData d;
    for (EdgeIndex e = 0; e < c.edge_count(); ++e) {
        d.edge.push_back(c.edge(e));
        d.opp.push_back(c.opposite(e));
    }
    return d;
}

// [G,h] for G of rank >= 2.
GhostElement bracket_polygon_geodesic(const Configuration& G, const ThetaGeodesic& h) {
    GhostElement r;
    EdgeTuple ht{{h}};
    for (EdgeIndex e = 0; e < G.edge_count(); ++e) {
        Rational eps = epsilon(h, G.edge(e));
        if (eps == 0) continue;
        r.add(GhostMonomial({GhostGenerator(Configuration(ht + G.opposite(e)))}), -parity_sign(e) * eps);
    }
    return r;
}

}  // namespace

GhostElement bracket_generators(const Configuration& G, const Configuration& H, const ThetaSignature& sig) {
    if (G.rank() == 1 && H.rank() == 1) {
        const auto& g = G[0];
        const auto& h = H[0];
        Rational eps = epsilon(h, g);
        if (eps == 0) return {};
        GhostElement r(Configuration(std::vector<ThetaGeodesic>{h, g}));
        r -= GhostElement::scalar(sig.weight(h.label) * sig.weight(g.label)) * GhostElement::casimir();
        return r * eps;
    }
    if (H.rank() == 1) return bracket_polygon_geodesic(G, H[0]);
    if (G.rank() == 1) return -bracket_polygon_geodesic(H, G[0]);
    EdgeData dg = edge_data(G), dh = edge_data(H);
    GhostElement r;
    for (std::size_t i = 0; i < dg.edge.size(); ++i) {
        for (std::size_t j = 0; j < dh.edge.size(); ++j) {
            Rational eps = epsilon(dh.edge[j], dg.edge[i]);
            if (eps == 0) continue;
            r.add(GhostMonomial({GhostGenerator(Configuration(dg.opp[i] + dh.opp[j]))}), parity_sign(i + j) * eps);
        }
    }
    return r;
}

GhostElement bracket_generators(const GhostGenerator& G, const GhostGenerator& H, const ThetaSignature& sig) {
    if (G.is_casimir() || H.is_casimir()) return {};
    return bracket_generators(G.config(), H.config(), sig);
}

GhostElement bracket(const GhostElement& x, const GhostElement& y, const ThetaSignature& sig) {
    std::map<std::pair<GhostGenerator, GhostGenerator>, GhostElement> cache;
    auto gen_bracket = [&](const GhostGenerator& a, const GhostGenerator& b) -> const GhostElement& {
        auto key = std::make_pair(a, b);
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, bracket_generators(a, b, sig)).first;
        return it->second;
    };
    GhostElement r;
    for (const auto& [m, c] : x.terms()) {
        for (const auto& [n, d] : y.terms()) {
            const auto& fm = m.factors();
            const auto& fn = n.factors();
            for (std::size_t i = 0; i < fm.size(); ++i) {
                if (fm[i].is_casimir()) continue;
                for (std::size_t j = 0; j < fn.size(); ++j) {
                    if (fn[j].is_casimir()) continue;
                    const GhostElement& b = gen_bracket(fm[i], fn[j]);
                    if (b.is_zero()) continue;
                    GhostMonomial rest = m.without(i) * n.without(j);
                    Rational cd = c * d;
                    for (const auto& [k, e] : b.terms()) r.add(rest * k, cd * e);
                }
            }
        }
    }
    return r;
}

GhostElement nested_bracket(const std::vector<GhostElement>& xs, const ThetaSignature& sig) {
    if (xs.size() < 2) throw std::invalid_argument("nested_bracket needs at least two elements");
    GhostElement acc = xs.back();
    for (std::size_t k = xs.size() - 1; k-- > 0;) acc = bracket(xs[k], acc, sig);
    return acc;
}

GhostElement jacobiator(const GhostElement& a, const GhostElement& b, const GhostElement& c,
                        const ThetaSignature& sig) {
    return bracket(a, bracket(b, c, sig), sig) + bracket(b, bracket(c, a, sig), sig) +
           bracket(c, bracket(a, b, sig), sig);
}

std::set<ThetaGeodesic> visible_edges(const GhostElement& x) {
    std::set<ThetaGeodesic> s;
    for (const auto& [m, c] : x.terms())
        for (const auto& g : m.factors())
            if (!g.is_casimir())
                for (const auto& e : g.config().geodesics()) s.insert(e);
    return s;
}

bool share_triple_vertex(const Configuration& A, const Configuration& B, const Configuration& C) {
    auto va = A.vertices(), vb = B.vertices(), vc = C.vertices();
    std::vector<BoundaryPoint> ab, abc;
    std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(ab));
    std::set_intersection(ab.begin(), ab.end(), vc.begin(), vc.end(), std::back_inserter(abc));
    return !abc.empty();
}

// ---- cancellation families ----

ThetaGeodesic u_edge(const Configuration& B, EdgeIndex b, const Configuration& C, EdgeIndex c) {
    // The ghost edge of ⌈b*,c*⌉ running from the last edge of b* to the first of c*.
    const auto bs = B.opposite(b), cs = C.opposite(c);
    const auto& last = bs.edges.back();
    const auto& first = cs.edges.front();
    return ThetaGeodesic(first.minus(), last.plus(), last.label);
}

namespace {

GhostMonomial mono(const EdgeTuple& t) { return GhostMonomial({GhostGenerator(Configuration(t))}); }

}  // namespace

CancellationFamilies cancellation_terms(const Configuration& A, const Configuration& B, const Configuration& C) {
    CancellationFamilies F;
    EdgeData da = edge_data(A), db = edge_data(B), dc = edge_data(C);
    const std::size_t na = da.edge.size(), nb = db.edge.size(), nc = dc.edge.size();
    auto ia = [](std::size_t k) { return static_cast<int>(k % 2); };
    auto sgn = [](int k) { return k % 2 == 0 ? 1 : -1; };

    for (std::size_t a = 0; a < na; ++a) {
        const auto& ea = da.edge[a];
        const auto& as = da.opp[a];
        for (std::size_t b = 0; b < nb; ++b) {
            const auto& eb = db.edge[b];
            for (std::size_t c = 0; c < nc; ++c) {
                const auto& ec = dc.edge[c];
                Rational ecb = epsilon(ec, eb);
                if (ecb == 0) continue;
                // P1: phi an edge of B other than b
                for (std::size_t phi = 0; phi < nb; ++phi) {
                    if (phi == b) continue;
                    Rational e = epsilon(ea, db.edge[phi]);
                    if (e == 0) continue;
                    F.P1.add(mono(as + B.interval(phi, b) + dc.opp[c] + B.interval(b, phi)),
                             sgn(ia(a) + ia(phi) + ia(b) + ia(c)) * e * ecb);
                }
                // P2: phi an edge of C other than c
                for (std::size_t phi = 0; phi < nc; ++phi) {
                    if (phi == c) continue;
                    Rational e = epsilon(ea, dc.edge[phi]);
                    if (e == 0) continue;
                    F.P2.add(mono(as + C.interval(phi, c) + db.opp[b] + C.interval(c, phi)),
                             sgn(ia(a) + ia(phi) + ia(b) + ia(c)) * e * ecb);
                }
                if (b % 2 == 0) {
                    Rational e = epsilon(ea, eb);
                    if (e != 0) {
                        Rational k = sgn(ia(a) + ia(c)) * e * ecb;
                        F.Q1.add(mono(as + eb + dc.opp[c] + db.opp[b]), k);
                        F.Q2.add(mono(as + db.opp[b] + dc.opp[c] + eb), k);
                    }
                }
                if (c % 2 == 0) {
                    Rational e = epsilon(ea, ec);
                    if (e != 0) {
                        Rational k = sgn(ia(a) + ia(b)) * e * ecb;
                        F.R1.add(mono(as + ec + db.opp[b] + dc.opp[c]), k);
                        F.R2.add(mono(as + dc.opp[c] + db.opp[b] + ec), k);
                    }
                }
                Rational e1 = epsilon(ea, u_edge(B, b, C, c));
                if (e1 != 0) F.S1.add(mono(as + dc.opp[c] + db.opp[b]), sgn(ia(a) + ia(b) + ia(c)) * e1 * ecb);
                Rational e2 = epsilon(ea, u_edge(C, c, B, b));
                if (e2 != 0) F.S2.add(mono(as + db.opp[b] + dc.opp[c]), sgn(ia(a) + ia(b) + ia(c)) * e2 * ecb);
            }
        }
    }
    return F;
}

GhostElement assemble_triple_bracket(const Configuration& U, const Configuration& V, const Configuration& W) {
    CancellationFamilies F = cancellation_terms(U, V, W);
    // Sign carried by the rank-1 forms of the outer and inner brackets.
    int sigma = (U.rank() == 1 ? -1 : 1) * (((V.rank() == 1) != (W.rank() == 1)) ? -1 : 1);
    GhostElement pqr, s = F.S1 + F.S2;
    if (V.rank() > 1) pqr += F.P1 + F.Q1 + F.Q2;
    else pqr += F.Q1;
    if (W.rank() > 1) pqr += F.P2 + F.R1 + F.R2;
    else pqr += F.R1;
    return (s - pqr) * Rational(sigma);
}

}  // namespace ghost
