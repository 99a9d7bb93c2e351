#include "ghostalg/representations.hpp"

#include "ghostalg/sampling.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <unordered_map>

namespace ghost {

struct LimitFamily::State {
    FamilyKind kind = FamilyKind::Fuchsian;
    int d = 2;
    ThetaSignature sig;
    std::uint64_t seed = 0;
    bool dual = false;

    std::mutex mu;
    std::unordered_map<BoundaryPoint, Matrix> flags;
    std::map<ThetaGeodesic, Matrix> projectors;
};

namespace {

Rational falling(int i, int j) {
    Rational r(1);
    for (int k = i; k > i - j; --k) r *= k;
    return r;
}

// Osculating flag of the Veronese curve t ↦ (1, t, t², …).
Matrix veronese_flag(int d, const BoundaryPoint& x) {
    Matrix m(d, d);
    if (x.is_infinity()) {
        for (int j = 0; j < d; ++j) m(d - 1 - j, j) = 1;
        return m;
    }
    Rational t = x.value();
    for (int j = 0; j < d; ++j) {
        Rational pw(1);
        for (int i = j; i < d; ++i) {
            m(i, j) = falling(i, j) * pw;
            pw *= t;
        }
    }
    return m;
}

Matrix generic_flag(std::uint64_t seed, int d, const BoundaryPoint& x) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(x.p()), static_cast<std::uint32_t>(static_cast<std::uint64_t>(x.p()) >> 32),
                      static_cast<std::uint32_t>(x.q()), static_cast<std::uint32_t>(static_cast<std::uint64_t>(x.q()) >> 32)};
    std::mt19937_64 rng(seq);
    std::uniform_int_distribution<int> dist(-20, 20);
    for (;;) {
        Matrix m(d, d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) m(i, j) = dist(rng);
        if (m.is_invertible()) return m;
    }
}

void check_signature(const ThetaSignature& sig, int d) {
    if (sig.ambient() != d) throw std::invalid_argument("signature ambient dimension differs from family dimension");
}

}  // namespace

LimitFamily LimitFamily::fuchsian() {
    auto s = std::make_shared<State>();
    s->kind = FamilyKind::Fuchsian;
    s->d = 2;
    s->sig = ThetaSignature::projective(2);
    return LimitFamily(s);
}

LimitFamily LimitFamily::veronese(int d) { return veronese(d, ThetaSignature::projective(d)); }

LimitFamily LimitFamily::veronese(int d, const ThetaSignature& sig) {
    if (d < 2) throw std::invalid_argument("dimension must be at least 2");
    check_signature(sig, d);
    auto s = std::make_shared<State>();
    s->kind = d == 2 && sig.is_projective() ? FamilyKind::Fuchsian : FamilyKind::Veronese;
    s->d = d;
    s->sig = sig;
    return LimitFamily(s);
}

LimitFamily LimitFamily::generic(std::uint64_t seed, int d) {
    return generic(seed, d, ThetaSignature::projective(d));
}

LimitFamily LimitFamily::generic(std::uint64_t seed, int d, const ThetaSignature& sig) {
    if (d < 2) throw std::invalid_argument("dimension must be at least 2");
    check_signature(sig, d);
    auto s = std::make_shared<State>();
    s->kind = FamilyKind::Generic;
    s->d = d;
    s->sig = sig;
    s->seed = seed;
    return LimitFamily(s);
}

LimitFamily LimitFamily::dual() const {
    auto s = std::make_shared<State>();
    s->kind = s_->kind;
    s->d = s_->d;
    s->sig = s_->sig;
    s->seed = s_->seed;
    s->dual = !s_->dual;
    return LimitFamily(s);
}

FamilyKind LimitFamily::kind() const { return s_->kind; }
bool LimitFamily::is_dual() const { return s_->dual; }
int LimitFamily::dim() const { return s_->d; }
const ThetaSignature& LimitFamily::signature() const { return s_->sig; }

std::string LimitFamily::name() const {
    std::string n;
    switch (s_->kind) {
    case FamilyKind::Fuchsian: n = "fuchsian"; break;
    case FamilyKind::Veronese: n = "veronese(" + std::to_string(s_->d) + ")"; break;
    case FamilyKind::Generic:
        n = "generic(" + std::to_string(s_->seed) + "," + std::to_string(s_->d) + ")";
        break;
    }
    return s_->dual ? "dual " + n : n;
}

const Matrix& LimitFamily::flag(const BoundaryPoint& x) const {
    std::lock_guard lock(s_->mu);
    auto it = s_->flags.find(x);
    if (it != s_->flags.end()) return it->second;
    Matrix m = s_->kind == FamilyKind::Generic ? generic_flag(s_->seed, s_->d, x) : veronese_flag(s_->d, x);
    if (s_->dual) {
        // Columns are the rows of the inverse, last row first.
        Matrix inv = m.inverse();
        int d = s_->d;
        Matrix f(d, d);
        for (int j = 0; j < d; ++j)
            for (int i = 0; i < d; ++i) f(i, j) = inv(d - 1 - j, i);
        m = f;
    }
    return s_->flags.emplace(x, std::move(m)).first->second;
}

Matrix LimitFamily::line(const BoundaryPoint& x) const { return flag(x).columns(0, 1); }

Matrix LimitFamily::covector(const BoundaryPoint& x) const {
    return flag(x).inverse().rows_block(s_->d - 1, 1);
}

const Matrix& LimitFamily::projector(const ThetaGeodesic& g) const {
    {
        std::lock_guard lock(s_->mu);
        auto it = s_->projectors.find(g);
        if (it != s_->projectors.end()) return it->second;
    }
    int d = s_->d;
    Matrix p;
    if (g.is_phantom()) {
        p = Matrix::identity(d);
    } else {
        int k = s_->sig.weight(g.label);
        Matrix u = flag(g.plus()).columns(0, k);
        Matrix w = flag(g.minus()).columns(0, d - k);
        Matrix m = u.hconcat(w);
        if (!m.is_invertible())
            throw TransversalityError(g, "flags at the endpoints of " + g.to_string() + " are not transverse");
        p = u * m.inverse().rows_block(0, k);
    }
    std::lock_guard lock(s_->mu);
    return s_->projectors.emplace(g, std::move(p)).first->second;
}

namespace {

Matrix product_of(const LimitFamily& f, const std::vector<ThetaGeodesic>& gs) {
    // p(g_n)⋯p(g_1)
    Matrix m = Matrix::identity(f.dim());
    for (const auto& g : gs) m = f.projector(g) * m;
    return m;
}

Rational trace_pair(const LimitFamily& f, const ThetaGeodesic& a, const ThetaGeodesic& b) {
    return (f.projector(b) * f.projector(a)).trace();
}

Rational T(const LimitFamily& f, const std::vector<ThetaGeodesic>& gs) { return product_of(f, gs).trace(); }

Rational sign_of(EdgeIndex e) { return e % 2 == 0 ? Rational(1) : Rational(-1); }

}  // namespace

Rational correlation(const LimitFamily& f, const Configuration& c) { return T(f, c.geodesics()); }

Rational correlation(const LimitFamily& f, const GhostElement& x) {
    Rational total(0);
    for (const auto& [mono, coeff] : x.terms()) {
        Rational v = coeff;
        for (const auto& g : mono.factors()) {
            if (g.is_casimir()) v /= f.dim();
            else v *= correlation(f, g.config());
            if (v == 0) break;
        }
        total += v;
    }
    return total;
}

Matrix opposite_endomorphism(const LimitFamily& f, const Configuration& c, EdgeIndex e) {
    return product_of(f, c.opposite(e).edges);
}

Matrix edge_projector(const LimitFamily& f, const Configuration& c, EdgeIndex e) {
    return f.projector(c.edge(e));
}

namespace {

Rational base_intersection(const LimitFamily& f, const ThetaGeodesic& g, const ThetaGeodesic& h) {
    Rational eps = epsilon(h, g);
    if (eps == 0) return 0;
    const auto& sig = f.signature();
    Rational kk(sig.weight(g.label) * sig.weight(h.label), sig.ambient());
    kk.canonicalize();
    return eps * (T(f, {g, h}) - kk);
}

Rational config_with_geodesic(const LimitFamily& f, const Configuration& G, const ThetaGeodesic& h) {
    Rational total(0);
    for (EdgeIndex e = 0; e < G.edge_count(); ++e) {
        Rational eps = epsilon(h, G.edge(e));
        if (eps == 0) continue;
        auto tuple = h + G.opposite(e);
        total -= sign_of(e) * eps * T(f, tuple.edges);
    }
    return total;
}

void require_projective(const LimitFamily& f) {
    if (!f.signature().is_projective())
        throw std::invalid_argument("the factored intersection requires a projective signature");
}

}  // namespace

Rational intersection(const LimitFamily& f, const Configuration& G, const Configuration& H) {
    if (G.rank() == 1 && H.rank() == 1) return base_intersection(f, G[0], H[0]);
    if (H.rank() == 1) return config_with_geodesic(f, G, H[0]);
    if (G.rank() == 1) return -config_with_geodesic(f, H, G[0]);
    Rational total(0);
    for (EdgeIndex i = 0; i < G.edge_count(); ++i) {
        for (EdgeIndex j = 0; j < H.edge_count(); ++j) {
            Rational eps = epsilon(H.edge(j), G.edge(i));
            if (eps == 0) continue;
            auto tuple = H.opposite(j) + G.opposite(i);
            total += sign_of(i + j) * eps * T(f, tuple.edges);
        }
    }
    return total;
}

Rational intersection_factored(const LimitFamily& f, const Configuration& G, const Configuration& H) {
    require_projective(f);
    if (G.rank() == 1 && H.rank() == 1) return base_intersection(f, G[0], H[0]);
    auto one_sided = [&f](const Configuration& C, const ThetaGeodesic& h) {
        Rational sum(0);
        for (EdgeIndex e = 0; e < C.edge_count(); ++e) {
            Rational eps = epsilon(h, C.edge(e));
            if (eps != 0) sum -= sign_of(e) * eps * trace_pair(f, h, C.edge(e));
        }
        return sum == 0 ? sum : Rational(correlation(f, C) * sum);
    };
    if (H.rank() == 1) return one_sided(G, H[0]);
    if (G.rank() == 1) return -one_sided(H, G[0]);
    Rational sum(0);
    for (EdgeIndex i = 0; i < G.edge_count(); ++i) {
        for (EdgeIndex j = 0; j < H.edge_count(); ++j) {
            Rational eps = epsilon(H.edge(j), G.edge(i));
            if (eps != 0) sum += sign_of(i + j) * eps * trace_pair(f, H.edge(j), G.edge(i));
        }
    }
    if (sum == 0) return sum;
    return correlation(f, G) * correlation(f, H) * sum;
}

Rational swap_value(const LimitFamily& f, const SwapElement& x) {
    Rational total(0);
    for (const auto& [mono, coeff] : x.terms()) {
        if (!mono.logs.empty())
            throw std::domain_error("logarithm generators have no value under the pairing");
        Rational v = coeff;
        for (const auto& [p, e] : mono.pairs) {
            Rational b = (f.covector(p.x) * f.line(p.X))(0, 0);
            if (b == 0) {
                if (e < 0) throw std::domain_error("vanishing pairing " + p.to_string() + " in a denominator");
                v = 0;
                break;
            }
            Rational pw(1);
            for (int k = 0; k < std::abs(e); ++k) pw *= b;
            if (e > 0) v *= pw;
            else v /= pw;
        }
        for (int k = 0; k < mono.casimir && v != 0; ++k) v /= f.dim();
        total += v;
    }
    return total;
}

std::vector<ThetaGeodesic> IdealTriangle::sides() const {
    return {ThetaGeodesic(v1, v2), ThetaGeodesic(v2, v3), ThetaGeodesic(v3, v1)};
}

Configuration IdealTriangle::configuration() const {
    auto a = sides();
    return Configuration(std::vector<ThetaGeodesic>{a[0], a[2], a[1]});
}

Rational triangle_function(const LimitFamily& f, const IdealTriangle& t) {
    return correlation(f, t.configuration());
}

CrossRatioReport positive_crossratio_check(const LimitFamily& f, std::size_t sample_size, std::uint64_t seed) {
    CrossRatioReport r;
    Sampler s(seed);
    auto witness = [&r](const std::string& w) {
        if (r.witnesses.size() < 5) r.witnesses.push_back(w);
    };
    for (std::size_t n = 0; n < sample_size; ++n) {
        auto pts = s.distinct_sorted(4);
        try {
        // crossing pair with random orientations
        ThetaGeodesic g(pts[0], pts[2]), h(pts[1], pts[3]);
        if (s.coin()) g = g.reverse();
        if (s.coin()) h = h.reverse();
        ++r.crossing_samples;
        Rational t = T(f, {g, h});
        if (!(t > 0 && t < 1)) {
            ++r.crossing_failures;
            witness("T⌈" + g.to_string() + "," + h.to_string() + "⌉ = " + to_string(t));
        }

        std::shuffle(pts.begin(), pts.end(), s.rng());
        const auto &X = pts[0], &Y = pts[1], &y = pts[2], &x = pts[3];
        bool oriented = is_oriented(X, Y, y, x);
        bool crossing = epsilon(OrientedGeodesic{y, X}, OrientedGeodesic{x, Y}) > 0;
        if (oriented != crossing) r.characterizations_agree = false;
        Rational a = T(f, {ThetaGeodesic(x, X), ThetaGeodesic(y, Y)});
        Rational b = T(f, {ThetaGeodesic(y, X), ThetaGeodesic(x, Y)});
        if (a * b != 1) {
            ++r.reciprocity_failures;
            witness("reciprocity fails for " + X.to_string() + "," + Y.to_string() + "," + y.to_string() + "," +
                    x.to_string());
        }
        if (oriented) {
            ++r.quadruple_samples;
            if (!(a > 1)) {
                ++r.quadruple_failures;
                witness("cross ratio " + to_string(a) + " <= 1 for oriented quadruple");
            }
        }
        } catch (const TransversalityError& e) {
            ++r.skipped;
            witness(e.what());
        }
    }
    return r;
}

namespace {

bool has_endpoint(const OrientedGeodesic& g, const BoundaryPoint& p) { return g.src == p || g.dst == p; }

}  // namespace

bool meets_before(const OrientedGeodesic& h, const OrientedGeodesic& g1, const OrientedGeodesic& g0) {
    if (has_endpoint(g1, h.src)) return true;
    if (has_endpoint(g0, h.dst)) return true;
    if (has_endpoint(g1, h.dst) || has_endpoint(g0, h.src)) return false;
    // g0 lies on the side of g1 towards which h is heading.
    int target = cyclic_orient(g1.src, g1.dst, h.dst);
    for (const auto& z : {g0.src, g0.dst}) {
        if (has_endpoint(g1, z)) continue;
        if (cyclic_orient(g1.src, g1.dst, z) == target) return true;
    }
    return false;
}

bool sign_lemma_admissible(const ThetaGeodesic& g1, const ThetaGeodesic& g0, const ThetaGeodesic& h) {
    if (epsilon(g0, g1) != 0) return false;
    if (epsilon(g0, h) * epsilon(g1, h) == 0) return true;
    return g1 == g0 || meets_before(h.geo, g1.geo, g0.geo);
}

SignLemmaTerm sign_lemma_term(const LimitFamily& f, const ThetaGeodesic& g1, const ThetaGeodesic& g0,
                              const ThetaGeodesic& h) {
    if (!sign_lemma_admissible(g1, g0, h)) throw std::invalid_argument("triple is not admissible");
    SignLemmaTerm t;
    t.eps0 = epsilon(g0, h);
    t.eps1 = epsilon(g1, h);
    Rational ee = t.eps0 * t.eps1;
    if (ee == 0) return t;
    Rational a = T(f, {g1, h}), b = T(f, {g0, h});
    t.direct = ee * (T(f, {g1, h, g0}) - a * b);
    ThetaGeodesic gamma0(h.minus(), g0.plus(), g0.label), gamma1(g1.minus(), h.plus(), g1.label);
    t.factored = ee * a * b * (T(f, {gamma0, gamma1}) - 1);
    return t;
}

std::vector<std::vector<MobiusMap>> GroupPresentation::words_by_length(int max_length) const {
    std::vector<std::vector<MobiusMap>> out{{MobiusMap::identity()}};
    std::size_t n = generators.size();
    std::vector<MobiusMap> letters;
    for (const auto& g : generators) {
        letters.push_back(g);
        letters.push_back(g.inverse());
    }
    std::vector<int> last{-1};
    for (int len = 1; len <= max_length; ++len) {
        std::vector<MobiusMap> words;
        std::vector<int> lasts;
        for (std::size_t w = 0; w < out.back().size(); ++w) {
            for (std::size_t l = 0; l < 2 * n; ++l) {
                if (last[w] >= 0 && static_cast<std::size_t>(last[w] ^ 1) == l) continue;
                words.push_back(out.back()[w] * letters[l]);
                lasts.push_back(static_cast<int>(l));
            }
        }
        out.push_back(std::move(words));
        last = std::move(lasts);
    }
    return out;
}

Configuration apply_mobius(const MobiusMap& m, const Configuration& c) {
    std::vector<ThetaGeodesic> gs;
    for (const auto& g : c.geodesics()) gs.push_back(m.apply(g));
    return Configuration(gs);
}

OrbitSum orbit_sum(const LimitFamily& f, const Configuration& G, const Configuration& H,
                   const GroupPresentation& gamma, int max_word_length) {
    OrbitSum r;
    r.total = 0;
    auto words = gamma.words_by_length(max_word_length);
    for (std::size_t len = 0; len < words.size(); ++len) {
        for (std::size_t w = 0; w < words[len].size(); ++w) {
            try {
                r.total += intersection(f, G, apply_mobius(words[len][w], H));
            } catch (const std::domain_error& e) {
                r.skipped.push_back("length " + std::to_string(len) + " word " + std::to_string(w) + ": " + e.what());
            }
        }
        r.partial.push_back(r.total);
        r.word_count.push_back(words[len].size());
    }
    return r;
}

}  // namespace ghost
