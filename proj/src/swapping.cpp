#include "ghostalg/swapping.hpp"

#include <set>

namespace ghost {

namespace {

template <class K>
void bump(std::map<K, int>& m, const K& k, int e) {
    if (e == 0) return;
    auto [it, inserted] = m.try_emplace(k, e);
    if (inserted) return;
    it->second += e;
    if (it->second == 0) m.erase(it);
}

}  // namespace

SwapMonomial SwapMonomial::operator*(const SwapMonomial& o) const {
    SwapMonomial r = *this;
    for (const auto& [p, e] : o.pairs) bump(r.pairs, p, e);
    for (const auto& [g, e] : o.logs) bump(r.logs, g, e);
    r.casimir += o.casimir;
    return r;
}

std::string SwapMonomial::to_string() const {
    std::string s;
    for (const auto& [p, e] : pairs) {
        s += p.to_string();
        if (e != 1) s += "^" + std::to_string(e);
    }
    auto sep = [&s] {
        if (!s.empty()) s += "·";
    };
    for (const auto& [g, e] : logs) {
        sep();
        s += "l[" + g.to_string() + "]";
        if (e != 1) s += "^" + std::to_string(e);
    }
    if (casimir > 0) {
        sep();
        s += "𝟙";
        if (casimir != 1) s += "^" + std::to_string(casimir);
    }
    return s.empty() ? "1" : s;
}

SwapElement SwapElement::scalar(const Rational& r) {
    SwapElement e;
    e.add(SwapMonomial{}, r);
    return e;
}

SwapElement SwapElement::pair(const PairGen& p, int exponent) {
    SwapMonomial m;
    m.pairs[p] = exponent;
    SwapElement e;
    e.add(std::move(m), 1);
    return e;
}

SwapElement SwapElement::log(const OrientedGeodesic& g) {
    SwapMonomial m;
    m.logs[g] = 1;
    SwapElement e;
    e.add(std::move(m), 1);
    return e;
}

SwapElement SwapElement::casimir() {
    SwapMonomial m;
    m.casimir = 1;
    SwapElement e;
    e.add(std::move(m), 1);
    return e;
}

void SwapElement::add(SwapMonomial m, const Rational& c) {
    if (c == 0) return;
    for (const auto& [p, e] : m.pairs) {
        if (!p.is_zero()) continue;
        if (e < 0) throw ZeroPairDivision(p);
        return;
    }
    auto [it, inserted] = t_.try_emplace(std::move(m), c);
    if (inserted) return;
    it->second += c;
    if (it->second == 0) t_.erase(it);
}

SwapElement& SwapElement::operator+=(const SwapElement& o) {
    for (const auto& [m, c] : o.t_) add(m, c);
    return *this;
}

SwapElement& SwapElement::operator-=(const SwapElement& o) {
    for (const auto& [m, c] : o.t_) add(m, -c);
    return *this;
}

SwapElement& SwapElement::operator*=(const Rational& r) {
    if (r == 0) {
        t_.clear();
        return *this;
    }
    for (auto& [m, c] : t_) c *= r;
    return *this;
}

SwapElement operator*(const SwapElement& a, const SwapElement& b) {
    SwapElement r;
    for (const auto& [m, c] : a.t_)
        for (const auto& [n, d] : b.t_) r.add(m * n, c * d);
    return r;
}

SwapElement SwapElement::reverse() const {
    SwapElement r;
    for (const auto& [m, c] : t_) {
        SwapMonomial n;
        n.casimir = m.casimir;
        for (const auto& [p, e] : m.pairs) n.pairs[PairGen{p.x, p.X}] = e;
        for (const auto& [g, e] : m.logs) n.logs[g.reverse()] = e;
        r.add(std::move(n), c);
    }
    return r;
}

std::string SwapElement::to_string() const {
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

SwapElement pair_bracket(const PairGen& u, const PairGen& v) {
    Rational e = epsilon(v.geodesic(), u.geodesic());
    if (e == 0) return {};
    return SwapElement::pair(u.X, v.x) * SwapElement::pair(v.X, u.x) * e;
}

// A variable of a monomial: a pair or a logarithm.
struct Var {
    bool is_log;
    PairGen pair;
    OrientedGeodesic geo;
    int exponent;
};

std::vector<Var> variables(const SwapMonomial& m) {
    std::vector<Var> v;
    for (const auto& [p, e] : m.pairs) v.push_back({false, p, {}, e});
    for (const auto& [g, e] : m.logs) v.push_back({true, PairGen::of(g), g, e});
    return v;
}

SwapMonomial divide(SwapMonomial m, const Var& v) {
    if (v.is_log) bump(m.logs, v.geo, -1);
    else bump(m.pairs, v.pair, -1);
    return m;
}

SwapElement var_bracket(const Var& a, const Var& b) {
    SwapElement r = pair_bracket(a.pair, b.pair);
    if (a.is_log) r = r * SwapElement::pair(a.pair, -1);
    if (b.is_log) r = r * SwapElement::pair(b.pair, -1);
    if (a.is_log && b.is_log) r += SwapElement::casimir() * epsilon(a.geo, b.geo);
    return r;
}

}  // namespace

SwapElement swap_bracket(const SwapElement& a, const SwapElement& b) {
    SwapElement r;
    for (const auto& [m, c] : a.terms()) {
        auto vm = variables(m);
        for (const auto& [n, d] : b.terms()) {
            auto vn = variables(n);
            for (const auto& u : vm) {
                for (const auto& v : vn) {
                    SwapElement g = var_bracket(u, v);
                    if (g.is_zero()) continue;
                    SwapMonomial rest = divide(m, u) * divide(n, v);
                    Rational k = c * d * u.exponent * v.exponent;
                    for (const auto& [t, e] : g.terms()) r.add(rest * t, k * e);
                }
            }
        }
    }
    return r;
}

namespace {

void check_permutation(const std::vector<BoundaryPoint>& X, const std::vector<BoundaryPoint>& x,
                       const std::vector<std::size_t>& sigma) {
    if (X.size() != x.size() || X.size() != sigma.size())
        throw std::invalid_argument("multifraction: lists of different lengths");
    std::set<std::size_t> seen(sigma.begin(), sigma.end());
    if (seen.size() != sigma.size() || (!sigma.empty() && *seen.rbegin() >= sigma.size()))
        throw std::invalid_argument("multifraction: sigma is not a permutation");
}

}  // namespace

SwapElement multifraction(const std::vector<BoundaryPoint>& X, const std::vector<BoundaryPoint>& x,
                          const std::vector<std::size_t>& sigma) {
    check_permutation(X, x, sigma);
    SwapMonomial m;
    for (std::size_t i = 0; i < X.size(); ++i) {
        bump(m.pairs, PairGen{X[i], x[sigma[i]]}, 1);
        bump(m.pairs, PairGen{X[i], x[i]}, -1);
    }
    SwapElement e;
    e.add(std::move(m), 1);
    return e;
}

std::vector<Configuration> polygonal_decomposition(const std::vector<BoundaryPoint>& X,
                                                   const std::vector<BoundaryPoint>& x,
                                                   const std::vector<std::size_t>& sigma) {
    check_permutation(X, x, sigma);
    std::vector<bool> done(sigma.size(), false);
    std::vector<Configuration> out;
    for (std::size_t m = 0; m < sigma.size(); ++m) {
        if (done[m]) continue;
        std::vector<ThetaGeodesic> cyc;
        for (std::size_t j = m; !done[j]; j = sigma[j]) {
            done[j] = true;
            cyc.emplace_back(x[j], X[j]);
        }
        out.emplace_back(std::move(cyc));
    }
    return out;
}

SwapElement multifraction_of(const Configuration& c) {
    if (c.rank() == 1) return SwapElement::scalar(1);
    SwapMonomial m;
    for (std::size_t i = 0; i < c.rank(); ++i) {
        bump(m.pairs, PairGen{c[i].plus(), c[i + 1].minus()}, 1);
        bump(m.pairs, PairGen{c[i].plus(), c[i].minus()}, -1);
    }
    SwapElement e;
    e.add(std::move(m), 1);
    return e;
}

SwapElement multifraction_of(const std::vector<Configuration>& cs) {
    SwapElement r = SwapElement::scalar(1);
    for (const auto& c : cs) r = r * multifraction_of(c);
    return r;
}

SwapElement pi(const Configuration& c) {
    for (const auto& g : c.geodesics())
        if (g.label != 1) throw std::invalid_argument("π needs projective labels; found " + g.to_string());
    if (c.rank() == 1) return SwapElement::log(c[0].geo);
    return multifraction_of(c);
}

SwapElement pi(const GhostElement& x, const ThetaSignature& sig) {
    if (!sig.is_projective()) throw std::invalid_argument("π is defined only for the projective signature");
    SwapElement r;
    for (const auto& [m, c] : x.terms()) {
        SwapElement t = SwapElement::scalar(c);
        for (const auto& g : m.factors()) {
            t = t * (g.is_casimir() ? SwapElement::casimir() : pi(g.config()));
            if (t.is_zero()) break;
        }
        r += t;
    }
    return r;
}

}  // namespace ghost
