#pragma once

#include "ghostalg/configuration.hpp"

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace ghost {

// A generator of the ghost algebra: a configuration (rank 1 plays the role of
// a geodesic) or the Casimir element.
class GhostGenerator {
public:
    static GhostGenerator casimir() { return GhostGenerator(); }
    explicit GhostGenerator(Configuration c) : c_(std::make_shared<const Configuration>(std::move(c))) {}

    bool is_casimir() const { return !c_; }
    const Configuration& config() const { return *c_; }
    std::string to_string() const { return c_ ? c_->to_string() : "𝟙"; }

    bool operator==(const GhostGenerator& o) const;
    std::strong_ordering operator<=>(const GhostGenerator& o) const;

private:
    GhostGenerator() = default;
    std::shared_ptr<const Configuration> c_;
};

// Commutative monomial: a sorted multiset of generators. The empty monomial is
// the unit. The Casimir is an ordinary central generator, not the unit.
class GhostMonomial {
public:
    GhostMonomial() = default;
    explicit GhostMonomial(std::vector<GhostGenerator> gens);

    const std::vector<GhostGenerator>& factors() const { return f_; }
    std::size_t degree() const { return f_.size(); }
    bool is_unit() const { return f_.empty(); }
    GhostMonomial operator*(const GhostMonomial& o) const;
    GhostMonomial without(std::size_t i) const;
    std::string to_string() const;

    bool operator==(const GhostMonomial&) const = default;
    std::strong_ordering operator<=>(const GhostMonomial& o) const;

private:
    std::vector<GhostGenerator> f_;
};

class GhostElement {
public:
    using Terms = std::map<GhostMonomial, Rational>;

    GhostElement() = default;
    GhostElement(const Configuration& c);  // NOLINT: generators convert implicitly
    GhostElement(const GhostGenerator& g);  // NOLINT
    static GhostElement scalar(const Rational& r);
    static GhostElement casimir() { return GhostElement(GhostGenerator::casimir()); }
    static GhostElement geodesic(const ThetaGeodesic& g) { return GhostElement(Configuration(g)); }

    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    std::size_t size() const { return t_.size(); }

    void add(const GhostMonomial& m, const Rational& c);
    GhostElement& operator+=(const GhostElement& o);
    GhostElement& operator-=(const GhostElement& o);
    GhostElement& operator*=(const Rational& r);

    friend GhostElement operator+(GhostElement a, const GhostElement& b) { return a += b; }
    friend GhostElement operator-(GhostElement a, const GhostElement& b) { return a -= b; }
    friend GhostElement operator-(GhostElement a) { return a *= Rational(-1); }
    friend GhostElement operator*(GhostElement a, const Rational& r) { return a *= r; }
    friend GhostElement operator*(const Rational& r, GhostElement a) { return a *= r; }
    friend GhostElement operator*(const GhostElement& a, const GhostElement& b);

    GhostElement reverse() const;  // reverses every configuration
    std::string to_string() const;

    bool operator==(const GhostElement&) const = default;

private:
    Terms t_;
};

std::string render_term(const Rational& coeff, const std::string& monomial, bool first);

GhostElement bracket_generators(const GhostGenerator& G, const GhostGenerator& H,
                                const ThetaSignature& sig = ThetaSignature());
GhostElement bracket_generators(const Configuration& G, const Configuration& H,
                                const ThetaSignature& sig = ThetaSignature());
// The signature supplies Θ-weights for the Casimir term of geodesic pairs.
GhostElement bracket(const GhostElement& x, const GhostElement& y, const ThetaSignature& sig = ThetaSignature());
GhostElement nested_bracket(const std::vector<GhostElement>& xs, const ThetaSignature& sig = ThetaSignature());
GhostElement jacobiator(const GhostElement& a, const GhostElement& b, const GhostElement& c,
                        const ThetaSignature& sig = ThetaSignature());

// Visible edges of all configurations occurring in x.
std::set<ThetaGeodesic> visible_edges(const GhostElement& x);

// The closing of a tuple of opposites into a configuration.
inline Configuration close(const EdgeTuple& t) { return Configuration(t); }

struct CancellationFamilies {
    GhostElement P1, P2, Q1, Q2, R1, R2, S1, S2;
};

// The eight P/Q/R/S sums for configurations of any rank,
// with Q restricted to visible b and R to visible c.
CancellationFamilies cancellation_terms(const Configuration& A, const Configuration& B, const Configuration& C);

// Ghost edges of ⌈b*,c*⌉ that belong to neither B nor C.
ThetaGeodesic u_edge(const Configuration& B, EdgeIndex b, const Configuration& C, EdgeIndex c);

// [U,[V,W]] reassembled from the families selected by the ranks of V and W.
GhostElement assemble_triple_bracket(const Configuration& U, const Configuration& V, const Configuration& W);

bool share_triple_vertex(const Configuration& A, const Configuration& B, const Configuration& C);

}  // namespace ghost
