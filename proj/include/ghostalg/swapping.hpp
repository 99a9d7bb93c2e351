#pragma once

#include "ghostalg/ghost_algebra.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace ghost {

// The variable (X,x) of the swapping algebra; it stands for the geodesic x→X.
struct PairGen {
    BoundaryPoint X, x;

    bool is_zero() const { return X == x; }
    OrientedGeodesic geodesic() const { return {x, X}; }
    static PairGen of(const OrientedGeodesic& g) { return {g.dst, g.src}; }
    std::string to_string() const { return "(" + X.to_string() + "," + x.to_string() + ")"; }

    bool operator==(const PairGen&) const = default;
    auto operator<=>(const PairGen&) const = default;
};

class ZeroPairDivision : public std::domain_error {
public:
    explicit ZeroPairDivision(const PairGen& p)
        : std::domain_error("division by the zero pair " + p.to_string()), pair(p) {}
    PairGen pair;
};

// Laurent monomial in pair variables, times logarithm generators and a Casimir power.
struct SwapMonomial {
    std::map<PairGen, int> pairs;
    std::map<OrientedGeodesic, int> logs;
    int casimir = 0;

    SwapMonomial operator*(const SwapMonomial& o) const;
    std::string to_string() const;

    bool operator==(const SwapMonomial&) const = default;
    auto operator<=>(const SwapMonomial&) const = default;
};

class SwapElement {
public:
    using Terms = std::map<SwapMonomial, Rational>;

    SwapElement() = default;
    static SwapElement scalar(const Rational& r);
    static SwapElement pair(const PairGen& p, int exponent = 1);
    static SwapElement pair(const BoundaryPoint& X, const BoundaryPoint& x, int exponent = 1) {
        return pair(PairGen{X, x}, exponent);
    }
    static SwapElement log(const OrientedGeodesic& g);
    static SwapElement casimir();

    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    // Drops monomials containing a zero pair with positive exponent; throws
    // ZeroPairDivision if a zero pair has a negative exponent.
    void add(SwapMonomial m, const Rational& c);
    SwapElement& operator+=(const SwapElement& o);
    SwapElement& operator-=(const SwapElement& o);
    SwapElement& operator*=(const Rational& r);

    friend SwapElement operator+(SwapElement a, const SwapElement& b) { return a += b; }
    friend SwapElement operator-(SwapElement a, const SwapElement& b) { return a -= b; }
    friend SwapElement operator-(SwapElement a) { return a *= Rational(-1); }
    friend SwapElement operator*(SwapElement a, const Rational& r) { return a *= r; }
    friend SwapElement operator*(const Rational& r, SwapElement a) { return a *= r; }
    friend SwapElement operator*(const SwapElement& a, const SwapElement& b);

    // (X,x) ↦ (x,X), ℓ_g ↦ ℓ_ḡ.
    SwapElement reverse() const;
    std::string to_string() const;

    bool operator==(const SwapElement&) const = default;

private:
    Terms t_;
};

SwapElement swap_bracket(const SwapElement& a, const SwapElement& b);

// The multifraction Π(X_i, x_σ(i)) / Π(X_i, x_i); sigma is 0-based one-line notation.
SwapElement multifraction(const std::vector<BoundaryPoint>& X, const std::vector<BoundaryPoint>& x,
                          const std::vector<std::size_t>& sigma);

// One configuration per cycle of sigma, built from the geodesics x_i → X_i.
// Fixed points give rank-1 configurations.
std::vector<Configuration> polygonal_decomposition(const std::vector<BoundaryPoint>& X,
                                                   const std::vector<BoundaryPoint>& x,
                                                   const std::vector<std::size_t>& sigma);

// π of a single configuration read as a multifraction: the rank-1 case gives 1.
SwapElement multifraction_of(const Configuration& c);
SwapElement multifraction_of(const std::vector<Configuration>& cs);

// The homomorphism from the projective ghost algebra.
SwapElement pi(const GhostElement& x, const ThetaSignature& sig = ThetaSignature());
SwapElement pi(const Configuration& c);

}  // namespace ghost
