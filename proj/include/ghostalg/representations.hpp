#pragma once

#include "ghostalg/ghost_algebra.hpp"
#include "ghostalg/matrix.hpp"
#include "ghostalg/swapping.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ghost {

class TransversalityError : public std::domain_error {
public:
    TransversalityError(const ThetaGeodesic& g, const std::string& what)
        : std::domain_error(what), geodesic(g) {}
    ThetaGeodesic geodesic;
};

enum class FamilyKind { Fuchsian, Veronese, Generic };

// Assigns a full flag to each boundary point: the first K columns of flag(x)
// span F_K(x). The fundamental projector of a geodesic g with label a is the
// projection onto F_K(g+) parallel to F_{d-K}(g-), K = K_a.
class LimitFamily {
public:
    static LimitFamily fuchsian();
    static LimitFamily veronese(int d);
    static LimitFamily veronese(int d, const ThetaSignature& sig);
    static LimitFamily generic(std::uint64_t seed, int d);
    static LimitFamily generic(std::uint64_t seed, int d, const ThetaSignature& sig);

    // The dual family: flags of annihilators, so that T_G = T_Ḡ(dual).
    LimitFamily dual() const;

    FamilyKind kind() const;
    bool is_dual() const;
    int dim() const;
    const ThetaSignature& signature() const;
    std::string name() const;

    const Matrix& flag(const BoundaryPoint& x) const;
    // The projector of g; identity for phantom g. Memoized.
    const Matrix& projector(const ThetaGeodesic& g) const;
    // Column vector spanning F_1(x) and row covector annihilating F_{d-1}(x).
    Matrix line(const BoundaryPoint& x) const;
    Matrix covector(const BoundaryPoint& x) const;

private:
    struct State;
    explicit LimitFamily(std::shared_ptr<State> s) : s_(std::move(s)) {}
    std::shared_ptr<State> s_;
};

inline const Matrix& projector(const LimitFamily& f, const ThetaGeodesic& g) { return f.projector(g); }

// T_c = Tr(p(g_p)⋯p(g_1)).
Rational correlation(const LimitFamily& f, const Configuration& c);
// Linear and multiplicative extension, with T(𝟙) = 1/d.
Rational correlation(const LimitFamily& f, const GhostElement& x);

// Decreasing-index product of the projectors of θ*.
Matrix opposite_endomorphism(const LimitFamily& f, const Configuration& c, EdgeIndex e);
Matrix edge_projector(const LimitFamily& f, const Configuration& c, EdgeIndex e);

// The edge-sum form of the ghost intersection I(G,H).
Rational intersection(const LimitFamily& f, const Configuration& G, const Configuration& H);
// The projective factored forms: T_G·T_H·Σ(...)T⌈σ_j,θ_i⌉, and T_G·Σ(...)T⌈h,θ_j⌉ for a geodesic h.
Rational intersection_factored(const LimitFamily& f, const Configuration& G, const Configuration& H);

// T^P on the swapping algebra: (X,x) ↦ ⟨covector(x), line(X)⟩, 𝟙 ↦ 1/d.
// Throws std::domain_error on ℓ generators or on a vanishing inverted pairing.
Rational swap_value(const LimitFamily& f, const SwapElement& x);

struct IdealTriangle {
    BoundaryPoint v1, v2, v3;

    // Sides a1 = v1→v2, a2 = v2→v3, a3 = v3→v1.
    std::vector<ThetaGeodesic> sides() const;
    // ⌈a1,a3,a2⌉
    Configuration configuration() const;
};

Rational triangle_function(const LimitFamily& f, const IdealTriangle& t);

struct CrossRatioReport {
    std::size_t crossing_samples = 0, quadruple_samples = 0;
    std::size_t crossing_failures = 0, quadruple_failures = 0, reciprocity_failures = 0;
    std::size_t skipped = 0;  // non-transverse samples
    bool characterizations_agree = true;
    std::vector<std::string> witnesses;
    bool passed() const { return crossing_failures == 0 && quadruple_failures == 0 && reciprocity_failures == 0; }
};

CrossRatioReport positive_crossratio_check(const LimitFamily& f, std::size_t sample_size, std::uint64_t seed);

// Whether h meets g1 before g0; a shared endpoint counts as meeting first at that end.
bool meets_before(const OrientedGeodesic& h, const OrientedGeodesic& g1, const OrientedGeodesic& g0);
// ε(g0,g1) = 0 and (ε0ε1 = 0 or h meets g1 before g0 or g1 = g0).
bool sign_lemma_admissible(const ThetaGeodesic& g1, const ThetaGeodesic& g0, const ThetaGeodesic& h);

struct SignLemmaTerm {
    Rational direct;    // ε1ε0·(T⌈g1,h,g0⌉ − T⌈g1,h⌉T⌈g0,h⌉)
    Rational factored;  // ε1ε0·T⌈g1,h⌉T⌈g0,h⌉·(T⌈γ0,γ1⌉ − 1)
    Rational eps0, eps1;
};

// Throws std::invalid_argument when the triple is not admissible.
SignLemmaTerm sign_lemma_term(const LimitFamily& f, const ThetaGeodesic& g1, const ThetaGeodesic& g0,
                              const ThetaGeodesic& h);

struct GroupPresentation {
    std::vector<MobiusMap> generators;

    // Reduced words of length <= L in generators and inverses, by length.
    std::vector<std::vector<MobiusMap>> words_by_length(int max_length) const;
};

struct OrbitSum {
    Rational total;
    std::vector<Rational> partial;       // S_L = sum over words of length <= L
    std::vector<std::size_t> word_count;  // words of each exact length
    std::vector<std::string> skipped;     // words whose term could not be evaluated
};

OrbitSum orbit_sum(const LimitFamily& f, const Configuration& G, const Configuration& H,
                   const GroupPresentation& gamma, int max_word_length);

Configuration apply_mobius(const MobiusMap& m, const Configuration& c);

}  // namespace ghost
