#pragma once

#include "ghostalg/configuration.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace ghost {

// Seeded generator of random boundary data. Points are drawn from a small
// pool so that shared endpoints occur often.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed, std::size_t pool_size = 9);

    std::mt19937_64& rng() { return rng_; }
    int uniform(int lo, int hi);  // inclusive
    bool coin(double p = 0.5);

    const std::vector<BoundaryPoint>& pool() const { return pool_; }
    BoundaryPoint pool_point();
    // A point with small random numerator and denominator, or infinity.
    BoundaryPoint free_point();
    // Pairwise distinct points sorted by value along the circle starting after infinity.
    std::vector<BoundaryPoint> distinct_sorted(std::size_t n);

    ThetaGeodesic geodesic(int labels = 1, bool allow_phantom = false);
    Configuration configuration(std::size_t rank, int labels = 1);
    Configuration configuration_in(std::size_t min_rank, std::size_t max_rank, int labels = 1);

private:
    std::mt19937_64 rng_;
    std::vector<BoundaryPoint> pool_;
};

}  // namespace ghost
