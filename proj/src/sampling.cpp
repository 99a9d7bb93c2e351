#include "ghostalg/sampling.hpp"

#include <algorithm>
#include <set>

namespace ghost {

namespace {

const std::vector<BoundaryPoint>& base_pool() {
    static const std::vector<BoundaryPoint> pts = {
        BoundaryPoint::infinity(), BoundaryPoint(0, 1),  BoundaryPoint(1, 1),  BoundaryPoint(-1, 1),
        BoundaryPoint(2, 1),       BoundaryPoint(1, 2),  BoundaryPoint(-3, 1), BoundaryPoint(5, 2),
        BoundaryPoint(-1, 3),      BoundaryPoint(4, 1),  BoundaryPoint(3, 4),  BoundaryPoint(-7, 2),
        BoundaryPoint(7, 1),       BoundaryPoint(2, 3),  BoundaryPoint(-2, 5), BoundaryPoint(9, 4),
    };
    return pts;
}

}  // namespace

Sampler::Sampler(std::uint64_t seed, std::size_t pool_size) : rng_(seed) {
    const auto& b = base_pool();
    pool_.assign(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(std::min(pool_size, b.size())));
}

int Sampler::uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

bool Sampler::coin(double p) { return std::bernoulli_distribution(p)(rng_); }

BoundaryPoint Sampler::pool_point() { return pool_[static_cast<std::size_t>(uniform(0, static_cast<int>(pool_.size()) - 1))]; }

BoundaryPoint Sampler::free_point() {
    if (uniform(0, 39) == 0) return BoundaryPoint::infinity();
    return BoundaryPoint(uniform(-60, 60), uniform(1, 12));
}

std::vector<BoundaryPoint> Sampler::distinct_sorted(std::size_t n) {
    std::set<BoundaryPoint> s;
    while (s.size() < n) s.insert(free_point());
    return {s.begin(), s.end()};
}

ThetaGeodesic Sampler::geodesic(int labels, bool allow_phantom) {
    BoundaryPoint a = pool_point(), b = pool_point();
    while (!allow_phantom && a == b) b = pool_point();
    return ThetaGeodesic(a, b, uniform(1, labels));
}

Configuration Sampler::configuration(std::size_t rank, int labels) {
    std::vector<ThetaGeodesic> g;
    for (std::size_t i = 0; i < rank; ++i) g.push_back(geodesic(labels));
    return Configuration(std::move(g));
}

Configuration Sampler::configuration_in(std::size_t min_rank, std::size_t max_rank, int labels) {
    return configuration(static_cast<std::size_t>(uniform(static_cast<int>(min_rank), static_cast<int>(max_rank))), labels);
}

}  // namespace ghost
