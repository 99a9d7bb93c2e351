#pragma once

#include "ghostalg/configuration.hpp"

#include <array>
#include <complex>
#include <stdexcept>

namespace ghost {

// A point of the upper half plane.
struct HyperbolicPoint {
    double x = 0, y = 1;

    std::complex<double> z() const { return {x, y}; }
};

double hyperbolic_distance(const HyperbolicPoint& a, const HyperbolicPoint& b);
// Distance from a point to the geodesic with the given endpoints (which must differ).
double distance_to_geodesic(const HyperbolicPoint& p, const OrientedGeodesic& g);
// Orientation-reversing maps (negative determinant) act through conjugation.
HyperbolicPoint apply_mobius(const MobiusMap& m, const HyperbolicPoint& p);

struct BarycenterOptions {
    double tolerance = 1e-10;
    int max_iterations = 10000;
};

struct BarycenterResult {
    HyperbolicPoint point;
    double objective = 0;      // sum of distances to the visible edges
    double gradient_norm = 0;  // norm of the minimal subgradient at point
    int iterations = 0;
};

class NonConvergence : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Minimizer of the sum of distances to the visible edges. Rejects phantom
// edges and configurations whose geodesics all coincide up to orientation;
// throws NonConvergence when the minimum is not certified.
BarycenterResult barycenter(const Configuration& c, const BarycenterOptions& opt = {});
double core_diameter(const Configuration& c, const BarycenterOptions& opt = {});

}  // namespace ghost
