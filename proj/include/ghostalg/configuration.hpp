#pragma once

#include "ghostalg/boundary.hpp"

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace ghost {

// An ordered list of geodesics (an "ordered configuration").
struct EdgeTuple {
    std::vector<ThetaGeodesic> edges;

    std::size_t size() const { return edges.size(); }
    bool operator==(const EdgeTuple&) const = default;
};

EdgeTuple operator+(EdgeTuple a, const EdgeTuple& b);  // concatenation
EdgeTuple operator+(EdgeTuple a, const ThetaGeodesic& g);
EdgeTuple operator+(const ThetaGeodesic& g, const EdgeTuple& a);

// Edge e of a ghost polygon: even positions are visible edges g_{e/2},
// odd positions are ghost edges joining g_{(e-1)/2} to the next visible edge.
// A rank-1 configuration has the single visible edge 0.
using EdgeIndex = std::size_t;

struct GhostPolygon {
    std::vector<ThetaGeodesic> edges;
    std::vector<int> ghost_index;  // 0 visible, 1 ghost
};

class Configuration {
public:
    explicit Configuration(std::vector<ThetaGeodesic> geodesics);
    explicit Configuration(const EdgeTuple& t) : Configuration(t.edges) {}
    explicit Configuration(const ThetaGeodesic& g) : Configuration(std::vector<ThetaGeodesic>{g}) {}

    std::size_t rank() const { return g_.size(); }
    const std::vector<ThetaGeodesic>& geodesics() const { return g_; }
    const ThetaGeodesic& operator[](std::size_t i) const { return g_[i % g_.size()]; }

    Configuration reverse() const;

    std::size_t edge_count() const { return g_.size() == 1 ? 1 : 2 * g_.size(); }
    bool is_ghost(EdgeIndex e) const { return e % 2 == 1; }
    int ghost_index(EdgeIndex e) const { return static_cast<int>(e % 2); }
    ThetaGeodesic edge(EdgeIndex e) const;
    GhostPolygon polygon() const;

    EdgeTuple opposite(EdgeIndex e) const;
    EdgeTuple interval(EdgeIndex e1, EdgeIndex e2) const;
    std::vector<BoundaryPoint> vertices() const;  // sorted, without repetition

    std::string to_string() const;

    bool operator==(const Configuration&) const = default;
    std::strong_ordering operator<=>(const Configuration& o) const;

private:
    void check_edge(EdgeIndex e) const;
    std::vector<ThetaGeodesic> g_;
};

inline GhostPolygon ghost_polygon_of(const Configuration& c) { return c.polygon(); }
inline EdgeTuple opposite(const Configuration& c, EdgeIndex e) { return c.opposite(e); }
inline EdgeTuple interval(const Configuration& c, EdgeIndex e1, EdgeIndex e2) { return c.interval(e1, e2); }
inline std::vector<BoundaryPoint> vertices(const Configuration& c) { return c.vertices(); }

}  // namespace ghost
