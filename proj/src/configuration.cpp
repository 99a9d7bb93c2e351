#include "ghostalg/configuration.hpp"

#include <algorithm>
#include <stdexcept>

namespace ghost {

EdgeTuple operator+(EdgeTuple a, const EdgeTuple& b) {
    a.edges.insert(a.edges.end(), b.edges.begin(), b.edges.end());
    return a;
}

EdgeTuple operator+(EdgeTuple a, const ThetaGeodesic& g) {
    a.edges.push_back(g);
    return a;
}

EdgeTuple operator+(const ThetaGeodesic& g, const EdgeTuple& a) {
    EdgeTuple r{{g}};
    return r + a;
}

Configuration::Configuration(std::vector<ThetaGeodesic> geodesics) : g_(std::move(geodesics)) {
    if (g_.empty()) throw std::invalid_argument("configuration of rank 0");
    const std::size_t p = g_.size();
    std::size_t best = 0;
    for (std::size_t r = 1; r < p; ++r) {
        for (std::size_t k = 0; k < p; ++k) {
            const auto& x = g_[(r + k) % p];
            const auto& y = g_[(best + k) % p];
            if (x < y) {
                best = r;
                break;
            }
            if (y < x) break;
        }
    }
    if (best != 0) std::rotate(g_.begin(), g_.begin() + static_cast<std::ptrdiff_t>(best), g_.end());
}

Configuration Configuration::reverse() const {
    std::vector<ThetaGeodesic> r;
    r.reserve(g_.size());
    for (auto it = g_.rbegin(); it != g_.rend(); ++it) r.push_back(it->reverse());
    return Configuration(std::move(r));
}

void Configuration::check_edge(EdgeIndex e) const {
    if (e >= edge_count()) throw std::out_of_range("edge " + std::to_string(e) + " not in " + to_string());
}

ThetaGeodesic Configuration::edge(EdgeIndex e) const {
    check_edge(e);
    const std::size_t i = e / 2;
    if (e % 2 == 0) return g_[i];
    const auto& prev = g_[i];
    const auto& next = (*this)[i + 1];
    return ThetaGeodesic(next.minus(), prev.plus(), prev.label);
}

GhostPolygon Configuration::polygon() const {
    GhostPolygon gp;
    for (EdgeIndex e = 0; e < edge_count(); ++e) {
        gp.edges.push_back(edge(e));
        gp.ghost_index.push_back(ghost_index(e));
    }
    return gp;
}

EdgeTuple Configuration::interval(EdgeIndex e1, EdgeIndex e2) const {
    check_edge(e1);
    check_edge(e2);
    if (g_.size() == 1) return EdgeTuple{{g_[0]}};
    const std::size_t n = edge_count();
    EdgeTuple t;
    EdgeIndex e = e1;
    for (std::size_t steps = 0;; ++steps) {
        if (e % 2 == 0) t.edges.push_back(g_[e / 2]);
        if (steps > 0 && e == e2) break;
        if (steps == 0 && e1 != e2 && e == e2) break;
        e = (e + 1) % n;
    }
    return t;
}

EdgeTuple Configuration::opposite(EdgeIndex e) const { return interval(e, e); }

std::vector<BoundaryPoint> Configuration::vertices() const {
    std::vector<BoundaryPoint> v;
    for (const auto& g : g_) {
        v.push_back(g.minus());
        v.push_back(g.plus());
    }
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

std::string Configuration::to_string() const {
    std::string s = "⌈";
    for (std::size_t i = 0; i < g_.size(); ++i) {
        if (i) s += ",";
        s += g_[i].to_string();
    }
    return s + "⌉";
}

std::strong_ordering Configuration::operator<=>(const Configuration& o) const {
    if (auto c = g_.size() <=> o.g_.size(); c != 0) return c;
    return std::lexicographical_compare_three_way(g_.begin(), g_.end(), o.g_.begin(), o.g_.end());
}

}  // namespace ghost
