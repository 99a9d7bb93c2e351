#pragma once

#include "ghostalg/rational.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace ghost {

// A point of the projective line over the rationals, stored as a reduced
// homogeneous pair with q >= 0 (and p = 1 when q = 0).
class BoundaryPoint {
public:
    BoundaryPoint() : p_(0), q_(1) {}
    BoundaryPoint(std::int64_t p, std::int64_t q);

    static BoundaryPoint infinity() { return BoundaryPoint(1, 0); }
    static BoundaryPoint from_rational(const Rational& r);
    static BoundaryPoint parse(std::string_view text);

    std::int64_t p() const { return p_; }
    std::int64_t q() const { return q_; }
    bool is_infinity() const { return q_ == 0; }
    Rational value() const;  // precondition: finite

    std::string to_string() const;

    bool operator==(const BoundaryPoint&) const = default;
    // Orders finite points by value, with infinity last.
    std::strong_ordering operator<=>(const BoundaryPoint& o) const;

private:
    std::int64_t p_, q_;
};

int cyclic_orient(const BoundaryPoint& a, const BoundaryPoint& b, const BoundaryPoint& c);

// True when a, b, c, d are pairwise distinct and appear in this cyclic order.
bool is_oriented(const BoundaryPoint& a, const BoundaryPoint& b, const BoundaryPoint& c,
                 const BoundaryPoint& d);

struct OrientedGeodesic {
    BoundaryPoint src;  // backward endpoint g-
    BoundaryPoint dst;  // forward endpoint g+

    bool is_phantom() const { return src == dst; }
    OrientedGeodesic reverse() const { return {dst, src}; }
    std::string to_string() const;

    bool operator==(const OrientedGeodesic&) const = default;
    auto operator<=>(const OrientedGeodesic&) const = default;
};

Rational epsilon(const OrientedGeodesic& g, const OrientedGeodesic& h);
bool separates(const OrientedGeodesic& g, const OrientedGeodesic& h);

class ThetaSignature {
public:
    ThetaSignature() : dims_{1}, d_(2) {}
    ThetaSignature(std::vector<int> dims, int ambient);

    static ThetaSignature projective(int ambient) { return ThetaSignature({1}, ambient); }

    const std::vector<int>& dims() const { return dims_; }
    int ambient() const { return d_; }
    int size() const { return static_cast<int>(dims_.size()); }
    // Labels are 1-based.
    int weight(int label) const;
    bool is_projective() const { return dims_.size() == 1 && dims_[0] == 1; }

    bool operator==(const ThetaSignature&) const = default;

private:
    std::vector<int> dims_;
    int d_;
};

struct ThetaGeodesic {
    OrientedGeodesic geo;
    int label = 1;

    ThetaGeodesic() = default;
    ThetaGeodesic(OrientedGeodesic g, int a = 1) : geo(g), label(a) {}
    ThetaGeodesic(BoundaryPoint from, BoundaryPoint to, int a = 1) : geo{from, to}, label(a) {}

    const BoundaryPoint& minus() const { return geo.src; }
    const BoundaryPoint& plus() const { return geo.dst; }
    bool is_phantom() const { return geo.is_phantom(); }
    ThetaGeodesic reverse() const { return {geo.reverse(), label}; }
    std::string to_string() const;

    bool operator==(const ThetaGeodesic&) const = default;
    auto operator<=>(const ThetaGeodesic&) const = default;
};

inline Rational epsilon(const ThetaGeodesic& g, const ThetaGeodesic& h) {
    return epsilon(g.geo, h.geo);
}

class MobiusMap {
public:
    MobiusMap(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);
    static MobiusMap identity() { return {1, 0, 0, 1}; }

    std::int64_t a() const { return a_; }
    std::int64_t b() const { return b_; }
    std::int64_t c() const { return c_; }
    std::int64_t d() const { return d_; }
    std::int64_t det() const { return a_ * d_ - b_ * c_; }

    BoundaryPoint apply(const BoundaryPoint& x) const;
    OrientedGeodesic apply(const OrientedGeodesic& g) const;
    ThetaGeodesic apply(const ThetaGeodesic& g) const;

    MobiusMap operator*(const MobiusMap& o) const;
    // Adjugate; acts as the inverse on the projective line.
    MobiusMap inverse() const;

    bool operator==(const MobiusMap&) const = default;

private:
    std::int64_t a_, b_, c_, d_;
};

inline ThetaGeodesic apply_mobius(const MobiusMap& m, const ThetaGeodesic& g) { return m.apply(g); }

}  // namespace ghost

template <>
struct std::hash<ghost::BoundaryPoint> {
    std::size_t operator()(const ghost::BoundaryPoint& x) const noexcept {
        auto h = static_cast<std::uint64_t>(x.p()) * 0x9E3779B97F4A7C15ULL;
        return static_cast<std::size_t>(h ^ (static_cast<std::uint64_t>(x.q()) + (h << 6) + (h >> 2)));
    }
};
