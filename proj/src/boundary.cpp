#include "ghostalg/boundary.hpp"

#include <numeric>
#include <stdexcept>

namespace ghost {

namespace {

using i128 = __int128;

std::int64_t narrow(i128 v, const char* what) {
    if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error(std::string("integer overflow in ") + what);
    return static_cast<std::int64_t>(v);
}

int sign128(i128 v) { return (v > 0) - (v < 0); }

i128 det(const BoundaryPoint& u, const BoundaryPoint& v) {
    return static_cast<i128>(u.p()) * v.q() - static_cast<i128>(u.q()) * v.p();
}

}  // namespace

BoundaryPoint::BoundaryPoint(std::int64_t p, std::int64_t q) {
    if (p == 0 && q == 0) throw std::invalid_argument("boundary point (0,0)");
    if (p == INT64_MIN || q == INT64_MIN) throw std::overflow_error("boundary point coordinate out of range");
    std::int64_t g = std::gcd(p, q);
    p /= g;
    q /= g;
    if (q < 0 || (q == 0 && p < 0)) {
        p = -p;
        q = -q;
    }
    p_ = p;
    q_ = q;
}

BoundaryPoint BoundaryPoint::from_rational(const Rational& r) {
    if (!r.get_num().fits_slong_p() || !r.get_den().fits_slong_p())
        throw std::overflow_error("rational too large for a boundary point");
    return BoundaryPoint(r.get_num().get_si(), r.get_den().get_si());
}

BoundaryPoint BoundaryPoint::parse(std::string_view text) {
    if (text == "inf" || text == "oo" || text == "∞") return infinity();
    return from_rational(parse_rational(text));
}

Rational BoundaryPoint::value() const {
    if (q_ == 0) throw std::domain_error("value() of the point at infinity");
    Rational r(mpz_class(static_cast<long>(p_)), mpz_class(static_cast<long>(q_)));
    r.canonicalize();
    return r;
}

std::string BoundaryPoint::to_string() const {
    if (q_ == 0) return "inf";
    if (q_ == 1) return std::to_string(p_);
    return std::to_string(p_) + "/" + std::to_string(q_);
}

std::strong_ordering BoundaryPoint::operator<=>(const BoundaryPoint& o) const {
    if (q_ == 0 || o.q_ == 0) return (q_ == 0) <=> (o.q_ == 0);
    i128 l = static_cast<i128>(p_) * o.q_, r = static_cast<i128>(o.p_) * q_;
    return l <=> r;
}

int cyclic_orient(const BoundaryPoint& a, const BoundaryPoint& b, const BoundaryPoint& c) {
    return sign128(det(a, b)) * sign128(det(b, c)) * sign128(det(c, a));
}

bool is_oriented(const BoundaryPoint& a, const BoundaryPoint& b, const BoundaryPoint& c,
                 const BoundaryPoint& d) {
    return cyclic_orient(a, b, c) > 0 && cyclic_orient(a, c, d) > 0;
}

std::string OrientedGeodesic::to_string() const { return "(" + src.to_string() + "→" + dst.to_string() + ")"; }

bool separates(const OrientedGeodesic& g, const OrientedGeodesic& h) {
    if (g.is_phantom() || h.is_phantom()) return false;
    int s1 = cyclic_orient(g.src, g.dst, h.src), s2 = cyclic_orient(g.src, g.dst, h.dst);
    return s1 * s2 < 0;
}

namespace {

// Base case with a shared backward endpoint: g- = h-.
Rational half_case(const OrientedGeodesic& g, const OrientedGeodesic& h) {
    return Rational(cyclic_orient(g.dst, h.dst, h.src), 2);
}

}  // namespace

Rational epsilon(const OrientedGeodesic& g, const OrientedGeodesic& h) {
    if (g.is_phantom() || h.is_phantom()) return 0;
    if (g == h || g == h.reverse()) return 0;
    if (g.src == h.src) return half_case(g, h);
    // e(g,h) = e(gbar,hbar)
    if (g.dst == h.dst) return half_case(g.reverse(), h.reverse());
    // e(g,h) = -e(g,hbar)
    if (g.src == h.dst) return -half_case(g, h.reverse());
    // e(g,h) = -e(gbar,h)
    if (g.dst == h.src) return -half_case(g.reverse(), h);
    if (!separates(g, h)) return 0;
    return is_oriented(g.dst, h.dst, g.src, h.src) ? 1 : -1;
}

ThetaSignature::ThetaSignature(std::vector<int> dims, int ambient) : dims_(std::move(dims)), d_(ambient) {
    if (dims_.empty()) throw std::invalid_argument("empty Θ-signature");
    for (std::size_t i = 0; i < dims_.size(); ++i) {
        if (dims_[i] < 1 || dims_[i] >= d_) throw std::invalid_argument("Θ entry outside [1, d-1]");
        if (i > 0 && dims_[i] <= dims_[i - 1]) throw std::invalid_argument("Θ-signature not strictly increasing");
    }
}

int ThetaSignature::weight(int label) const {
    if (label < 1 || label > size()) throw std::out_of_range("Θ-label " + std::to_string(label) + " out of range");
    return dims_[label - 1];
}

std::string ThetaGeodesic::to_string() const {
    std::string s = geo.to_string();
    if (label != 1) s += "@" + std::to_string(label);
    return s;
}

MobiusMap::MobiusMap(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d)
    : a_(a), b_(b), c_(c), d_(d) {
    if (static_cast<i128>(a) * d - static_cast<i128>(b) * c == 0) throw std::invalid_argument("singular Möbius matrix");
    narrow(static_cast<i128>(a) * d - static_cast<i128>(b) * c, "Möbius determinant");
}

BoundaryPoint MobiusMap::apply(const BoundaryPoint& x) const {
    i128 p = static_cast<i128>(a_) * x.p() + static_cast<i128>(b_) * x.q();
    i128 q = static_cast<i128>(c_) * x.p() + static_cast<i128>(d_) * x.q();
    // reduce before narrowing
    i128 x0 = p < 0 ? -p : p, y0 = q < 0 ? -q : q;
    while (y0 != 0) {
        i128 t = x0 % y0;
        x0 = y0;
        y0 = t;
    }
    if (x0 > 1) {
        p /= x0;
        q /= x0;
    }
    return BoundaryPoint(narrow(p, "Möbius action"), narrow(q, "Möbius action"));
}

OrientedGeodesic MobiusMap::apply(const OrientedGeodesic& g) const { return {apply(g.src), apply(g.dst)}; }

ThetaGeodesic MobiusMap::apply(const ThetaGeodesic& g) const { return {apply(g.geo), g.label}; }

MobiusMap MobiusMap::operator*(const MobiusMap& o) const {
    auto m = [](std::int64_t x, std::int64_t y, std::int64_t z, std::int64_t w) {
        return narrow(static_cast<i128>(x) * y + static_cast<i128>(z) * w, "Möbius product");
    };
    return {m(a_, o.a_, b_, o.c_), m(a_, o.b_, b_, o.d_), m(c_, o.a_, d_, o.c_), m(c_, o.b_, d_, o.d_)};
}

MobiusMap MobiusMap::inverse() const { return {d_, -b_, -c_, a_}; }

}  // namespace ghost
