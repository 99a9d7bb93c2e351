#pragma once

#include "ghostalg/boundary.hpp"

namespace ghost {

// A linking number on a point set P: a map (X,x,Y,y) ↦ ε(Xx,Yy).
template <class P>
class LinkingStructure {
public:
    virtual ~LinkingStructure() = default;
    virtual Rational link(const P& X, const P& x, const P& Y, const P& y) const = 0;
};

// The boundary circle; the pair Xx is the geodesic from x to X.
class CircleLinking final : public LinkingStructure<BoundaryPoint> {
public:
    Rational link(const BoundaryPoint& X, const BoundaryPoint& x, const BoundaryPoint& Y,
                  const BoundaryPoint& y) const override {
        return epsilon(OrientedGeodesic{x, X}, OrientedGeodesic{y, Y});
    }
};

struct HexagonalResult {
    bool first = false;
    bool second = false;
    bool third = false;
    bool hypothesis = false;  // {X,x} ∩ {Y,y} ∩ {Z,z} = ∅
};

template <class P>
HexagonalResult hexagonal_check(const LinkingStructure<P>& ls, const P& X, const P& x, const P& Y, const P& y,
                                const P& Z, const P& z) {
    auto e = [&](const P& a, const P& b, const P& c, const P& d) { return ls.link(a, b, c, d); };
    HexagonalResult r;
    r.first = e(X, y, Z, z) + e(Y, x, Z, z) == e(X, x, Z, z) + e(Y, y, Z, z);
    r.second = e(X, x, Y, y) * e(X, y, Z, z) + e(Z, z, X, x) * e(Z, x, Y, y) + e(Y, y, Z, z) * e(Y, z, X, x) == 0;
    r.third = e(X, x, Y, y) * e(Y, x, Z, z) + e(Z, z, X, x) * e(X, z, Y, y) + e(Y, y, Z, z) * e(Z, y, X, x) == 0;
    auto in = [](const P& p, const P& a, const P& b) { return p == a || p == b; };
    r.hypothesis = true;
    for (const P* p : {&X, &x})
        if (in(*p, Y, y) && in(*p, Z, z)) r.hypothesis = false;
    return r;
}

struct LinkingAxioms {
    bool antisymmetry = true;  // ε(Xx,Yy) = −ε(Yy,Xx) = −ε(Xx,yY)
    bool cocycle = true;       // ε(zy,XY)+ε(zy,YZ)+ε(zy,ZX) = 0
    bool product = true;       // ε(Xx,Yy)·ε(Xy,Yx) = 0
};

template <class P>
LinkingAxioms check_linking_axioms(const LinkingStructure<P>& ls, const P& X, const P& x, const P& Y, const P& y,
                                   const P& Z, const P& z) {
    LinkingAxioms a;
    Rational v = ls.link(X, x, Y, y);
    a.antisymmetry = v == -ls.link(Y, y, X, x) && v == -ls.link(X, x, y, Y);
    a.cocycle = ls.link(z, y, X, Y) + ls.link(z, y, Y, Z) + ls.link(z, y, Z, X) == 0;
    a.product = v * ls.link(X, y, Y, x) == 0;
    return a;
}

}  // namespace ghost
