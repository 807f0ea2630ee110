// surd.hpp
//
// Exact arithmetic on quadratic surds base + coef * sqrt(disc).  Used for
// interval feasibility tests whose endpoints are roots of integer quadratics:
// every comparison reduces to integer sign tests, so no floating point is
// involved anywhere.

#pragma once

#include "exact.hpp"

namespace helixlab {

// A real number base + coef * sqrt(disc) with rational base/coef and a
// nonnegative integer discriminant.  Normalized: if disc is a perfect
// square the radical is folded into base and coef becomes 0.
struct Surd {
    Rat base;
    Rat coef;
    Int disc;

    static Surd from_rat(const Rat& q) { return Surd{q, Rat(0), Int(0)}; }
    static Surd make(Rat base, Rat coef, Int disc);

    bool is_rational() const { return coef == 0; }
    // Requires is_rational().
    const Rat& rational() const;
};

// Sign of x + y*sqrt(r) for integers x, y and r >= 0.
int sign_quadratic(const Int& x, const Int& y, const Int& r);

// Sign of a + b*sqrt(p) + c*sqrt(q) for integers with p, q >= 0.
int sign_biquadratic(const Int& a, const Int& b, const Int& p,
                     const Int& c, const Int& q);

// Three-way comparison, exact.
int surd_cmp(const Surd& a, const Surd& b);
int surd_cmp(const Surd& a, const Rat& b);

// Largest integer <= a.
Int surd_floor(const Surd& a);

// The rational with smallest denominator (then smallest numerator) in the
// open interval (lo, hi).  Requires lo < hi and lo >= 0.
Rat simplest_rational_between(const Surd& lo, const Surd& hi);

}  // namespace helixlab
