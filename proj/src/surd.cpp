#include "surd.hpp"

namespace helixlab {

namespace {

int sign_of(const Int& x) { return x == 0 ? 0 : (x < 0 ? -1 : 1); }

}  // namespace

Surd Surd::make(Rat base, Rat coef, Int disc) {
    if (disc < 0) throw domain_error("Surd: negative discriminant");
    Int root;
    if (coef == 0 || disc == 0) return Surd{std::move(base), Rat(0), Int(0)};
    if (perfect_square(disc, root)) {
        return Surd{Rat(base + coef * root), Rat(0), Int(0)};
    }
    return Surd{std::move(base), std::move(coef), std::move(disc)};
}

const Rat& Surd::rational() const {
    if (!is_rational()) throw internal_error("Surd::rational on irrational value");
    return base;
}

int sign_quadratic(const Int& x, const Int& y, const Int& r) {
    if (y == 0 || r == 0) return sign_of(x);
    if (y > 0 && x >= 0) return 1;
    if (y < 0 && x <= 0) return -1;
    // x and y*sqrt(r) have opposite signs; compare squares.
    Int lhs = x * x, rhs = y * y * r;
    if (lhs == rhs) return 0;
    if (x > 0) return lhs > rhs ? 1 : -1;
    return lhs > rhs ? -1 : 1;
}

int sign_biquadratic(const Int& a, const Int& b, const Int& p,
                     const Int& c, const Int& q) {
    if (b == 0 || p == 0) return sign_quadratic(a, c, q);
    if (c == 0 || q == 0) return sign_quadratic(a, b, p);

    // t = b*sqrt(p) + c*sqrt(q)
    int tsign;
    if (b > 0 && c > 0) tsign = 1;
    else if (b < 0 && c < 0) tsign = -1;
    else {
        Int bp = b * b * p, cq = c * c * q;
        if (bp == cq) tsign = 0;
        else if (bp > cq) tsign = sign_of(b);
        else tsign = sign_of(c);
    }

    if (tsign == 0) return sign_of(a);
    if (a == 0 || sign_of(a) == tsign) return tsign;

    // a and t have opposite signs: compare a^2 with
    // t^2 = b^2 p + c^2 q + 2bc sqrt(pq).
    int d = sign_quadratic(a * a - b * b * p - c * c * q, Int(-2 * b * c), Int(p * q));
    if (d > 0) return sign_of(a);
    if (d < 0) return tsign;
    return 0;
}

int surd_cmp(const Surd& a, const Surd& b) {
    // a - b = (a.base - b.base) + a.coef sqrt(a.disc) - b.coef sqrt(b.disc);
    // clear denominators and take the integer sign.
    Rat base = a.base - b.base;
    Int den = denominator(base) * denominator(a.coef) * denominator(b.coef);
    Int A = numerator(base) * (den / denominator(base));
    Int B = numerator(a.coef) * (den / denominator(a.coef));
    Int C = -numerator(b.coef) * (den / denominator(b.coef));
    return sign_biquadratic(A, B, a.disc, C, b.disc);
}

int surd_cmp(const Surd& a, const Rat& b) { return surd_cmp(a, Surd::from_rat(b)); }

Int surd_floor(const Surd& a) {
    if (a.is_rational()) return rat_floor(a.base);
    // sqrt(disc) lies strictly between s and s+1 (disc is not a square here).
    Int s = sqrt(a.disc);
    Rat lo_val = a.coef > 0 ? a.base + a.coef * s : a.base + a.coef * (s + 1);
    Rat hi_val = a.coef > 0 ? a.base + a.coef * (s + 1) : a.base + a.coef * s;
    Int lo = rat_floor(lo_val), hi = rat_floor(hi_val) + 1;
    while (lo < hi) {
        Int mid = floor_div(lo + hi + 1, Int(2));
        if (surd_cmp(a, Rat(mid)) >= 0) lo = mid;
        else hi = mid - 1;
    }
    return lo;
}

namespace {

Surd surd_sub_int(const Surd& a, const Int& n) {
    return Surd{Rat(a.base - n), a.coef, a.disc};
}

// 1/x for x > 0: (b - c sqrt(D)) / (b^2 - c^2 D); the denominator is nonzero
// because D is never a perfect square when c != 0.
Surd surd_reciprocal(const Surd& x) {
    if (x.is_rational()) return Surd::from_rat(Rat(1) / x.base);
    Rat den = x.base * x.base - x.coef * x.coef * x.disc;
    return Surd{x.base / den, -x.coef / den, x.disc};
}

}  // namespace

Rat simplest_rational_between(const Surd& lo, const Surd& hi) {
    if (surd_cmp(lo, hi) >= 0) {
        throw domain_error("simplest_rational_between: empty interval");
    }
    // Continued-fraction descent: an integer in the interval wins outright,
    // otherwise strip the integer part and recurse on reciprocals.
    Int fl = surd_floor(lo);
    Rat candidate(fl + 1);
    if (surd_cmp(hi, candidate) > 0) return candidate;

    Surd lo_f = surd_sub_int(lo, fl);  // in [0, 1)
    Surd hi_f = surd_sub_int(hi, fl);  // in (0, 1]
    if (lo_f.is_rational() && lo_f.base == 0) {
        // Interval (fl, hi): the simplest tail is the smallest integer
        // strictly above 1/hi_f.
        Int t = surd_floor(surd_reciprocal(hi_f)) + 1;
        return Rat(fl) + make_rat(Int(1), t);
    }
    Rat tail = simplest_rational_between(surd_reciprocal(hi_f), surd_reciprocal(lo_f));
    return Rat(fl) + Rat(1) / tail;
}

}  // namespace helixlab
