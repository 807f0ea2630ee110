#include "exact.hpp"

#include <optional>
#include <regex>
#include <utility>

namespace helixlab {

Int floor_div(const Int& a, const Int& b) {
    if (b == 0) throw domain_error("floor_div: division by zero");
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

Int floor_mod(const Int& a, const Int& b) {
    if (b == 0) throw domain_error("floor_mod: division by zero");
    Int m = a % b;
    if (m < 0) m += abs(b);
    return m;
}

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw domain_error("make_rat: zero denominator");
    if (den < 0) return Rat(Int(-num), Int(-den));
    return Rat(num, den);
}

Int rat_floor(const Rat& q) {
    return floor_div(numerator(q), denominator(q));
}

bool perfect_square(const Int& n, Int& root) {
    if (n < 0) return false;
    Int s = sqrt(n);
    if (s * s == n) {
        root = s;
        return true;
    }
    return false;
}

Int parse_int(const std::string& text) {
    static const std::regex pat("^[+-]?[0-9]+$");
    if (!std::regex_match(text, pat)) {
        throw domain_error("not a decimal integer: '" + text + "'");
    }
    return Int(text);
}

ExtGcd ext_gcd(const Int& a, const Int& b) {
    // Iterative extended Euclid; returns g >= 0.
    Int old_r = a, r = b;
    Int old_x = 1, x = 0;
    Int old_y = 0, y = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int t = old_r - q * r; old_r = std::move(r); r = std::move(t);
        t = old_x - q * x; old_x = std::move(x); x = std::move(t);
        t = old_y - q * y; old_y = std::move(y); y = std::move(t);
    }
    if (old_r < 0) {
        old_r = -old_r; old_x = -old_x; old_y = -old_y;
    }
    return {std::move(old_r), std::move(old_x), std::move(old_y)};
}

Int euler_chi(const KClass& a, const KClass& b) {
    return b.degree * a.rank - a.degree * b.rank;
}

bool slope_less(const KClass& a, const KClass& b) {
    if (a.rank < 1 || b.rank < 1) {
        throw domain_error("slope_less: ranks must be positive");
    }
    return a.degree * b.rank < b.degree * a.rank;
}

Vec3 Vec3::operator+(const Vec3& o) const {
    return Vec3(c[0] + o.c[0], c[1] + o.c[1], c[2] + o.c[2]);
}

Vec3 Vec3::operator-(const Vec3& o) const {
    return Vec3(c[0] - o.c[0], c[1] - o.c[1], c[2] - o.c[2]);
}

Vec3 Vec3::operator-() const { return Vec3(-c[0], -c[1], -c[2]); }

Vec3 operator*(const Int& s, const Vec3& v) {
    return Vec3(s * v[0], s * v[1], s * v[2]);
}

Int dot(const Vec3& u, const Vec3& v) {
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
}

Vec3 cross3(const Vec3& u, const Vec3& v) {
    return Vec3(u[1] * v[2] - u[2] * v[1],
                u[2] * v[0] - u[0] * v[2],
                u[0] * v[1] - u[1] * v[0]);
}

Int content(const Vec3& v) {
    return gcd(gcd(v[0], v[1]), v[2]);
}

Mat3 Mat3::identity() {
    Mat3 r;
    r.at(0, 0) = 1; r.at(1, 1) = 1; r.at(2, 2) = 1;
    return r;
}

Mat3 Mat3::operator*(const Mat3& o) const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Int s = 0;
            for (int k = 0; k < 3; ++k) s += at(i, k) * o.at(k, j);
            r.at(i, j) = std::move(s);
        }
    return r;
}

Vec3 Mat3::operator*(const Vec3& v) const {
    Vec3 r;
    for (int i = 0; i < 3; ++i) {
        Int s = 0;
        for (int k = 0; k < 3; ++k) s += at(i, k) * v[k];
        r[i] = std::move(s);
    }
    return r;
}

Mat3 Mat3::operator-(const Mat3& o) const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r.at(i, j) = at(i, j) - o.at(i, j);
    return r;
}

Int Mat3::det() const {
    return at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1))
         - at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0))
         + at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
}

Int Mat3::trace() const { return at(0, 0) + at(1, 1) + at(2, 2); }

Vec3 row_times(const Vec3& v, const Mat3& m) {
    Vec3 r;
    for (int j = 0; j < 3; ++j) {
        Int s = 0;
        for (int i = 0; i < 3; ++i) s += v[i] * m.at(i, j);
        r[j] = std::move(s);
    }
    return r;
}

namespace {

// Residue class {x : a x == b (mod m)}, m >= 1, as x == rep (mod mod).
struct ResidueClass {
    Int rep, mod;
};

std::optional<ResidueClass> solve_congruence(const Int& a0, const Int& b0, const Int& m) {
    Int a = floor_mod(a0, m), b = floor_mod(b0, m);
    Int g = gcd(a, m);
    if (g == 0) g = m;  // a == 0 (mod m)
    if (b % g != 0) return std::nullopt;
    Int a2 = a / g, b2 = b / g, m2 = m / g;
    if (m2 == 1) return ResidueClass{0, 1};
    ExtGcd e = ext_gcd(a2, m2);  // e.g == 1
    return ResidueClass{floor_mod(e.x * b2, m2), m2};
}

std::optional<ResidueClass> crt(const ResidueClass& p, const ResidueClass& q) {
    Int g = gcd(p.mod, q.mod);
    Int diff = q.rep - p.rep;
    if (diff % g != 0) return std::nullopt;
    Int lcm = (p.mod / g) * q.mod;
    ExtGcd e = ext_gcd(p.mod / g, q.mod / g);
    Int t = floor_mod((diff / g) * e.x, q.mod / g);
    return ResidueClass{floor_mod(p.rep + p.mod * t, lcm), lcm};
}

Vec3 rotate_left(const Vec3& v, int k) {
    return Vec3(v[k % 3], v[(k + 1) % 3], v[(k + 2) % 3]);
}

Vec3 rotate_right(const Vec3& v, int k) { return rotate_left(v, 3 - (k % 3)); }

SolutionSet infeasible(std::string why) {
    SolutionSet s;
    s.status = SolutionSet::Status::infeasible;
    s.obstruction = std::move(why);
    return s;
}

}  // namespace

SolutionSet solve_cross_equation(const Vec3& r, const Vec3& w) {
    if (r.is_zero()) throw domain_error("solve_cross_equation: r must be nonzero");
    if (dot(w, r) != 0) return infeasible("not orthogonal");

    // The cross product commutes with simultaneous cyclic rotation of both
    // arguments, so rotate a nonzero component of r into position 0.
    int rot = r[0] != 0 ? 0 : (r[1] != 0 ? 1 : 2);
    Vec3 rr = rotate_left(r, rot);
    Vec3 ww = rotate_left(w, rot);

    // With r0 != 0, d1 and d2 are determined by d0:
    //   d1 = (r1 d0 - w2) / r0,  d2 = (w1 + r2 d0) / r0,
    // and the remaining equation holds automatically because w . r = 0.
    // Integrality of d1, d2 is a pair of congruences on d0 mod |r0|.
    Int m = abs(rr[0]);
    auto c1 = solve_congruence(rr[1], ww[2], m);
    auto c2 = solve_congruence(rr[2], -ww[1], m);
    if (!c1 || !c2) return infeasible("no integral solution");
    auto joined = crt(*c1, *c2);
    if (!joined) return infeasible("no integral solution");

    Int d0 = joined->rep;
    Vec3 dd(d0, (rr[1] * d0 - ww[2]) / rr[0], (ww[1] + rr[2] * d0) / rr[0]);

    SolutionSet s;
    s.status = SolutionSet::Status::feasible;
    s.particular = rotate_right(dd, rot);
    s.generator = r;
    Int cont = content(r);
    if (cont > 1) {
        for (int i = 0; i < 3; ++i) s.generator[i] = r[i] / cont;
    }

    // Deterministic representative: reduce the anchor component into
    // [0, |g_anchor|).  The middle component is preferred because downstream
    // seed construction normalizes d1.
    int anchor = s.generator[1] != 0 ? 1 : (s.generator[0] != 0 ? 0 : 2);
    const Int& ga = s.generator[anchor];
    Int shift = (s.particular[anchor] - floor_mod(s.particular[anchor], ga)) / ga;
    if (shift != 0) s.particular = s.particular - shift * s.generator;
    return s;
}

}  // namespace helixlab
