// exact.hpp
//
// Exact arithmetic substrate: K-theory classes of bundles on an elliptic
// curve as (degree, rank) pairs, the Euler pairing, 3-vectors and 3x3
// matrices over arbitrary-precision integers, and an integer solver for
// the cross-product equation d x r = w.
//
// Everything here is a pure value type; all operations are safe to call
// concurrently.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <stdexcept>
#include <string>

namespace helixlab {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Precondition or parameter violations callers can provoke (CLI exit 2).
struct domain_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A cross-check that should have passed did not (CLI exit 3).
struct verify_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A guarantee of the library itself was broken; always a bug.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

// Floor division / mathematical remainder (remainder in [0, |b|)).
Int floor_div(const Int& a, const Int& b);
Int floor_mod(const Int& a, const Int& b);

// Rational with sign carried by the numerator; denominator must be nonzero.
Rat make_rat(const Int& num, const Int& den);

// Floor of a rational.
Int rat_floor(const Rat& q);

// If n = s^2 for an integer s >= 0, stores s and returns true.
bool perfect_square(const Int& n, Int& root);

// Parses an optionally signed decimal integer; rejects anything else.
Int parse_int(const std::string& text);

struct ExtGcd {
    Int g, x, y;  // g = gcd(a,b) >= 0 and a*x + b*y = g
};
ExtGcd ext_gcd(const Int& a, const Int& b);

// ---------------------------------------------------------------------------
// K-theory classes
// ---------------------------------------------------------------------------

// Image of a derived-category object under (deg, rk).  Bundle classes have
// rank >= 1; classes produced by the mutation recurrence may not.
struct KClass {
    Int degree;
    Int rank;

    bool operator==(const KClass&) const = default;
};

// Euler pairing chi(a,b) = deg(b) rk(a) - deg(a) rk(b).  Antisymmetric and
// bilinear; equals dim Hom for increasing members of an elliptic helix.
Int euler_chi(const KClass& a, const KClass& b);

// Exact slope comparison deg(a)/rk(a) < deg(b)/rk(b) by cross multiplication.
// Requires positive ranks.
bool slope_less(const KClass& a, const KClass& b);

// ---------------------------------------------------------------------------
// 3-vectors and 3x3 matrices
// ---------------------------------------------------------------------------

struct Vec3 {
    std::array<Int, 3> c{};

    Vec3() = default;
    Vec3(Int a, Int b, Int d) : c{std::move(a), std::move(b), std::move(d)} {}

    Int& operator[](int i) { return c[static_cast<size_t>(i)]; }
    const Int& operator[](int i) const { return c[static_cast<size_t>(i)]; }

    bool operator==(const Vec3&) const = default;
    bool is_zero() const { return c[0] == 0 && c[1] == 0 && c[2] == 0; }

    Vec3 operator+(const Vec3& o) const;
    Vec3 operator-(const Vec3& o) const;
    Vec3 operator-() const;
};

Vec3 operator*(const Int& s, const Vec3& v);

Int dot(const Vec3& u, const Vec3& v);

// Right-handed cross product (u1 v2 - u2 v1, u2 v0 - u0 v2, u0 v1 - u1 v0).
Vec3 cross3(const Vec3& u, const Vec3& v);

// gcd of the absolute values of the components (0 for the zero vector).
Int content(const Vec3& v);

struct Mat3 {
    std::array<std::array<Int, 3>, 3> m{};

    static Mat3 identity();

    Int& at(int r, int c) { return m[static_cast<size_t>(r)][static_cast<size_t>(c)]; }
    const Int& at(int r, int c) const { return m[static_cast<size_t>(r)][static_cast<size_t>(c)]; }

    bool operator==(const Mat3&) const = default;

    Mat3 operator*(const Mat3& o) const;
    Vec3 operator*(const Vec3& v) const;
    Mat3 operator-(const Mat3& o) const;

    Int det() const;
    Int trace() const;
};

// Left multiplication by a row vector: (v^T M)^T.
Vec3 row_times(const Vec3& v, const Mat3& m);

// ---------------------------------------------------------------------------
// Integer cross-product equation
// ---------------------------------------------------------------------------

// Integral solutions of d x r = w.  When feasible the full solution set is
// { particular + k * generator : k integer }, where generator is the
// primitive vector along r (equal to r whenever r has content 1).
struct SolutionSet {
    enum class Status { feasible, infeasible };

    Status status = Status::infeasible;
    Vec3 particular;
    Vec3 generator;
    std::string obstruction;  // "not orthogonal" | "no integral solution"

    bool feasible() const { return status == Status::feasible; }
};

// Solves d x r = w over the integers.  Requires r != 0.  Infeasible with
// "not orthogonal" when w . r != 0, or with "no integral solution" when the
// rational solution line contains no integer point.  The particular solution
// is normalized to the smallest value >= 0 at the anchor component (the
// middle one when the generator permits, else the first usable one).
SolutionSet solve_cross_equation(const Vec3& r, const Vec3& w);

}  // namespace helixlab
