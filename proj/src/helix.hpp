// helix.hpp
//
// The helix engine: Delta invariants of a seed, the bidirectional mutation
// recurrence on K-classes, mutation matrices, growth classification, the
// exact generation certificate, and the window scanner.

#pragma once

#include "exact.hpp"

#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace helixlab {

// The triple (Delta_1, Delta_2, Delta_3) of consecutive Hom dimensions,
// extended 3-periodically to all integer indices (Delta_0 = Delta_3,
// Delta_{-1} = Delta_2, ...).
class DeltaTriple {
public:
    // Requires all three values positive.
    static DeltaTriple checked(Int d1, Int d2, Int d3);

    const Int& d1() const { return d_[0]; }
    const Int& d2() const { return d_[1]; }
    const Int& d3() const { return d_[2]; }

    // Delta_m for any integer m, taken 3-periodically.
    const Int& at(long long m) const;

    Int delta02() const { return d_[0] * d_[1] - d_[2]; }

    // q = Delta_1^2 + Delta_2^2 + Delta_3^2 - Delta_1 Delta_2 Delta_3;
    // zero exactly in the Markov (polynomial growth) case.
    Int q() const;

    Vec3 delta_vec() const { return Vec3(d_[1], d_[2], d_[0]); }             // (D2, D3, D1)
    Vec3 nabla() const { return Vec3(d_[1], Int(d_[2] - d_[0] * d_[1]), d_[0]); }

    bool operator==(const DeltaTriple&) const = default;

private:
    DeltaTriple(Int d1, Int d2, Int d3) : d_{std::move(d1), std::move(d2), std::move(d3)} {}
    std::array<Int, 3> d_;
};

// An ordered triple of K-classes with positive coprime (degree, rank) pairs
// and strictly increasing slopes.  Delta positivity is not checked here;
// that is deltas_from_seed's job.
class Seed {
public:
    static Seed checked(KClass e0, KClass e1, KClass e2);

    // Canonical text form "d0/r0,d1/r1,d2/r2"; parse accepts optional
    // whitespace and surrounding parentheses.
    static Seed parse(const std::string& text);
    std::string format() const;

    const KClass& at(int i) const;
    const KClass& e0() const { return e_[0]; }
    const KClass& e1() const { return e_[1]; }
    const KClass& e2() const { return e_[2]; }

    Vec3 degree_vec() const { return Vec3(e_[0].degree, e_[1].degree, e_[2].degree); }
    Vec3 rank_vec() const { return Vec3(e_[0].rank, e_[1].rank, e_[2].rank); }

    bool operator==(const Seed&) const = default;

private:
    Seed(KClass e0, KClass e1, KClass e2) : e_{std::move(e0), std::move(e1), std::move(e2)} {}
    std::array<KClass, 3> e_;
};

// Delta_1 = chi(E0,E1), Delta_2 = chi(E1,E2), Delta_3 = Delta_1 Delta_2 - chi(E0,E2).
// Throws with the offending index when some Delta_i <= 0.
DeltaTriple deltas_from_seed(const Seed& seed);

// Non-throwing variant used by the window scanner: on failure reports the
// first nonpositive Delta index (1..3) and its value.
std::optional<DeltaTriple> try_deltas_from_seed(const Seed& seed, int& bad_index, Int& bad_value);

// Companion-type matrix advancing the K-class window by one step:
// rows (0,1,0), (0,0,1), (1, -Delta_j, Delta_{j+2}).
Mat3 mutation_matrix(const DeltaTriple& deltas, long long j);

// Full-period matrix A = A_3 A_2 A_1.
Mat3 global_matrix(const DeltaTriple& deltas);

// ---------------------------------------------------------------------------
// Growth classification
// ---------------------------------------------------------------------------

enum class Growth { markov, not_helical, exponential };

struct GrowthReport {
    Int q;
    Growth classification;
    // lambda_pm = (p +- sqrt(disc)) / 2 with p = 2 - q and disc = p^2 - 4;
    // meaningful as real eigenvalues only in the exponential case.
    Int p;
    Int disc;
    // 'a'..'e' when all eigenvalues have modulus 1 (q in 0..4), '\0' otherwise.
    char unit_case;
    std::string eigenvalues;
    Int trace;  // trace of the period matrix, equals 1 + p
};

// q = 0: Markov (polynomial growth).  q in {1,2,3,4}: the non-unit
// eigenvalues are roots of unity, which is incompatible with the sign
// pattern of chi on a helix, so no elliptic helix exists.  Otherwise the
// helix grows exponentially.
GrowthReport classify_growth(const DeltaTriple& deltas);

// ---------------------------------------------------------------------------
// The helix window
// ---------------------------------------------------------------------------

// Bi-infinite K-class window generated by a seed.  Classes are memoized in
// both directions; all accessors are safe to call concurrently.
class Helix {
public:
    explicit Helix(Seed seed);

    const Seed& seed() const { return seed_; }
    const DeltaTriple& deltas() const { return deltas_; }

    // [E_i] for any integer i; indices 0..2 return the seed.
    KClass class_at(long long i) const;

    // Class of the single right mutation of E_i through E_{i+1}, i.e.
    // Delta_{i+1} [E_{i+1}] - [E_i]; its rank is the primed rank r'_{i+2}.
    KClass intermediate_class(long long i) const;

    // dim Hom(E_i, E_j) = chi(E_i, E_j); requires i < j.
    Int hom_dim(long long i, long long j) const;

    // Closed form chi(E_jp, E_ip) + m Delta_{ip-1} Delta_{jp-1} for
    // dim Hom(E_jp, E_{ip+3m}) on a Markov-type helix; requires q = 0,
    // jp, ip in {0,1,2}, m >= 1 and jp < ip + 3m.
    Int hom_dim_markov(int jp, int ip, const Int& m) const;

private:
    const KClass& locked_class_at(long long i) const;  // callers hold mu_

    Seed seed_;
    DeltaTriple deltas_;
    mutable std::vector<KClass> fwd_;  // classes at indices 0, 1, 2, ...
    mutable std::vector<KClass> bwd_;  // classes at indices -1, -2, ...
    mutable std::mutex mu_;
};

// ---------------------------------------------------------------------------
// Generation certificate
// ---------------------------------------------------------------------------

struct Certificate {
    enum class Status { certified, unknown, invalid };

    Status status = Status::unknown;
    Rat witness;                      // meaningful when certified
    std::vector<std::string> checks;  // inequalities verified at the witness
    std::string reason;               // for unknown / invalid
};

// Sufficient criterion that a numerical seed generates an elliptic helix:
// needs r0, r2 >= r1 and positive primed ranks r'_1, r'_2, plus a rational
// witness l with 1 < l < r0/r1, l < r2/r1 and l^2 - Delta_i l + Delta_j < 0
// for all six ordered pairs i != j.  Feasibility of l is decided exactly
// (quadratic-surd interval intersection); a certificate is a proof, not a
// numeric claim.  Unknown means no witness exists: the criterion is
// sufficient, not necessary.
Certificate certify_generation(const Seed& seed);

// ---------------------------------------------------------------------------
// Window scan
// ---------------------------------------------------------------------------

enum class WindowViolationKind {
    nonpositive_rank,
    nonpositive_primed_rank,
    gcd_failure,
    slope_order_failure,
    nonpositive_delta,
};

const char* to_string(WindowViolationKind k);

struct WindowViolation {
    long long index;  // class index, or the Delta index 1..3 for nonpositive_delta
    WindowViolationKind kind;
    std::string detail;
};

struct WindowEntry {
    long long index;
    KClass cls;
    Int primed_rank;  // r'_index
};

struct WindowReport {
    long long depth = 0;
    std::vector<WindowEntry> table;
    std::optional<WindowViolation> violation;

    bool clean() const { return !violation.has_value(); }
};

// Direct finite check of the generation conditions over |i| <= depth:
// positive ranks and primed ranks, coprimality, strictly increasing slopes.
// This is a falsifier; a clean window proves nothing by itself (the
// generation criteria quantify over all indices) -- use certify_generation
// or Markov structure for a proof.
WindowReport scan_window(const Seed& seed, long long depth);

}  // namespace helixlab
