#pragma once

#include <scrollcert/splitting_type.hpp>

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace scrollcert {

/// Target O(ell) of a general surjection on P^1.
struct LineTarget {
    long long ell = 0;
    bool operator==(const LineTarget&) const = default;
};

/// Torsion target of length m supported at m general points.
struct TorsionTarget {
    long long m = 0;
    bool operator==(const TorsionTarget&) const = default;
};

using Target = std::variant<LineTarget, TorsionTarget>;

struct GenericMapProblem {
    SplittingType source;
    Target target;

    /// Throws std::domain_error unless the kernel of a general map is a
    /// vector bundle of the expected rank: a line target needs a nonempty
    /// source with ell >= max degree, a torsion target needs m >= 0.
    void validate() const;

    long long expected_kernel_rank() const;
    long long expected_kernel_degree() const;
};

struct FieldConfig {
    std::int64_t prime = 1'048'583;
    std::uint64_t seed = 0;
    int trials = 3;
    bool exact_rationals = false;
};

/// dim H^0(P^1, O(d)).
inline long long section_dim(long long d) { return d >= 0 ? d + 1 : 0; }

/// Recommended lower bound on the prime for the given problem; primes at
/// or below it only degrade genericity odds, never soundness, so small
/// primes are accepted and merely reported.
std::int64_t recommended_prime_floor(const GenericMapProblem& problem);

/// Splitting type of the kernel of a random map, computed from cohomology
/// ranks over F_p and cross-checked across cfg.trials independent draws.
/// Throws std::runtime_error on sanity failures ("map not surjective /
/// kernel not locally free") or cross-trial disagreement ("non-generic
/// sample suspected; increase p or trials").
SplittingType oracle_kernel_type(const GenericMapProblem& problem,
                                 const FieldConfig& cfg);

/// The problem dual(E) + a*O -> O(b) decided by predict_kernel_plus_trivial.
GenericMapProblem plus_trivial_problem(const SplittingType& e, long long a,
                                       long long b);

struct SuiteBounds {
    long long max_rank = 5;
    long long degree_lo = 0;
    long long degree_hi = 4;
    long long m_max = 10;
    long long ell_max = 12;
    long long a_max = 3;
    long long b_max = 12;
};

struct SuiteFailure {
    std::string check;
    std::string problem;
    std::string detail;
};

struct SuiteReport {
    long long checks_run = 0;
    std::vector<SuiteFailure> failures;
    std::int64_t prime = 0;
    std::uint64_t seed = 0;
    int trials = 0;
    bool p_below_recommended = false;

    bool ok() const { return failures.empty(); }
};

/// Exhaustive comparison of the oracle against the closed-form predictors,
/// together with the balancedness conclusions they are meant to certify.
SuiteReport verify_lemma_suite(const SuiteBounds& bounds,
                               const FieldConfig& cfg, int threads = 1);

inline SuiteReport verify_lemma_suite(long long max_rank, long long degree_lo,
                                      long long degree_hi, long long m_max,
                                      long long ell_max,
                                      const FieldConfig& cfg) {
    SuiteBounds b;
    b.max_rank = max_rank;
    b.degree_lo = degree_lo;
    b.degree_hi = degree_hi;
    b.m_max = m_max;
    b.ell_max = ell_max;
    return verify_lemma_suite(b, cfg);
}

/// All splitting types with the given rank and degrees in [lo, hi],
/// listed in lexicographically decreasing order.
std::vector<SplittingType> enumerate_splitting_types(long long rank,
                                                     long long lo,
                                                     long long hi);

}  // namespace scrollcert
