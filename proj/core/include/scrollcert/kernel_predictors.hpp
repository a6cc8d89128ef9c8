#pragma once

#include <scrollcert/splitting_type.hpp>

namespace scrollcert {

/// Kernel of a general map from E onto a torsion sheaf of length m:
/// m single-point modifications, each decrementing one copy of the
/// current maximal degree. Rank is preserved, degree drops by m.
SplittingType predict_kernel_torsion(const SplittingType& e, long long m);

/// Kernel of a general surjection E -> O(ell). Requires rank >= 2 and
/// ell >= max degree; reduces to the torsion predictor after removing
/// one maximal summand a with m = ell - a. Rank drops by one, degree
/// drops by ell. Balanced whenever ell >= deg - (rk-1)*min.
SplittingType predict_kernel_line(const SplittingType& e, long long ell);

enum class PlusTrivialClaim { certified_balanced, oracle_required };

/// Kernel of a general map dual(E) + a*O -> O(b) for balanced E with
/// nonnegative degrees and slope s: balanced is guaranteed once
/// b >= (a-1)*s. Below the threshold (or when the hypotheses fail)
/// nothing is claimed and the decision is delegated to the oracle.
PlusTrivialClaim predict_kernel_plus_trivial(const SplittingType& e,
                                             long long a, long long b);

}  // namespace scrollcert
