#pragma once

#include <scrollcert/rational.hpp>

#include <vector>

namespace scrollcert {

/// Splitting type of a vector bundle on the projective line: the
/// multiset of degrees of its line summands, kept sorted descending.
/// The zero bundle is the empty multiset (rank 0).
class SplittingType {
 public:
  SplittingType() = default;
  explicit SplittingType(std::vector<long long> degrees);

  long long rank() const { return static_cast<long long>(degrees_.size()); }
  long long degree() const;
  const std::vector<long long>& degrees() const { return degrees_; }
  bool empty() const { return degrees_.empty(); }

  long long max_degree() const;  // throws on rank 0
  long long min_degree() const;  // throws on rank 0

  /// max - min <= 1. The zero bundle counts as balanced.
  bool balanced() const;
  /// All summands equal. The zero bundle counts as perfect.
  bool perfect() const;

  SplittingType dual() const;
  SplittingType twist(long long t) const;
  SplittingType direct_sum(const SplittingType& other) const;
  SplittingType tensor(const SplittingType& other) const;

  friend bool operator==(const SplittingType&, const SplittingType&) = default;

 private:
  std::vector<long long> degrees_;
};

struct SlopeStats {
  long long degree = 0;
  long long rank = 0;
  Rational slope;           // degree / rank, exact
  long long floor_slope = 0;
};

/// Throws std::domain_error("zero bundle has no slope") on rank 0.
SlopeStats slope_stats(const SplittingType& e);

struct UnbalancedStats {
  long long u = 0;       // degree - rank * min_degree
  long long mu_min = 0;  // smallest summand
  long long r_min = 0;   // multiplicity of the smallest summand
};

/// Throws on rank 0 (no minimal summand to measure against).
UnbalancedStats unbalanced_stats(const SplittingType& e);

/// The balanced type of given rank and degree: floor and ceiling of the
/// slope distributed so the total degree is exact.
SplittingType balanced_of(long long degree, long long rank);

struct ExtensionBalance {
  bool applies = false;      // both inputs balanced and floors adjacent or equal
  long long floor_mu = 0;    // floor slope of the direct sum when it applies
};

/// A direct sum of two balanced types is balanced iff their degree
/// ranges overlap after interleaving; this reports the combined floor
/// when the sum itself is balanced.
ExtensionBalance extension_balance(const SplittingType& a, const SplittingType& b);

}  // namespace scrollcert
