#include <scrollcert/splitting_type.hpp>

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace scrollcert {

SplittingType::SplittingType(std::vector<long long> degrees)
    : degrees_(std::move(degrees)) {
  std::sort(degrees_.begin(), degrees_.end(), std::greater<>());
}

long long SplittingType::degree() const {
  return std::accumulate(degrees_.begin(), degrees_.end(), 0LL);
}

long long SplittingType::max_degree() const {
  if (degrees_.empty()) throw std::domain_error("zero bundle has no summands");
  return degrees_.front();
}

long long SplittingType::min_degree() const {
  if (degrees_.empty()) throw std::domain_error("zero bundle has no summands");
  return degrees_.back();
}

bool SplittingType::balanced() const {
  if (degrees_.empty()) return true;
  return degrees_.front() - degrees_.back() <= 1;
}

bool SplittingType::perfect() const {
  if (degrees_.empty()) return true;
  return degrees_.front() == degrees_.back();
}

SplittingType SplittingType::dual() const {
  std::vector<long long> d;
  d.reserve(degrees_.size());
  for (long long a : degrees_) d.push_back(-a);
  return SplittingType(std::move(d));
}

SplittingType SplittingType::twist(long long t) const {
  std::vector<long long> d;
  d.reserve(degrees_.size());
  for (long long a : degrees_) d.push_back(a + t);
  return SplittingType(std::move(d));
}

SplittingType SplittingType::direct_sum(const SplittingType& other) const {
  std::vector<long long> d = degrees_;
  d.insert(d.end(), other.degrees_.begin(), other.degrees_.end());
  return SplittingType(std::move(d));
}

SplittingType SplittingType::tensor(const SplittingType& other) const {
  std::vector<long long> d;
  d.reserve(degrees_.size() * other.degrees_.size());
  for (long long a : degrees_)
    for (long long b : other.degrees_) d.push_back(a + b);
  return SplittingType(std::move(d));
}

SlopeStats slope_stats(const SplittingType& e) {
  if (e.rank() == 0) throw std::domain_error("zero bundle has no slope");
  SlopeStats s;
  s.degree = e.degree();
  s.rank = e.rank();
  s.slope = Rational(s.degree, s.rank);
  s.floor_slope = to_int64(s.slope.floor());
  return s;
}

UnbalancedStats unbalanced_stats(const SplittingType& e) {
  if (e.rank() == 0) throw std::domain_error("zero bundle has no summands");
  UnbalancedStats s;
  s.mu_min = e.min_degree();
  s.u = e.degree() - e.rank() * s.mu_min;
  s.r_min = static_cast<long long>(
      std::count(e.degrees().begin(), e.degrees().end(), s.mu_min));
  return s;
}

SplittingType balanced_of(long long degree, long long rank) {
  if (rank <= 0) throw std::domain_error("balanced type needs positive rank");
  const long long lo = floor_div(degree, rank);
  // degree = rank*lo + rem with 0 <= rem < rank; rem summands get lo+1.
  const long long rem = degree - rank * lo;
  std::vector<long long> d(static_cast<size_t>(rank), lo);
  for (long long i = 0; i < rem; ++i) d[static_cast<size_t>(i)] = lo + 1;
  return SplittingType(std::move(d));
}

ExtensionBalance extension_balance(const SplittingType& a, const SplittingType& b) {
  ExtensionBalance out;
  if (a.rank() == 0 || b.rank() == 0) return out;
  if (!a.balanced() || !b.balanced()) return out;
  const SplittingType sum = a.direct_sum(b);
  if (!sum.balanced()) return out;
  out.applies = true;
  out.floor_mu = to_int64(slope_stats(sum).slope.floor());
  return out;
}

}  // namespace scrollcert
