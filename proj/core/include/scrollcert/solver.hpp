#pragma once

#include <scrollcert/certificate.hpp>
#include <scrollcert/schubert.hpp>

#include <map>
#include <memory>
#include <set>
#include <tuple>
#include <vector>

namespace scrollcert {

/// Exhaustive grid limits for the slope-matching searches.
struct SearchBounds {
    long long max_e0 = 40;
    long long max_e1 = 60;
    long long max_eplus = 80;
    long long max_r = 10;
};

struct CurveNormalStats {
    long long deg_n = 0;
    long long rk_n = 0;
    long long max_rulings = 0;
    long long rk_n_printed = 0;  // uncorrected denominator, kept for the record
};

/// Normal bundle numerology of a degree-e rational curve in G(k, n):
/// deg N = e(n+1) - 2, rk N = (k+1)(n-k) - 1, and the largest q with
/// chi(N(-qP)) >= 0.
CurveNormalStats curve_normal_stats(long long e, long long k, long long n);

/// Smallest degree whose curve can meet q general rulings.
long long expected_degree(long long q, long long k, long long n);

struct ScrollSlope {
    Rational slope;
    long long floor = 0;
    long long rulings = 0;  // max_rulings of the minimal scroll, e = n-1
};

/// Slope (n^2-3)/(2n-3) of the minimal surface scroll in P^n, with its
/// floor and the number of general lines such a scroll contains.
ScrollSlope minimal_scroll_slope(long long n);

/// Memoized recursive certification: find some certificate that a
/// balanced rational curve of the exact given degree exists in G(k, n).
/// Returns nullptr when no strategy in bounds applies.
class CertifyContext {
  public:
    explicit CertifyContext(SearchBounds bounds = {}) : bounds_(bounds) {}

    std::shared_ptr<BalancedCertificate> certify(long long k, long long n,
                                                 long long degree);

  private:
    using Key = std::tuple<long long, long long, long long>;
    SearchBounds bounds_;
    std::map<Key, std::shared_ptr<BalancedCertificate>> memo_;
    std::set<Key> in_progress_;
    int depth_ = 0;
};

std::vector<BalancedCertificate> solve_k1_odd(long long n,
                                              const SearchBounds& bounds);
std::vector<BalancedCertificate> solve_k1_div4(long long n,
                                               const SearchBounds& bounds,
                                               CertifyContext* ctx = nullptr);
std::vector<BalancedCertificate> solve_k1_div4plus2(long long n,
                                                    const SearchBounds& bounds);
std::vector<BalancedCertificate> solve_pb(long long k, long long n,
                                          const SchubertPartition& p,
                                          const SearchBounds& bounds,
                                          CertifyContext* ctx = nullptr);
std::vector<BalancedCertificate> solve_bp(long long k, long long n,
                                          const SchubertPartition& p,
                                          const SearchBounds& bounds,
                                          CertifyContext* ctx = nullptr);
std::vector<BalancedCertificate> solve_bp(long long k, long long n,
                                          const SimpleCycle& cycle,
                                          const SearchBounds& bounds,
                                          CertifyContext* ctx = nullptr);
std::vector<BalancedCertificate> oddg_certificate(long long k, long long r_max);
std::vector<BalancedCertificate> beta_family_solver(long long k, long long n,
                                                    long long beta,
                                                    const SearchBounds& bounds);
std::vector<BalancedCertificate> alphabeta_search(long long k, long long n,
                                                  const SimpleCycle& cycle,
                                                  const SearchBounds& bounds);

/// All partitions for G(k, n) of the given codimension, largest first,
/// capped at max_count entries.
std::vector<SchubertPartition> partitions_with_codim(long long k, long long n,
                                                     long long codim,
                                                     long long max_count);

}  // namespace scrollcert
