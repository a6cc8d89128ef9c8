#pragma once

#include <scrollcert/schubert.hpp>

#include <nlohmann/json.hpp>

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace scrollcert {

/// One named gate of a certificate, with both sides recorded as exact
/// integer or rational strings. relation is "eq", "ge", or "in_z"
/// (lhs is an integer; rhs unused).
struct Condition {
    std::string name;
    std::string relation;
    std::string lhs;
    std::string rhs;
    bool holds = false;
};

/// Arithmetic progression of certified degrees: base + step * r, r >= 0,
/// reported up to r_max.
struct DegreeFamily {
    long long base = 0;
    long long step = 0;
    long long r_max = 0;
    bool operator==(const DegreeFamily&) const = default;
};

/// Machine-checkable witness that one construction produces a balanced
/// rational curve (or family of them) in G(k, n). Emitted only when every
/// named condition holds; re-verifiable from its own fields.
struct BalancedCertificate {
    long long k = 0;
    long long n = 0;
    std::string strategy;  // k1-odd | k1-div4 | k1-div4plus2 | p+b | b+p |
                           // oddG | beta-family | alphabeta
    std::vector<long long> partition;  // empty for the k=1 congruence routes
    std::optional<SimpleCycle> cycle;

    std::vector<long long> e;  // one entry per break
    long long e_plus = 0;
    std::optional<long long> d;  // base-curve degree (b+p)
    std::optional<long long> m;  // iteration count (b+p)
    std::optional<long long> r;  // family index (oddG)

    std::string reading;  // "" unless a contested formula forks the search

    std::vector<std::pair<std::string, std::string>> slopes;
    long long deg_n = 0;  // 0 when not recorded
    long long rk_n = 0;
    std::string e_plus_bound;
    std::vector<long long> normal_type;

    std::vector<Condition> conditions;
    long long degree = 0;
    std::optional<DegreeFamily> family;
    std::vector<std::string> flags;
    std::shared_ptr<BalancedCertificate> sub;  // chained prerequisite
};

nlohmann::ordered_json certificate_to_json(const BalancedCertificate& c);
BalancedCertificate certificate_from_json(const nlohmann::ordered_json& j);

struct VerifyResult {
    bool ok = true;
    std::vector<std::string> problems;
};

/// Re-derives every condition, slope, bound, degree, and flag of the
/// certificate from its bare parameters and compares against the stored
/// record; recurses into chained sub-certificates.
VerifyResult verify_certificate(const BalancedCertificate& c);

/// Canonical order for report output.
bool certificate_less(const BalancedCertificate& a,
                      const BalancedCertificate& b);
void canonical_sort(std::vector<BalancedCertificate>& certs);

}  // namespace scrollcert
