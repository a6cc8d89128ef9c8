#pragma once

#include <scrollcert/oracle.hpp>
#include <scrollcert/solver.hpp>

#include <optional>
#include <string>
#include <vector>

namespace scrollcert {

struct RunConfig {
    std::string command = "certify";  // certify | oracle-suite | examples
    long long k = 0;
    long long n = 0;
    std::string strategy = "auto";
    std::optional<long long> alpha;
    std::optional<long long> beta;
    SearchBounds bounds;
    long long max_partitions = 200;
    FieldConfig field;
    SuiteBounds suite;
    std::string format = "json";  // json | csv
    std::string out;              // output path; empty means stdout
    std::string only;             // examples: run a single block
    int threads = 1;
};

/// exit_code: 0 found/clean, 1 bad input, 2 nothing found or checks failed.
struct RunResult {
    int exit_code = 0;
    std::string rendered;
    std::vector<BalancedCertificate> certificates;
    std::vector<std::string> notes;
};

RunResult run_certify(const RunConfig& cfg);
RunResult run_oracle_suite(const RunConfig& cfg);
RunResult run_examples(const RunConfig& cfg);

/// Deterministic certificate report: JSON (schema 1) or CSV. Two equal
/// configurations always render byte-identical text.
std::string render_report(const RunConfig& cfg,
                          const std::vector<BalancedCertificate>& certs,
                          const std::vector<std::string>& notes);

}  // namespace scrollcert
