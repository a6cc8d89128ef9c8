#include <scrollcert/report.hpp>

#include <scrollcert/schubert.hpp>

#include <nlohmann/json.hpp>

#include <functional>
#include <sstream>
#include <stdexcept>

namespace scrollcert {

namespace {

using nlohmann::ordered_json;

std::string csv_escape(const std::string& s) {
    bool needs_quote = s.find_first_of(",\"\n") != std::string::npos;
    if (!needs_quote) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

std::string join_csv(const std::vector<std::string>& cells) {
    std::string line;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) line += ',';
        line += csv_escape(cells[i]);
    }
    return line;
}

ordered_json bounds_json(const SearchBounds& b) {
    ordered_json j;
    j["max_e0"] = b.max_e0;
    j["max_e1"] = b.max_e1;
    j["max_eplus"] = b.max_eplus;
    j["max_r"] = b.max_r;
    return j;
}

std::vector<SchubertPartition> regime_partitions(long long k, long long n,
                                                 long long max_partitions) {
    long long codim = remainder_R(k, n).R + 1;
    return partitions_with_codim(k, n, codim, max_partitions);
}

void verify_emitted(RunResult& res) {
    for (const auto& c : res.certificates) {
        VerifyResult v = verify_certificate(c);
        if (!v.ok) {
            res.exit_code = 2;
            std::string msg = "certificate failed re-verification (" +
                              c.strategy + ", degree " +
                              std::to_string(c.degree) + ")";
            for (const auto& p : v.problems) msg += "; " + p;
            res.notes.push_back(msg);
        }
    }
}

}  // namespace

std::string render_report(const RunConfig& cfg,
                          const std::vector<BalancedCertificate>& certs,
                          const std::vector<std::string>& notes) {
    if (cfg.format == "csv") {
        std::string text = join_csv({"k", "n", "strategy", "degree",
                                     "partition", "e", "e_plus", "reading",
                                     "family_base", "family_step",
                                     "certificate"});
        text += '\n';
        for (const auto& c : certs) {
            std::vector<std::string> cells;
            cells.push_back(std::to_string(c.k));
            cells.push_back(std::to_string(c.n));
            cells.push_back(c.strategy);
            cells.push_back(std::to_string(c.degree));
            cells.push_back(ordered_json(c.partition).dump());
            cells.push_back(ordered_json(c.e).dump());
            cells.push_back(std::to_string(c.e_plus));
            cells.push_back(c.reading);
            cells.push_back(c.family ? std::to_string(c.family->base) : "");
            cells.push_back(c.family ? std::to_string(c.family->step) : "");
            cells.push_back(certificate_to_json(c).dump());
            text += join_csv(cells);
            text += '\n';
        }
        return text;
    }
    ordered_json j;
    j["schema"] = 1;
    j["command"] = cfg.command;
    ordered_json cj;
    cj["k"] = cfg.k;
    cj["n"] = cfg.n;
    cj["strategy"] = cfg.strategy;
    if (cfg.alpha) cj["alpha"] = *cfg.alpha;
    if (cfg.beta) cj["beta"] = *cfg.beta;
    cj["bounds"] = bounds_json(cfg.bounds);
    cj["max_partitions"] = cfg.max_partitions;
    j["config"] = cj;
    j["count"] = certs.size();
    ordered_json arr = ordered_json::array();
    for (const auto& c : certs) arr.push_back(certificate_to_json(c));
    j["certificates"] = arr;
    j["notes"] = notes;
    return j.dump(2) + "\n";
}

RunResult run_certify(const RunConfig& cfg) {
    RunResult res;
    auto bail = [&](const std::string& msg) {
        res.notes.push_back(msg);
        res.exit_code = 1;
        res.rendered = render_report(cfg, res.certificates, res.notes);
        return res;
    };
    long long k = cfg.k, n = cfg.n;
    if (k < 1) return bail("k must be at least 1");
    if (n < k + 2) return bail("n must be at least k+2");
    if (2 * k + 1 > n)
        return bail("2k+1 exceeds n; certify the dual side k' = n-k-1");

    const std::string& s = cfg.strategy;
    std::optional<SimpleCycle> cycle;
    if (cfg.alpha && cfg.beta) cycle = SimpleCycle{*cfg.alpha, *cfg.beta};

    try {
        auto append = [&](std::vector<BalancedCertificate>&& v) {
            for (auto& c : v) res.certificates.push_back(std::move(c));
        };
        CertifyContext ctx(cfg.bounds);
        if (s == "auto") {
            if (n == 2 * k + 1) append(oddg_certificate(k, cfg.bounds.max_r));
            if (k == 1 && n >= 5) {
                if (n % 2 == 1)
                    append(solve_k1_odd(n, cfg.bounds));
                else if (n % 4 == 0 && n >= 8)
                    append(solve_k1_div4(n, cfg.bounds, &ctx));
                else if (n % 4 == 2 && n >= 10)
                    append(solve_k1_div4plus2(n, cfg.bounds));
            }
            if (n > 2 * k + 1) {
                for (const auto& p :
                     regime_partitions(k, n, cfg.max_partitions)) {
                    append(solve_pb(k, n, p, cfg.bounds, &ctx));
                    append(solve_bp(k, n, p, cfg.bounds, &ctx));
                }
            }
        } else if (s == "p+b") {
            if (cycle) {
                SchubertPartition p = cycle_partition(k, n, *cycle);
                append(solve_pb(k, n, p, cfg.bounds, &ctx));
            } else {
                for (const auto& p :
                     regime_partitions(k, n, cfg.max_partitions))
                    append(solve_pb(k, n, p, cfg.bounds, &ctx));
            }
        } else if (s == "b+p") {
            if (cycle) {
                append(solve_bp(k, n, *cycle, cfg.bounds, &ctx));
            } else {
                for (const auto& p :
                     regime_partitions(k, n, cfg.max_partitions))
                    append(solve_bp(k, n, p, cfg.bounds, &ctx));
            }
        } else if (s == "oddG") {
            if (n != 2 * k + 1) return bail("oddG requires n = 2k+1");
            append(oddg_certificate(k, cfg.bounds.max_r));
        } else if (s == "alphabeta") {
            if (!cycle) return bail("alphabeta requires --alpha and --beta");
            append(alphabeta_search(k, n, *cycle, cfg.bounds));
        } else if (s == "beta-family") {
            if (!cfg.beta) return bail("beta-family requires --beta");
            append(beta_family_solver(k, n, *cfg.beta, cfg.bounds));
        } else if (s == "k1") {
            if (k != 1) return bail("the k1 strategies require k = 1");
            if (n == 3)
                append(oddg_certificate(k, cfg.bounds.max_r));
            else if (n % 2 == 1)
                append(solve_k1_odd(n, cfg.bounds));
            else if (n % 4 == 0 && n >= 8)
                append(solve_k1_div4(n, cfg.bounds, &ctx));
            else if (n % 4 == 2 && n >= 10)
                append(solve_k1_div4plus2(n, cfg.bounds));
            else
                return bail("no k = 1 congruence strategy covers this n");
        } else {
            return bail("unknown strategy " + s);
        }
    } catch (const std::exception& e) {
        return bail(e.what());
    }

    canonical_sort(res.certificates);
    verify_emitted(res);
    if (res.exit_code == 0 && res.certificates.empty()) res.exit_code = 2;
    res.rendered = render_report(cfg, res.certificates, res.notes);
    return res;
}

RunResult run_oracle_suite(const RunConfig& cfg) {
    RunResult res;
    SuiteReport rep = verify_lemma_suite(cfg.suite, cfg.field, cfg.threads);
    res.exit_code = rep.ok() ? 0 : 2;
    if (cfg.format == "csv") {
        std::string text = join_csv({"check", "problem", "detail"});
        text += '\n';
        for (const auto& f : rep.failures) {
            text += join_csv({f.check, f.problem, f.detail});
            text += '\n';
        }
        res.rendered = text;
        return res;
    }
    ordered_json j;
    j["schema"] = 1;
    j["command"] = "oracle-suite";
    ordered_json cj;
    cj["prime"] = rep.prime;
    cj["seed"] = rep.seed;
    cj["trials"] = rep.trials;
    cj["threads"] = cfg.threads;
    cj["max_rank"] = cfg.suite.max_rank;
    cj["degree_lo"] = cfg.suite.degree_lo;
    cj["degree_hi"] = cfg.suite.degree_hi;
    cj["m_max"] = cfg.suite.m_max;
    cj["ell_max"] = cfg.suite.ell_max;
    cj["a_max"] = cfg.suite.a_max;
    cj["b_max"] = cfg.suite.b_max;
    j["config"] = cj;
    j["checks_run"] = rep.checks_run;
    j["p_below_recommended"] = rep.p_below_recommended;
    j["ok"] = rep.ok();
    ordered_json arr = ordered_json::array();
    for (const auto& f : rep.failures) {
        ordered_json fj;
        fj["check"] = f.check;
        fj["problem"] = f.problem;
        fj["detail"] = f.detail;
        arr.push_back(fj);
    }
    j["failures"] = arr;
    res.rendered = j.dump(2) + "\n";
    return res;
}

namespace {

struct ExampleBlock {
    std::string name;
    bool pass = true;
    std::vector<std::string> details;

    void expect(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            details.push_back("failed: " + what);
        }
    }
};

void block_quadric(ExampleBlock& b) {
    CurveNormalStats st = curve_normal_stats(2, 1, 3);
    b.expect(st.deg_n == 6, "conic normal degree is 6");
    b.expect(st.rk_n == 3, "conic normal rank is 3");
    b.expect(st.max_rulings == 3, "a conic meets three rulings");
    b.expect(st.rk_n_printed == 7, "uncorrected rank is recorded");
    b.expect(expected_degree(3, 1, 3) == 2,
             "three rulings force degree two");
}

void block_minimal_scrolls(ExampleBlock& b) {
    for (long long n = 3; n <= 51; ++n) {
        ScrollSlope sc = minimal_scroll_slope(n);
        long long want_floor = n % 2 == 1 ? (n + 1) / 2 : n / 2;
        long long want_rulings = n % 2 == 1 ? (n + 3) / 2 : n / 2 + 1;
        b.expect(sc.floor == want_floor,
                 "slope floor at n = " + std::to_string(n));
        b.expect(sc.rulings == want_rulings,
                 "ruling count at n = " + std::to_string(n));
    }
}

void block_remainder_table(ExampleBlock& b) {
    struct Row {
        long long k, n, R, q, r;
    };
    const Row rows[] = {{1, 3, 0, 2, 0},  {1, 4, 3, 2, 1}, {1, 5, 1, 3, 0},
                        {3, 7, 0, 2, 0},  {3, 8, 5, 2, 1}, {2, 10, 17, 3, 2},
                        {2, 11, 2, 4, 0}};
    for (const Row& row : rows) {
        RemainderStats st = remainder_R(row.k, row.n);
        std::string at = "G(" + std::to_string(row.k) + "," +
                         std::to_string(row.n) + ")";
        b.expect(st.R == row.R, "R at " + at);
        b.expect(st.q == row.q, "q at " + at);
        b.expect(st.r == row.r, "r at " + at);
    }
}

void block_oddg(ExampleBlock& b) {
    for (long long k = 1; k <= 6; ++k) {
        auto certs = oddg_certificate(k, 10);
        b.expect(certs.size() == 10,
                 "ten family members at k = " + std::to_string(k));
        std::vector<long long> want_normal(2 * k, 1);
        want_normal.push_back(0);
        for (const auto& c : certs) {
            std::string at = "k = " + std::to_string(k) + ", r = " +
                             std::to_string(c.r.value_or(0));
            b.expect(c.degree == c.r.value_or(0) * k + 1, "degree at " + at);
            b.expect(verify_certificate(c).ok, "verification at " + at);
            b.expect(c.normal_type == want_normal,
                     "restricted normal type at " + at);
            b.expect(c.deg_n == 2 * k && c.rk_n == 2 * k + 1,
                     "normal numerology at " + at);
            for (const auto& [name, value] : c.slopes)
                if (name == "s0" || name == "s_plus")
                    b.expect(value == "2", name + " = 2 at " + at);
        }
    }
}

void block_beta(ExampleBlock& b) {
    SearchBounds bounds;
    auto certs = beta_family_solver(3, 8, 3, bounds);
    b.expect(certs.size() == 1, "one solution for G(3,8), beta = 3");
    if (certs.size() == 1) {
        const auto& c = certs[0];
        b.expect(c.e == std::vector<long long>{7, 3}, "twists (7, 3)");
        b.expect(!c.slopes.empty() && c.slopes[0].second == "5",
                 "common slope 5");
        b.expect(c.family && c.family->base == 5 && c.family->step == 10,
                 "degree family 5 + 10r");
        b.expect(verify_certificate(c).ok, "verification");
    }
    SchubertPartition p{3, 8, {2, 2, 2, 0}};
    NormalGraded ng = normal_graded(p, {6, 3});
    b.expect(ng.rank_n == 6, "graded normal rank 6");
    auto certs15 = beta_family_solver(1, 5, 3, bounds);
    b.expect(certs15.size() == 1, "one solution for G(1,5), beta = 3");
    if (certs15.size() == 1) {
        const auto& c = certs15[0];
        b.expect(c.e == std::vector<long long>{3, 5}, "twists (3, 5)");
        b.expect(!c.slopes.empty() && c.slopes[0].second == "7",
                 "common slope 7");
        b.expect(c.family && c.family->base == 4 && c.family->step == 8,
                 "degree family 4 + 8r");
        b.expect(verify_certificate(c).ok, "verification");
    }
}

void block_match4(ExampleBlock& b) {
    SearchBounds bounds;
    bounds.max_e0 = 9;
    bounds.max_eplus = 10;
    auto certs = solve_k1_div4(8, bounds, nullptr);
    const std::vector<std::pair<long long, long long>> want = {
        {2, 1}, {3, 1}, {4, 2}, {5, 3}, {6, 4}, {7, 5}, {8, 6}, {9, 6}};
    b.expect(certs.size() == want.size(), "eight matches up to e0 = 9");
    for (std::size_t i = 0; i < certs.size() && i < want.size(); ++i) {
        const auto& c = certs[i];
        b.expect(c.e.size() == 1 && c.e[0] == want[i].first &&
                     c.e_plus == want[i].second,
                 "match " + std::to_string(i));
        b.expect(verify_certificate(c).ok,
                 "verification of match " + std::to_string(i));
    }
    for (long long t = 1; t <= 5; ++t)
        b.expect(floor_div(5 * (6 * t) - 4, 6) == 5 * t - 1,
                 "closed form at t = " + std::to_string(t));
}

void block_c2_balance(ExampleBlock& b) {
    SchubertPartition p{2, 5, {3, 1, 1}};
    NormalGraded ng = normal_graded(p, {0, 2});
    b.expect(ng.deg_n_rows == 4, "row-weighted degree 4");
    b.expect(ng.deg_n_tensor == 4, "twist-accumulated degree 4");
    b.expect(ng.deg_n_rows == ng.deg_n_tensor, "both readings agree");
    b.expect(!ng.any_discrepancy, "no per-piece slope discrepancy");
}

void block_k1_odd(ExampleBlock& b) {
    SearchBounds bounds;
    auto certs = solve_k1_odd(7, bounds);
    b.expect(certs.size() == 25, "25 solutions in default bounds");
    const std::vector<std::vector<long long>> first = {
        {3, 4, 2}, {4, 6, 3}, {6, 9, 4}, {8, 12, 6}, {9, 14, 7}};
    for (std::size_t i = 0; i < first.size() && i < certs.size(); ++i) {
        const auto& c = certs[i];
        b.expect(c.e[0] == first[i][0] && c.e[1] == first[i][1] &&
                     c.e_plus == first[i][2],
                 "solution " + std::to_string(i));
        b.expect(verify_certificate(c).ok,
                 "verification of solution " + std::to_string(i));
    }
    SearchBounds wide;
    wide.max_e0 = 200;
    wide.max_e1 = 400;
    wide.max_eplus = 400;
    auto certs_wide = solve_k1_odd(7, wide);
    b.expect(certs_wide.size() == 135, "135 solutions in the wide window");
    bool member_found = false;
    for (const auto& c : certs_wide) {
        if (c.e == std::vector<long long>{31, 48} && c.e_plus == 24) {
            member_found = true;
            bool flagged = false;
            for (const auto& f : c.flags)
                if (f == "divisibility_family") flagged = true;
            b.expect(flagged, "(31, 48, 24) carries the divisibility flag");
        }
    }
    b.expect(member_found, "divisibility member (31, 48, 24) present");
}

}  // namespace

RunResult run_examples(const RunConfig& cfg) {
    RunResult res;
    using BlockFn = std::function<void(ExampleBlock&)>;
    const std::vector<std::pair<std::string, BlockFn>> blocks = {
        {"quadric", block_quadric},
        {"minimal-scrolls", block_minimal_scrolls},
        {"remainder-table", block_remainder_table},
        {"oddg", block_oddg},
        {"beta", block_beta},
        {"match4", block_match4},
        {"c2-balance", block_c2_balance},
        {"k1-odd", block_k1_odd},
    };
    std::vector<ExampleBlock> results;
    bool matched = cfg.only.empty();
    for (const auto& [name, fn] : blocks) {
        if (!cfg.only.empty() && cfg.only != name) continue;
        matched = true;
        ExampleBlock blk;
        blk.name = name;
        try {
            fn(blk);
        } catch (const std::exception& e) {
            blk.pass = false;
            blk.details.push_back(std::string("exception: ") + e.what());
        }
        results.push_back(std::move(blk));
    }
    if (!matched) {
        res.exit_code = 1;
        res.notes.push_back("unknown example block: " + cfg.only);
    }
    bool all_pass = true;
    for (const auto& blk : results) all_pass = all_pass && blk.pass;
    if (res.exit_code == 0 && !all_pass) res.exit_code = 2;

    if (cfg.format == "csv") {
        std::string text = join_csv({"block", "pass", "detail"});
        text += '\n';
        for (const auto& blk : results) {
            std::string detail;
            for (const auto& d : blk.details) {
                if (!detail.empty()) detail += "; ";
                detail += d;
            }
            text += join_csv({blk.name, blk.pass ? "true" : "false", detail});
            text += '\n';
        }
        res.rendered = text;
        return res;
    }
    ordered_json j;
    j["schema"] = 1;
    j["command"] = "examples";
    ordered_json cj;
    cj["only"] = cfg.only;
    j["config"] = cj;
    ordered_json arr = ordered_json::array();
    for (const auto& blk : results) {
        ordered_json bj;
        bj["name"] = blk.name;
        bj["pass"] = blk.pass;
        bj["details"] = blk.details;
        arr.push_back(bj);
    }
    j["blocks"] = arr;
    j["ok"] = all_pass && res.exit_code == 0;
    j["notes"] = res.notes;
    res.rendered = j.dump(2) + "\n";
    return res;
}

}  // namespace scrollcert
