#include <CLI11.hpp>

#include <scrollcert/report.hpp>

#include <fstream>
#include <iostream>

namespace {

int emit(const scrollcert::RunResult& res, const std::string& out) {
    if (out.empty()) {
        std::cout << res.rendered;
    } else {
        std::ofstream f(out, std::ios::binary);
        if (!f) {
            std::cerr << "cannot open output file " << out << "\n";
            return 1;
        }
        f << res.rendered;
    }
    for (const auto& note : res.notes) std::cerr << note << "\n";
    return res.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"certificates for balanced rational curves in G(k, n)"};
    app.fallthrough();

    scrollcert::RunConfig cfg;
    long long alpha = 0;
    long long beta = 0;

    app.add_option("--k", cfg.k, "subspace dimension k of G(k, n)");
    app.add_option("--n", cfg.n, "ambient projective dimension n");
    app.add_option("--strategy", cfg.strategy,
                   "auto | p+b | b+p | oddG | alphabeta | beta-family | k1");
    app.add_option("--alpha", alpha, "special cycle parameter alpha");
    app.add_option("--beta", beta,
                   "special cycle parameter beta (also the beta-family index)");
    app.add_option("--max-e0", cfg.bounds.max_e0, "search bound on e0");
    app.add_option("--max-e1", cfg.bounds.max_e1,
                   "search bound on the higher twists");
    app.add_option("--max-eplus", cfg.bounds.max_eplus,
                   "search bound on e_plus");
    app.add_option("--max-r", cfg.bounds.max_r,
                   "family truncation for listed degree families");
    app.add_option("--max-partitions", cfg.max_partitions,
                   "cap on enumerated partitions per sweep");
    app.add_option("--format", cfg.format, "json | csv")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--out", cfg.out, "write the report to a file");

    auto* suite = app.add_subcommand(
        "oracle-suite", "finite-field sweep checking the kernel predictors");
    suite->add_option("--prime", cfg.field.prime, "field characteristic");
    suite->add_option("--seed", cfg.field.seed, "sampling seed");
    suite->add_option("--trials", cfg.field.trials, "independent samples");
    suite->add_option("--threads", cfg.threads, "worker threads");
    suite->add_option("--max-rank", cfg.suite.max_rank, "largest source rank");
    suite->add_option("--deg-lo", cfg.suite.degree_lo, "smallest twist");
    suite->add_option("--deg-hi", cfg.suite.degree_hi, "largest twist");
    suite->add_option("--max-m", cfg.suite.m_max, "largest torsion length");
    suite->add_option("--max-ell", cfg.suite.ell_max, "largest line twist");
    suite->add_option("--max-a", cfg.suite.a_max, "largest trivial summand");
    suite->add_option("--max-b", cfg.suite.b_max, "largest plus-twist");

    auto* examples = app.add_subcommand(
        "examples", "run the worked-example battery");
    examples->add_option("--only", cfg.only, "run a single block by name");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }

    if (app.count("--alpha") > 0) cfg.alpha = alpha;
    if (app.count("--beta") > 0) cfg.beta = beta;

    if (suite->parsed()) {
        cfg.command = "oracle-suite";
        return emit(scrollcert::run_oracle_suite(cfg), cfg.out);
    }
    if (examples->parsed()) {
        cfg.command = "examples";
        return emit(scrollcert::run_examples(cfg), cfg.out);
    }
    cfg.command = "certify";
    if (app.count("--k") == 0 || app.count("--n") == 0) {
        std::cerr << "certify requires --k and --n\n";
        return 1;
    }
    return emit(scrollcert::run_certify(cfg), cfg.out);
}
