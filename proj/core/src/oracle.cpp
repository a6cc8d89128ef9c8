#include <scrollcert/oracle.hpp>

#include <scrollcert/kernel_predictors.hpp>
#include <scrollcert/linalg.hpp>
#include <scrollcert/prime_field.hpp>
#include <scrollcert/rational.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_set>

namespace scrollcert {

namespace {

constexpr const char* kNotSurjective =
    "map not surjective / kernel not locally free";
constexpr const char* kNonGeneric =
    "non-generic sample suspected; increase p or trials";

uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

void fnv_mix(uint64_t& h, uint64_t v) {
    for (int i = 0; i < 8; ++i) {
        h ^= (v >> (8 * i)) & 0xffULL;
        h *= 0x100000001b3ULL;
    }
}

uint64_t problem_hash(const GenericMapProblem& problem) {
    uint64_t h = 0xcbf29ce484222325ULL;
    if (std::holds_alternative<LineTarget>(problem.target)) {
        fnv_mix(h, 1);
        fnv_mix(h, static_cast<uint64_t>(std::get<LineTarget>(problem.target).ell));
    } else {
        fnv_mix(h, 2);
        fnv_mix(h, static_cast<uint64_t>(std::get<TorsionTarget>(problem.target).m));
    }
    fnv_mix(h, static_cast<uint64_t>(problem.source.rank()));
    for (long long d : problem.source.degrees())
        fnv_mix(h, static_cast<uint64_t>(d));
    return h;
}

std::mt19937_64 trial_rng(const FieldConfig& cfg, uint64_t hash, int trial) {
    uint64_t s = splitmix64(cfg.seed);
    s = splitmix64(s ^ hash);
    s = splitmix64(s ^ static_cast<uint64_t>(trial));
    return std::mt19937_64(s);
}

// Uniform enough for genericity purposes; avoids distribution objects whose
// output is not pinned down by the standard.
int64_t draw(std::mt19937_64& rng, int64_t p) {
    return static_cast<int64_t>(rng() % static_cast<uint64_t>(p));
}

struct LineMapData {
    // polys[i][j] = j-th coefficient of the degree (ell - a_i) multiplier.
    std::vector<std::vector<int64_t>> polys;
};

struct TorsionMapData {
    std::vector<int64_t> points;
    std::vector<std::vector<int64_t>> covectors;  // one per point, length rank
};

LineMapData sample_line_map(const SplittingType& source, long long ell,
                            std::mt19937_64& rng, int64_t p) {
    LineMapData data;
    for (long long a : source.degrees()) {
        std::vector<int64_t> g(static_cast<size_t>(ell - a) + 1);
        for (auto& c : g) c = draw(rng, p);
        data.polys.push_back(std::move(g));
    }
    return data;
}

TorsionMapData sample_torsion_map(const SplittingType& source, long long m,
                                  std::mt19937_64& rng, int64_t p) {
    if (m >= p)
        throw std::domain_error(
            "torsion length must be smaller than the field size");
    TorsionMapData data;
    std::unordered_set<int64_t> used;
    while (static_cast<long long>(data.points.size()) < m) {
        int64_t x = draw(rng, p);
        if (used.insert(x).second) data.points.push_back(x);
    }
    for (long long j = 0; j < m; ++j) {
        std::vector<int64_t> lam(static_cast<size_t>(source.rank()));
        bool nonzero = false;
        while (!nonzero) {
            for (auto& c : lam) {
                c = draw(rng, p);
                if (c != 0) nonzero = true;
            }
        }
        data.covectors.push_back(std::move(lam));
    }
    return data;
}

// h^0 of the kernel of the twisted map, by Gaussian elimination. The map
// data is fixed; only the twist t varies.
template <typename Ops>
long long twisted_kernel_h0(const SplittingType& source, const Target& target,
                            const LineMapData* line, const TorsionMapData* tors,
                            long long t, const Ops& ops) {
    using V = typename Ops::value_type;
    const auto& degs = source.degrees();
    size_t cols = 0;
    for (long long a : degs) cols += static_cast<size_t>(section_dim(a + t));
    std::vector<std::vector<V>> mat;
    if (line) {
        long long ell = std::get<LineTarget>(target).ell;
        size_t rows = static_cast<size_t>(section_dim(ell + t));
        mat.assign(rows, std::vector<V>(cols, ops.zero()));
        size_t col = 0;
        for (size_t i = 0; i < degs.size(); ++i) {
            long long sd = section_dim(degs[i] + t);
            for (long long e = 0; e < sd; ++e, ++col)
                for (size_t j = 0; j < line->polys[i].size(); ++j) {
                    size_t row = static_cast<size_t>(e) + j;
                    if (row < rows) mat[row][col] = V(line->polys[i][j]);
                }
        }
    } else {
        size_t rows = tors->points.size();
        mat.assign(rows, std::vector<V>(cols, ops.zero()));
        for (size_t j = 0; j < rows; ++j) {
            size_t col = 0;
            for (size_t i = 0; i < degs.size(); ++i) {
                long long sd = section_dim(degs[i] + t);
                V pw(1);
                for (long long e = 0; e < sd; ++e, ++col) {
                    mat[j][col] = ops.mul(V(tors->covectors[j][i]), pw);
                    pw = ops.mul(pw, V(tors->points[j]));
                }
            }
        }
    }
    return static_cast<long long>(matrix_nullity(mat, cols, ops));
}

// Reads the kernel type off the section-count profile c(t). Every sanity
// check here certifies that the sample behaved like a surjection with
// locally free kernel of the expected rank and degree.
SplittingType recover_from_profile(const std::map<long long, long long>& c,
                                   long long lo, long long hi,
                                   long long rk_exp, long long deg_exp) {
    if (rk_exp == 0) {
        for (const auto& [t, v] : c)
            if (v != 0) throw std::runtime_error(kNotSurjective);
        if (deg_exp != 0) throw std::runtime_error(kNotSurjective);
        return SplittingType(std::vector<long long>{});
    }
    if (c.at(-hi - 2) != 0 || c.at(-hi - 1) != 0)
        throw std::runtime_error(kNotSurjective);
    long long prev_c = -1, prev_f = 0;
    std::map<long long, long long> f;
    for (long long t = -hi - 2; t <= -lo; ++t) {
        long long v = c.at(t);
        if (prev_c >= 0) {
            if (v < prev_c) throw std::runtime_error(kNotSurjective);
            long long ft = v - prev_c;
            if (ft < prev_f) throw std::runtime_error(kNotSurjective);
            f[t] = ft;
            prev_f = ft;
        }
        prev_c = v;
    }
    if (f.at(-lo) != rk_exp) throw std::runtime_error(kNotSurjective);
    std::vector<long long> degrees;
    long long deg_sum = 0;
    for (long long d = hi; d >= lo; --d) {
        long long mult = f.at(-d) - f.at(-d - 1);
        for (long long q = 0; q < mult; ++q) {
            degrees.push_back(d);
            deg_sum += d;
        }
    }
    if (static_cast<long long>(degrees.size()) != rk_exp || deg_sum != deg_exp)
        throw std::runtime_error(kNotSurjective);
    return SplittingType(degrees);
}

SplittingType run_trial(const GenericMapProblem& problem,
                        const FieldConfig& cfg, int trial) {
    PrimeField field(cfg.prime);
    auto rng = trial_rng(cfg, problem_hash(problem), trial);
    const auto& source = problem.source;
    const bool is_line = std::holds_alternative<LineTarget>(problem.target);

    std::optional<LineMapData> line;
    std::optional<TorsionMapData> tors;
    if (is_line)
        line = sample_line_map(source, std::get<LineTarget>(problem.target).ell,
                               rng, field.p());
    else
        tors = sample_torsion_map(
            source, std::get<TorsionTarget>(problem.target).m, rng, field.p());

    long long rk_exp = problem.expected_kernel_rank();
    long long deg_exp = problem.expected_kernel_degree();
    long long hi = source.empty() ? 0 : source.max_degree();
    long long lo = rk_exp >= 1 ? deg_exp - (rk_exp - 1) * hi : -hi - 2;
    long long t_hi = rk_exp >= 1 ? -lo : hi + 2;

    std::map<long long, long long> c;
    for (long long t = -hi - 2; t <= t_hi; ++t) {
        if (cfg.exact_rationals) {
            RatOps ops;
            c[t] = twisted_kernel_h0(source, problem.target,
                                     line ? &*line : nullptr,
                                     tors ? &*tors : nullptr, t, ops);
        } else {
            FpOps ops{&field};
            c[t] = twisted_kernel_h0(source, problem.target,
                                     line ? &*line : nullptr,
                                     tors ? &*tors : nullptr, t, ops);
        }
    }
    return recover_from_profile(c, lo, hi, rk_exp, deg_exp);
}

}  // namespace

void GenericMapProblem::validate() const {
    if (std::holds_alternative<LineTarget>(target)) {
        long long ell = std::get<LineTarget>(target).ell;
        if (source.empty() || ell < source.max_degree())
            throw std::domain_error(
                "line target requires a nonempty source and ell >= max "
                "degree");
    } else {
        if (std::get<TorsionTarget>(target).m < 0)
            throw std::domain_error("torsion target requires m >= 0");
    }
}

long long GenericMapProblem::expected_kernel_rank() const {
    if (std::holds_alternative<LineTarget>(target)) return source.rank() - 1;
    return source.rank();
}

long long GenericMapProblem::expected_kernel_degree() const {
    if (std::holds_alternative<LineTarget>(target))
        return source.degree() - std::get<LineTarget>(target).ell;
    return source.degree() - std::get<TorsionTarget>(target).m;
}

std::int64_t recommended_prime_floor(const GenericMapProblem& problem) {
    std::int64_t s = problem.source.rank();
    for (long long a : problem.source.degrees()) s += std::llabs(a);
    if (std::holds_alternative<LineTarget>(problem.target))
        s += std::llabs(std::get<LineTarget>(problem.target).ell);
    else
        s += std::get<TorsionTarget>(problem.target).m;
    return 2 * s * s;
}

SplittingType oracle_kernel_type(const GenericMapProblem& problem,
                                 const FieldConfig& cfg) {
    problem.validate();
    if (cfg.trials < 1)
        throw std::domain_error("at least one trial is required");
    std::optional<SplittingType> agreed;
    for (int trial = 0; trial < cfg.trials; ++trial) {
        SplittingType k = run_trial(problem, cfg, trial);
        if (agreed && !(k == *agreed)) throw std::runtime_error(kNonGeneric);
        agreed = std::move(k);
    }
    return *agreed;
}

GenericMapProblem plus_trivial_problem(const SplittingType& e, long long a,
                                       long long b) {
    std::vector<long long> degs = e.dual().degrees();
    for (long long i = 0; i < a; ++i) degs.push_back(0);
    return GenericMapProblem{SplittingType(degs), LineTarget{b}};
}

std::vector<SplittingType> enumerate_splitting_types(long long rank,
                                                     long long lo,
                                                     long long hi) {
    std::vector<SplittingType> out;
    std::vector<long long> cur;
    auto rec = [&](auto&& self, long long remaining, long long cap) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (long long d = cap; d >= lo; --d) {
            cur.push_back(d);
            self(self, remaining - 1, d);
            cur.pop_back();
        }
    };
    if (rank >= 0 && lo <= hi) rec(rec, rank, hi);
    return out;
}

namespace {

std::string format_type(const SplittingType& e) {
    std::ostringstream os;
    os << "{";
    const auto& d = e.degrees();
    for (size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i];
    os << "}";
    return os.str();
}

struct SuiteJob {
    GenericMapProblem problem;
    std::string label;
    // Expected kernel type when a closed-form predictor applies.
    std::optional<SplittingType> predicted;
    // Lemma-level conclusions to verify on the oracle output.
    bool expect_perfect = false;
    bool expect_balanced = false;
    std::optional<long long> expect_u;
};

struct JobResult {
    long long checks = 0;
    std::vector<SuiteFailure> failures;
};

JobResult run_job(const SuiteJob& job, const FieldConfig& cfg) {
    JobResult res;
    SplittingType k(std::vector<long long>{});
    try {
        k = oracle_kernel_type(job.problem, cfg);
    } catch (const std::exception& ex) {
        res.checks += 1;
        res.failures.push_back({"oracle_error", job.label, ex.what()});
        return res;
    }
    if (job.predicted) {
        res.checks += 1;
        if (!(k == *job.predicted))
            res.failures.push_back(
                {"predictor_mismatch", job.label,
                 "oracle " + format_type(k) + " vs predictor " +
                     format_type(*job.predicted) + "; " + kNonGeneric});
    }
    if (job.expect_perfect) {
        res.checks += 1;
        if (!k.perfect())
            res.failures.push_back(
                {"perfect_expected", job.label, "oracle " + format_type(k)});
    }
    if (job.expect_balanced) {
        res.checks += 1;
        if (!k.balanced())
            res.failures.push_back(
                {"balanced_expected", job.label, "oracle " + format_type(k)});
    }
    if (job.expect_u) {
        res.checks += 1;
        long long uk = k.rank() == 0 ? 0 : unbalanced_stats(k).u;
        if (uk != *job.expect_u)
            res.failures.push_back(
                {"unbalance_drop", job.label,
                 "oracle " + format_type(k) + " has u=" + std::to_string(uk) +
                     ", expected " + std::to_string(*job.expect_u)});
    }
    return res;
}

}  // namespace

SuiteReport verify_lemma_suite(const SuiteBounds& bounds,
                               const FieldConfig& cfg, int threads) {
    std::vector<SuiteJob> jobs;
    std::int64_t worst_floor = 0;

    auto push = [&](SuiteJob job) {
        worst_floor = std::max(worst_floor, recommended_prime_floor(job.problem));
        jobs.push_back(std::move(job));
    };

    for (long long rank = 1; rank <= bounds.max_rank; ++rank) {
        for (const auto& e :
             enumerate_splitting_types(rank, bounds.degree_lo,
                                       bounds.degree_hi)) {
            long long u = unbalanced_stats(e).u;
            for (long long m = 0; m <= bounds.m_max; ++m) {
                SuiteJob job;
                job.problem = {e, TorsionTarget{m}};
                job.label = "E=" + format_type(e) + " m=" + std::to_string(m);
                job.predicted = predict_kernel_torsion(e, m);
                if (m == u) job.expect_perfect = true;
                if (m >= u) job.expect_balanced = true;
                else job.expect_u = u - m;
                push(std::move(job));
            }
            if (rank >= 2) {
                for (long long ell = e.max_degree(); ell <= bounds.ell_max;
                     ++ell) {
                    SuiteJob job;
                    job.problem = {e, LineTarget{ell}};
                    job.label =
                        "E=" + format_type(e) + " ell=" + std::to_string(ell);
                    job.predicted = predict_kernel_line(e, ell);
                    if (ell >= e.degree() - (rank - 1) * e.min_degree())
                        job.expect_balanced = true;
                    push(std::move(job));
                }
            }
            if (e.balanced() && e.min_degree() >= 0) {
                Rational s(e.degree(), e.rank());
                for (long long a = 1; a <= bounds.a_max; ++a) {
                    long long b_lo = to_int64((Rational(a - 1) * s).ceil());
                    for (long long b = b_lo; b <= bounds.b_max; ++b) {
                        if (predict_kernel_plus_trivial(e, a, b) !=
                            PlusTrivialClaim::certified_balanced)
                            continue;
                        SuiteJob job;
                        job.problem = plus_trivial_problem(e, a, b);
                        job.label = "E=" + format_type(e) +
                                    " a=" + std::to_string(a) +
                                    " b=" + std::to_string(b);
                        job.predicted =
                            predict_kernel_line(job.problem.source, b);
                        job.expect_balanced = true;
                        push(std::move(job));
                    }
                }
            }
        }
    }

    std::vector<JobResult> results(jobs.size());
    if (threads <= 1) {
        for (size_t i = 0; i < jobs.size(); ++i) results[i] = run_job(jobs[i], cfg);
    } else {
        std::atomic<size_t> next{0};
        auto worker = [&]() {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= jobs.size()) return;
                results[i] = run_job(jobs[i], cfg);
            }
        };
        std::vector<std::thread> pool;
        for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    SuiteReport report;
    report.prime = cfg.prime;
    report.seed = cfg.seed;
    report.trials = cfg.trials;
    report.p_below_recommended = cfg.prime <= worst_floor;
    for (const auto& r : results) {
        report.checks_run += r.checks;
        report.failures.insert(report.failures.end(), r.failures.begin(),
                               r.failures.end());
    }
    return report;
}

}  // namespace scrollcert
