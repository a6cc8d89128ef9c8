#include <scrollcert/solver.hpp>

#include <scrollcert/splitting_type.hpp>

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>

namespace scrollcert {

namespace {

Condition cond_eq(const std::string& name, const Rational& lhs,
                  const Rational& rhs) {
    return {name, "eq", lhs.str(), rhs.str(), lhs == rhs};
}

Condition cond_ge(const std::string& name, const Rational& lhs,
                  const Rational& rhs) {
    return {name, "ge", lhs.str(), rhs.str(), lhs >= rhs};
}

Condition cond_in_z(const std::string& name, const Rational& v) {
    return {name, "in_z", v.str(), "", v.is_integer()};
}

long long vec_sum(const std::vector<long long>& v) {
    long long s = 0;
    for (long long x : v) s += x;
    return s;
}

/// Slopes of the successive fibre stages of the flag tower, one entry
/// per break row. The base slope only exists when the base stage has
/// dimension at least two; over a point base the first fibre stage gets
/// its own closed form.
struct ChainData {
    std::vector<std::pair<std::string, Rational>> stages;
    bool s0_omitted = false;
    bool s1_omitted = false;
    long long dim_sigma0 = 0;
};

ChainData chain_of(const SchubertPartition& p, const BreakDecomposition& b,
                   const std::vector<long long>& e) {
    ChainData out;
    long long nk = p.n - p.k;
    long long k0 = b.break_points[0];
    long long a0 = b.values[0];
    out.dim_sigma0 = (k0 + 1) * (nk - a0);
    bool point_base = a0 == nk;
    if (out.dim_sigma0 >= 2) {
        out.stages.emplace_back("s0", Rational(e[0] * (nk - a0 + k0 + 1) - 2,
                                               (nk - a0) * (k0 + 1) - 1));
    } else {
        out.s0_omitted = true;
    }
    long long partial = e[0];
    for (long long i = 1; i <= b.u(); ++i) {
        long long ki = b.break_points[i];
        long long prev = b.break_points[i - 1];
        long long ai = b.values[i];
        partial += e[i];
        std::string name = "s" + std::to_string(i);
        if (i == 1 && point_base) {
            long long den = (ki - prev) * (nk - ai) - 1;
            if (den == 0) {
                out.s1_omitted = true;
                continue;
            }
            out.stages.emplace_back(
                name, Rational(e[1] * (nk + ki - prev - ai) - 2, den));
        } else {
            out.stages.emplace_back(name, Rational(e[i], ki - prev) +
                                              Rational(partial, nk - ai));
        }
    }
    return out;
}

Rational plus_slope(long long deg_n, long long rank_n, long long e_plus) {
    return Rational(deg_n, rank_n) + Rational(e_plus * (rank_n + 1), rank_n);
}

Rational kernel_bound(long long deg_n, long long rank_n,
                      const Rational& min_g) {
    return Rational(deg_n) - Rational(rank_n - 1) * min_g;
}

struct BaseOption {
    long long e0 = 0;
    std::shared_ptr<BalancedCertificate> sub;
};

/// Admissible base-stage degrees: a point base pins e0 = 0, a base
/// entered at row zero allows anything from its dimension upward, and a
/// deeper base keeps only the degrees some chained certificate covers.
std::vector<BaseOption> base_options(const SchubertPartition& p,
                                     const BreakDecomposition& b,
                                     const SearchBounds& bounds,
                                     CertifyContext* ctx) {
    std::vector<BaseOption> out;
    long long nk = p.n - p.k;
    long long k0 = b.break_points[0];
    long long a0 = b.values[0];
    long long dim0 = (k0 + 1) * (nk - a0);
    if (dim0 == 0) {
        out.push_back({0, nullptr});
    } else if (k0 == 0) {
        for (long long e0 = dim0; e0 <= bounds.max_e0; ++e0)
            out.push_back({e0, nullptr});
    } else {
        long long step = b.block_sizes[0];
        for (long long e0 = step; e0 <= bounds.max_e0; e0 += step) {
            auto sub = ctx->certify(k0, nk - a0 + k0, e0);
            if (sub) out.push_back({e0, sub});
        }
    }
    return out;
}

void append_base_condition(const BreakDecomposition& b, long long e0,
                           long long dim0,
                           const std::shared_ptr<BalancedCertificate>& sub,
                           std::vector<Condition>& conds) {
    if (dim0 == 0)
        conds.push_back(cond_eq("base_point", e0, 0));
    else if (b.break_points[0] == 0)
        conds.push_back(cond_ge("base_degree_min", e0, dim0));
    else
        conds.push_back(cond_eq("recursive_base", e0, sub->degree));
}

/// Walks every block-divisible twist vector within bounds whose base
/// degree is admissible, handing each to the visitor together with the
/// chained base certificate (when one is needed).
template <typename F>
void for_each_twist(const SchubertPartition& p, const BreakDecomposition& b,
                    const SearchBounds& bounds, CertifyContext* ctx,
                    F&& visit) {
    long long u = b.u();
    std::vector<long long> e(u + 1, 0);
    for (const auto& base : base_options(p, b, bounds, ctx)) {
        e[0] = base.e0;
        std::function<void(long long)> rec = [&](long long i) {
            if (i > u) {
                visit(e, base.sub);
                return;
            }
            for (long long v = 0; v <= bounds.max_e1; v += b.block_sizes[i]) {
                e[i] = v;
                rec(i + 1);
            }
        };
        rec(1);
    }
}

void check_partition_owner(long long k, long long n,
                           const SchubertPartition& p) {
    if (p.k != k || p.n != n)
        throw std::domain_error("partition belongs to a different Grassmannian");
}

std::vector<BalancedCertificate> solve_bp_impl(
    long long k, long long n, const SchubertPartition& p,
    const std::optional<SimpleCycle>& cycle, const SearchBounds& bounds,
    CertifyContext* ctx) {
    p.validate();
    check_partition_owner(k, n, p);
    if (k < 1) throw std::domain_error("b+p requires k >= 1");
    BreakDecomposition b = break_decomposition(p);
    long long u = b.u();
    bool codim_ok = k >= 1 && 2 * k + 1 <= n &&
                    p.codim() == remainder_R(k, n).R + 1;
    CertifyContext local(bounds);
    if (!ctx) ctx = &local;
    std::vector<BalancedCertificate> out;
    for_each_twist(p, b, bounds, ctx, [&](const std::vector<long long>& e,
                                          const std::shared_ptr<
                                              BalancedCertificate>& sub) {
        NormalGraded ng = normal_graded(p, e);
        ChainData ch = chain_of(p, b, e);
        bool readings_differ = ng.deg_n_rows != ng.deg_n_tensor;
        std::vector<std::string> readings;
        if (readings_differ) {
            readings = {"rows", "tensor"};
        } else {
            readings = {""};
        }
        for (const std::string& reading : readings) {
            bool tensor = reading == "tensor";
            long long deg_n = tensor ? ng.deg_n_tensor : ng.deg_n_rows;
            auto chain = ch.stages;
            chain.emplace_back("s_plus", plus_slope(deg_n, ng.rank_n, 1));
            bool pass = true;
            for (const auto& [name, v] : chain)
                if (!v.is_integer()) pass = false;
            for (std::size_t i = 0; pass && i + 1 < chain.size(); ++i)
                if (!(chain[i].second == chain[i + 1].second)) pass = false;
            if (!pass) continue;

            BalancedCertificate c;
            c.k = k;
            c.n = n;
            c.strategy = "b+p";
            c.partition = p.a;
            c.cycle = cycle;
            c.e = e;
            c.e_plus = 1;
            for (long long i = 0; i <= u; ++i)
                c.conditions.push_back(
                    cond_eq("divisibility_e" + std::to_string(i),
                            e[i] % b.block_sizes[i], 0));
            append_base_condition(b, e[0], ch.dim_sigma0, sub, c.conditions);
            c.conditions.push_back(cond_eq("eplus_one", 1, 1));
            for (const auto& [name, v] : chain)
                c.conditions.push_back(cond_in_z("integral_slope_" + name, v));
            for (std::size_t i = 0; i + 1 < chain.size(); ++i)
                c.conditions.push_back(
                    cond_eq("stage_slope_match_" + chain[i].first,
                            chain[i].second, chain[i + 1].second));
            for (const auto& [name, v] : chain)
                c.slopes.emplace_back(name, v.str());
            for (const auto& piece : ng.pieces)
                c.slopes.emplace_back("g" + std::to_string(piece.index),
                                      piece.g.str());
            c.reading = reading;
            c.d = n - k;
            c.m = 1;
            c.degree = (n - k) + vec_sum(e);
            c.family = DegreeFamily{n - k, vec_sum(e), bounds.max_r};
            c.deg_n = deg_n;
            c.rk_n = ng.rank_n;
            Rational min_g = tensor ? ng.min_g_tensor() : ng.min_g_rows();
            c.e_plus_bound = kernel_bound(deg_n, ng.rank_n, min_g).str();
            if (!codim_ok) c.flags.push_back("codim_mismatch_allowed");
            if (ng.any_discrepancy) c.flags.push_back("gi_tensor_discrepancy");
            if (reading == "rows") c.flags.push_back("slope_reading_rows");
            if (reading == "tensor") c.flags.push_back("slope_reading_tensor");
            if (ch.s0_omitted) c.flags.push_back("s0_omitted");
            if (ch.s1_omitted) c.flags.push_back("s1_omitted");
            c.sub = sub;
            out.push_back(std::move(c));
        }
    });
    canonical_sort(out);
    return out;
}

}  // namespace

CurveNormalStats curve_normal_stats(long long e, long long k, long long n) {
    if (e < 1 || k < 0 || n < k + 1)
        throw std::domain_error(
            "curve stats need e >= 1 and 0 <= k < n");
    CurveNormalStats out;
    out.deg_n = e * (n + 1) - 2;
    out.rk_n = (k + 1) * (n - k) - 1;
    out.max_rulings = floor_div(out.deg_n, out.rk_n) + 1;
    out.rk_n_printed = (k + 1) * (n + 1) - 1;
    return out;
}

long long expected_degree(long long q, long long k, long long n) {
    if (q < 1 || k < 0 || n < k + 1)
        throw std::domain_error("expected degree needs q >= 1 and 0 <= k < n");
    Rational v((q - 1) * ((k + 1) * (n - k) - 1) + 2, n + 1);
    return to_int64(v.ceil());
}

ScrollSlope minimal_scroll_slope(long long n) {
    if (n < 3) throw std::domain_error("scroll slope needs n >= 3");
    ScrollSlope out;
    out.slope = Rational(n * n - 3, 2 * n - 3);
    out.floor = to_int64(out.slope.floor());
    long long closed = n % 2 == 1 ? (n + 1) / 2 : n / 2;
    if (out.floor != closed)
        throw std::logic_error("scroll slope floor identity failed");
    out.rulings = curve_normal_stats(n - 1, 1, n).max_rulings;
    return out;
}

std::vector<SchubertPartition> partitions_with_codim(long long k, long long n,
                                                     long long codim,
                                                     long long max_count) {
    std::vector<SchubertPartition> out;
    if (k < 0 || n < k + 1 || codim < 0 || max_count < 1) return out;
    std::vector<long long> cur;
    std::function<void(long long, long long)> rec = [&](long long remaining,
                                                        long long max_entry) {
        if (static_cast<long long>(out.size()) >= max_count) return;
        long long slots = k + 1 - static_cast<long long>(cur.size());
        if (slots == 0) {
            if (remaining == 0) out.push_back(SchubertPartition{k, n, cur});
            return;
        }
        for (long long v = std::min(max_entry, remaining); v >= 0; --v) {
            if (v * slots < remaining) break;
            cur.push_back(v);
            rec(remaining - v, v);
            cur.pop_back();
        }
    };
    rec(codim, n - k);
    return out;
}

std::vector<BalancedCertificate> solve_pb(long long k, long long n,
                                          const SchubertPartition& p,
                                          const SearchBounds& bounds,
                                          CertifyContext* ctx) {
    p.validate();
    check_partition_owner(k, n, p);
    if (k < 1 || 2 * k + 1 > n)
        throw std::domain_error("p+b requires 1 <= k and 2k+1 <= n");
    if (p.codim() != remainder_R(k, n).R + 1)
        throw std::runtime_error("partition does not match R+1");
    BreakDecomposition b = break_decomposition(p);
    long long u = b.u();
    CertifyContext local(bounds);
    if (!ctx) ctx = &local;
    std::vector<BalancedCertificate> out;
    for_each_twist(p, b, bounds, ctx, [&](const std::vector<long long>& e,
                                          const std::shared_ptr<
                                              BalancedCertificate>& sub) {
        NormalGraded ng = normal_graded(p, e);
        ChainData ch = chain_of(p, b, e);
        long long deg_n = ng.deg_n_rows;
        long long a = ng.rank_n;
        Rational bound = kernel_bound(deg_n, a, ng.min_g_rows());
        long long ep_lo = 1;
        long long ep_hi = bounds.max_eplus;
        if (u >= 1) ep_lo = std::max(ep_lo, to_int64(bound.ceil()));
        if (!ch.stages.empty()) {
            // every stage must share one floor, and it pins e_plus to the
            // single value whose lift slope lands in the same unit window
            BigInt f = ch.stages[0].second.floor();
            for (const auto& [name, v] : ch.stages)
                if (v.floor() != f) return;
            ep_lo = std::max(
                ep_lo, to_int64(Rational(f * a - deg_n, BigInt(a + 1)).ceil()));
            ep_hi = std::min(
                ep_hi,
                to_int64(Rational((f + 1) * a - deg_n, BigInt(a + 1)).ceil()) -
                    1);
        }
        for (long long ep = ep_lo; ep <= ep_hi; ++ep) {
            auto chain = ch.stages;
            chain.emplace_back("s_plus", plus_slope(deg_n, a, ep));
            BalancedCertificate c;
            c.k = k;
            c.n = n;
            c.strategy = "p+b";
            c.partition = p.a;
            c.e = e;
            c.e_plus = ep;
            c.conditions.push_back(cond_eq("codimension_R_plus_1", p.codim(),
                                           remainder_R(k, n).R + 1));
            for (long long i = 0; i <= u; ++i)
                c.conditions.push_back(
                    cond_eq("divisibility_e" + std::to_string(i),
                            e[i] % b.block_sizes[i], 0));
            append_base_condition(b, e[0], ch.dim_sigma0, sub, c.conditions);
            if (u == 0)
                c.conditions.push_back(cond_eq("u_zero", 0, 0));
            else
                c.conditions.push_back(
                    cond_ge("eplus_kernel_bound", ep, bound));
            for (std::size_t i = 0; i + 1 < chain.size(); ++i)
                c.conditions.push_back(
                    cond_eq("stage_floor_match_" + chain[i].first,
                            Rational(chain[i].second.floor()),
                            Rational(chain[i + 1].second.floor())));
            for (const auto& [name, v] : chain)
                c.slopes.emplace_back(name, v.str());
            for (const auto& piece : ng.pieces)
                c.slopes.emplace_back("g" + std::to_string(piece.index),
                                      piece.g.str());
            c.degree = vec_sum(e) + (n - k - 1) * ep;
            c.deg_n = deg_n;
            c.rk_n = a;
            c.e_plus_bound = bound.str();
            if (ng.any_discrepancy) c.flags.push_back("gi_tensor_discrepancy");
            if (ch.s0_omitted) c.flags.push_back("s0_omitted");
            if (ch.s1_omitted) c.flags.push_back("s1_omitted");
            c.sub = sub;
            out.push_back(std::move(c));
        }
    });
    canonical_sort(out);
    return out;
}

std::vector<BalancedCertificate> solve_bp(long long k, long long n,
                                          const SchubertPartition& p,
                                          const SearchBounds& bounds,
                                          CertifyContext* ctx) {
    return solve_bp_impl(k, n, p, std::nullopt, bounds, ctx);
}

std::vector<BalancedCertificate> solve_bp(long long k, long long n,
                                          const SimpleCycle& cycle,
                                          const SearchBounds& bounds,
                                          CertifyContext* ctx) {
    SchubertPartition p = cycle_partition(k, n, cycle);
    return solve_bp_impl(k, n, p, cycle, bounds, ctx);
}

std::vector<BalancedCertificate> oddg_certificate(long long k,
                                                  long long r_max) {
    if (k < 1) throw std::domain_error("oddG requires k >= 1");
    if (r_max < 1) throw std::domain_error("oddG requires r_max >= 1");
    std::vector<BalancedCertificate> out;
    Rational s_plus = Rational(1) + Rational(1 + 2 * k, 2 * k + 1);
    SplittingType nc0 = balanced_of(k, k)
                            .direct_sum(SplittingType({0}))
                            .direct_sum(balanced_of(k, k));
    for (long long r = 1; r <= r_max; ++r) {
        BalancedCertificate c;
        c.k = k;
        c.n = 2 * k + 1;
        c.strategy = "oddG";
        c.partition.assign(1, k + 1);
        c.partition.insert(c.partition.end(), k, 1);
        c.cycle = SimpleCycle{1, 1};
        c.e = {k};
        c.e_plus = 1;
        c.r = r;
        if (k >= 2) {
            Rational s0(2 * k * k - 2, k * k - 1);
            c.conditions.push_back(cond_in_z("integral_slope_s0", s0));
            c.conditions.push_back(cond_in_z("integral_slope_s_plus", s_plus));
            c.conditions.push_back(cond_eq("slopes_equal", s0, s_plus));
            c.slopes.emplace_back("s0", s0.str());
        } else {
            c.conditions.push_back(cond_in_z("integral_slope_s_plus", s_plus));
            c.flags.push_back("s0_omitted");
        }
        c.slopes.emplace_back("s_plus", s_plus.str());
        c.conditions.push_back(cond_eq("eplus_one", 1, 1));
        c.normal_type = nc0.degrees();
        long long spread = nc0.max_degree() - nc0.min_degree();
        c.conditions.push_back(
            cond_ge("normal_restriction_balanced", 1, spread));
        c.conditions.push_back(cond_ge("plus_trivial_threshold", 1, 0));
        c.degree = r * k + 1;
        c.family = DegreeFamily{k + 1, k, r_max};
        c.deg_n = nc0.degree();
        c.rk_n = nc0.rank();
        c.flags.insert(c.flags.begin(), "codim_mismatch_allowed");
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<BalancedCertificate> alphabeta_search(long long k, long long n,
                                                  const SimpleCycle& cycle,
                                                  const SearchBounds& bounds) {
    SchubertPartition p = cycle_partition(k, n, cycle);
    long long codim = cycle_codim(k, n, cycle);
    if (k < 1 || 2 * k + 1 > n || codim != remainder_R(k, n).R + 1)
        throw std::runtime_error("partition does not match R+1");
    long long alpha = cycle.alpha;
    long long beta = cycle.beta;
    std::vector<BalancedCertificate> out;
    if (alpha == k + 1 && beta > 0) return out;  // kernel bound degenerates
    long long dim = (k + 1 - alpha) * (n - k - beta);
    long long e0_lo = dim == 0 ? 0 : (dim == 1 ? 1 : 0);
    long long e0_hi = dim == 0 ? 0 : bounds.max_e0;
    for (long long e0 = e0_lo; e0 <= e0_hi; ++e0) {
        std::optional<Rational> kb;
        if (alpha > 0 && beta > 0)
            kb = Rational(alpha * e0) *
                 (Rational(n - k, k + 1 - alpha) - Rational(1));
        for (long long ep = 0; ep <= bounds.max_eplus; ++ep) {
            if (kb && Rational(ep) < *kb) continue;
            Rational s_plus =
                Rational(ep) + Rational(ep + e0 * (alpha + beta),
                                        alpha * (n - k) +
                                            beta * (k + 1 - alpha));
            std::optional<Rational> s0;
            if (dim >= 2) {
                s0 = Rational(e0 * (n + 1 - alpha - beta) - 2,
                              (k + 1 - alpha) * (n - k - beta) - 1);
                if (s0->floor() != s_plus.floor()) continue;
            }
            BalancedCertificate c;
            c.k = k;
            c.n = n;
            c.strategy = "alphabeta";
            c.partition = p.a;
            c.cycle = cycle;
            c.e = {e0};
            c.e_plus = ep;
            c.conditions.push_back(cond_eq("codimension_R_plus_1", codim,
                                           remainder_R(k, n).R + 1));
            if (dim == 0)
                c.conditions.push_back(cond_eq("base_point", e0, 0));
            else if (dim == 1)
                c.conditions.push_back(cond_ge("base_degree_min", e0, 1));
            if (kb)
                c.conditions.push_back(cond_ge("eplus_kernel_bound", ep, *kb));
            if (s0) {
                c.conditions.push_back(cond_eq("stage_floor_match_s0",
                                               Rational(s0->floor()),
                                               Rational(s_plus.floor())));
                c.slopes.emplace_back("s0", s0->str());
            } else {
                c.flags.push_back("s0_omitted");
            }
            c.slopes.emplace_back("s_plus", s_plus.str());
            c.degree = e0 + ep;
            c.family = DegreeFamily{e0 + ep, e0, bounds.max_r};
            out.push_back(std::move(c));
        }
    }
    canonical_sort(out);
    return out;
}

std::vector<BalancedCertificate> beta_family_solver(long long k, long long n,
                                                    long long beta,
                                                    const SearchBounds& bounds) {
    if (beta < 2) throw std::domain_error("beta-family requires beta >= 2");
    if (k < 1 || n <= 2 * k || beta - 1 > n - k ||
        k * (n - beta - k + 1) < 2)
        throw std::domain_error("beta-family parameters out of range");
    std::vector<BalancedCertificate> out;
    for (long long e0 = 0; e0 <= bounds.max_e0; ++e0) {
        Rational s0(e0 * (n + 1 - beta) - 2, k * (n - beta - k + 1) - 1);
        if (!s0.is_integer()) continue;
        for (long long e1 = 0; e1 <= bounds.max_e1; ++e1) {
            Rational s1 = Rational(e0 + e1, n - k) + Rational(e1);
            if (!(s0 == s1)) continue;
            Rational s_plus = Rational(e0, k) + Rational(e1, beta - 1) +
                              Rational(1, k * (beta - 1)) + Rational(1);
            if (!(s1 == s_plus)) continue;
            BalancedCertificate c;
            c.k = k;
            c.n = n;
            c.strategy = "beta-family";
            c.partition.assign(k, beta - 1);
            c.partition.push_back(0);
            c.e = {e0, e1};
            c.e_plus = 1;
            c.conditions.push_back(cond_eq("slopes_equal_s0_s1", s0, s1));
            c.conditions.push_back(cond_eq("slopes_equal_s1_s_plus", s1,
                                           s_plus));
            c.conditions.push_back(cond_in_z("integral_slope", s0));
            c.slopes.emplace_back("s0", s0.str());
            c.slopes.emplace_back("s1", s1.str());
            c.slopes.emplace_back("s_plus", s_plus.str());
            c.degree = n - k;
            c.family = DegreeFamily{n - k, e0 + e1, bounds.max_r};
            out.push_back(std::move(c));
        }
    }
    canonical_sort(out);
    return out;
}

std::vector<BalancedCertificate> solve_k1_odd(long long n,
                                              const SearchBounds& bounds) {
    if (n < 5 || n % 2 == 0)
        throw std::domain_error("k1-odd requires odd n >= 5");
    long long n0 = (n - 1) / 2;
    std::vector<BalancedCertificate> out;
    for (long long e0 = n0; e0 <= bounds.max_e0; ++e0) {
        long long lhs = e0 + floor_div(2 * (e0 - 1), n0 - 1);
        for (long long e1 = e0; e1 <= bounds.max_e1; ++e1) {
            if (lhs != e1 + floor_div(e0 + e1, 2 * n0)) continue;
            for (long long ep = 0; ep <= bounds.max_eplus; ++ep) {
                long long lift = e0 + ep + floor_div(ep, n0 + 1);
                if (lift > lhs) break;
                if (lift != lhs) continue;
                BalancedCertificate c;
                c.k = 1;
                c.n = n;
                c.strategy = "k1-odd";
                c.e = {e0, e1};
                c.e_plus = ep;
                c.conditions.push_back(cond_ge("base_degree_min", e0, n0));
                c.conditions.push_back(cond_ge("e1_ge_e0", e1, e0));
                c.conditions.push_back(
                    cond_eq("vertical_floor_match", lhs,
                            e1 + floor_div(e0 + e1, 2 * n0)));
                c.conditions.push_back(
                    cond_eq("lift_floor_match", lhs,
                            e0 + ep + floor_div(ep, n0 + 1)));
                c.slopes.emplace_back("floor_common", std::to_string(lhs));
                c.degree = e0 + e1 + (n - 2) * ep;
                if (e1 % (2 * n0 * (n0 + 1)) == 0 && ep % (n0 + 1) == 0)
                    c.flags.push_back("divisibility_family");
                out.push_back(std::move(c));
            }
        }
    }
    canonical_sort(out);
    return out;
}

std::vector<BalancedCertificate> solve_k1_div4(long long n,
                                               const SearchBounds& bounds,
                                               CertifyContext* ctx) {
    if (n % 4 != 0 || n < 8)
        throw std::domain_error("k1-div4 requires n = 4*n1 >= 8");
    long long n1 = n / 4;
    CertifyContext local(bounds);
    if (!ctx) ctx = &local;
    std::vector<BalancedCertificate> out;
    for (long long e0 = 1; e0 <= bounds.max_e0; ++e0) {
        auto sub = ctx->certify(1, n1 + 1, e0);
        if (!sub) continue;
        long long rhs = floor_div(5 * e0 - 4, 4 * n1 - 2);
        for (long long ep = 0; ep <= bounds.max_eplus; ++ep) {
            long long lhs = ep + floor_div(ep, 6 * n1 - 2);
            if (lhs > rhs) break;
            if (lhs != rhs) continue;
            BalancedCertificate c;
            c.k = 1;
            c.n = n;
            c.strategy = "k1-div4";
            c.e = {e0};
            c.e_plus = ep;
            c.conditions.push_back(cond_eq("match4_floor", lhs, rhs));
            c.conditions.push_back(cond_eq("recursive_base", e0, sub->degree));
            Rational s_h((n1 + 2) * e0 - 2, 2 * n1 - 1);
            Rational s_v =
                Rational(e0, 2) + Rational(ep * (6 * n1 - 1), 6 * n1 - 2);
            c.slopes.emplace_back("s_h", s_h.str());
            c.slopes.emplace_back("s_v", s_v.str());
            c.degree = e0 + (n - 2) * ep;
            c.flags.push_back("eplus_parametrization_unverified");
            if (s_v.floor() != s_h.floor())
                c.flags.push_back("unreduced_floor_mismatch");
            c.sub = sub;
            out.push_back(std::move(c));
        }
    }
    canonical_sort(out);
    return out;
}

std::vector<BalancedCertificate> solve_k1_div4plus2(long long n,
                                                    const SearchBounds& bounds) {
    if (n % 4 != 2 || n < 10)
        throw std::domain_error("k1-div4plus2 requires n = 4*n1+2 >= 10");
    long long n1 = (n - 2) / 4;
    std::vector<BalancedCertificate> out;
    for (long long e0 = n1; e0 <= bounds.max_e0; ++e0) {
        long long a2 = e0 + floor_div(2 * e0 - 2, n1 - 1);
        long long e1_lo = floor_div(e0 + n1 - 1, n1);  // n1*e1 >= e0
        for (long long e1 = e1_lo; e1 <= bounds.max_e1; ++e1) {
            long long a1 = floor_div((n1 + 2) * e1, n1 + 1) +
                           floor_div(e0, n1 + 1);
            if (a1 != a2) continue;
            for (long long ep = 0; ep <= bounds.max_eplus; ++ep) {
                long long a3_display =
                    ep + floor_div(ep + 3 * n1 * (e1 + ep), 6 * n1 + 1);
                long long a3_text =
                    ep + floor_div(ep + 3 * n1 * (e1 + e0), 6 * n1 + 1);
                bool match_display = a3_display == a2;
                bool match_text = a3_text == a2;
                if (!match_display && !match_text) continue;
                std::string reading;
                long long a3_used = 0;
                if (match_display && match_text) {
                    reading = "";
                    a3_used = a3_display;
                } else if (match_display) {
                    reading = "display";
                    a3_used = a3_display;
                } else {
                    reading = "text";
                    a3_used = a3_text;
                }
                BalancedCertificate c;
                c.k = 1;
                c.n = n;
                c.strategy = "k1-div4plus2";
                c.e = {e0, e1};
                c.e_plus = ep;
                c.reading = reading;
                c.conditions.push_back(cond_ge("base_degree_min", e0, n1));
                c.conditions.push_back(
                    cond_ge("kernel_balance_e1", n1 * e1, e0));
                c.conditions.push_back(cond_eq("triple_floor_match_12", a1,
                                               a2));
                c.conditions.push_back(cond_eq("triple_floor_match_23", a2,
                                               a3_used));
                c.slopes.emplace_back("floor_common", std::to_string(a2));
                c.degree = e0 + e1 + (n - 2) * ep;
                if (reading == "display")
                    c.flags.push_back("reading_display_term");
                if (reading == "text") c.flags.push_back("reading_text_term");
                out.push_back(std::move(c));
            }
        }
    }
    canonical_sort(out);
    return out;
}

std::shared_ptr<BalancedCertificate> CertifyContext::certify(long long k,
                                                             long long n,
                                                             long long degree) {
    if (k < 1 || n < k + 2 || degree < 1) return nullptr;
    if (2 * k + 1 > n) {
        long long kd = n - k - 1;
        if (kd < 1) return nullptr;
        return certify(kd, n, degree);
    }
    Key key{k, n, degree};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    if (in_progress_.count(key) > 0 || depth_ >= 8) return nullptr;
    in_progress_.insert(key);
    ++depth_;

    std::shared_ptr<BalancedCertificate> found;
    if (n == 2 * k + 1 && degree >= k + 1 && (degree - 1) % k == 0) {
        auto certs = oddg_certificate(k, (degree - 1) / k);
        found = std::make_shared<BalancedCertificate>(std::move(certs.back()));
    }

    SearchBounds tb = bounds_;
    tb.max_e0 = std::min(tb.max_e0, degree);
    tb.max_e1 = std::min(tb.max_e1, degree);
    tb.max_eplus = std::min(tb.max_eplus, degree);

    if (!found && k == 1 && n >= 5) {
        std::vector<BalancedCertificate> certs;
        if (n % 2 == 1)
            certs = solve_k1_odd(n, tb);
        else if (n % 4 == 0)
            certs = solve_k1_div4(n, tb, this);
        else if (n >= 10)
            certs = solve_k1_div4plus2(n, tb);
        for (auto& c : certs)
            if (c.degree == degree) {
                found = std::make_shared<BalancedCertificate>(std::move(c));
                break;
            }
    }

    if (!found && n > 2 * k + 1) {
        long long codim = remainder_R(k, n).R + 1;
        auto parts = partitions_with_codim(k, n, codim, 50);
        for (const auto& p : parts) {
            for (const auto& c : solve_bp(k, n, p, tb, this)) {
                long long step = c.family ? c.family->step : 0;
                long long off = degree - (n - k);
                if (off < 0) continue;
                if (off != 0 && (step == 0 || off % step != 0)) continue;
                BalancedCertificate member = c;
                member.m = off == 0 ? 0 : off / step;
                member.degree = degree;
                found =
                    std::make_shared<BalancedCertificate>(std::move(member));
                break;
            }
            if (found) break;
            for (auto& c : solve_pb(k, n, p, tb, this))
                if (c.degree == degree) {
                    found =
                        std::make_shared<BalancedCertificate>(std::move(c));
                    break;
                }
            if (found) break;
        }
    }

    --depth_;
    in_progress_.erase(key);
    memo_[key] = found;
    return found;
}

}  // namespace scrollcert
