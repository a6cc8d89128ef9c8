#include <scrollcert/certificate.hpp>

#include <scrollcert/splitting_type.hpp>

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace scrollcert {

namespace {

Condition make_eq(const std::string& name, const Rational& lhs,
                  const Rational& rhs) {
    return {name, "eq", lhs.str(), rhs.str(), lhs == rhs};
}

Condition make_ge(const std::string& name, const Rational& lhs,
                  const Rational& rhs) {
    return {name, "ge", lhs.str(), rhs.str(), lhs >= rhs};
}

Condition make_in_z(const std::string& name, const Rational& v) {
    return {name, "in_z", v.str(), "", v.is_integer()};
}

long long fl(long long num, long long den) { return floor_div(num, den); }

/// Everything a certificate of a given strategy must contain, re-derived
/// from its bare parameters.
struct Expected {
    std::vector<Condition> conditions;
    std::vector<std::pair<std::string, std::string>> slopes;
    long long degree = 0;
    long long deg_n = 0;
    long long rk_n = 0;
    std::string e_plus_bound;
    std::vector<long long> normal_type;
    std::vector<std::string> flags;
    std::optional<DegreeFamily> family;  // r_max not pinned
    std::optional<long long> d;
    std::optional<long long> m;
    bool r_required = false;
    bool sub_required = false;
    long long sub_k = 0;
    long long sub_n = 0;
    long long sub_degree = 0;
    std::vector<std::string> errors;

    void fail(const std::string& msg) { errors.push_back(msg); }
};

/// Stage slopes shared by the p+b and b+p strategies. The base slope is
/// omitted when the base locus has dimension <= 1; when it is a single
/// point the first fibre stage takes the dedicated first-stage formula.
struct StageSlopes {
    std::vector<std::pair<std::string, Rational>> values;
    bool s0_omitted = false;
    bool s1_omitted = false;
    long long dim_sigma0 = 0;
    bool sigma0_point = false;
};

StageSlopes stage_slopes(const SchubertPartition& p,
                         const BreakDecomposition& b,
                         const std::vector<long long>& e) {
    StageSlopes out;
    long long nk = p.n - p.k;
    long long k0 = b.break_points[0];
    long long a0 = b.values[0];
    out.dim_sigma0 = (k0 + 1) * (nk - a0);
    out.sigma0_point = a0 == nk;
    if (out.dim_sigma0 >= 2) {
        out.values.emplace_back(
            "s0", Rational(e[0] * (nk - a0 + k0 + 1) - 2,
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
        if (i == 1 && out.sigma0_point) {
            long long den = (ki - prev) * (nk - ai) - 1;
            if (den == 0) {
                out.s1_omitted = true;
                continue;
            }
            out.values.emplace_back(
                name, Rational(e[1] * (nk + ki - prev - ai) - 2, den));
        } else {
            out.values.emplace_back(name, Rational(e[i], ki - prev) +
                                              Rational(partial, nk - ai));
        }
    }
    return out;
}

Rational s_plus_of(const NormalGraded& ng, bool tensor, long long e_plus) {
    long long deg = tensor ? ng.deg_n_tensor : ng.deg_n_rows;
    long long a = ng.rank_n;
    return Rational(deg, a) + Rational(e_plus * (a + 1), a);
}

Rational e_plus_bound_of(const NormalGraded& ng, bool tensor) {
    long long deg = tensor ? ng.deg_n_tensor : ng.deg_n_rows;
    Rational min_g = tensor ? ng.min_g_tensor() : ng.min_g_rows();
    return Rational(deg) - Rational(ng.rank_n - 1) * min_g;
}

/// Base-stage gate shared by p+b and b+p: a zero-dimensional base pins
/// e0 = 0; a base Grassmannian entered at the zeroth row needs e0 at
/// least its dimension; a deeper base is delegated to a chained
/// certificate on the smaller Grassmannian.
void base_gate(const SchubertPartition& p, const BreakDecomposition& b,
               long long e0, long long dim_sigma0,
               const BalancedCertificate& c, Expected& ex) {
    long long k0 = b.break_points[0];
    long long a0 = b.values[0];
    if (dim_sigma0 == 0) {
        ex.conditions.push_back(make_eq("base_point", e0, 0));
    } else if (k0 == 0) {
        ex.conditions.push_back(make_ge("base_degree_min", e0, dim_sigma0));
    } else {
        ex.sub_required = true;
        ex.sub_k = k0;
        ex.sub_n = p.n - p.k - a0 + k0;
        ex.sub_degree = e0;
        long long sub_deg = c.sub ? c.sub->degree : -1;
        ex.conditions.push_back(make_eq("recursive_base", e0, sub_deg));
    }
}

void append_g_slopes(const NormalGraded& ng, Expected& ex) {
    for (const auto& piece : ng.pieces)
        ex.slopes.emplace_back("g" + std::to_string(piece.index),
                               piece.g.str());
}

long long sum(const std::vector<long long>& v) {
    long long s = 0;
    for (long long x : v) s += x;
    return s;
}

bool codim_matches_remainder(long long k, long long n, long long codim) {
    if (k < 1 || 2 * k + 1 > n) return false;
    return codim == remainder_R(k, n).R + 1;
}

Expected rebuild_pb(const BalancedCertificate& c) {
    Expected ex;
    SchubertPartition p{c.k, c.n, c.partition};
    p.validate();
    BreakDecomposition b = break_decomposition(p);
    long long u = b.u();
    if (static_cast<long long>(c.e.size()) != u + 1) {
        ex.fail("lift degrees do not match the break count");
        return ex;
    }
    if (c.e_plus < 1) ex.fail("e_plus must be at least 1");
    if (!codim_matches_remainder(c.k, c.n, p.codim())) {
        ex.fail("partition does not match R+1");
        return ex;
    }
    ex.conditions.push_back(make_eq("codimension_R_plus_1", p.codim(),
                                    remainder_R(c.k, c.n).R + 1));
    for (long long i = 0; i <= u; ++i)
        ex.conditions.push_back(
            make_eq("divisibility_e" + std::to_string(i),
                    c.e[i] % b.block_sizes[i], 0));
    StageSlopes ss = stage_slopes(p, b, c.e);
    base_gate(p, b, c.e[0], ss.dim_sigma0, c, ex);
    NormalGraded ng = normal_graded(p, c.e);
    if (u == 0)
        ex.conditions.push_back(make_eq("u_zero", 0, 0));
    else
        ex.conditions.push_back(make_ge("eplus_kernel_bound", c.e_plus,
                                        e_plus_bound_of(ng, false)));
    std::vector<std::pair<std::string, Rational>> chain = ss.values;
    chain.emplace_back("s_plus", s_plus_of(ng, false, c.e_plus));
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
        ex.conditions.push_back(
            make_eq("stage_floor_match_" + chain[i].first,
                    Rational(BigInt(chain[i].second.floor())),
                    Rational(BigInt(chain[i + 1].second.floor()))));
    for (const auto& [name, v] : chain) ex.slopes.emplace_back(name, v.str());
    append_g_slopes(ng, ex);
    ex.degree = sum(c.e) + (c.n - c.k - 1) * c.e_plus;
    ex.deg_n = ng.deg_n_rows;
    ex.rk_n = ng.rank_n;
    ex.e_plus_bound = e_plus_bound_of(ng, false).str();
    if (ng.any_discrepancy) ex.flags.push_back("gi_tensor_discrepancy");
    if (ss.s0_omitted) ex.flags.push_back("s0_omitted");
    if (ss.s1_omitted) ex.flags.push_back("s1_omitted");
    return ex;
}

Expected rebuild_bp(const BalancedCertificate& c) {
    Expected ex;
    SchubertPartition p{c.k, c.n, c.partition};
    p.validate();
    if (c.cycle && !(cycle_partition(c.k, c.n, *c.cycle) == p))
        ex.fail("cycle does not match the stored partition");
    BreakDecomposition b = break_decomposition(p);
    long long u = b.u();
    if (static_cast<long long>(c.e.size()) != u + 1) {
        ex.fail("lift degrees do not match the break count");
        return ex;
    }
    for (long long i = 0; i <= u; ++i)
        ex.conditions.push_back(
            make_eq("divisibility_e" + std::to_string(i),
                    c.e[i] % b.block_sizes[i], 0));
    StageSlopes ss = stage_slopes(p, b, c.e);
    base_gate(p, b, c.e[0], ss.dim_sigma0, c, ex);
    ex.conditions.push_back(make_eq("eplus_one", c.e_plus, 1));
    NormalGraded ng = normal_graded(p, c.e);
    bool readings_differ = ng.deg_n_rows != ng.deg_n_tensor;
    bool tensor = c.reading == "tensor";
    if (readings_differ && c.reading != "rows" && c.reading != "tensor")
        ex.fail("diverging degree readings need a reading tag");
    if (!readings_differ && !c.reading.empty())
        ex.fail("reading tag without diverging readings");
    std::vector<std::pair<std::string, Rational>> chain = ss.values;
    chain.emplace_back("s_plus", s_plus_of(ng, tensor, c.e_plus));
    for (const auto& [name, v] : chain)
        ex.conditions.push_back(make_in_z("integral_slope_" + name, v));
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
        ex.conditions.push_back(make_eq("stage_slope_match_" + chain[i].first,
                                        chain[i].second, chain[i + 1].second));
    for (const auto& [name, v] : chain) ex.slopes.emplace_back(name, v.str());
    append_g_slopes(ng, ex);
    if (!c.m || *c.m < 0) {
        ex.fail("b+p requires an iteration count m >= 0");
        return ex;
    }
    ex.d = c.n - c.k;
    ex.m = *c.m;
    ex.degree = (c.n - c.k) + *c.m * sum(c.e);
    ex.family = DegreeFamily{c.n - c.k, sum(c.e), 0};
    ex.deg_n = tensor ? ng.deg_n_tensor : ng.deg_n_rows;
    ex.rk_n = ng.rank_n;
    ex.e_plus_bound = e_plus_bound_of(ng, tensor).str();
    if (!codim_matches_remainder(c.k, c.n, p.codim()))
        ex.flags.push_back("codim_mismatch_allowed");
    if (ng.any_discrepancy) ex.flags.push_back("gi_tensor_discrepancy");
    if (c.reading == "rows") ex.flags.push_back("slope_reading_rows");
    if (c.reading == "tensor") ex.flags.push_back("slope_reading_tensor");
    if (ss.s0_omitted) ex.flags.push_back("s0_omitted");
    if (ss.s1_omitted) ex.flags.push_back("s1_omitted");
    return ex;
}

Expected rebuild_oddg(const BalancedCertificate& c) {
    Expected ex;
    long long k = c.k;
    if (c.n != 2 * k + 1) ex.fail("oddG needs n = 2k+1");
    if (!c.r || *c.r < 1) ex.fail("oddG needs a family index r >= 1");
    ex.r_required = true;
    std::vector<long long> want_partition(1, k + 1);
    want_partition.insert(want_partition.end(), k, 1);
    if (c.partition != want_partition) ex.fail("oddG partition mismatch");
    if (!c.cycle || !(*c.cycle == SimpleCycle{1, 1}))
        ex.fail("oddG uses the alpha = beta = 1 cycle");
    if (c.e != std::vector<long long>{k}) ex.fail("oddG lift degree is e0 = k");
    long long r = c.r.value_or(1);
    Rational s_plus =
        Rational(1) + Rational(1 + 2 * k, (k + 1) + k);  // alpha=beta=1
    if (k >= 2) {
        Rational s0(k * (2 * k) - 2, k * k - 1);
        ex.conditions.push_back(make_in_z("integral_slope_s0", s0));
        ex.conditions.push_back(make_in_z("integral_slope_s_plus", s_plus));
        ex.conditions.push_back(make_eq("slopes_equal", s0, s_plus));
        ex.slopes.emplace_back("s0", s0.str());
    } else {
        ex.conditions.push_back(make_in_z("integral_slope_s_plus", s_plus));
        ex.flags.push_back("s0_omitted");
    }
    ex.slopes.emplace_back("s_plus", s_plus.str());
    ex.conditions.push_back(make_eq("eplus_one", c.e_plus, 1));
    SplittingType nc0 = balanced_of(k, k)
                            .direct_sum(SplittingType({0}))
                            .direct_sum(balanced_of(k, k));
    ex.normal_type = nc0.degrees();
    long long spread =
        nc0.empty() ? 0 : nc0.max_degree() - nc0.min_degree();
    ex.conditions.push_back(make_ge("normal_restriction_balanced", 1, spread));
    ex.conditions.push_back(make_ge("plus_trivial_threshold", 1, 0));
    ex.degree = r * k + 1;
    ex.family = DegreeFamily{k + 1, k, 0};
    ex.deg_n = nc0.degree();
    ex.rk_n = nc0.rank();
    ex.flags.insert(ex.flags.begin(), "codim_mismatch_allowed");
    return ex;
}

Expected rebuild_alphabeta(const BalancedCertificate& c) {
    Expected ex;
    if (!c.cycle) {
        ex.fail("alphabeta requires a cycle");
        return ex;
    }
    long long alpha = c.cycle->alpha, beta = c.cycle->beta;
    long long k = c.k, n = c.n;
    SchubertPartition p = cycle_partition(k, n, *c.cycle);
    if (c.partition != p.a) ex.fail("partition does not match the cycle");
    if (c.e.size() != 1) {
        ex.fail("alphabeta carries a single base degree e0");
        return ex;
    }
    long long e0 = c.e[0];
    long long codim = cycle_codim(k, n, *c.cycle);
    if (!codim_matches_remainder(k, n, codim)) {
        ex.fail("partition does not match R+1");
        return ex;
    }
    ex.conditions.push_back(make_eq("codimension_R_plus_1", codim,
                                    remainder_R(k, n).R + 1));
    long long dim = (k + 1 - alpha) * (n - k - beta);
    if (dim == 0)
        ex.conditions.push_back(make_eq("base_point", e0, 0));
    else if (dim == 1)
        ex.conditions.push_back(make_ge("base_degree_min", e0, 1));
    if (alpha > 0 && beta > 0) {
        Rational bound = Rational(alpha * e0) *
                         (Rational(n - k, k + 1 - alpha) - Rational(1));
        ex.conditions.push_back(
            make_ge("eplus_kernel_bound", c.e_plus, bound));
    }
    Rational s_plus =
        Rational(c.e_plus) + Rational(c.e_plus + e0 * (alpha + beta),
                                      alpha * (n - k) + beta * (k + 1 - alpha));
    if (dim >= 2) {
        Rational s0(e0 * (n + 1 - alpha - beta) - 2,
                    (k + 1 - alpha) * (n - k - beta) - 1);
        ex.conditions.push_back(
            make_eq("stage_floor_match_s0", Rational(BigInt(s0.floor())),
                    Rational(BigInt(s_plus.floor()))));
        ex.slopes.emplace_back("s0", s0.str());
    } else {
        ex.flags.push_back("s0_omitted");
    }
    ex.slopes.emplace_back("s_plus", s_plus.str());
    ex.degree = e0 + c.e_plus;
    ex.family = DegreeFamily{e0 + c.e_plus, e0, 0};
    return ex;
}

Expected rebuild_beta_family(const BalancedCertificate& c) {
    Expected ex;
    long long k = c.k, n = c.n;
    if (c.partition.size() != static_cast<std::size_t>(k + 1) ||
        c.partition[k] != 0) {
        ex.fail("beta-family partition must be ((beta-1)^k, 0)");
        return ex;
    }
    long long beta = c.partition[0] + 1;
    for (long long i = 0; i < k; ++i)
        if (c.partition[i] != beta - 1)
            ex.fail("beta-family partition must be ((beta-1)^k, 0)");
    if (beta < 2 || k < 1 || n <= 2 * k || beta - 1 > n - k ||
        k * (n - beta - k + 1) < 2)
        ex.fail("beta-family parameters out of range");
    if (c.e.size() != 2) {
        ex.fail("beta-family carries (e0, e1)");
        return ex;
    }
    if (!ex.errors.empty()) return ex;
    long long e0 = c.e[0], e1 = c.e[1];
    Rational s0(e0 * (n + 1 - beta) - 2, k * (n - beta - k + 1) - 1);
    Rational s1 = Rational(e0 + e1, n - k) + Rational(e1);
    Rational s_plus = Rational(e0, k) + Rational(e1, beta - 1) +
                      Rational(1, k * (beta - 1)) + Rational(1);
    ex.conditions.push_back(make_eq("slopes_equal_s0_s1", s0, s1));
    ex.conditions.push_back(make_eq("slopes_equal_s1_s_plus", s1, s_plus));
    ex.conditions.push_back(make_in_z("integral_slope", s0));
    ex.slopes.emplace_back("s0", s0.str());
    ex.slopes.emplace_back("s1", s1.str());
    ex.slopes.emplace_back("s_plus", s_plus.str());
    if (c.e_plus != 1) ex.fail("beta-family uses e_plus = 1");
    ex.degree = n - k;
    ex.family = DegreeFamily{n - k, e0 + e1, 0};
    return ex;
}

Expected rebuild_k1_odd(const BalancedCertificate& c) {
    Expected ex;
    long long n = c.n;
    if (c.k != 1 || n < 5 || n % 2 == 0) ex.fail("k1-odd needs odd n >= 5");
    if (c.e.size() != 2) {
        ex.fail("k1-odd carries (e0, e1)");
        return ex;
    }
    long long n0 = (n - 1) / 2;
    long long e0 = c.e[0], e1 = c.e[1], ep = c.e_plus;
    long long lhs = e0 + fl(2 * (e0 - 1), n0 - 1);
    ex.conditions.push_back(make_ge("base_degree_min", e0, n0));
    ex.conditions.push_back(make_ge("e1_ge_e0", e1, e0));
    ex.conditions.push_back(make_eq("vertical_floor_match", lhs,
                                    e1 + fl(e0 + e1, 2 * n0)));
    ex.conditions.push_back(
        make_eq("lift_floor_match", lhs, e0 + ep + fl(ep, n0 + 1)));
    ex.slopes.emplace_back("floor_common", std::to_string(lhs));
    ex.degree = e0 + e1 + (n - 2) * ep;
    if (e1 % (2 * n0 * (n0 + 1)) == 0 && ep % (n0 + 1) == 0)
        ex.flags.push_back("divisibility_family");
    return ex;
}

Expected rebuild_k1_div4(const BalancedCertificate& c) {
    Expected ex;
    long long n = c.n;
    if (c.k != 1 || n % 4 != 0 || n < 8) ex.fail("k1-div4 needs n = 4n1 >= 8");
    if (c.e.size() != 1) {
        ex.fail("k1-div4 carries a single e0");
        return ex;
    }
    long long n1 = n / 4;
    long long e0 = c.e[0], ep = c.e_plus;
    ex.conditions.push_back(
        make_eq("match4_floor", ep + fl(ep, 6 * n1 - 2),
                fl(5 * e0 - 4, 4 * n1 - 2)));
    ex.sub_required = true;
    ex.sub_k = 1;
    ex.sub_n = n1 + 1;
    ex.sub_degree = e0;
    ex.conditions.push_back(
        make_eq("recursive_base", e0, c.sub ? c.sub->degree : -1));
    Rational s_h((n1 + 2) * e0 - 2, 2 * n1 - 1);
    Rational s_v = Rational(e0, 2) + Rational(ep * (6 * n1 - 1), 6 * n1 - 2);
    ex.slopes.emplace_back("s_h", s_h.str());
    ex.slopes.emplace_back("s_v", s_v.str());
    ex.degree = e0 + (n - 2) * ep;
    ex.flags.push_back("eplus_parametrization_unverified");
    if (s_v.floor() != s_h.floor())
        ex.flags.push_back("unreduced_floor_mismatch");
    return ex;
}

Expected rebuild_k1_div4plus2(const BalancedCertificate& c) {
    Expected ex;
    long long n = c.n;
    if (c.k != 1 || n % 4 != 2 || n < 10)
        ex.fail("k1-div4plus2 needs n = 4n1+2 >= 10");
    if (c.e.size() != 2) {
        ex.fail("k1-div4plus2 carries (e0, e1)");
        return ex;
    }
    long long n1 = (n - 2) / 4;
    long long e0 = c.e[0], e1 = c.e[1], ep = c.e_plus;
    long long a1 = fl((n1 + 2) * e1, n1 + 1) + fl(e0, n1 + 1);
    long long a2 = e0 + fl(2 * e0 - 2, n1 - 1);
    auto a3 = [&](long long x) {
        return ep + fl(ep + 3 * n1 * (e1 + x), 6 * n1 + 1);
    };
    long long a3_display = a3(ep);
    long long a3_text = a3(e0);
    long long a3_used = 0;
    if (c.reading.empty()) {
        if (a3_display != a3_text)
            ex.fail("untagged certificate but the term readings disagree");
        a3_used = a3_display;
    } else if (c.reading == "display") {
        if (a3_text == a2)
            ex.fail("display tag but the text reading also matches");
        a3_used = a3_display;
        ex.flags.push_back("reading_display_term");
    } else if (c.reading == "text") {
        if (a3_display == a2)
            ex.fail("text tag but the display reading also matches");
        a3_used = a3_text;
        ex.flags.push_back("reading_text_term");
    } else {
        ex.fail("unknown reading tag");
    }
    ex.conditions.push_back(make_ge("base_degree_min", e0, n1));
    ex.conditions.push_back(make_ge("kernel_balance_e1", n1 * e1, e0));
    ex.conditions.push_back(make_eq("triple_floor_match_12", a1, a2));
    ex.conditions.push_back(make_eq("triple_floor_match_23", a2, a3_used));
    ex.slopes.emplace_back("floor_common", std::to_string(a2));
    ex.degree = e0 + e1 + (n - 2) * ep;
    return ex;
}

Expected rebuild(const BalancedCertificate& c) {
    if (c.strategy == "p+b") return rebuild_pb(c);
    if (c.strategy == "b+p") return rebuild_bp(c);
    if (c.strategy == "oddG") return rebuild_oddg(c);
    if (c.strategy == "alphabeta") return rebuild_alphabeta(c);
    if (c.strategy == "beta-family") return rebuild_beta_family(c);
    if (c.strategy == "k1-odd") return rebuild_k1_odd(c);
    if (c.strategy == "k1-div4") return rebuild_k1_div4(c);
    if (c.strategy == "k1-div4plus2") return rebuild_k1_div4plus2(c);
    Expected ex;
    ex.fail("unknown strategy " + c.strategy);
    return ex;
}

bool relation_evaluates(const Condition& cond) {
    Rational lhs = parse_rational(cond.lhs);
    if (cond.relation == "in_z") return lhs.is_integer();
    Rational rhs = parse_rational(cond.rhs);
    if (cond.relation == "eq") return lhs == rhs;
    if (cond.relation == "ge") return lhs >= rhs;
    throw std::domain_error("unknown condition relation " + cond.relation);
}

}  // namespace

VerifyResult verify_certificate(const BalancedCertificate& c) {
    VerifyResult out;
    auto fail = [&](const std::string& msg) {
        out.ok = false;
        out.problems.push_back(msg);
    };
    for (long long v : c.e)
        if (v < 0) fail("negative lift degree");
    if (c.e_plus < 0) fail("negative e_plus");

    Expected ex;
    try {
        ex = rebuild(c);
    } catch (const std::exception& e) {
        fail(e.what());
        return out;
    }
    for (const auto& msg : ex.errors) fail(msg);
    if (!out.ok) return out;

    if (c.conditions.size() != ex.conditions.size()) {
        fail("condition count mismatch");
        return out;
    }
    for (std::size_t i = 0; i < ex.conditions.size(); ++i) {
        const Condition& got = c.conditions[i];
        const Condition& want = ex.conditions[i];
        if (got.name != want.name || got.relation != want.relation ||
            got.lhs != want.lhs || got.rhs != want.rhs)
            fail("condition " + want.name + " differs from recomputation");
        if (!got.holds) fail("condition " + got.name + " is recorded false");
        try {
            if (!relation_evaluates(got))
                fail("condition " + got.name + " does not hold numerically");
        } catch (const std::exception& e) {
            fail("condition " + got.name + ": " + e.what());
        }
    }
    if (c.slopes != ex.slopes) fail("slope report differs from recomputation");
    if (c.degree != ex.degree) fail("degree differs from recomputation");
    if (c.deg_n != ex.deg_n || c.rk_n != ex.rk_n)
        fail("normal sheaf degree/rank differ from recomputation");
    if (c.e_plus_bound != ex.e_plus_bound)
        fail("e_plus bound differs from recomputation");
    if (c.normal_type != ex.normal_type)
        fail("normal splitting type differs from recomputation");

    std::multiset<std::string> got_flags(c.flags.begin(), c.flags.end());
    std::multiset<std::string> want_flags(ex.flags.begin(), ex.flags.end());
    if (got_flags != want_flags) fail("flags differ from recomputation");

    if (ex.family) {
        if (!c.family) {
            fail("missing degree family");
        } else {
            if (c.family->base != ex.family->base ||
                c.family->step != ex.family->step)
                fail("degree family differs from recomputation");
            if (c.family->r_max < 0) fail("negative family truncation");
            if (c.strategy == "oddG" &&
                c.r.value_or(0) - 1 > c.family->r_max)
                fail("family truncation excludes this member");
        }
    } else if (c.family) {
        fail("unexpected degree family");
    }
    if (ex.d && c.d != ex.d) fail("base-curve degree d mismatch");
    if (ex.m && c.m != ex.m) fail("iteration count m mismatch");
    if (ex.r_required && !c.r) fail("missing family index r");

    if (ex.sub_required) {
        if (!c.sub) {
            fail("missing chained certificate");
        } else {
            bool direct = c.sub->k == ex.sub_k && c.sub->n == ex.sub_n;
            bool dual = c.sub->k == ex.sub_n - ex.sub_k - 1 &&
                        c.sub->n == ex.sub_n;
            if (!direct && !dual)
                fail("chained certificate is for the wrong Grassmannian");
            if (c.sub->degree != ex.sub_degree)
                fail("chained certificate certifies the wrong degree");
            VerifyResult sub = verify_certificate(*c.sub);
            if (!sub.ok) {
                out.ok = false;
                for (const auto& p : sub.problems)
                    out.problems.push_back("sub: " + p);
            }
        }
    } else if (c.sub) {
        fail("unexpected chained certificate");
    }
    return out;
}

nlohmann::ordered_json certificate_to_json(const BalancedCertificate& c) {
    nlohmann::ordered_json j;
    j["k"] = c.k;
    j["n"] = c.n;
    j["strategy"] = c.strategy;
    if (!c.partition.empty()) j["partition"] = c.partition;
    if (c.cycle) j["cycle"] = {{"alpha", c.cycle->alpha},
                               {"beta", c.cycle->beta}};
    j["e"] = c.e;
    j["e_plus"] = c.e_plus;
    if (c.d) j["d"] = *c.d;
    if (c.m) j["m"] = *c.m;
    if (c.r) j["r"] = *c.r;
    if (!c.reading.empty()) j["reading"] = c.reading;
    j["degree"] = c.degree;
    if (c.family)
        j["family"] = {{"base", c.family->base},
                       {"step", c.family->step},
                       {"r_max", c.family->r_max}};
    nlohmann::ordered_json slopes = nlohmann::ordered_json::object();
    for (const auto& [name, value] : c.slopes) slopes[name] = value;
    j["slopes"] = slopes;
    if (c.rk_n > 0) {
        j["deg_n"] = c.deg_n;
        j["rk_n"] = c.rk_n;
    }
    if (!c.e_plus_bound.empty()) j["e_plus_bound"] = c.e_plus_bound;
    if (!c.normal_type.empty()) j["normal_type"] = c.normal_type;
    nlohmann::ordered_json conds = nlohmann::ordered_json::array();
    for (const auto& cond : c.conditions) {
        nlohmann::ordered_json cj;
        cj["name"] = cond.name;
        cj["relation"] = cond.relation;
        cj["lhs"] = cond.lhs;
        cj["rhs"] = cond.rhs;
        cj["holds"] = cond.holds;
        conds.push_back(cj);
    }
    j["conditions"] = conds;
    j["flags"] = c.flags;
    if (c.sub) j["sub"] = certificate_to_json(*c.sub);
    return j;
}

BalancedCertificate certificate_from_json(const nlohmann::ordered_json& j) {
    BalancedCertificate c;
    c.k = j.at("k").get<long long>();
    c.n = j.at("n").get<long long>();
    c.strategy = j.at("strategy").get<std::string>();
    if (j.contains("partition"))
        c.partition = j.at("partition").get<std::vector<long long>>();
    if (j.contains("cycle"))
        c.cycle = SimpleCycle{j.at("cycle").at("alpha").get<long long>(),
                              j.at("cycle").at("beta").get<long long>()};
    c.e = j.at("e").get<std::vector<long long>>();
    c.e_plus = j.at("e_plus").get<long long>();
    if (j.contains("d")) c.d = j.at("d").get<long long>();
    if (j.contains("m")) c.m = j.at("m").get<long long>();
    if (j.contains("r")) c.r = j.at("r").get<long long>();
    c.reading = j.value("reading", std::string());
    c.degree = j.at("degree").get<long long>();
    if (j.contains("family"))
        c.family = DegreeFamily{j.at("family").at("base").get<long long>(),
                                j.at("family").at("step").get<long long>(),
                                j.at("family").at("r_max").get<long long>()};
    for (const auto& [name, value] : j.at("slopes").items())
        c.slopes.emplace_back(name, value.get<std::string>());
    c.deg_n = j.value("deg_n", 0LL);
    c.rk_n = j.value("rk_n", 0LL);
    c.e_plus_bound = j.value("e_plus_bound", std::string());
    if (j.contains("normal_type"))
        c.normal_type = j.at("normal_type").get<std::vector<long long>>();
    for (const auto& cj : j.at("conditions")) {
        Condition cond;
        cond.name = cj.at("name").get<std::string>();
        cond.relation = cj.at("relation").get<std::string>();
        cond.lhs = cj.at("lhs").get<std::string>();
        cond.rhs = cj.at("rhs").get<std::string>();
        cond.holds = cj.at("holds").get<bool>();
        c.conditions.push_back(cond);
    }
    c.flags = j.at("flags").get<std::vector<std::string>>();
    if (j.contains("sub"))
        c.sub = std::make_shared<BalancedCertificate>(
            certificate_from_json(j.at("sub")));
    return c;
}

bool certificate_less(const BalancedCertificate& a,
                      const BalancedCertificate& b) {
    auto key = [](const BalancedCertificate& c) {
        return std::make_tuple(c.k, c.n, c.strategy, c.partition, c.e,
                               c.e_plus, c.r.value_or(-1), c.reading,
                               c.degree);
    };
    return key(a) < key(b);
}

void canonical_sort(std::vector<BalancedCertificate>& certs) {
    std::stable_sort(certs.begin(), certs.end(), certificate_less);
}

}  // namespace scrollcert
