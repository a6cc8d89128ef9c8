#include <scrollcert/schubert.hpp>

#include <algorithm>
#include <stdexcept>

namespace scrollcert {

void SchubertPartition::validate() const {
    if (k < 0 || n < k + 1)
        throw std::domain_error("partition needs 0 <= k < n");
    if (static_cast<long long>(a.size()) != k + 1)
        throw std::domain_error("partition needs exactly k+1 entries");
    for (long long i = 0; i <= k; ++i) {
        if (a[i] < 0 || a[i] > n - k)
            throw std::domain_error("partition entries must lie in [0, n-k]");
        if (i > 0 && a[i] > a[i - 1])
            throw std::domain_error("partition entries must be nonincreasing");
    }
}

long long SchubertPartition::codim() const {
    long long s = 0;
    for (long long v : a) s += v;
    return s;
}

BreakDecomposition break_decomposition(const SchubertPartition& p) {
    p.validate();
    BreakDecomposition b;
    long long prev = -1;
    for (long long j = 0; j <= p.k; ++j) {
        long long next = j < p.k ? p.a[j + 1] : -1;
        if (p.a[j] > next) {
            b.break_points.push_back(j);
            b.values.push_back(p.a[j]);
            b.block_sizes.push_back(j - prev);
            b.block_codim += (j - prev) * p.a[j];
            prev = j;
        }
    }
    if (b.block_codim != p.codim())
        throw std::logic_error("break blocks do not add up to the codimension");
    return b;
}

RemainderStats remainder_R(long long k, long long n) {
    if (k < 1 || 2 * k + 1 > n)
        throw std::domain_error("remainder_R requires 1 <= k and 2k+1 <= n");
    RemainderStats s;
    s.q = (n + 1) / (k + 1);
    s.r = (n + 1) % (k + 1);
    s.R = s.q - 2 + s.r * (n - k);
    long long check = ((n - k) * (n + 1) - 2) % ((n - k) * (k + 1) - 1);
    if (s.R != check)
        throw std::logic_error("remainder identity failed");
    return s;
}

AlphaBetaReport alphabeta_solutions(long long k, long long n, long long A) {
    AlphaBetaReport rep;
    if (A < 1) return rep;
    for (long long alpha = 0; alpha <= k; ++alpha)
        for (long long beta = 0; beta <= n - k; ++beta)
            if (alpha * (n - k) + beta * (k + 1) - alpha * beta == A)
                rep.solutions.push_back({alpha, beta});
    if (k >= 1 && 2 * k + 1 <= n) {
        RemainderStats rs = remainder_R(k, n);
        if (A == rs.R + 1) {
            auto in_list = [&](const SimpleCycle& c) {
                return std::find(rep.solutions.begin(), rep.solutions.end(),
                                 c) != rep.solutions.end();
            };
            if ((rs.q - 1) % (k + 1 - rs.r) == 0) {
                rep.condition_r.fires = true;
                rep.condition_r.pair = {rs.r, (rs.q - 1) / (k + 1 - rs.r)};
                rep.condition_r.in_list = in_list(rep.condition_r.pair);
            }
            if ((rs.q - 1 + rs.r * rs.r) % (k + 1) == 0) {
                rep.condition_alpha0.fires = true;
                rep.condition_alpha0.pair = {0, (rs.R + 1) / (k + 1)};
                rep.condition_alpha0.in_list =
                    in_list(rep.condition_alpha0.pair);
            }
        }
    }
    return rep;
}

SchubertPartition cycle_partition(long long k, long long n,
                                  const SimpleCycle& c) {
    if (c.alpha < 0 || c.alpha > k + 1 || c.beta < 0 || c.beta > n - k)
        throw std::domain_error("cycle parameters out of range");
    SchubertPartition p;
    p.k = k;
    p.n = n;
    for (long long i = 0; i < c.alpha; ++i) p.a.push_back(n - k);
    for (long long i = c.alpha; i <= k; ++i) p.a.push_back(c.beta);
    p.validate();
    return p;
}

long long cycle_codim(long long k, long long n, const SimpleCycle& c) {
    return c.alpha * (n - k) + c.beta * (k + 1) - c.alpha * c.beta;
}

FlagData flag_stages(const SchubertPartition& p) {
    FlagData data;
    data.partition = p;
    data.breaks = break_decomposition(p);
    const auto& bp = data.breaks.break_points;
    const auto& val = data.breaks.values;
    for (std::size_t i = 0; i < bp.size(); ++i) {
        FlagStage st;
        st.index = static_cast<long long>(i);
        st.w_dim = p.n + 1 - p.k + bp[i] - val[i];
        long long prev = i == 0 ? -1 : bp[i - 1];
        st.f_rank = st.w_dim - (prev + 1);
        st.s_rank = bp[i] - prev;
        st.q_rank = p.n - p.k - val[i];
        st.t_rank = bp[i] + 1;
        st.g_rank = val[i];
        st.grass_fibre_dim = st.s_rank * (st.f_rank - st.s_rank);
        data.stages.push_back(st);
    }
    long long total_s = 0;
    for (const auto& st : data.stages) total_s += st.s_rank;
    if (total_s != p.k + 1)
        throw std::logic_error("flag steps do not exhaust the k+1 plane");
    data.sigma0_point = val[0] == p.n - p.k;
    data.sigma0_p1 = bp[0] == 0 && p.a[0] == p.n - p.k - 1;
    data.sigma0_dim = (bp[0] + 1) * (p.n - p.k - val[0]);
    if (data.sigma0_dim != data.stages[0].grass_fibre_dim)
        throw std::logic_error("base stage dimension mismatch");
    return data;
}

NormalGraded normal_graded(const SchubertPartition& p,
                           const std::vector<long long>& e) {
    BreakDecomposition b = break_decomposition(p);
    long long u = b.u();
    if (static_cast<long long>(e.size()) != u + 1)
        throw std::domain_error("twist data needs one entry per break");
    for (long long i = 0; i <= u; ++i) {
        if (e[i] < 0)
            throw std::domain_error("twist data must be nonnegative");
        if (e[i] % b.block_sizes[i] != 0)
            throw std::domain_error(
                "twist data must be divisible by the block sizes");
    }
    NormalGraded out;
    long long tail = 0;
    std::vector<long long> tails(u + 1, 0);
    for (long long i = u; i >= 0; --i) {
        tails[i] = tail;
        tail += e[i];
    }
    for (long long i = 0; i <= u; ++i) {
        long long s = b.block_sizes[i];
        long long a = b.values[i];
        out.rank_n += s * a;
        out.deg_n_rows += (i + a) * e[i];
        out.deg_n_tensor += a * e[i] + s * tails[i];
        if (a == 0) continue;
        NormalPiece piece;
        piece.index = i;
        piece.rank = s * a;
        piece.degree = tails[i] + a * e[i];
        piece.tensor_degree = a * e[i] + s * tails[i];
        piece.g = Rational(e[i], s) + Rational(tails[i], s * a);
        piece.tensor_slope = Rational(e[i], s) + Rational(tails[i], a);
        piece.discrepancy = s > 1 && tails[i] > 0;
        out.any_discrepancy = out.any_discrepancy || piece.discrepancy;
        out.pieces.push_back(piece);
    }
    return out;
}

Rational NormalGraded::min_g_rows() const {
    if (pieces.empty())
        throw std::domain_error("no positive-rank graded pieces");
    Rational m = pieces[0].g;
    for (const auto& piece : pieces) m = std::min(m, piece.g);
    return m;
}

Rational NormalGraded::min_g_tensor() const {
    if (pieces.empty())
        throw std::domain_error("no positive-rank graded pieces");
    Rational m = pieces[0].tensor_slope;
    for (const auto& piece : pieces) m = std::min(m, piece.tensor_slope);
    return m;
}

}  // namespace scrollcert
