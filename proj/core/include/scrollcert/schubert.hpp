#pragma once

#include <scrollcert/rational.hpp>

#include <vector>

namespace scrollcert {

/// Partition indexing a Schubert variety in G(k, n): k+1 entries with
/// n-k >= a_0 >= ... >= a_k >= 0.
struct SchubertPartition {
    long long k = 0;
    long long n = 0;
    std::vector<long long> a;

    void validate() const;
    long long codim() const;
    bool operator==(const SchubertPartition&) const = default;
};

/// Break indices of a partition: the positions j with a_j > a_{j+1},
/// reading a_{k+1} = -1 so that j = k is always a break.
struct BreakDecomposition {
    std::vector<long long> break_points;  // k_0 < ... < k_u
    std::vector<long long> values;        // a at each break
    std::vector<long long> block_sizes;   // k_i - k_{i-1}, k_{-1} = -1
    long long block_codim = 0;            // sum block_sizes[i] * values[i]

    long long u() const {
        return static_cast<long long>(break_points.size()) - 1;
    }
};

BreakDecomposition break_decomposition(const SchubertPartition& p);

/// n+1 = q(k+1) + r with 0 <= r <= k, and R = q - 2 + r(n-k).
struct RemainderStats {
    long long R = 0;
    long long q = 0;
    long long r = 0;
};

RemainderStats remainder_R(long long k, long long n);

/// The special cycle cut out by alpha + beta incidence conditions; its
/// partition is ((n-k)^alpha, beta^(k+1-alpha)).
struct SimpleCycle {
    long long alpha = 0;
    long long beta = 0;
    bool operator==(const SimpleCycle&) const = default;
};

struct PrescribedPair {
    bool fires = false;
    SimpleCycle pair;
    bool in_list = false;
};

/// Solutions of alpha(n-k) + beta(k+1) - alpha*beta = A over the box
/// [0,k] x [0,n-k], plus the two divisibility shortcuts that prescribe a
/// particular pair when A = R+1.
struct AlphaBetaReport {
    std::vector<SimpleCycle> solutions;
    PrescribedPair condition_r;       // (k+1-r) | (q-1)
    PrescribedPair condition_alpha0;  // (k+1) | (q-1+r^2)
};

AlphaBetaReport alphabeta_solutions(long long k, long long n, long long A);

SchubertPartition cycle_partition(long long k, long long n,
                                  const SimpleCycle& c);
long long cycle_codim(long long k, long long n, const SimpleCycle& c);

/// One stage of the flag resolution of a Schubert variety. Stage 0 is a
/// Grassmannian of (k_0+1)-planes in a W_0-dimensional space; stage i >= 1
/// is a Grassmannian bundle of (k_i - k_{i-1})-planes in a bundle of rank
/// f_rank = W_i - (k_{i-1} + 1).
struct FlagStage {
    long long index = 0;
    long long w_dim = 0;
    long long f_rank = 0;
    long long s_rank = 0;           // step of the tautological flag
    long long q_rank = 0;           // n - k - a at the break
    long long t_rank = 0;           // k_i + 1
    long long g_rank = 0;           // a at the break
    long long grass_fibre_dim = 0;
};

struct FlagData {
    SchubertPartition partition;
    BreakDecomposition breaks;
    std::vector<FlagStage> stages;
    bool sigma0_point = false;
    bool sigma0_p1 = false;
    long long sigma0_dim = 0;
};

FlagData flag_stages(const SchubertPartition& p);

/// Graded piece of the normal sheaf restricted to a curve with twisting
/// data e. Degrees and slopes are recorded under both conventions in
/// circulation: `degree`/`g` treat the twist of the grading block as a
/// plain summand, `tensor_degree`/`tensor_slope` treat it as a tensor
/// factor. The two agree unless the block has size > 1 and a nonzero
/// tail; `discrepancy` marks pieces where they differ.
struct NormalPiece {
    long long index = 0;
    long long rank = 0;
    long long degree = 0;
    long long tensor_degree = 0;
    Rational g;
    Rational tensor_slope;
    bool discrepancy = false;
};

struct NormalGraded {
    std::vector<NormalPiece> pieces;  // rank-0 pieces omitted
    long long deg_n_rows = 0;
    long long deg_n_tensor = 0;
    long long rank_n = 0;
    bool any_discrepancy = false;

    Rational min_g_rows() const;
    Rational min_g_tensor() const;
};

/// e must have one entry per break, all nonnegative, each divisible by
/// the corresponding block size.
NormalGraded normal_graded(const SchubertPartition& p,
                           const std::vector<long long>& e);

}  // namespace scrollcert
