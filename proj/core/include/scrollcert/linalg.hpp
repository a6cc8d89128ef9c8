#pragma once

#include <scrollcert/prime_field.hpp>
#include <scrollcert/rational.hpp>

#include <cstddef>
#include <vector>

namespace scrollcert {

/// Field operations adapter for F_p entries stored as int64 in [0, p).
struct FpOps {
    const PrimeField* f;
    using value_type = std::int64_t;
    value_type zero() const { return 0; }
    bool is_zero(value_type a) const { return a == 0; }
    value_type mul(value_type a, value_type b) const { return f->mul(a, b); }
    value_type sub(value_type a, value_type b) const { return f->sub(a, b); }
    value_type inv(value_type a) const { return f->inv(a); }
};

/// Field operations adapter for exact rational entries.
struct RatOps {
    using value_type = Rational;
    value_type zero() const { return Rational(0); }
    bool is_zero(const value_type& a) const { return a == Rational(0); }
    value_type mul(const value_type& a, const value_type& b) const {
        return a * b;
    }
    value_type sub(const value_type& a, const value_type& b) const {
        return a - b;
    }
    value_type inv(const value_type& a) const { return Rational(1) / a; }
};

/// Rank by Gaussian elimination; destroys the matrix argument.
/// Rows may have unequal logical width only if padded by the caller.
template <typename Ops>
std::size_t matrix_rank(std::vector<std::vector<typename Ops::value_type>>& a,
                        const Ops& ops) {
    std::size_t rows = a.size();
    std::size_t cols = rows == 0 ? 0 : a[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && ops.is_zero(a[pivot][col])) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[rank], a[pivot]);
        auto scale = ops.inv(a[rank][col]);
        for (std::size_t j = col; j < cols; ++j)
            a[rank][j] = ops.mul(a[rank][j], scale);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || ops.is_zero(a[i][col])) continue;
            auto factor = a[i][col];
            for (std::size_t j = col; j < cols; ++j)
                a[i][j] = ops.sub(a[i][j], ops.mul(factor, a[rank][j]));
        }
        ++rank;
    }
    return rank;
}

/// Nullity of a map with `cols` source coordinates; `cols` is passed
/// explicitly because a 0-row matrix carries no width of its own.
template <typename Ops>
std::size_t matrix_nullity(
    std::vector<std::vector<typename Ops::value_type>>& a, std::size_t cols,
    const Ops& ops) {
    return cols - matrix_rank(a, ops);
}

}  // namespace scrollcert
