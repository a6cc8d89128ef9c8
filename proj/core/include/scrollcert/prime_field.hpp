#pragma once

#include <cstdint>
#include <stdexcept>

namespace scrollcert {

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

/// Arithmetic in F_p for a prime p < 2^31, so products fit in int64.
class PrimeField {
  public:
    explicit PrimeField(std::int64_t p) : p_(p) {
        if (p <= 1 || p >= (std::int64_t{1} << 31))
            throw std::domain_error("field characteristic out of range");
        if (!is_prime_u64(static_cast<std::uint64_t>(p)))
            throw std::domain_error("field characteristic must be prime");
    }

    std::int64_t p() const { return p_; }

    std::int64_t reduce(std::int64_t a) const {
        std::int64_t r = a % p_;
        return r < 0 ? r + p_ : r;
    }

    std::int64_t add(std::int64_t a, std::int64_t b) const {
        std::int64_t r = a + b;
        return r >= p_ ? r - p_ : r;
    }

    std::int64_t sub(std::int64_t a, std::int64_t b) const {
        std::int64_t r = a - b;
        return r < 0 ? r + p_ : r;
    }

    std::int64_t mul(std::int64_t a, std::int64_t b) const {
        return (a * b) % p_;
    }

    std::int64_t neg(std::int64_t a) const { return a == 0 ? 0 : p_ - a; }

    std::int64_t pow(std::int64_t a, std::int64_t e) const {
        std::int64_t r = 1, base = reduce(a);
        while (e > 0) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }

    std::int64_t inv(std::int64_t a) const {
        a = reduce(a);
        if (a == 0) throw std::domain_error("inverse of zero in F_p");
        return pow(a, p_ - 2);
    }

  private:
    std::int64_t p_;
};

}  // namespace scrollcert
