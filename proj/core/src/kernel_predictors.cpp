#include <scrollcert/kernel_predictors.hpp>

#include <scrollcert/rational.hpp>

#include <stdexcept>
#include <vector>

namespace scrollcert {

SplittingType predict_kernel_torsion(const SplittingType& e, long long m) {
    if (m < 0) throw std::domain_error("torsion length must be nonnegative");
    if (e.rank() == 0 && m > 0)
        throw std::domain_error("no torsion quotient of a zero bundle");
    std::vector<long long> v = e.degrees();
    // v stays sorted descending: we always decrement the last copy of the
    // current maximum, so v[j] - 1 >= v[j+1] - 1 and v[j-1] >= v[j].
    for (long long step = 0; step < m; ++step) {
        std::size_t j = 0;
        while (j + 1 < v.size() && v[j + 1] == v[0]) ++j;
        --v[j];
    }
    return SplittingType(v);
}

SplittingType predict_kernel_line(const SplittingType& e, long long ell) {
    if (e.rank() < 2 || ell < (e.empty() ? 0 : e.max_degree()))
        throw std::domain_error(
            "no general surjection with locally free kernel guaranteed; "
            "oracle required");
    std::vector<long long> v = e.degrees();
    long long a = v.front();
    v.erase(v.begin());
    return predict_kernel_torsion(SplittingType(v), ell - a);
}

PlusTrivialClaim predict_kernel_plus_trivial(const SplittingType& e,
                                             long long a, long long b) {
    if (a < 1 || e.empty() || !e.balanced() || e.min_degree() < 0)
        return PlusTrivialClaim::oracle_required;
    Rational s(e.degree(), e.rank());
    if (Rational(b) >= Rational(a - 1) * s)
        return PlusTrivialClaim::certified_balanced;
    return PlusTrivialClaim::oracle_required;
}

}  // namespace scrollcert
