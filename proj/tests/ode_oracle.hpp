#ifndef LAME_TESTS_ODE_ORACLE_HPP
#define LAME_TESTS_ODE_ORACLE_HPP

#include <cstddef>
#include <vector>

#include <lame/recurrence.hpp>

namespace lame_tests {

// Independent check of a generated coefficient sequence: substitute the
// truncated series sum d_k z^(k+lambda) into the equation cleared of
// denominators,
//
//   4 z (z-b')(z-c') y'' + 2 [3z^2 - 2(b'+c')z + b'c'] y'
//     + [-kappa (z + a) + q] y = 0,
//
// where b' = b - a, c' = c - a, kappa = alpha (alpha + 1), and collect the
// coefficient of each power z^(j+lambda-1).  Rows 0 through N-1 must vanish
// for an exact solution; the last two rows carry truncation spillover.
inline std::vector<double> ode_residual(const lame::AlgebraicParameters& p,
                                        const lame::CoefficientSequence& seq) {
    const double lam = seq.lambda.value();
    const double bp = p.b - p.a;
    const double cp = p.c - p.a;
    const double kappa = p.alpha * (p.alpha + 1.0);
    const std::size_t n = seq.order();
    std::vector<double> res(n + 3, 0.0);
    for (std::size_t k = 0; k <= n; ++k) {
        const double ell = static_cast<double>(k) + lam;
        const double w2 = ell * (ell - 1.0);
        const double w1 = ell;
        const double dk = seq.d[k];
        res[k] += (4.0 * bp * cp * w2 + 2.0 * bp * cp * w1) * dk;
        res[k + 1] += (-4.0 * (bp + cp) * (w2 + w1) + (p.q - kappa * p.a)) * dk;
        res[k + 2] += (4.0 * w2 + 6.0 * w1 - kappa) * dk;
    }
    return res;
}

} // namespace lame_tests

#endif // LAME_TESTS_ODE_ORACLE_HPP
