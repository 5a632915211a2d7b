#ifndef LAME_RECURRENCE_HPP
#define LAME_RECURRENCE_HPP

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lame/errors.hpp"

namespace lame {

/// Parameters of the Lame equation in algebraic form,
///
///   y'' + (1/2) [1/(x-a) + 1/(x-b) + 1/(x-c)] y'
///       + [-alpha (alpha + 1) x + q] / [4 (x-a)(x-b)(x-c)] y = 0,
///
/// with the series solution expanded about x = a in the shifted variable
/// z = x - a.  The expansion point must be a simple singular point, so
/// a != b and a != c; b and c may coincide.
struct AlgebraicParameters {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    double alpha = 0.0;
    double q = 0.0;

    bool degenerate() const { return a == b || a == c; }
};

inline void require_nondegenerate(const AlgebraicParameters& p) {
    if (p.degenerate())
        throw degenerate_singularity_error(
            "expansion point a coincides with b or c; no series about x = a");
}

/// Parameters of the Lame equation in Weierstrass form,
///
///   y'' = [alpha (alpha + 1) rho^2 sn^2(z, rho) - h] y,
///
/// where sn is the Jacobi elliptic sine with modulus rho in (0, 1).
struct WeierstrassParameters {
    double rho;
    double alpha;
    double h;

    WeierstrassParameters(double rho_, double alpha_, double h_)
        : rho(rho_), alpha(alpha_), h(h_) {
        if (!(rho > 0.0 && rho < 1.0))
            throw std::domain_error("modulus must satisfy 0 < rho < 1");
    }
};

/// The substitution xi = sn^2(z, rho) turns the Weierstrass form into the
/// algebraic form with singular points 0, 1, 1/rho^2 and accessory
/// parameter q = h / rho^2.
inline AlgebraicParameters weierstrass_to_algebraic(const WeierstrassParameters& wp) {
    const double inv_rho2 = 1.0 / (wp.rho * wp.rho);
    return {0.0, 1.0, inv_rho2, wp.alpha, wp.h * inv_rho2};
}

/// Indicial exponent of the series about a simple singular point; the
/// indicial equation admits exactly 0 and 1/2.
class IndicialExponent {
public:
    explicit IndicialExponent(double lambda) : lambda_(lambda) {
        if (lambda != 0.0 && lambda != 0.5)
            throw std::domain_error("indicial exponent must be 0 or 1/2");
    }

    static IndicialExponent zero() { return IndicialExponent(0.0); }
    static IndicialExponent half() { return IndicialExponent(0.5); }

    double value() const { return lambda_; }

private:
    double lambda_;
};

/// Limits A = lim A_n and B = lim B_n of the recurrence coefficients.
struct LimitPair {
    double A;
    double B;
};

inline LimitPair limits(const AlgebraicParameters& p) {
    require_nondegenerate(p);
    const double prod = (p.a - p.b) * (p.a - p.c);
    return {-(2.0 * p.a - p.b - p.c) / prod, -1.0 / prod};
}

/// Coefficients (A_n, B_n) of the three-term recurrence
///
///   d_{n+1} = A_n d_n + B_n d_{n-1},   d_0 = 1,  d_1 = A_0,
///
/// satisfied by the series y = sum_n d_n z^(n+lambda).  Both are ratios of
/// quadratics in n and approach the limits() pair at rate O(1/n).  B_n
/// first enters the recurrence at n = 1; n = 0 returns the formula's
/// value, which plays no role in the series.
inline std::pair<double, double> coefficients_at(const AlgebraicParameters& p,
                                                 IndicialExponent lambda, int n) {
    require_nondegenerate(p);
    if (n < 0)
        throw std::domain_error("coefficient index must be nonnegative");
    const double ell = n + lambda.value();
    const double spread = 2.0 * p.a - p.b - p.c;
    const double prod = (p.a - p.b) * (p.a - p.c);
    const double kappa = p.alpha * (p.alpha + 1.0);
    const double den = 4.0 * prod * (ell + 1.0) * (ell + 0.5);
    const double an = (-4.0 * spread * ell * ell + (kappa * p.a - p.q)) / den;
    const double bn = -(4.0 * (ell - 1.0) * (ell - 1.0) + 2.0 * (ell - 1.0) - kappa) / den;
    return {an, bn};
}

/// Series coefficients d_0..d_N for a fixed indicial exponent.
struct CoefficientSequence {
    IndicialExponent lambda;
    std::vector<double> d;

    std::size_t order() const { return d.size() - 1; }
};

inline CoefficientSequence generate_sequence(const AlgebraicParameters& p,
                                             IndicialExponent lambda,
                                             std::size_t n_max) {
    require_nondegenerate(p);
    if (n_max < 1)
        throw std::domain_error("series order must be at least 1");
    std::vector<double> d(n_max + 1);
    d[0] = 1.0;
    d[1] = coefficients_at(p, lambda, 0).first;
    for (std::size_t n = 1; n < n_max; ++n) {
        const auto [an, bn] = coefficients_at(p, lambda, static_cast<int>(n));
        d[n + 1] = an * d[n] + bn * d[n - 1];
    }
    return {lambda, std::move(d)};
}

/// Constant-coefficient companion sequence: the same recurrence run with
/// the limit values throughout,
///
///   dbar_0 = 1,  dbar_1 = A,  dbar_{n+1} = A dbar_n + B dbar_{n-1}.
///
/// Its power series sums to 1 / (1 - A z - B z^2), so the returned
/// sequence carries indicial exponent 0.
inline CoefficientSequence asymptotic_sequence(const LimitPair& lim, std::size_t n_max) {
    if (n_max < 1)
        throw std::domain_error("series order must be at least 1");
    std::vector<double> d(n_max + 1);
    d[0] = 1.0;
    d[1] = lim.A;
    for (std::size_t n = 1; n < n_max; ++n)
        d[n + 1] = lim.A * d[n] + lim.B * d[n - 1];
    return {IndicialExponent::zero(), std::move(d)};
}

/// Truncated series value sum_{n=0}^{N} d_n z^(n+lambda), accumulated in
/// ascending n so repeated runs agree bit for bit.
inline double partial_sum(const CoefficientSequence& seq, double z) {
    if (seq.lambda.value() != 0.0 && z < 0.0)
        throw std::domain_error("z^(1/2) prefactor requires z >= 0");
    double power = (seq.lambda.value() == 0.0) ? 1.0 : std::sqrt(z);
    double sum = 0.0;
    for (double dn : seq.d) {
        sum += dn * power;
        power *= z;
    }
    return sum;
}

} // namespace lame

#endif // LAME_RECURRENCE_HPP
