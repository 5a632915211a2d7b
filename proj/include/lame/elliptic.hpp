#ifndef LAME_ELLIPTIC_HPP
#define LAME_ELLIPTIC_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "lame/errors.hpp"

namespace lame {

/// Modulus of the Jacobi elliptic functions.  rho = 0 (the trigonometric
/// limit) is admitted for cross-checks; rho >= 1 is rejected.
class EllipticModulus {
public:
    explicit EllipticModulus(double rho) : rho_(rho) {
        if (!(rho >= 0.0 && rho < 1.0))
            throw std::domain_error("elliptic modulus must satisfy 0 <= rho < 1");
    }

    double value() const { return rho_; }

private:
    double rho_;
};

/// Complete elliptic integral of the first kind, K(rho) = pi / (2 M),
/// with M the arithmetic-geometric mean of 1 and sqrt(1 - rho^2).
inline double complete_K(const EllipticModulus& mod) {
    double a = 1.0;
    double b = std::sqrt((1.0 - mod.value()) * (1.0 + mod.value()));
    while (a - b > std::numeric_limits<double>::epsilon() * a) {
        const double mean = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = mean;
    }
    return std::numbers::pi / (2.0 * a);
}

/// Jacobi amplitude am(z, rho) for real z.
///
/// Runs the arithmetic-geometric means a_i, b_i of (1, sqrt(1 - rho^2))
/// downward until the half-difference c_i = (a_{i-1} - b_{i-1}) / 2 drops
/// below 1e-15, seeds phi_N = 2^N a_N z, then unwinds
///
///   phi_{i-1} = [phi_i + asin(c_i sin(phi_i) / a_i)] / 2
///
/// back to phi_0 = am(z, rho).  Convergence is quadratic, so the ladder
/// bottoms out in well under ten levels at double precision.
inline double am(double z, const EllipticModulus& mod) {
    const double rho = mod.value();
    if (rho == 0.0)
        return z;
    constexpr int max_levels = 32;
    double a[max_levels + 1];
    double c[max_levels + 1];
    a[0] = 1.0;
    c[0] = rho;
    double b = std::sqrt((1.0 - rho) * (1.0 + rho));
    int n = 0;
    while (c[n] > 1e-15) {
        if (n == max_levels)
            throw std::runtime_error("amplitude ladder failed to converge");
        const double mean = 0.5 * (a[n] + b);
        const double half_diff = 0.5 * (a[n] - b);
        b = std::sqrt(a[n] * b);
        ++n;
        a[n] = mean;
        c[n] = half_diff;
    }
    double phi = std::ldexp(a[n] * z, n);
    for (int i = n; i >= 1; --i) {
        // |c_i / a_i| < 1 holds exactly; the clamp only absorbs rounding.
        const double t = std::clamp(c[i] * std::sin(phi) / a[i], -1.0, 1.0);
        phi = 0.5 * (phi + std::asin(t));
    }
    return phi;
}

/// Jacobi elliptic sine, sn(z, rho) = sin(am(z, rho)).
inline double sn(double z, const EllipticModulus& mod) {
    return std::sin(am(z, mod));
}

/// Series variable of the change of variable from the Weierstrass form:
/// xi = sn^2(z, rho), confined to [0, 1] for real z.
inline double xi_of_z(double z, const EllipticModulus& mod) {
    const double s = sn(z, mod);
    return s * s;
}

namespace detail {

inline double ellint_integrand(double theta, double rho) {
    const double s = std::sin(theta);
    return 1.0 / std::sqrt(1.0 - rho * rho * s * s);
}

inline double adaptive_simpson(double rho, double lo, double hi,
                               double f_lo, double f_mid, double f_hi,
                               double whole, double tol, int depth) {
    const double mid = 0.5 * (lo + hi);
    const double f_lq = ellint_integrand(0.5 * (lo + mid), rho);
    const double f_rq = ellint_integrand(0.5 * (mid + hi), rho);
    const double left = (mid - lo) / 6.0 * (f_lo + 4.0 * f_lq + f_mid);
    const double right = (hi - mid) / 6.0 * (f_mid + 4.0 * f_rq + f_hi);
    const double delta = left + right - whole;
    if (depth <= 0 || std::fabs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return adaptive_simpson(rho, lo, mid, f_lo, f_lq, f_mid, left, 0.5 * tol, depth - 1)
         + adaptive_simpson(rho, mid, hi, f_mid, f_rq, f_hi, right, 0.5 * tol, depth - 1);
}

} // namespace detail

/// Incomplete elliptic integral of the first kind,
///
///   F(phi, rho) = integral_0^phi dtheta / sqrt(1 - rho^2 sin^2 theta),
///
/// by adaptive Simpson quadrature to about 1e-13.  Quadrature keeps this
/// routine independent of the amplitude ladder, so each can check the
/// other: F(am(z, rho), rho) == z.
inline double incomplete_F(double phi, const EllipticModulus& mod) {
    if (phi == 0.0)
        return 0.0;
    if (phi < 0.0)
        return -incomplete_F(-phi, mod);
    const double rho = mod.value();
    const double f_lo = detail::ellint_integrand(0.0, rho);
    const double f_mid = detail::ellint_integrand(0.5 * phi, rho);
    const double f_hi = detail::ellint_integrand(phi, rho);
    const double whole = phi / 6.0 * (f_lo + 4.0 * f_mid + f_hi);
    return detail::adaptive_simpson(rho, 0.0, phi, f_lo, f_mid, f_hi, whole, 1e-13, 40);
}

} // namespace lame

#endif // LAME_ELLIPTIC_HPP
