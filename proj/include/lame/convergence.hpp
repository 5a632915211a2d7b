#ifndef LAME_CONVERGENCE_HPP
#define LAME_CONVERGENCE_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lame/errors.hpp"
#include "lame/recurrence.hpp"

namespace lame {

/// Absolute-convergence test |A z| + |B z^2| < 1 for a series whose
/// recurrence coefficients tend to (A, B).  Membership depends on |z|
/// alone, so the domain is a disk.
struct DomainCriterion {
    double A;
    double B;

    DomainCriterion(double A_, double B_) : A(A_), B(B_) {}
    DomainCriterion(const LimitPair& lim) : A(lim.A), B(lim.B) {}
};

/// Radius of the criterion disk: the positive root of |B| r^2 + |A| r = 1,
/// evaluated in the rationalized form 2 / (|A| + sqrt(A^2 + 4 |B|)).  That
/// form loses nothing as B -> 0, where it degrades to 1 / |A|, and yields
/// +inf when A = B = 0 (every z passes the test).
inline double radius(const DomainCriterion& crit) {
    const double abs_a = std::fabs(crit.A);
    const double abs_b = std::fabs(crit.B);
    if (abs_a == 0.0 && abs_b == 0.0)
        return std::numeric_limits<double>::infinity();
    return 2.0 / (abs_a + std::sqrt(crit.A * crit.A + 4.0 * abs_b));
}

/// Strict membership: |z| below the disk radius.  The boundary itself is
/// excluded, matching the strict inequality in the criterion.
inline bool is_in_domain(const DomainCriterion& crit, double z) {
    return std::fabs(z) < radius(crit);
}

inline bool is_in_domain(const DomainCriterion& crit, std::complex<double> z) {
    return std::abs(z) < radius(crit);
}

/// Closed-form radius cases for real singular points, keyed by the sign
/// pattern of (a-b, a-c, 2a-b-c).  Patterns without a closed form fall
/// back to the generic criterion radius.
enum class CaseTag {
    Degenerate,    ///< a == b or a == c: no series solution
    BothPositive,  ///< a-b > 0 and a-c > 0
    BothNegative,  ///< a-b < 0 and a-c < 0
    MixedPos,      ///< a-b < 0, a-c > 0, 2a-b-c > 0: radius -(a-b)
    MixedNeg,      ///< a-b > 0, a-c < 0, 2a-b-c < 0: radius a-b
    EqualPositive, ///< b == c > 0 with a > b: radius (sqrt(2)-1)(a-b)
    EqualNegative, ///< b == c < 0 with a < b: radius (1-sqrt(2))(a-b)
    General,       ///< no closed form; numeric radius only
};

inline const char* to_string(CaseTag tag) {
    switch (tag) {
        case CaseTag::Degenerate:    return "Degenerate";
        case CaseTag::BothPositive:  return "BothPositive";
        case CaseTag::BothNegative:  return "BothNegative";
        case CaseTag::MixedPos:      return "MixedPos";
        case CaseTag::MixedNeg:      return "MixedNeg";
        case CaseTag::EqualPositive: return "EqualPositive";
        case CaseTag::EqualNegative: return "EqualNegative";
        case CaseTag::General:       return "General";
    }
    return "General";
}

struct AlgebraicCase {
    CaseTag tag;
    double radius;
};

/// Classify (a, b, c) into the table above and report the convergence
/// radius, closed form where one exists.  Throws
/// degenerate_singularity_error when a == b or a == c.
inline AlgebraicCase classify_algebraic(const AlgebraicParameters& p) {
    require_nondegenerate(p);
    const double u = p.a - p.b;
    const double v = p.a - p.c;
    const double s = 2.0 * p.a - p.b - p.c;
    if (p.b == p.c) {
        if (p.b > 0.0 && u > 0.0)
            return {CaseTag::EqualPositive, (std::sqrt(2.0) - 1.0) * u};
        if (p.b < 0.0 && u < 0.0)
            return {CaseTag::EqualNegative, (1.0 - std::sqrt(2.0)) * u};
        return {CaseTag::General, radius(DomainCriterion(limits(p)))};
    }
    if (u > 0.0 && v > 0.0)
        return {CaseTag::BothPositive, (-s + std::sqrt(s * s + 4.0 * u * v)) / 2.0};
    if (u < 0.0 && v < 0.0)
        return {CaseTag::BothNegative, (s + std::sqrt(s * s + 4.0 * u * v)) / 2.0};
    if (u < 0.0 && v > 0.0 && s > 0.0)
        return {CaseTag::MixedPos, -u};
    if (u > 0.0 && v < 0.0 && s < 0.0)
        return {CaseTag::MixedNeg, u};
    return {CaseTag::General, radius(DomainCriterion(limits(p)))};
}

/// Real-axis convergence bound in the Weierstrass variable xi = sn^2:
/// the criterion radius for the limit pair (1 + rho^2, -rho^2), equal to
///
///   [-(1 + rho^2) + sqrt(rho^4 + 6 rho^2 + 1)] / (2 rho^2),
///
/// which decreases from 1 toward sqrt(2) - 1 as the modulus runs over
/// (0, 1).
inline double weierstrass_bound(double rho) {
    if (!(rho > 0.0 && rho < 1.0))
        throw std::domain_error("modulus must satisfy 0 < rho < 1");
    return radius(DomainCriterion(1.0 + rho * rho, -(rho * rho)));
}

/// Boundary curve samples (rho, weierstrass_bound(rho)) over a caller
/// grid, in grid order.
inline std::vector<std::pair<double, double>> sample_boundary(const std::vector<double>& rho_grid) {
    std::vector<std::pair<double, double>> curve;
    curve.reserve(rho_grid.size());
    for (double rho : rho_grid)
        curve.emplace_back(rho, weierstrass_bound(rho));
    return curve;
}

} // namespace lame

#endif // LAME_CONVERGENCE_HPP
