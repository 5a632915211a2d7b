#ifndef LAME_PERRON_HPP
#define LAME_PERRON_HPP

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>

#include "lame/convergence.hpp"
#include "lame/errors.hpp"
#include "lame/recurrence.hpp"

namespace lame {

/// Real roots of the limiting characteristic equation r^2 - A r - B = 0,
/// ordered by modulus, |r1| <= |r2|.
struct CharacteristicRoots {
    double r1;
    double r2;

    /// The coefficient-ratio limit exists unless the roots differ but
    /// share a modulus.
    bool ratio_limit_exists() const {
        return r1 == r2 || std::fabs(r1) != std::fabs(r2);
    }
};

inline CharacteristicRoots characteristic_roots(const LimitPair& lim) {
    const double disc = lim.A * lim.A + 4.0 * lim.B;
    if (disc < 0.0)
        throw complex_roots_error("characteristic roots are complex (A^2 + 4B < 0)");
    const double root = std::sqrt(disc);
    // Take the cancellation-free branch first; it is always the root of
    // larger modulus.  The companion comes from the product r1 r2 = -B.
    const double big = (lim.A >= 0.0) ? (lim.A + root) / 2.0 : (lim.A - root) / 2.0;
    const double small = (big == 0.0) ? 0.0 : -lim.B / big;
    return {small, big};
}

/// Radius suggested by the coefficient-ratio limit: the reciprocal of the
/// dominant root modulus, 1 / |r2|.  This is an upper envelope for the
/// true domain of absolute convergence, not the domain itself.
inline double pp_radius(const LimitPair& lim) {
    const CharacteristicRoots roots = characteristic_roots(lim);
    if (!roots.ratio_limit_exists())
        throw equal_moduli_error("roots share a modulus; the coefficient-ratio limit does not exist");
    const double dominant = std::fabs(roots.r2);
    if (dominant == 0.0)
        return std::numeric_limits<double>::infinity();
    return 1.0 / dominant;
}

/// Radius from the characteristic polynomial of the absolute values,
/// t^2 = |A| t + |B|: the reciprocal of its unique positive root.  Note
/// the sign convention: moving both moduli to the right-hand side is what
/// leaves a positive root; writing t^2 + |A| t + |B| = 0 leaves none.
/// The result coincides with the criterion-disk radius.
inline double corrected_radius(const LimitPair& lim) {
    return radius(DomainCriterion(lim));
}

enum class Verdict {
    AbsolutelyConvergent, ///< inside the criterion disk
    ConditionalRegion,    ///< between the disk and the ratio-limit bound
    Divergent,            ///< at or beyond the ratio-limit bound
};

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::AbsolutelyConvergent: return "AbsolutelyConvergent";
        case Verdict::ConditionalRegion:    return "ConditionalRegion";
        case Verdict::Divergent:            return "Divergent";
    }
    return "Divergent";
}

/// Where a nonnegative xi falls relative to the two radii.  Boundary
/// points resolve outward: xi == r_star is already outside the disk, and
/// xi == r_pp counts as divergent.
struct ConvergenceVerdict {
    Verdict tag;
    double r_star;
    double r_pp;
};

inline ConvergenceVerdict classify_point(const LimitPair& lim, double xi) {
    if (xi < 0.0)
        throw std::domain_error("xi must be nonnegative");
    const double r_star = radius(DomainCriterion(lim));
    const double r_pp = pp_radius(lim);
    const Verdict tag = (xi < r_star) ? Verdict::AbsolutelyConvergent
                      : (xi < r_pp)   ? Verdict::ConditionalRegion
                                      : Verdict::Divergent;
    return {tag, r_star, r_pp};
}

/// Mean of |d_n / d_{n-1}| over the trailing `window` steps: a numeric
/// stand-in for the ratio limit.  Diagnostic only; it approaches the
/// dominant root modulus at the geometric rate |r1 / r2|.
inline double ratio_limit_estimate(const CoefficientSequence& seq, std::size_t window) {
    const std::size_t n_max = seq.order();
    if (window < 2 || n_max < window)
        throw std::domain_error("window must satisfy 2 <= window <= sequence order");
    double acc = 0.0;
    for (std::size_t n = n_max - window + 1; n <= n_max; ++n) {
        if (seq.d[n - 1] == 0.0 || seq.d[n] == 0.0)
            throw zero_coefficient_error("zero coefficient at index " + std::to_string(n) +
                                         " inside the ratio window");
        acc += std::fabs(seq.d[n] / seq.d[n - 1]);
    }
    return acc / static_cast<double>(window);
}

} // namespace lame

#endif // LAME_PERRON_HPP
