#ifndef LAME_EXPERIMENT_HPP
#define LAME_EXPERIMENT_HPP

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "lame/convergence.hpp"
#include "lame/errors.hpp"
#include "lame/perron.hpp"
#include "lame/recurrence.hpp"

namespace lame {

/// Inputs of the rearranged double series
///
///   ybar(xi) = sum_{n=0}^{N} sum_{m=0}^{N} (n+m)! / (n! m!) xt^n yt^m,
///
/// with xt = -rho^2 xi^2 and yt = (1 + rho^2) xi.  Summing the
/// anti-diagonals n + m = const instead reproduces the constant-coefficient
/// series in xi; this rectangular truncation is the rearrangement whose
/// growth the experiment tracks.
struct DoubleSumSpec {
    double rho;
    double xi;
    int n_max;

    DoubleSumSpec(double rho_, double xi_, int n_max_)
        : rho(rho_), xi(xi_), n_max(n_max_) {
        if (!(rho > 0.0 && rho < 1.0))
            throw std::domain_error("modulus must satisfy 0 < rho < 1");
        if (n_max < 0)
            throw std::domain_error("truncation order must be nonnegative");
    }

    double x_tilde() const { return -(rho * rho) * (xi * xi); }
    double y_tilde() const { return (1.0 + rho * rho) * xi; }
};

namespace detail {

/// Value held as m * 2^e with m kept near [0.5, 1), so products of many
/// large or tiny factors never leave the double range.
struct Scaled {
    double m = 0.0;
    long e = 0;

    static Scaled of(double v) {
        if (v == 0.0)
            return {0.0, 0};
        int k;
        const double f = std::frexp(v, &k);
        return {f, static_cast<long>(k)};
    }

    Scaled times(double f) const {
        if (m == 0.0 || f == 0.0)
            return {0.0, 0};
        int k;
        const double g = std::frexp(m * f, &k);
        return {g, e + k};
    }

    Scaled times(const Scaled& o) const {
        if (m == 0.0 || o.m == 0.0)
            return {0.0, 0};
        int k;
        const double g = std::frexp(m * o.m, &k);
        return {g, e + o.e + k};
    }

    Scaled plus(const Scaled& o) const {
        if (m == 0.0)
            return o;
        if (o.m == 0.0)
            return *this;
        const Scaled& hi = (e >= o.e) ? *this : o;
        const Scaled& lo = (e >= o.e) ? o : *this;
        const long d = hi.e - lo.e;
        if (d > 80)
            return hi;
        int k;
        const double g = std::frexp(hi.m + std::ldexp(lo.m, -static_cast<int>(d)), &k);
        if (g == 0.0)
            return {0.0, 0};
        return {g, hi.e + k};
    }

    double collapse() const {
        if (m == 0.0)
            return 0.0;
        if (e > 1200)
            return std::copysign(std::numeric_limits<double>::infinity(), m);
        if (e < -1200)
            return 0.0;
        return std::ldexp(m, static_cast<int>(e));
    }
};

inline Scaled scaled_pow(double base, int k) {
    Scaled acc = Scaled::of(1.0);
    Scaled b = Scaled::of(base);
    while (k > 0) {
        if (k & 1)
            acc = acc.times(b);
        b = b.times(b);
        k >>= 1;
    }
    return acc;
}

/// P(t) = sum_{j=0}^{N} C(N+j, N) t^j by the multiplicative update
/// term *= ((N+j)/j) t, with a shared power-of-two offset keeping the
/// running pair in range.  Accurate for t >= 0 (all terms positive) and
/// for t <= -1/2 (term magnitudes are nondecreasing, so the alternating
/// sum is dominated by its final terms and loses no digits to the peak).
inline Scaled column_sum_direct(int n_max, double t) {
    double term = 1.0;
    double acc = 1.0;
    long offset = 0;
    for (int j = 1; j <= n_max; ++j) {
        term *= (static_cast<double>(n_max + j) / j) * t;
        acc += term;
        if (std::max(std::fabs(acc), std::fabs(term)) > 0x1p+600) {
            acc = std::ldexp(acc, -600);
            term = std::ldexp(term, -600);
            offset += 600;
        }
    }
    Scaled out = Scaled::of(acc);
    out.e += offset;
    return out;
}

/// P(t) for -1/2 < t < 0, where the direct alternating sum peaks in the
/// interior and cancels catastrophically.  Complement form instead:
///
///   P(t) = (1 - t)^-(N+1) - sum_{j > N} C(N+j, N) t^j,
///
/// whose tail has strictly decreasing term magnitudes from its first term
/// on, so ascending accumulation is cancellation-free.
inline Scaled column_sum_complement(int n_max, double t) {
    Scaled grown = scaled_pow(1.0 - t, n_max + 1);
    int k;
    const double g = std::frexp(1.0 / grown.m, &k);
    const Scaled closed{g, -grown.e + k};

    Scaled first = Scaled::of(1.0);
    for (int i = 1; i <= n_max + 1; ++i)
        first = first.times((static_cast<double>(n_max + i) / i) * t);

    double rel = 1.0;
    double acc = 1.0;
    const long cap = static_cast<long>(n_max) + 2000000;
    for (long j = n_max + 1; j <= cap; ++j) {
        rel *= (static_cast<double>(n_max + j + 1) / (j + 1)) * t;
        acc += rel;
        if (std::fabs(rel) < 1e-20 * (1.0 + std::fabs(acc)))
            break;
    }
    return closed.plus(first.times(acc).times(-1.0));
}

inline Scaled column_sum(int n_max, double t) {
    if (t > -0.5)
        return (t >= 0.0) ? column_sum_direct(n_max, t) : column_sum_complement(n_max, t);
    return column_sum_direct(n_max, t);
}

/// Literal rectangle accumulation, outer n ascending, inner m ascending.
/// Exact-order fallback for the resonance strip xt + yt == 1 where the
/// collapsed form loses its denominator; accurate there only while the
/// alternating peak stays within double range of the result.
inline double rectangle_sum(const DoubleSumSpec& spec) {
    const double xt = spec.x_tilde();
    const double yt = spec.y_tilde();
    double sum = 0.0;
    double row_head = 1.0;
    for (int n = 0; n <= spec.n_max; ++n) {
        double term = row_head;
        sum += term;
        for (int m = 1; m <= spec.n_max; ++m) {
            term *= (static_cast<double>(n + m) / m) * yt;
            sum += term;
        }
        if (!std::isfinite(sum))
            throw std::overflow_error("double sum left the finite range at row n = " +
                                      std::to_string(n));
        row_head *= xt;
    }
    return sum;
}

} // namespace detail

/// Rectangular truncation of the double series.  The rectangle collapses
/// exactly (telescoping under the Pascal rule) to its boundary terms,
///
///   S = [1 - xt^(N+1) P(yt) - yt^(N+1) P(xt)] / (1 - xt - yt),
///   P(t) = sum_{j=0}^{N} C(N+j, N) t^j,
///
/// and is evaluated in that form: the naive row-by-row accumulation is
/// alternating with interior peaks that exceed the result by e^(c N), so
/// for large N it returns noise in fixed precision while the collapsed
/// form keeps full accuracy.  Binomial weights are built multiplicatively
/// (never a factorial), every loop runs in a fixed ascending order, so
/// repeated runs agree bit for bit.  Throws std::overflow_error when the
/// value itself leaves the finite double range.
inline double double_sum(const DoubleSumSpec& spec) {
    const double xt = spec.x_tilde();
    const double yt = spec.y_tilde();
    const double w = xt + yt;
    if (std::fabs(1.0 - w) < 1e-8)
        return detail::rectangle_sum(spec);
    const int n = spec.n_max;
    const detail::Scaled p_y = detail::column_sum(n, yt);
    const detail::Scaled p_x = detail::column_sum(n, xt);
    detail::Scaled x_pow = detail::scaled_pow(std::fabs(xt), n + 1);
    if (xt < 0.0 && n % 2 == 0)
        x_pow.m = -x_pow.m;
    detail::Scaled y_pow = detail::scaled_pow(std::fabs(yt), n + 1);
    if (yt < 0.0 && n % 2 == 0)
        y_pow.m = -y_pow.m;
    const detail::Scaled num = detail::Scaled::of(1.0)
                                   .plus(x_pow.times(p_y).times(-1.0))
                                   .plus(y_pow.times(p_x).times(-1.0));
    const double value = num.collapse() / (1.0 - w);
    if (!std::isfinite(value))
        throw std::overflow_error("double sum left the finite range at N = " +
                                  std::to_string(n));
    return value;
}

/// Closed form 1 / (1 - A xi - B xi^2) that both the power series and the
/// double sum converge to inside the criterion disk.
inline double generating_value(const LimitPair& lim, double xi) {
    const double denom = 1.0 - lim.A * xi - lim.B * xi * xi;
    const double scale = 1.0 + std::fabs(lim.A * xi) + std::fabs(lim.B * xi * xi);
    if (std::fabs(denom) <= 8.0 * std::numeric_limits<double>::epsilon() * scale)
        throw pole_error("generating function pole at xi = " + std::to_string(xi));
    return 1.0 / denom;
}

/// One row of the divergence experiment.
struct ExperimentRow {
    int n;
    double value;
};

/// The divergence experiment: the rectangular double sum at rho = 0.8,
/// xi = 0.7, a point where the power series itself converges, for
/// truncation orders 10 and 50 through 1000 in steps of 100.
inline std::vector<ExperimentRow> run_table2() {
    static constexpr int orders[] = {10, 50, 100, 200, 300, 400, 500,
                                     600, 700, 800, 900, 1000};
    std::vector<ExperimentRow> rows;
    rows.reserve(std::size(orders));
    for (int n : orders)
        rows.push_back({n, double_sum(DoubleSumSpec(0.8, 0.7, n))});
    return rows;
}

inline void write_table2_csv(const std::vector<ExperimentRow>& rows, std::ostream& out) {
    out << "N,value\n";
    char line[64];
    for (const ExperimentRow& row : rows) {
        std::snprintf(line, sizeof line, "%d,%.5e\n", row.n, row.value);
        out << line;
    }
}

/// One row of the boundary scan CSV.
struct BoundaryRow {
    double rho;
    double s_star;
    double s_pp;
};

/// Interior grid rho_i = i / (steps + 1), i = 1..steps, with the criterion
/// bound s_star and the ratio-limit bound s_pp, which is identically 1 in
/// the Weierstrass variable.
inline std::vector<BoundaryRow> domain_scan_rows(int steps) {
    if (steps < 2)
        throw std::domain_error("scan needs at least 2 grid points");
    std::vector<BoundaryRow> rows;
    rows.reserve(static_cast<std::size_t>(steps));
    for (int i = 1; i <= steps; ++i) {
        const double rho = static_cast<double>(i) / (steps + 1);
        rows.push_back({rho, weierstrass_bound(rho), 1.0});
    }
    return rows;
}

inline void write_domain_scan_csv(const std::vector<BoundaryRow>& rows, std::ostream& out) {
    out << "rho,s_star,s_pp\n";
    char line[96];
    for (const BoundaryRow& row : rows) {
        std::snprintf(line, sizeof line, "%.6e,%.6e,%.6e\n", row.rho, row.s_star, row.s_pp);
        out << line;
    }
}

inline std::vector<BoundaryRow> run_domain_scan(int steps, const std::string& out_path) {
    std::vector<BoundaryRow> rows = domain_scan_rows(steps);
    std::ofstream out(out_path);
    if (!out)
        throw io_error("cannot open " + out_path + " for writing");
    write_domain_scan_csv(rows, out);
    out.flush();
    if (!out)
        throw io_error("write to " + out_path + " failed");
    return rows;
}

/// Verdict report for one (rho, xi) point.  Inside the criterion disk the
/// report carries a numeric cross-check of the closed form against the
/// rectangular double sum truncated at order 200.
struct CompareReport {
    double rho = 0.0;
    double xi = 0.0;
    ConvergenceVerdict verdict{Verdict::Divergent, 0.0, 0.0};
    bool has_check = false;
    double closed_form = 0.0;
    double double_sum_value = 0.0;
    double abs_diff = 0.0;
};

inline CompareReport run_compare(double rho, double xi) {
    if (!(rho > 0.0 && rho < 1.0))
        throw std::domain_error("modulus must satisfy 0 < rho < 1");
    const LimitPair lim = limits(weierstrass_to_algebraic(WeierstrassParameters(rho, 0.0, 0.0)));
    CompareReport report;
    report.rho = rho;
    report.xi = xi;
    report.verdict = classify_point(lim, xi);
    if (report.verdict.tag == Verdict::AbsolutelyConvergent) {
        report.has_check = true;
        report.closed_form = generating_value(lim, xi);
        report.double_sum_value = double_sum(DoubleSumSpec(rho, xi, 200));
        report.abs_diff = std::fabs(report.closed_form - report.double_sum_value);
    }
    return report;
}

} // namespace lame

#endif // LAME_EXPERIMENT_HPP
