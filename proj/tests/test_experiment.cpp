#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <lame/lame.hpp>

using namespace lame;

namespace {

double rel_err(double got, double want) {
    return std::fabs(got - want) / std::fabs(want);
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

TEST_CASE("double sum inputs") {
    const DoubleSumSpec spec(0.8, 0.7, 10);
    REQUIRE(std::fabs(spec.x_tilde() + 0.3136) < 1e-15);
    REQUIRE(std::fabs(spec.y_tilde() - 1.148) < 1e-15);

    REQUIRE_THROWS_AS(DoubleSumSpec(0.0, 0.5, 10), std::domain_error);
    REQUIRE_THROWS_AS(DoubleSumSpec(1.0, 0.5, 10), std::domain_error);
    REQUIRE_THROWS_AS(DoubleSumSpec(0.8, 0.5, -1), std::domain_error);
}

TEST_CASE("double sum reference values") {
    // Frozen from an exact rational evaluation of the rectangle, printed to
    // fourteen significant figures.
    struct Ref {
        double rho;
        double xi;
        int n;
        double value;
    };
    const Ref refs[] = {
        {0.8, 0.7, 101, -3.7681656548728e14},
        {0.8, 0.7, 251, -1.3718763817576e38},
        {0.8, 0.55, 50, 3.429353139363},
        {0.8, 0.55, 100, 3.4293552812054},
        {0.8, 0.55, 1000, 3.4293552812071},
        {0.8, 0.63, 200, 4.354576896477e2},
        {0.8, 0.9, 500, 1.5615558878935e241},
        {0.8, 0.9, 600, 5.4346782030506e289},
        {0.5, 0.8, 150, 6.2499999988446},
        {0.9, 0.8, 300, 4.4760072314954e141},
        {0.8, 0.3, 200, 1.7680339462518},
    };
    for (const Ref& ref : refs)
        REQUIRE(rel_err(double_sum(DoubleSumSpec(ref.rho, ref.xi, ref.n)), ref.value) < 1e-11);

    REQUIRE(std::fabs(double_sum(DoubleSumSpec(0.8, 0.3, 100)) - 1.768034) < 1e-6);
    REQUIRE(rel_err(double_sum(DoubleSumSpec(0.8, 0.7, 10)), 8.97174) < 1e-5);
    REQUIRE(rel_err(double_sum(DoubleSumSpec(0.8, 0.7, 1000)), 2.90618e156) < 1e-5);
}

TEST_CASE("double sum degenerate corners") {
    REQUIRE(double_sum(DoubleSumSpec(0.8, 0.0, 7)) == 1.0);
    REQUIRE(std::fabs(double_sum(DoubleSumSpec(0.8, 0.7, 0)) - 1.0) < 1e-15);
}

TEST_CASE("collapsed form matches the literal rectangle at small orders") {
    // The rectangle oracle itself cancels catastrophically at large orders;
    // at N <= 30, away from the resonance strip, it still holds far more
    // digits than this tolerance.
    std::mt19937 rng(2025);
    std::uniform_real_distribution<double> R(0.05, 0.95);
    std::uniform_real_distribution<double> X(0.0, 1.3);
    std::uniform_int_distribution<int> N(0, 30);
    int accepted = 0;
    while (accepted < 400) {
        const DoubleSumSpec spec(R(rng), X(rng), N(rng));
        if (std::fabs(1.0 - (spec.x_tilde() + spec.y_tilde())) < 1e-2)
            continue;
        ++accepted;
        const double collapsed = double_sum(spec);
        const double literal = detail::rectangle_sum(spec);
        REQUIRE(std::fabs(collapsed - literal) <= 1e-6 * (1.0 + std::fabs(literal)));
    }
}

TEST_CASE("resonance strip falls back to the literal order") {
    // xt + yt == 1 at xi = 1 for every modulus: the collapsed form loses
    // its denominator there.
    const DoubleSumSpec spec(0.8, 1.0, 30);
    const double v = double_sum(spec);
    REQUIRE(std::isfinite(v));
    REQUIRE(v == detail::rectangle_sum(spec));
}

TEST_CASE("double sum overflow") {
    REQUIRE_THROWS_AS(double_sum(DoubleSumSpec(0.8, 0.7, 2200)), std::overflow_error);
    REQUIRE_THROWS_AS(double_sum(DoubleSumSpec(0.8, 0.9, 700)), std::overflow_error);
}

TEST_CASE("closed form of the limit series") {
    const LimitPair lim{1.64, -0.64};
    REQUIRE(std::fabs(generating_value(lim, 0.3) - 1.768034) < 1e-6);
    REQUIRE(generating_value(lim, 0.0) == 1.0);
    REQUIRE_THROWS_AS(generating_value(lim, 1.0), pole_error);
}

TEST_CASE("double sum agrees with the closed form inside the disk") {
    for (int i = 1; i <= 9; ++i) {
        const double rho = 0.1 * i;
        const LimitPair lim =
            limits(weierstrass_to_algebraic(WeierstrassParameters(rho, 0.0, 0.0)));
        const double r_star = radius(DomainCriterion(lim));
        const auto series = asymptotic_sequence(lim, 400);
        for (int k = 0; k <= 9; ++k) {
            const double xi = 0.1 * k * r_star;
            const double closed = generating_value(lim, xi);
            const double rect = double_sum(DoubleSumSpec(rho, xi, 200));
            const double sum = partial_sum(series, xi);
            REQUIRE(std::fabs(rect - closed) <= 1e-6 * std::fabs(closed));
            REQUIRE(std::fabs(sum - closed) <= 1e-6 * std::fabs(closed));
            REQUIRE(std::fabs(rect - sum) <= 1e-8 * std::fabs(closed));
        }
    }
}

TEST_CASE("growth in the conditional band") {
    // Inside (r_star, 1) the series converges but the rectangle diverges.
    // At xi = 0.55 the limit is approached from below and the increments
    // sink under double resolution past N ~ 200, so single steps are
    // nondecreasing rather than strictly increasing.
    double prev = double_sum(DoubleSumSpec(0.8, 0.55, 50));
    for (int n = 100; n <= 1000; n += 50) {
        const double next = double_sum(DoubleSumSpec(0.8, 0.55, n));
        REQUIRE(next >= prev);
        prev = next;
    }
    REQUIRE(double_sum(DoubleSumSpec(0.8, 0.55, 1000)) > double_sum(DoubleSumSpec(0.8, 0.55, 50)));

    prev = double_sum(DoubleSumSpec(0.8, 0.7, 50));
    for (int n = 100; n <= 1000; n += 50) {
        const double next = double_sum(DoubleSumSpec(0.8, 0.7, n));
        REQUIRE(next > prev);
        prev = next;
    }

    prev = double_sum(DoubleSumSpec(0.8, 0.9, 50));
    for (int n = 100; n <= 600; n += 50) {
        const double next = double_sum(DoubleSumSpec(0.8, 0.9, n));
        REQUIRE(next > prev);
        prev = next;
    }

    REQUIRE(double_sum(DoubleSumSpec(0.8, 0.7, 700)) > 1e100);
}

TEST_CASE("doubling the order multiplies a divergent rectangle") {
    // Strict divergence of the rectangle sets in once 4 rho^2 (1 + rho^2)
    // xi^3 exceeds 1, at xi around 0.6198 for modulus 0.8.
    for (double xi : {0.63, 0.7, 0.85, 0.95}) {
        for (int n : {100, 200}) {
            const double at_n = double_sum(DoubleSumSpec(0.8, xi, n));
            const double at_2n = double_sum(DoubleSumSpec(0.8, xi, 2 * n));
            REQUIRE(at_2n / at_n > 10.0);
        }
    }
}

TEST_CASE("divergence experiment table") {
    const auto rows = run_table2();
    REQUIRE(rows.size() == 12);

    const int orders[] = {10, 50, 100, 200, 300, 400, 500, 600, 700, 800, 900, 1000};
    const double values[] = {8.97174, 4.44473e6, 2.62952e14, 1.28525e30,
                             7.23351e45, 4.31499e61, 2.65768e77, 1.67043e93,
                             1.06472e109, 6.85643e124, 4.45007e140, 2.90618e156};
    for (std::size_t i = 0; i < rows.size(); ++i) {
        REQUIRE(rows[i].n == orders[i]);
        REQUIRE(rel_err(rows[i].value, values[i]) < 1e-4);
        if (i > 0)
            REQUIRE(rows[i].value > rows[i - 1].value);
    }

    REQUIRE(std::fabs(rows[3].value / rows[2].value - 4.888e15) < 1e12);
}

TEST_CASE("experiment table CSV") {
    const auto rows = run_table2();
    std::ostringstream first;
    write_table2_csv(rows, first);

    std::ostringstream second;
    write_table2_csv(run_table2(), second);
    REQUIRE(first.str() == second.str());

    std::istringstream lines(first.str());
    std::string line;
    REQUIRE(std::getline(lines, line));
    REQUIRE(line == "N,value");
    REQUIRE(std::getline(lines, line));
    REQUIRE(line == "10,8.97174e+00");
    int count = 1;
    std::string last = line;
    while (std::getline(lines, line)) {
        ++count;
        last = line;
    }
    REQUIRE(count == 12);
    REQUIRE(last == "1000,2.90618e+156");
}

TEST_CASE("boundary scan rows") {
    const auto rows = domain_scan_rows(2);
    REQUIRE(rows.size() == 2);
    REQUIRE(rows[0].rho == 1.0 / 3.0);
    REQUIRE(rows[1].rho == 2.0 / 3.0);

    const auto nine = domain_scan_rows(9);
    REQUIRE(nine.size() == 9);
    for (std::size_t i = 0; i < nine.size(); ++i) {
        REQUIRE(nine[i].s_pp == 1.0);
        REQUIRE(nine[i].s_star == weierstrass_bound(nine[i].rho));
        REQUIRE(nine[i].s_star < nine[i].s_pp);
        if (i > 0)
            REQUIRE(nine[i].s_star < nine[i - 1].s_star);
    }

    REQUIRE_THROWS_AS(domain_scan_rows(1), std::domain_error);
    REQUIRE_THROWS_AS(domain_scan_rows(0), std::domain_error);
}

TEST_CASE("boundary scan CSV file") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path();
    const fs::path first = dir / "lame_scan_a.csv";
    const fs::path second = dir / "lame_scan_b.csv";

    const auto rows_a = run_domain_scan(9, first.string());
    const auto rows_b = run_domain_scan(9, second.string());
    REQUIRE(rows_a.size() == rows_b.size());
    for (std::size_t i = 0; i < rows_a.size(); ++i) {
        REQUIRE(rows_a[i].rho == rows_b[i].rho);
        REQUIRE(rows_a[i].s_star == rows_b[i].s_star);
    }

    const std::string text_a = slurp(first);
    const std::string text_b = slurp(second);
    REQUIRE(!text_a.empty());
    REQUIRE(text_a == text_b);
    REQUIRE(text_a.rfind("rho,s_star,s_pp\n", 0) == 0);

    std::istringstream lines(text_a);
    std::string line;
    std::getline(lines, line);
    std::getline(lines, line);
    char expect[96];
    std::snprintf(expect, sizeof expect, "%.6e,%.6e,%.6e", 0.1, weierstrass_bound(0.1), 1.0);
    REQUIRE(line == expect);

    fs::remove(first);
    fs::remove(second);

    REQUIRE_THROWS_AS(run_domain_scan(5, "/nonexistent-dir-kqz/out.csv"), io_error);
}

TEST_CASE("closed form versus rectangle report") {
    const CompareReport inside = run_compare(0.8, 0.3);
    REQUIRE(inside.verdict.tag == Verdict::AbsolutelyConvergent);
    REQUIRE(std::fabs(inside.verdict.r_star - 0.50875) < 1e-5);
    REQUIRE(inside.verdict.r_pp == 1.0);
    REQUIRE(inside.has_check);
    REQUIRE(std::fabs(inside.closed_form - 1.768034) < 1e-6);
    REQUIRE(inside.abs_diff < 1e-6);

    const CompareReport band = run_compare(0.8, 0.7);
    REQUIRE(band.verdict.tag == Verdict::ConditionalRegion);
    REQUIRE_FALSE(band.has_check);

    REQUIRE(run_compare(0.8, 1.2).verdict.tag == Verdict::Divergent);
    REQUIRE(run_compare(0.8, 1.5).verdict.tag == Verdict::Divergent);

    REQUIRE_THROWS_AS(run_compare(0.0, 0.5), std::domain_error);
    REQUIRE_THROWS_AS(run_compare(1.0, 0.5), std::domain_error);
    REQUIRE_THROWS_AS(run_compare(0.8, -0.1), std::domain_error);
}
