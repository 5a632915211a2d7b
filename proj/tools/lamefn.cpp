// Command line front end for the lame library.
//
// Subcommands:
//   radius algebraic --a --b --c        closed-form convergence radius and case tag
//   radius weierstrass --rho            convergence radius bound for the modulus rho
//   series eval ...                     partial sum of the recurrence-generated series
//   experiment table2 [--out FILE]      growth table of the rectangular double sum
//   domain scan --steps N --out FILE    radius bound versus modulus, written as CSV
//   compare --rho --xi                  closed form versus truncated double sum

#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include <lame/lame.hpp>

namespace {

int run_radius_algebraic(double a, double b, double c) {
    lame::AlgebraicParameters params{a, b, c, 0.0, 0.0};
    lame::AlgebraicCase result = lame::classify_algebraic(params);
    std::printf("%.6e\n", result.radius);
    std::printf("case=%s\n", lame::to_string(result.tag));
    return 0;
}

int run_radius_weierstrass(double rho) {
    std::printf("%.6e\n", lame::weierstrass_bound(rho));
    return 0;
}

int run_series_eval(double rho, double xi, double q, double alpha, double lambda,
                    int n_max) {
    lame::WeierstrassParameters form(rho, alpha, 0.0);
    lame::AlgebraicParameters params = lame::weierstrass_to_algebraic(form);
    params.q = q;
    lame::IndicialExponent exponent(lambda);
    lame::CoefficientSequence seq = lame::generate_sequence(params, exponent, n_max);
    std::printf("%.6e\n", lame::partial_sum(seq, xi));
    return 0;
}

int run_experiment_table2(const std::string& out_path) {
    std::vector<lame::ExperimentRow> rows = lame::run_table2();
    lame::write_table2_csv(rows, std::cout);
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) {
            throw lame::io_error("cannot open " + out_path + " for writing");
        }
        lame::write_table2_csv(rows, out);
        out.flush();
        if (!out) {
            throw lame::io_error("write to " + out_path + " failed");
        }
    }
    return 0;
}

int run_domain_scan(int steps, const std::string& out_path) {
    lame::run_domain_scan(steps, out_path);
    return 0;
}

int run_compare(double rho, double xi) {
    lame::CompareReport report = lame::run_compare(rho, xi);
    std::printf("r_star=%.6e\n", report.verdict.r_star);
    std::printf("r_pp=%.6e\n", report.verdict.r_pp);
    std::printf("verdict=%s\n", lame::to_string(report.verdict.tag));
    if (report.has_check) {
        std::printf("closed_form=%.6e\n", report.closed_form);
        std::printf("double_sum_n200=%.6e\n", report.double_sum_value);
        std::printf("abs_diff=%.6e\n", report.abs_diff);
    } else if (report.verdict.tag != lame::Verdict::AbsolutelyConvergent) {
        std::printf("double_sum_growth=divergent\n");
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Frobenius series tools for the Lame equation"};
    app.require_subcommand(1);

    auto* radius = app.add_subcommand("radius", "convergence radius of the series");
    radius->require_subcommand(1);

    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    auto* algebraic = radius->add_subcommand("algebraic", "closed form by case analysis");
    algebraic->add_option("--a", a, "first singular point")->required();
    algebraic->add_option("--b", b, "second singular point")->required();
    algebraic->add_option("--c", c, "third singular point")->required();

    double rho = 0.0;
    auto* weier = radius->add_subcommand("weierstrass", "radius bound for modulus rho");
    weier->add_option("--rho", rho, "elliptic modulus in (0,1)")->required();

    auto* series = app.add_subcommand("series", "series evaluation");
    double s_rho = 0.0;
    double s_xi = 0.0;
    double s_q = 0.0;
    double s_alpha = 0.0;
    double s_lambda = 0.0;
    int s_n_max = 200;
    auto* eval = series->add_subcommand("eval", "partial sum at a point");
    eval->add_option("--rho", s_rho, "elliptic modulus in (0,1)")->required();
    eval->add_option("--xi", s_xi, "evaluation point")->required();
    eval->add_option("--q", s_q, "accessory parameter of the algebraic form");
    eval->add_option("--alpha", s_alpha, "degree parameter");
    eval->add_option("--lambda", s_lambda, "indicial exponent, 0 or 0.5");
    eval->add_option("--n-max", s_n_max, "truncation order");

    auto* experiment = app.add_subcommand("experiment", "numerical experiments");
    std::string table_out;
    auto* table2 = experiment->add_subcommand("table2", "double sum growth table");
    table2->add_option("--out", table_out, "also write the CSV to this file");

    auto* domain = app.add_subcommand("domain", "convergence domain utilities");
    int steps = 9;
    std::string scan_out;
    auto* scan = domain->add_subcommand("scan", "radius bound over a modulus grid");
    scan->add_option("--steps", steps, "number of interior grid points");
    scan->add_option("--out", scan_out, "output CSV path")->required();

    double c_rho = 0.0;
    double c_xi = 0.0;
    auto* compare = app.add_subcommand("compare", "closed form versus double sum");
    compare->add_option("--rho", c_rho, "elliptic modulus in (0,1)")->required();
    compare->add_option("--xi", c_xi, "evaluation point, nonnegative")->required();

    try {
        app.parse(argc, argv);
        if (algebraic->parsed()) {
            return run_radius_algebraic(a, b, c);
        }
        if (weier->parsed()) {
            return run_radius_weierstrass(rho);
        }
        if (eval->parsed()) {
            return run_series_eval(s_rho, s_xi, s_q, s_alpha, s_lambda, s_n_max);
        }
        if (table2->parsed()) {
            return run_experiment_table2(table_out);
        }
        if (scan->parsed()) {
            return run_domain_scan(steps, scan_out);
        }
        if (compare->parsed()) {
            return run_compare(c_rho, c_xi);
        }
        std::fprintf(stderr, "no subcommand selected\n");
        return 2;
    } catch (const CLI::ParseError& e) {
        // app.exit prints the usage message; --help and --version leave it
        // returning 0, anything else is an invalid-parameter failure.
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const lame::io_error& e) {
        std::fprintf(stderr, "io error: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
