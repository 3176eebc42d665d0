// Command-line front end: kernels, linear and nonlinear solves, existence
// checks and the numerical verification suite.
//
// Exit codes: 0 ok, 1 verification failure, 2 bad input, 3 singular problem,
// 4 no convergence, 5 existence check failed.

#include "fracgreen/errors.hpp"
#include "fracgreen/existence.hpp"
#include "fracgreen/expr.hpp"
#include "fracgreen/green.hpp"
#include "fracgreen/io.hpp"
#include "fracgreen/oracle.hpp"
#include "fracgreen/solver.hpp"
#include "fracgreen/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>

namespace {

using namespace fracgreen;
using nlohmann::json;

enum ExitCode : int {
    kOk = 0,
    kVerifyFailed = 1,
    kBadInput = 2,
    kSingular = 3,
    kNoConvergence = 4,
    kCheckFailed = 5,
};

struct SpecFlags {
    std::string problem_path;
    std::optional<double> upsilon;
    std::optional<double> mu;
    std::optional<double> alpha;
    std::optional<int> b;

    void attach(CLI::App& cmd) {
        cmd.add_option("--problem", problem_path, "JSON problem file");
        cmd.add_option("--upsilon", upsilon, "order v, 1 < v < 2 (default 1.5)");
        cmd.add_option("--mu", mu, "order mu, 0 < mu < 1 (default 0.5)");
        cmd.add_option("--alpha", alpha, "coefficient, |alpha| < 1 (default 0)");
        cmd.add_option("--b", b, "interval length b >= 1 (default 5)");
    }

    // Flags override the file; the file overrides defaults.
    io::ProblemFile resolve() const {
        io::ProblemFile p;
        p.spec = ProblemSpec{1.5, 0.5, 0.0, 5};
        if (!problem_path.empty()) {
            p = io::load_problem(problem_path);
        }
        if (upsilon) p.spec.upsilon = *upsilon;
        if (mu) p.spec.mu = *mu;
        if (alpha) p.spec.alpha = *alpha;
        if (b) p.spec.b = *b;
        p.validate();
        return p;
    }
};

// f(t, r) with t the forcing-grid point.
NonlinearRHS compile_nonlinearity(const std::string& source) {
    auto e = std::make_shared<expr::Expr>(expr::parse(source, {"t", "r"}));
    return {[e](double t, double r) { return e->eval({{"t", t}, {"r", r}}); }, source};
}

GridFunction sample_on(const Grid& grid, const std::string& source) {
    const expr::Expr e = expr::parse(source, {"t"});
    std::vector<double> v(grid.count());
    for (std::size_t k = 0; k < v.size(); ++k) {
        v[k] = e.eval({{"t", grid.point(k)}});
    }
    return GridFunction(grid, std::move(v));
}

json values_json(const GridFunction& f) {
    json a = json::array();
    for (double v : f.values()) {
        a.push_back(io::round12(v));
    }
    return a;
}

// ---------------------------------------------------------------------------

struct GreenArgs {
    SpecFlags spec;
    std::string format = "csv";
    bool check_g0 = false;
};

int cmd_green(const GreenArgs& args) {
    const io::ProblemFile problem = args.spec.resolve();
    const GreenKernel kernel = build_kernel(problem.spec);
    const double d = compute_d(kernel);
    if (args.format == "json") {
        json j = io::kernel_to_json(kernel);
        j["d"] = io::round12(d);
        std::cout << j.dump(2) << '\n';
    } else {
        io::write_kernel_csv(std::cout, kernel);
        std::cout << "# denominator," << io::format_number(kernel.denominator()) << '\n';
        std::cout << "# d," << io::format_number(d) << '\n';
    }
    if (args.check_g0) {
        if (problem.spec.alpha != 0.0) {
            throw InputError("--check-g0 needs alpha = 0");
        }
        const double diff = max_abs_difference(kernel.table(), atici_eloe_kernel(problem.spec.upsilon, problem.spec.b));
        if (diff < 1e-10) {
            std::cout << "G0 match: max|delta| = " << io::format_number(diff) << " < 1e-10\n";
        } else {
            std::cout << "G0 mismatch: max|delta| = " << io::format_number(diff) << " >= 1e-10\n";
            return kVerifyFailed;
        }
    }
    return kOk;
}

// ---------------------------------------------------------------------------

struct SolveArgs {
    SpecFlags spec;
    std::vector<double> h;
    std::string h_expr;
    std::string f_expr;
    bool random_h = false;
    std::uint64_t seed = 1;
    std::string method = "auto";
    SolveOptions options;
    std::string dump_matrix;
};

int cmd_solve(const SolveArgs& args) {
    io::ProblemFile problem = args.spec.resolve();
    const int cli_modes = (!args.h.empty() ? 1 : 0) + (!args.h_expr.empty() ? 1 : 0) +
                          (!args.f_expr.empty() ? 1 : 0) + (args.random_h ? 1 : 0);
    if (cli_modes > 1) {
        throw InputError("give at most one of --h, --h-expr, --f-expr, --random-h");
    }
    if (cli_modes == 1) {
        problem.h.reset();
        problem.h_expr.reset();
        problem.f_expr.reset();
    }
    if (!args.h.empty()) problem.h = args.h;
    if (!args.h_expr.empty()) problem.h_expr = args.h_expr;
    if (!args.f_expr.empty()) problem.f_expr = args.f_expr;
    if (args.random_h) {
        std::mt19937_64 rng(args.seed);
        std::uniform_real_distribution<double> dist(-1.0, 1.0);
        std::vector<double> h(static_cast<std::size_t>(problem.spec.b) + 2);
        for (auto& v : h) v = dist(rng);
        problem.h = h;
    }
    problem.validate();
    if (!problem.h && !problem.h_expr && !problem.f_expr) {
        throw InputError("solve needs one of h, h_expr (linear) or f_expr (nonlinear)");
    }
    const ProblemSpec& spec = problem.spec;
    const Grid forcing = make_forcing_grid(spec);

    json out;
    out["problem"] = io::problem_to_json(problem);
    if (!problem.f_expr) {
        const GridFunction h = problem.h ? GridFunction(forcing, *problem.h) : sample_on(forcing, *problem.h_expr);
        if (!args.dump_matrix.empty()) {
            std::ofstream dump(args.dump_matrix);
            oracle::write_matrix_csv(dump, oracle::assemble(spec, h));
        }
        const GridFunction y = solve_linear(spec, h);
        const GridFunction y_oracle = oracle::solve_collocation(spec, h);
        double discrepancy = 0.0;
        for (std::size_t i = 0; i < y.size(); ++i) {
            discrepancy = std::max(discrepancy, std::abs(y[i] - y_oracle[i]));
        }
        out["mode"] = "linear";
        out["grid"] = {{"offset", io::round12(y.grid().offset())}, {"count", y.size()}};
        out["y_green"] = values_json(y);
        out["y_collocation"] = values_json(y_oracle);
        out["discrepancy"] = io::round12(discrepancy);
        out["residual"] = io::round12(oracle::residual(spec, y, h));
        std::cout << out.dump(2) << '\n';
        return kOk;
    }

    const NonlinearRHS f = compile_nonlinearity(*problem.f_expr);
    const GridFunction y0 = GridFunction::zeros(make_solution_grid(spec));
    if (!args.dump_matrix.empty()) {
        std::ofstream dump(args.dump_matrix);
        oracle::write_matrix_csv(dump, oracle::assemble(spec, GridFunction::zeros(forcing)));
    }
    std::optional<SolveOutcome> outcome;
    std::string picard_note;
    if (args.method != "newton") {
        try {
            outcome = solve_picard(build_kernel(spec), f, y0, args.options);
        } catch (const NonConvergenceError& err) {
            picard_note = err.what();
        }
    }
    if (args.method == "newton" || (args.method == "auto" && (!outcome || !outcome->converged))) {
        outcome = solve_newton(spec, f, y0, args.options);
    }
    if (!outcome) {
        throw NonConvergenceError(picard_note);
    }
    out["mode"] = "nonlinear";
    out["outcome"] = io::outcome_to_json(*outcome);
    if (!picard_note.empty()) {
        out["picard_failure"] = picard_note;
    }
    std::cout << out.dump(2) << '\n';
    return outcome->converged ? kOk : kNoConvergence;
}

// ---------------------------------------------------------------------------

struct CheckArgs {
    SpecFlags spec;
    std::optional<double> m;
    std::string g_expr;
    std::string psi_expr;
};

int cmd_check(const CheckArgs& args) {
    io::ProblemFile problem = args.spec.resolve();
    if (args.m) problem.m = args.m;
    if (!args.g_expr.empty()) problem.g_expr = args.g_expr;
    if (!args.psi_expr.empty()) problem.psi_expr = args.psi_expr;
    const bool want_kz = problem.m.has_value();
    const bool want_ls = problem.g_expr.has_value() || problem.psi_expr.has_value();
    if (!want_kz && !want_ls) {
        throw InputError("check needs m and/or both g_expr and psi_expr");
    }
    if (want_ls && !(problem.g_expr && problem.psi_expr)) {
        throw InputError("the growth check needs both g_expr and psi_expr");
    }

    const GreenKernel kernel = build_kernel(problem.spec);
    ExistenceReport report;
    report.d = compute_d(kernel);
    bool pass = true;
    json j;
    if (want_kz) {
        report.m = *problem.m;
        report.kz_pass = check_kz(kernel, report.m);
        pass = pass && report.kz_pass;
    }
    if (want_ls) {
        const GridFunction g = sample_on(kernel.forcing_grid(), *problem.g_expr);
        report.M = weighted_bound(kernel, g);
        const expr::Expr psi = expr::parse(*problem.psi_expr, {"L"});
        report.minimal_L = minimal_L(report.M, [&](double L) { return psi.eval({{"L", L}}); });
        report.ls_pass = report.minimal_L.has_value();
        pass = pass && report.ls_pass;
    }
    j = io::report_to_json(report);
    if (!want_kz) {
        j["m"] = nullptr;
        j["kz_pass"] = nullptr;
    }
    if (!want_ls) {
        j["M"] = nullptr;
        j["ls_pass"] = nullptr;
    }
    if (problem.f_expr) {
        const NonlinearRHS f = compile_nonlinearity(*problem.f_expr);
        try {
            const SlopeProbe probe = probe_slope(kernel.forcing_grid(), f.eval);
            j["slope_probe"] = {{"min_ratio", io::round12(probe.min_ratio)}, {"max_ratio", io::round12(probe.max_ratio)}};
        } catch (const Error& err) {
            j["slope_probe"] = {{"error", err.what()}};
        }
    }
    std::cout << j.dump(2) << '\n';
    return pass ? kOk : kCheckFailed;
}

// ---------------------------------------------------------------------------

int cmd_verify(const VerifyOptions& opts) {
    bool all = true;
    for (const CheckResult& r : run_verification(opts)) {
        std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << "  measured=" << io::format_number(r.measured)
                  << "  threshold=" << io::format_number(r.threshold) << '\n';
        all = all && r.pass;
    }
    std::cout << (all ? "all checks passed" : "verification FAILED") << '\n';
    return all ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Green's functions and boundary value problems for implicit fractional difference equations"};
    app.require_subcommand(1);

    GreenArgs green_args;
    auto* green = app.add_subcommand("green", "build the Green's kernel and print it");
    green_args.spec.attach(*green);
    green->add_option("--format", green_args.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    green->add_flag("--check-g0", green_args.check_g0, "compare with the alpha = 0 closed form");

    SolveArgs solve_args;
    auto* solve = app.add_subcommand("solve", "solve the linear or nonlinear Dirichlet problem");
    solve->set_help_flag("--help", "print this help message and exit");
    solve_args.spec.attach(*solve);
    solve->add_option("--h", solve_args.h, "forcing values on v-1..v+b")->delimiter(',');
    solve->add_option("--h-expr", solve_args.h_expr, "forcing h(t), t = forcing-grid point");
    solve->add_option("--f-expr", solve_args.f_expr, "nonlinearity f(t, r), t = forcing-grid point");
    solve->add_flag("--random-h", solve_args.random_h, "uniform random forcing in [-1, 1]");
    solve->add_option("--seed", solve_args.seed, "seed for --random-h");
    solve->add_option("--method", solve_args.method, "auto, picard or newton")
        ->check(CLI::IsMember({"auto", "picard", "newton"}));
    solve->add_option("--tol", solve_args.options.tol, "step tolerance");
    solve->add_option("--max-iter", solve_args.options.max_iter, "iteration cap");
    solve->add_option("--damping", solve_args.options.damping, "Picard damping in (0, 1]");
    solve->add_option("--dump-matrix", solve_args.dump_matrix, "write the collocation system as CSV");

    CheckArgs check_args;
    auto* check = app.add_subcommand("check", "existence tests (slope and growth conditions)");
    check_args.spec.attach(*check);
    check->add_option("--m", check_args.m, "asymptotic slope of f(t, r)/r");
    check->add_option("--g-expr", check_args.g_expr, "weight g(t), t = forcing-grid point");
    check->add_option("--psi-expr", check_args.psi_expr, "nondecreasing bound psi(L)");

    VerifyOptions verify_opts;
    auto* verify = app.add_subcommand("verify", "run the numerical identity suite");
    verify->add_option("--seed", verify_opts.seed, "random seed");
    verify->add_option("--sweeps", verify_opts.sweeps, "number of random specs in the kernel sweep");
    verify->add_option("--tol", verify_opts.tol, "override every threshold");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kBadInput;
    }

    try {
        if (green->parsed()) return cmd_green(green_args);
        if (solve->parsed()) return cmd_solve(solve_args);
        if (check->parsed()) return cmd_check(check_args);
        return cmd_verify(verify_opts);
    } catch (const InputError& err) {
        std::cerr << "error: " << err.what() << '\n';
        return kBadInput;
    } catch (const SingularError& err) {
        std::cerr << "singular: " << err.what() << '\n';
        return kSingular;
    } catch (const NonConvergenceError& err) {
        std::cerr << "no convergence: " << err.what() << '\n';
        return kNoConvergence;
    } catch (const Error& err) {
        std::cerr << "error: " << err.what() << '\n';
        return kBadInput;
    }
}
