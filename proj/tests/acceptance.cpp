// Acceptance suite: one PASS/FAIL line per criterion. Tolerances are fixed here.

#include "fracgreen/existence.hpp"
#include "fracgreen/fracops.hpp"
#include "fracgreen/green.hpp"
#include "fracgreen/mittag.hpp"
#include "fracgreen/oracle.hpp"
#include "fracgreen/rtransform.hpp"
#include "fracgreen/solver.hpp"
#include "fracgreen/special.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

using namespace fracgreen;

namespace {

constexpr std::uint64_t kSeed = 20240601;

const ProblemSpec kExample1{1.5, 0.5, 0.5, 5};

int g_failures = 0;

struct Outcome {
    bool pass;
    std::string detail;
};

void report(int id, const char* title, const std::function<Outcome()>& body, double time_limit = 0.0) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out{false, ""};
    try {
        out = body();
    } catch (const std::exception& err) {
        out = {false, std::string("exception: ") + err.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char timing[96];
    if (time_limit > 0.0) {
        std::snprintf(timing, sizeof timing, " [%.3f s, limit %.0f s]", secs, time_limit);
        if (secs >= time_limit) out.pass = false;
    } else {
        std::snprintf(timing, sizeof timing, " [%.3f s]", secs);
    }
    if (!out.pass) ++g_failures;
    std::printf("%s  %2d  %s: %s%s\n", out.pass ? "PASS" : "FAIL", id, title, out.detail.c_str(), timing);
    std::fflush(stdout);
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

ProblemSpec draw_spec(std::mt19937_64& rng) {
    for (;;) {
        ProblemSpec s{uniform(rng, 1.05, 1.95), uniform(rng, 0.05, 0.95), uniform(rng, -0.9, 0.9),
                      std::uniform_int_distribution<int>(1, 8)(rng)};
        if (std::abs(uniqueness_indicator(s)) >= 1e-6) return s;
    }
}

GridFunction draw(std::mt19937_64& rng, const Grid& grid) {
    std::vector<double> v(grid.count());
    for (auto& x : v) x = uniform(rng, -1.0, 1.0);
    return GridFunction(grid, v);
}

double example2_f(double t, double r) { return t * std::pow(std::pow(std::abs(r), 3) + t, 0.25); }

double example2_M() {
    const GreenKernel g = build_kernel(kExample1);
    const Grid forcing = g.forcing_grid();
    std::vector<double> w(forcing.count());
    for (std::size_t k = 0; k < w.size(); ++k) w[k] = forcing.point(k);
    return weighted_bound(g, GridFunction(forcing, w));
}

// Specs shared by criteria 5 and 7.
std::vector<ProblemSpec> swept_specs() {
    std::mt19937_64 rng(kSeed);
    std::vector<ProblemSpec> specs;
    for (int k = 0; k < 20; ++k) specs.push_back(draw_spec(rng));
    return specs;
}

}  // namespace

int main() {
    std::printf("fracgreen acceptance (seed %llu)\n", static_cast<unsigned long long>(kSeed));

    report(1, "Example 1 constant d", [] {
        const double d = compute_d(build_kernel(kExample1));
        return Outcome{std::abs(d - 0.241342) <= 1e-4, fmt("d = %.9f, target 0.241342 +/- 1e-4", d)};
    }, 1.0);

    report(2, "Example 1 slope verdict", [] {
        const GreenKernel g = build_kernel(kExample1);
        const bool ok = check_kz(g, 1.0 / 6.0);
        return Outcome{ok, fmt("|m| = 1/6 = %.6f < d = %.6f", 1.0 / 6.0, compute_d(g))};
    });

    report(3, "Example 2 minimal L", [] {
        const double M = example2_M();
        const auto L = minimal_L(M, [](double x) { return std::pow(x * x * x + 6.5, 0.25); });
        if (!L) return Outcome{false, "no crossing found"};
        const double rel = std::abs(*L - 74395.4) / 74395.4;
        return Outcome{rel <= 0.01, fmt("L = %.2f (M = %.6f), target 74395.4 +/- 1%%, rel err %.2e", *L, M, rel)};
    }, 5.0);

    report(4, "Mittag-Leffler identities", [] {
        double at_minus_one = 0.0, at_zero = 0.0, at_one = 0.0;
        for (double lambda : {-0.9, -0.5, 0.1, 0.5, 0.9}) {
            for (double order : {0.3, 1.0, 1.4}) {
                for (double beta : {1.0, 1.5, 2.0}) {
                    const MittagLefflerParams p{order, beta, lambda};
                    const double q = 1.0 - lambda;
                    at_minus_one = std::max(at_minus_one, std::abs(ml(p, -1)));
                    at_zero = std::max(at_zero, std::abs(ml(p, 0) - 1.0 / q));
                    at_one = std::max(at_one, std::abs(ml(p, 1) - (order * lambda / (q * q) + beta / q)));
                }
            }
        }
        const bool ok = at_minus_one == 0.0 && at_zero <= 1e-10 && at_one <= 1e-10;
        return Outcome{ok, fmt("max|e(-1)| = %.1e (exact 0), max err at 0 = %.2e, at 1 = %.2e (tol 1e-10)", at_minus_one,
                               at_zero, at_one)};
    });

    report(5, "Oracle equivalence", [] {
        std::mt19937_64 rng(kSeed + 5);
        double worst = 0.0;
        for (const ProblemSpec& spec : swept_specs()) {
            const GridFunction h = draw(rng, make_forcing_grid(spec));
            const GridFunction y = solve_linear(spec, h);
            const GridFunction z = oracle::solve_collocation(spec, h);
            double diff = 0.0;
            for (std::size_t i = 0; i < y.size(); ++i) diff = std::max(diff, std::abs(y[i] - z[i]));
            worst = std::max(worst, diff / (1.0 + y.sup_norm()));
        }
        return Outcome{worst <= 1e-8, fmt("20 specs, max |y_G - y_coll| / (1 + |y|) = %.2e (tol 1e-8)", worst)};
    });

    report(6, "alpha = 0 reduction", [] {
        double worst = 0.0;
        for (double mu : {0.05, 0.37, 0.5, 0.95}) {
            worst = std::max(worst, max_abs_difference(build_kernel({1.5, mu, 0.0, 5}).table(), atici_eloe_kernel(1.5, 5)));
        }
        return Outcome{worst <= 1e-10, fmt("max |G - G0| = %.2e over mu in {0.05, 0.37, 0.5, 0.95} (tol 1e-10)", worst)};
    });

    report(7, "Boundary rows", [] {
        double worst = 0.0;
        for (const ProblemSpec& spec : swept_specs()) {
            const GreenKernel g = build_kernel(spec);
            const std::size_t last = g.table().rows() - 1;
            for (std::size_t j = 0; j < g.table().cols(); ++j) {
                worst = std::max({worst, std::abs(g(0, j)), std::abs(g(last, j))});
            }
        }
        return Outcome{worst <= 1e-12, fmt("20 specs, max |G(v-2, .)|, |G(v+b+1, .)| = %.2e (tol 1e-12)", worst)};
    });

    report(8, "Transform lemmas", [] {
        const double v = 1.5;
        const SequenceGenerator power{v - 1.0, [v](double t) { return special::falling_factorial(t, v - 1.0); }};
        double power_err = 0.0;
        for (double s : {0.5, 1.0, 2.0}) {
            power_err = std::max(power_err, std::abs(r_transform(power, s) - special::gamma(v) / std::pow(s, v)));
        }
        std::mt19937_64 rng(kSeed + 8);
        double conv = 0.0, diff = 0.0;
        for (int k = 0; k < 10; ++k) {
            const double offset = uniform(rng, -0.95, -0.05);
            const Grid grid(offset, 5);
            conv = std::max(conv, verify_convolution_lemma(draw(rng, grid), draw(rng, grid), uniform(rng, 0.2, 3.0)));
        }
        for (int k = 0; k < 10; ++k) {
            const double mu = uniform(rng, 0.05, 1.95);
            const int m = mu < 1.0 ? 1 : 2;
            diff = std::max(diff, verify_difference_lemma(draw(rng, Grid(mu - m, 5)), mu, m, uniform(rng, 0.2, 3.0)));
        }
        const bool ok = power_err <= 1e-6 && conv <= 1e-10 && diff <= 1e-10;
        return Outcome{ok, fmt("power %.2e (tol 1e-6), convolution %.2e, difference %.2e (tol 1e-10)", power_err, conv, diff)};
    });

    report(9, "Falling-factorial lemma", [] {
        std::mt19937_64 rng(kSeed + 9);
        double worst = 0.0;
        int n = 0;
        while (n < 100) {
            const double t = uniform(rng, 0.0, 50.0);
            const double v = uniform(rng, 0.05, 2.0);
            if (special::is_nonpositive_integer(t + 1.0 - v, 1e-6)) continue;
            const double lhs = special::falling_factorial(t + 1.0, v) - special::falling_factorial(t, v);
            const double rhs = v * special::falling_factorial(t, v - 1.0);
            worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
            ++n;
        }
        return Outcome{worst <= 1e-10, fmt("100 samples, max relative error %.2e (tol 1e-10)", worst)};
    });

    report(10, "Example 2 nonlinear solve", [] {
        const NonlinearRHS f{example2_f, "t*root4(abs(r)^3 + t)"};
        const GridFunction y0 = GridFunction::zeros(make_solution_grid(kExample1));
        SolveOptions opts;
        opts.damping = 0.5;
        const SolveOutcome picard = solve_picard(build_kernel(kExample1), f, y0, opts);
        const SolveOutcome newton = solve_newton(kExample1, f, y0, opts);
        const double fp = evaluate_rhs(kExample1, f, picard.y).sup_norm();
        const double fn = evaluate_rhs(kExample1, f, newton.y).sup_norm();
        double gap = 0.0;
        for (std::size_t i = 0; i < picard.y.size(); ++i) gap = std::max(gap, std::abs(picard.y[i] - newton.y[i]));
        const double gap_tol = 1e-6 * (1.0 + picard.y.sup_norm());
        const bool ok = picard.converged && newton.converged && picard.residual <= 1e-7 * (1.0 + fp) &&
                        newton.residual <= 1e-7 * (1.0 + fn) && gap <= gap_tol && picard.nontrivial && newton.nontrivial;
        char buf[320];
        std::snprintf(buf, sizeof buf,
                      "|y| = %.4f; picard %d it, res %.1e; newton %d it, res %.1e (tol 1e-7(1+|f|) = %.1e); gap %.1e "
                      "(tol %.1e); converged %d/%d, nontrivial %d",
                      picard.y.sup_norm(), picard.iterations, picard.residual, newton.iterations, newton.residual,
                      1e-7 * (1.0 + fp), gap, gap_tol, picard.converged, newton.converged, picard.nontrivial && newton.nontrivial);
        return Outcome{ok, buf};
    }, 5.0);

    std::printf("%s: %d of 10 criteria failed\n", g_failures == 0 ? "ACCEPTED" : "REJECTED", g_failures);
    return g_failures == 0 ? 0 : 1;
}
