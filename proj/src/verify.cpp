#include "fracgreen/verify.hpp"

#include "fracgreen/errors.hpp"
#include "fracgreen/fracops.hpp"
#include "fracgreen/green.hpp"
#include "fracgreen/mittag.hpp"
#include "fracgreen/oracle.hpp"
#include "fracgreen/rtransform.hpp"
#include "fracgreen/special.hpp"

#include <algorithm>
#include <cmath>

namespace fracgreen {

namespace {

double uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

std::vector<double> random_values(std::mt19937_64& rng, std::size_t n) {
    std::vector<double> v(n);
    for (auto& x : v) {
        x = uniform(rng, -1.0, 1.0);
    }
    return v;
}

double ml_special_values() {
    double worst = 0.0;
    for (double lambda : {-0.9, -0.5, 0.1, 0.5, 0.9}) {
        for (double order : {0.3, 1.0, 1.4}) {
            for (double beta : {1.0, 1.5, 2.0}) {
                const MittagLefflerParams p{order, beta, lambda};
                const double at_minus_one = ml(p, -1);
                const double at_zero = ml(p, 0);
                const double at_one = ml(p, 1);
                const double q = 1.0 - lambda;
                worst = std::max(worst, std::abs(at_minus_one));
                worst = std::max(worst, std::abs(at_zero - 1.0 / q));
                worst = std::max(worst, std::abs(at_one - (order * lambda / (q * q) + beta / q)));
            }
        }
    }
    return worst;
}

double power_transform() {
    const double v = 1.5;
    const SequenceGenerator power{v - 1.0, [v](double t) { return special::falling_factorial(t, v - 1.0); }};
    double worst = 0.0;
    for (double s : {0.5, 1.0, 2.0}) {
        worst = std::max(worst, std::abs(r_transform(power, s) - special::gamma(v) / std::pow(s, v)));
    }
    return worst;
}

double convolution_lemma(std::mt19937_64& rng) {
    double worst = 0.0;
    for (int k = 0; k < 10; ++k) {
        const Grid grid(uniform(rng, 1.05, 1.95) - 2.0, 5);
        const GridFunction f(grid, random_values(rng, 5));
        const GridFunction g(grid, random_values(rng, 5));
        worst = std::max(worst, verify_convolution_lemma(f, g, uniform(rng, 0.2, 2.0)));
    }
    return worst;
}

double difference_lemma(std::mt19937_64& rng) {
    double worst = 0.0;
    for (int k = 0; k < 10; ++k) {
        const int m = 1 + k % 2;
        const double mu = static_cast<double>(m - 1) + uniform(rng, 0.05, 0.95);
        const GridFunction f(Grid(mu - m, 4), random_values(rng, 4));
        worst = std::max(worst, verify_difference_lemma(f, mu, m, uniform(rng, 0.5, 2.0)));
    }
    return worst;
}

double falling_factorial_lemma(std::mt19937_64& rng) {
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
        const double t = uniform(rng, 0.0, 20.0);
        const double v = uniform(rng, 0.1, 3.0);
        const double lhs = special::falling_factorial(t + 1.0, v) - special::falling_factorial(t, v);
        const double rhs = v * special::falling_factorial(t, v - 1.0);
        worst = std::max(worst, std::abs(lhs - rhs) / std::max(1e-300, std::abs(rhs)));
    }
    return worst;
}

struct SweepMeasures {
    double boundary = 0.0;
    double equivalence = 0.0;
    double newest = 0.0;
};

SweepMeasures sweep(std::mt19937_64& rng, int count) {
    SweepMeasures out;
    for (int k = 0; k < count; ++k) {
        const ProblemSpec spec = random_spec(rng);
        const GreenKernel kernel = build_kernel(spec);
        const std::size_t last = kernel.table().rows() - 1;
        for (std::size_t j = 0; j < kernel.table().cols(); ++j) {
            out.boundary = std::max({out.boundary, std::abs(kernel(0, j)), std::abs(kernel(last, j))});
        }
        const GridFunction h(make_forcing_grid(spec), random_values(rng, static_cast<std::size_t>(spec.b) + 2));
        const GridFunction y = solve_linear(kernel, h);
        const GridFunction y_oracle = oracle::solve_collocation(spec, h);
        double diff = 0.0;
        for (std::size_t i = 0; i < y.size(); ++i) {
            diff = std::max(diff, std::abs(y[i] - y_oracle[i]));
        }
        out.equivalence = std::max(out.equivalence, diff / (1.0 + y.sup_norm()));
        const Matrix op = oracle::assemble_operator(spec);
        for (std::size_t t = 0; t + 2 < op.rows(); ++t) {
            out.newest = std::max(out.newest, std::abs(op(t, t + 2) - (spec.alpha - 1.0)));
        }
    }
    return out;
}

double alpha_zero_reduction() {
    const ProblemSpec spec{1.5, 0.37, 0.0, 5};
    return max_abs_difference(build_kernel(spec).table(), atici_eloe_kernel(spec.upsilon, spec.b));
}

}  // namespace

ProblemSpec random_spec(std::mt19937_64& rng) {
    for (;;) {
        ProblemSpec spec;
        spec.upsilon = uniform(rng, 1.05, 1.95);
        spec.mu = uniform(rng, 0.05, 0.95);
        spec.alpha = uniform(rng, -0.9, 0.9);
        spec.b = std::uniform_int_distribution<int>(1, 8)(rng);
        if (std::abs(uniqueness_indicator(spec)) >= 1e-6) {
            return spec;
        }
    }
}

std::vector<CheckResult> run_verification(const VerifyOptions& opts) {
    std::mt19937_64 rng(opts.seed);
    std::vector<CheckResult> results;
    const auto record = [&](std::string name, double measured, double threshold) {
        const double limit = opts.tol.value_or(threshold);
        results.push_back({std::move(name), measured, limit, measured <= limit});
    };
    record("mittag_leffler_special_values", ml_special_values(), 1e-10);
    record("transform_of_power", power_transform(), 1e-6);
    record("convolution_lemma", convolution_lemma(rng), 1e-10);
    record("difference_lemma", difference_lemma(rng), 1e-10);
    record("falling_factorial_difference", falling_factorial_lemma(rng), 1e-10);
    const SweepMeasures s = sweep(rng, opts.sweeps);
    record("kernel_boundary_rows", s.boundary, 1e-12);
    record("kernel_vs_collocation", s.equivalence, 1e-8);
    record("collocation_newest_coefficient", s.newest, 1e-10);
    record("alpha_zero_reduction", alpha_zero_reduction(), 1e-10);
    return results;
}

}  // namespace fracgreen
