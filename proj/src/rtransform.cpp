#include "fracgreen/rtransform.hpp"

#include "fracgreen/errors.hpp"
#include "fracgreen/fracops.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace fracgreen {

SequenceGenerator SequenceGenerator::from(const GridFunction& f) {
    // Copy so the generator does not dangle.
    return {f.grid().offset(), [f](double t) {
                const double shifted = t - f.grid().offset();
                const auto k = static_cast<long>(std::lround(shifted));
                if (k < 0 || k >= static_cast<long>(f.size())) {
                    return 0.0;
                }
                return f[static_cast<std::size_t>(k)];
            }};
}

double r_transform(const SequenceGenerator& f, double s, const RTransformOptions& opts) {
    if (!(s > 0.0)) {
        throw InputError("R-transform needs s > 0");
    }
    if (!(opts.tol > 0.0)) {
        throw InputError("R-transform tolerance must be positive");
    }
    const double log_decay = std::log1p(s);
    double partial = 0.0;
    int small_run = 0;
    for (long n = 0; n < opts.max_terms; ++n) {
        const double t = f.start + static_cast<double>(n);
        const double value = f.term(t);
        const double term = value == 0.0 ? 0.0 : std::exp(-(t + 1.0) * log_decay) * value;
        partial += term;
        if (std::abs(term) <= opts.tol * std::max(1.0, std::abs(partial))) {
            if (++small_run >= opts.run_length) {
                return partial;
            }
        } else {
            small_run = 0;
        }
    }
    throw NonConvergenceError("R-transform did not converge within " + std::to_string(opts.max_terms) +
                              " terms at s = " + std::to_string(s));
}

namespace {

// Exact finite sum for a window; no truncation involved.
double finite_r_transform(const GridFunction& f, double s) {
    const double log_decay = std::log1p(s);
    double acc = 0.0;
    for (std::size_t k = 0; k < f.size(); ++k) {
        const double t = f.grid().point(k);
        acc += std::exp(-(t + 1.0) * log_decay) * f[k];
    }
    return acc;
}

GridFunction zero_extend(const GridFunction& f, std::size_t count) {
    std::vector<double> v(count, 0.0);
    std::copy(f.values().begin(), f.values().end(), v.begin());
    return GridFunction(Grid(f.grid().offset(), count), std::move(v));
}

}  // namespace

double verify_convolution_lemma(const GridFunction& f, const GridFunction& g, double s) {
    if (!(f.grid() == g.grid())) {
        throw GridMismatchError("convolution lemma operands live on different grids");
    }
    if (!(s > 0.0)) {
        throw InputError("R-transform needs s > 0");
    }
    // The convolution of two n-point windows is supported on 2n-1 points.
    const std::size_t n = 2 * f.size() - 1;
    const GridFunction conv = convolve_shifted(zero_extend(f, n), zero_extend(g, n));
    const double lhs = finite_r_transform(conv, s);
    // Base point a = v-2, so (s+1)^{a+1} = (s+1)^{v-1}.
    const double base = f.grid().offset();
    const double rhs = std::pow(1.0 + s, base + 1.0) * finite_r_transform(f, s) * finite_r_transform(g, s);
    return std::abs(lhs - rhs);
}

double verify_difference_lemma(const GridFunction& f, double mu, int m, double s) {
    if (m != 1 && m != 2) {
        throw InputError("difference lemma is checked for m in {1, 2}");
    }
    if (!(mu > m - 1 && mu < m)) {
        throw InputError("difference lemma needs m-1 < mu < m");
    }
    if (!(s > 0.0)) {
        throw InputError("R-transform needs s > 0");
    }
    if (std::abs(f.grid().offset() - (mu - m)) > kGridSnap) {
        throw GridMismatchError("difference lemma operand must live on N_{mu-m}");
    }
    const FractionalOrder order(mu);
    const SequenceGenerator diff{0.0, [&](double t) { return fractional_difference_at(f, order, t); }};
    const double lhs = r_transform(diff, s, {.tol = 1e-17});

    double boundary = 0.0;
    const double sum_order = static_cast<double>(m) - mu;
    for (int k = 0; k < m; ++k) {
        // (D^k D^{-(m-mu)} f)(0) with D^{-(m-mu)} f living on N_0; k <= 1 here.
        double value = fractional_sum_at(f, sum_order, static_cast<double>(k));
        if (k == 1) {
            value -= fractional_sum_at(f, sum_order, 0.0);
        }
        boundary += std::pow(s, m - k - 1) * value;
    }
    const double rhs = std::pow(s, mu) * finite_r_transform(f, s) - boundary;
    return std::abs(lhs - rhs);
}

}  // namespace fracgreen
