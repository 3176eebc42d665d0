#include "fracgreen/fracops.hpp"

#include "fracgreen/errors.hpp"
#include "fracgreen/special.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace fracgreen {

namespace {

// Index k of t in N_start, allowing k beyond any finite window.
long lattice_index(double t, double start) {
    const double shifted = t - start;
    const double r = std::round(shifted);
    if (std::abs(shifted - r) > kGridSnap || r < 0.0) {
        throw OffGridError("point " + std::to_string(t) + " is not in N_" + std::to_string(start));
    }
    return static_cast<long>(r);
}

double binomial(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
    }
    return r;
}

}  // namespace

FractionalOrder::FractionalOrder(double nu) : nu_(nu), ceiling_(0) {
    if (!(nu > 0.0) || !std::isfinite(nu)) {
        throw InputError("fractional order must be positive and finite");
    }
    const double r = std::round(nu);
    if (std::abs(nu - r) <= 1e-12) {
        nu_ = r;
        ceiling_ = static_cast<int>(r);
    } else {
        ceiling_ = static_cast<int>(std::ceil(nu));
    }
}

double fractional_sum_weight(double nu, long lag) {
    return special::falling_factorial(static_cast<double>(lag) + nu - 1.0, nu - 1.0) / special::gamma(nu);
}

GridFunction fractional_sum(const GridFunction& f, double nu) {
    if (!(nu > 0.0)) {
        throw InputError("fractional sum order must be positive");
    }
    const std::size_t n = f.size();
    std::vector<double> weights(n);
    for (std::size_t lag = 0; lag < n; ++lag) {
        weights[lag] = fractional_sum_weight(nu, static_cast<long>(lag));
    }
    std::vector<double> out(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        double acc = 0.0;
        for (std::size_t j = 0; j <= k; ++j) {
            acc += weights[k - j] * f[j];
        }
        out[k] = acc;
    }
    return GridFunction(Grid(f.grid().offset() + nu, n), std::move(out));
}

GridFunction forward_difference(const GridFunction& f, int order) {
    if (order < 1) {
        throw InputError("difference order must be >= 1");
    }
    if (f.size() <= static_cast<std::size_t>(order)) {
        throw TooShortError("difference of order " + std::to_string(order) + " needs more than " +
                            std::to_string(order) + " samples, got " + std::to_string(f.size()));
    }
    std::vector<double> v(f.values().begin(), f.values().end());
    for (int m = 0; m < order; ++m) {
        for (std::size_t k = 0; k + 1 < v.size(); ++k) {
            v[k] = v[k + 1] - v[k];
        }
        v.pop_back();
    }
    const Grid grid(f.grid().offset(), v.size());
    return GridFunction(grid, std::move(v));
}

GridFunction fractional_difference(const GridFunction& f, const FractionalOrder& order) {
    const int n = order.ceiling();
    if (order.is_integer()) {
        return forward_difference(f, n);
    }
    if (f.size() <= static_cast<std::size_t>(n)) {
        throw TooShortError("fractional difference of order " + std::to_string(order.nu()) +
                            " needs more than " + std::to_string(n) + " samples");
    }
    return forward_difference(fractional_sum(f, static_cast<double>(n) - order.nu()), n);
}

double fractional_sum_at(const GridFunction& f, double nu, double t) {
    const long k = lattice_index(t, f.grid().offset() + nu);
    const long last = std::min<long>(k, static_cast<long>(f.size()) - 1);
    double acc = 0.0;
    for (long j = 0; j <= last; ++j) {
        acc += fractional_sum_weight(nu, k - j) * f[static_cast<std::size_t>(j)];
    }
    return acc;
}

double fractional_difference_at(const GridFunction& f, const FractionalOrder& order, double t) {
    const int n = order.ceiling();
    double acc = 0.0;
    for (int i = 0; i <= n; ++i) {
        const double sign = ((n - i) % 2 == 0) ? 1.0 : -1.0;
        const double c = sign * binomial(n, i);
        const double tau = t + static_cast<double>(i);
        double inner = 0.0;
        if (order.is_integer()) {
            const long k = lattice_index(tau, f.grid().offset());
            inner = k < static_cast<long>(f.size()) ? f[static_cast<std::size_t>(k)] : 0.0;
        } else {
            inner = fractional_sum_at(f, static_cast<double>(n) - order.nu(), tau);
        }
        acc += c * inner;
    }
    return acc;
}

GridFunction convolve_shifted(const GridFunction& f, const GridFunction& g) {
    if (!(f.grid() == g.grid())) {
        throw GridMismatchError("convolution operands live on different grids");
    }
    const std::size_t n = f.size();
    std::vector<double> out(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        double acc = 0.0;
        for (std::size_t j = 0; j <= k; ++j) {
            acc += f[k - j] * g[j];
        }
        out[k] = acc;
    }
    return GridFunction(f.grid(), std::move(out));
}

}  // namespace fracgreen
