#include "fracgreen/existence.hpp"

#include "fracgreen/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace fracgreen {

double compute_d(const Matrix& table) {
    double worst = 0.0;
    for (std::size_t i = 0; i < table.rows(); ++i) {
        double row_sum = 0.0;
        for (double v : table.row(i)) {
            row_sum += std::abs(v);
        }
        worst = std::max(worst, row_sum);
    }
    if (!(worst > 0.0)) {
        throw InputError("kernel is identically zero; d is undefined");
    }
    return 1.0 / worst;
}

double compute_d(const GreenKernel& kernel) { return compute_d(kernel.table()); }

bool check_kz(const GreenKernel& kernel, double m) { return std::abs(m) < compute_d(kernel); }

double weighted_bound(const Matrix& table, const GridFunction& g) {
    if (g.size() != table.cols()) {
        throw GridMismatchError("weight g must be sampled on the forcing grid");
    }
    for (double v : g.values()) {
        if (v < 0.0) {
            throw NegativeWeightError("weight g must be nonnegative");
        }
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < table.rows(); ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < table.cols(); ++j) {
            acc += g[j] * std::abs(table(i, j));
        }
        worst = std::max(worst, acc);
    }
    return worst;
}

double weighted_bound(const GreenKernel& kernel, const GridFunction& g) {
    if (!(g.grid() == kernel.forcing_grid())) {
        throw GridMismatchError("weight g must be sampled on the forcing grid");
    }
    return weighted_bound(kernel.table(), g);
}

std::optional<double> minimal_L(double M, const std::function<double(double)>& psi, const MinimalLOptions& opts) {
    if (!(M > 0.0)) {
        throw InputError("minimal_L needs M > 0");
    }
    const auto passes = [&](double L) { return L > psi(L) * M; };
    const int steps = static_cast<int>(std::lround((opts.log10_max - opts.log10_min) * opts.points_per_decade));
    double previous = 0.0;
    for (int i = 0; i <= steps; ++i) {
        const double L = std::pow(10.0, opts.log10_min + static_cast<double>(i) / opts.points_per_decade);
        if (!passes(L)) {
            previous = L;
            continue;
        }
        if (i == 0) {
            // Crossing lies below the scan range; minimal over the scan grid.
            return L;
        }
        double lo = previous;
        double hi = L;
        while ((hi - lo) > opts.rel_width * hi) {
            const double mid = 0.5 * (lo + hi);
            if (passes(mid)) {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        return hi;
    }
    return std::nullopt;
}

SlopeProbe probe_slope(const Grid& forcing, const std::function<double(double, double)>& f) {
    SlopeProbe probe{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
    for (std::size_t k = 0; k < forcing.count(); ++k) {
        for (double r : {1e4, 1e6, 1e8, -1e4, -1e6, -1e8}) {
            const double ratio = f(forcing.point(k), r) / r;
            probe.min_ratio = std::min(probe.min_ratio, ratio);
            probe.max_ratio = std::max(probe.max_ratio, ratio);
        }
    }
    return probe;
}

}  // namespace fracgreen
