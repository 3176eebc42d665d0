#pragma once

#include "fracgreen/green.hpp"
#include "fracgreen/grid.hpp"
#include "fracgreen/matrix.hpp"

#include <functional>
#include <optional>

namespace fracgreen {

// Verdicts of the two existence tests for the nonlinear problem.
struct ExistenceReport {
    double d = 0.0;
    double m = 0.0;
    bool kz_pass = false;
    double M = 0.0;
    std::optional<double> minimal_L;
    bool ls_pass = false;
};

// d = 1 / max_t sum_s |G(t,s)|.
double compute_d(const Matrix& table);
double compute_d(const GreenKernel& kernel);

// Slope test |m| < d (strict).
bool check_kz(const GreenKernel& kernel, double m);

// M = max_t sum_s g(s) |G(t,s)|, g >= 0 sampled on the forcing grid.
double weighted_bound(const Matrix& table, const GridFunction& g);
double weighted_bound(const GreenKernel& kernel, const GridFunction& g);

struct MinimalLOptions {
    double log10_min = -3.0;
    double log10_max = 12.0;
    int points_per_decade = 200;
    double rel_width = 1e-6;
};

// First L on a log-spaced scan with L > psi(L) * M, refined by bisection on
// the bracketing interval; nullopt when no scan point passes. The returned
// value is the upper end of the final bracket, so it satisfies the strict
// inequality itself.
std::optional<double> minimal_L(double M, const std::function<double(double)>& psi,
                                const MinimalLOptions& opts = {});

// f(t, r)/r sampled at |r| in {1e4, 1e6, 1e8} on every forcing point. Reports
// the observed spread only; the asymptotic slope m is always user supplied.
struct SlopeProbe {
    double min_ratio = 0.0;
    double max_ratio = 0.0;
};
SlopeProbe probe_slope(const Grid& forcing, const std::function<double(double, double)>& f);

}  // namespace fracgreen
