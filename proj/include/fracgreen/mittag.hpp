#pragma once

#include "fracgreen/special.hpp"

#include <vector>

namespace fracgreen {

// Parameters of the delta discrete Mittag-Leffler function
//   e_{order,beta}(lambda, x) = sum_k lambda^k (x + k*order + beta - 1)^(k*order + beta - 1) / Gamma(k*order + beta).
struct MittagLefflerParams {
    double order = 1.0;  // > 0
    double beta = 1.0;
    double lambda = 0.0;  // |lambda| < 1

    // DivergenceError for |lambda| >= 1, InputError for order <= 0.
    void validate() const;
};

struct MittagLefflerOptions {
    double tol = 1e-12;
    long kmax = 500;
    int run_length = 10;
};

// Tolerance used when the series feeds the Green's kernel, where products of
// values as large as 1e13 cancel down to O(1).
inline constexpr MittagLefflerOptions kKernelSeriesOptions{1e-30, 1'000'000, 10};

// x is an integer >= -1; e(lambda, -1) = 0 exactly.
double ml(const MittagLefflerParams& params, long x, double tol = 1e-12, long kmax = 500);

// Element j equals ml(params, x_min + j, tol, kmax).
std::vector<double> ml_profile(const MittagLefflerParams& params, long x_min, long x_max, double tol = 1e-12,
                               long kmax = 500);

special::wide::real ml_wide(const MittagLefflerParams& params, long x, const MittagLefflerOptions& opts);
std::vector<special::wide::real> ml_profile_wide(const MittagLefflerParams& params, long x_min, long x_max,
                                                 const MittagLefflerOptions& opts);

}  // namespace fracgreen
