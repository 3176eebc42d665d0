#include "fracgreen/mittag.hpp"

#include "fracgreen/errors.hpp"
#include "fracgreen/parallel.hpp"

#include <cmath>
#include <sstream>

extern "C" {
#include <quadmath.h>
}

namespace fracgreen {

namespace {

using wide_real = special::wide::real;

// lambda^k (x+c-1)^(c-1) / Gamma(c) with c = k*order + beta, i.e.
// lambda^k Gamma(x+c) / (Gamma(x+1) Gamma(c)).
wide_real series_term(const MittagLefflerParams& p, long k, long x) {
    const wide_real lambda = p.lambda;
    if (k > 0 && p.lambda == 0.0) {
        return 0;
    }
    const wide_real c = static_cast<wide_real>(k) * static_cast<wide_real>(p.order) + static_cast<wide_real>(p.beta);
    const wide_real lambda_pow = k == 0 ? wide_real(1) : powq(lambda, static_cast<wide_real>(k));
    if (special::wide::is_nonpositive_integer(c)) {
        // 1/Gamma(c) vanishes; Gamma(x+c)/Gamma(c) is the rising factorial c(c+1)...(c+x-1).
        wide_real r = 1;
        for (long j = 0; j < x; ++j) {
            r *= (c + static_cast<wide_real>(j)) / static_cast<wide_real>(j + 1);
        }
        return lambda_pow * r;
    }
    const auto top = special::wide::log_gamma_signed(static_cast<wide_real>(x) + c);
    const auto bottom = special::wide::log_gamma_signed(c);
    const wide_real log_mag = top.log_magnitude - lgammaq(static_cast<wide_real>(x + 1)) - bottom.log_magnitude;
    return lambda_pow * static_cast<wide_real>(top.sign * bottom.sign) * expq(log_mag);
}

}  // namespace

void MittagLefflerParams::validate() const {
    if (!(std::abs(lambda) < 1.0)) {
        std::ostringstream msg;
        msg << "Mittag-Leffler series diverges or is undefined for |lambda| >= 1 (lambda = " << lambda << ")";
        throw DivergenceError(msg.str());
    }
    if (!(order > 0.0) || !std::isfinite(order) || !std::isfinite(beta)) {
        throw InputError("Mittag-Leffler order must be positive and beta finite");
    }
}

wide_real ml_wide(const MittagLefflerParams& params, long x, const MittagLefflerOptions& opts) {
    params.validate();
    if (x < -1) {
        throw InputError("Mittag-Leffler argument must be an integer >= -1");
    }
    if (x == -1) {
        // Every term carries (c-2)^(c-1) = Gamma(c-1)/Gamma(0) = 0.
        return 0;
    }
    const wide_real tol = opts.tol;
    const wide_real abs_lambda = fabsq(static_cast<wide_real>(params.lambda));
    wide_real partial = 0;
    wide_real previous = 0;
    int small_run = 0;
    for (long k = 0; k < opts.kmax; ++k) {
        const wide_real term = series_term(params, k, x);
        partial += term;
        const wide_real scale = fabsq(partial) > 1 ? fabsq(partial) : wide_real(1);
        // Tail after this term ~ |term| r / (1 - r), r the local decay ratio (never below |lambda|).
        bool small = term == 0;
        if (!small && previous != 0) {
            wide_real r = fabsq(term / previous);
            r = r > abs_lambda ? r : abs_lambda;
            small = r < 1 && fabsq(term) * r <= tol * scale * (1 - r);
        }
        previous = term;
        if (small) {
            if (++small_run >= opts.run_length) {
                return partial;
            }
        } else {
            small_run = 0;
        }
    }
    std::ostringstream msg;
    msg << "Mittag-Leffler series (order " << params.order << ", beta " << params.beta << ", lambda "
        << params.lambda << ", x " << x << ") not converged after " << opts.kmax << " terms";
    throw NonConvergenceError(msg.str());
}

std::vector<wide_real> ml_profile_wide(const MittagLefflerParams& params, long x_min, long x_max,
                                       const MittagLefflerOptions& opts) {
    params.validate();
    if (x_min < -1 || x_max < x_min) {
        throw InputError("Mittag-Leffler profile needs -1 <= x_min <= x_max");
    }
    std::vector<wide_real> out(static_cast<std::size_t>(x_max - x_min + 1));
    parallel_for(out.size(), [&](std::size_t j) { out[j] = ml_wide(params, x_min + static_cast<long>(j), opts); });
    return out;
}

double ml(const MittagLefflerParams& params, long x, double tol, long kmax) {
    return special::wide::to_double(ml_wide(params, x, {tol, kmax, 10}));
}

std::vector<double> ml_profile(const MittagLefflerParams& params, long x_min, long x_max, double tol, long kmax) {
    const auto w = ml_profile_wide(params, x_min, x_max, {tol, kmax, 10});
    std::vector<double> out;
    out.reserve(w.size());
    for (const auto& v : w) {
        out.push_back(special::wide::to_double(v));
    }
    return out;
}

}  // namespace fracgreen
