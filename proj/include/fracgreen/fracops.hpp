#pragma once

#include "fracgreen/grid.hpp"

namespace fracgreen {

// Order nu > 0 together with N = ceil(nu), N-1 < nu <= N.
class FractionalOrder {
public:
    explicit FractionalOrder(double nu);

    double nu() const noexcept { return nu_; }
    int ceiling() const noexcept { return ceiling_; }
    bool is_integer() const noexcept { return nu_ == static_cast<double>(ceiling_); }

private:
    double nu_;
    int ceiling_;
};

// Weight (k + nu - 1)^(nu-1) / Gamma(nu) attached to f(a+j) in the nu-th sum
// evaluated at a+nu+j+k. Shared by every discretization of the operators.
double fractional_sum_weight(double nu, long lag);

// Discrete Riemann-Liouville sum:
//   D^{-nu} f(t) = 1/Gamma(nu) sum_{s=a}^{t-nu} (t-s-1)^(nu-1) f(s),  t in N_{a+nu}.
// Output has the same number of samples as f.
GridFunction fractional_sum(const GridFunction& f, double nu);

// g(t) = f(t+1) - f(t), iterated `order` times; the grid offset is kept.
GridFunction forward_difference(const GridFunction& f, int order);

// D^nu f = D^N D^{nu-N} f on N_{a+N-nu}, f.count - N samples.
GridFunction fractional_difference(const GridFunction& f, const FractionalOrder& order);

// Pointwise forms treating f as zero beyond its window. `t` must lie in
// N_{a+nu} (resp. N_{a+N-nu}), and may be past the end of f's window.
double fractional_sum_at(const GridFunction& f, double nu, double t);
double fractional_difference_at(const GridFunction& f, const FractionalOrder& order, double t);

// (f *_{a} g)(t) = sum_{s=a}^{t} f(t-s+a) g(s) for f, g on the same N_a window.
GridFunction convolve_shifted(const GridFunction& f, const GridFunction& g);

}  // namespace fracgreen
