#pragma once

#include "fracgreen/grid.hpp"

#include <functional>

namespace fracgreen {

// Sequence f(t) on N_start, t = start, start+1, ...
struct SequenceGenerator {
    double start = 0.0;
    std::function<double(double)> term;

    // Zero extension of a finite window.
    static SequenceGenerator from(const GridFunction& f);
};

struct RTransformOptions {
    double tol = 1e-15;
    long max_terms = 1'000'000;
    int run_length = 20;  // consecutive small terms required to stop
};

// R_{t0}(f)(s) = sum_{t >= t0} (1/(s+1))^{t+1} f(t), s > 0.
// Throws NonConvergenceError when max_terms is reached with terms still large.
double r_transform(const SequenceGenerator& f, double s, const RTransformOptions& opts = {});

// |R(f *_{v-2} g) - (s+1)^{v-1} R(f) R(g)| for finitely supported f, g on N_{v-2}.
double verify_convolution_lemma(const GridFunction& f, const GridFunction& g, double s);

// Both sides of
//   R_0(D^mu_{mu-m} f)(s) = s^mu R_{mu-m}(f)(s) - sum_{k<m} s^{m-k-1} (D^k D^{-(m-mu)} f)(0)
// for f finitely supported on N_{mu-m}, m in {1, 2}, m-1 < mu < m. Returns |LHS - RHS|.
double verify_difference_lemma(const GridFunction& f, double mu, int m, double s);

}  // namespace fracgreen
