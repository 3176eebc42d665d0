#pragma once

#include "fracgreen/green.hpp"
#include "fracgreen/grid.hpp"
#include "fracgreen/problem.hpp"

#include <functional>
#include <string>

namespace fracgreen {

// f(t, r) with t a forcing-grid point (the value t+v-1 of the equation).
struct NonlinearRHS {
    std::function<double(double, double)> eval;
    std::string descriptor;

    double operator()(double t, double r) const { return eval(t, r); }
};

enum class SolveMethod { picard, newton };

const char* to_string(SolveMethod method);

struct SolveOptions {
    double tol = 1e-10;
    int max_iter = 10'000;
    double damping = 0.5;  // Picard only, in (0, 1]
    // Converged outcomes also need residual <= residual_tol * (1 + max_s |f(s, y(s))|).
    double residual_tol = 1e-7;
};

struct SolveOutcome {
    GridFunction y;
    int iterations = 0;
    SolveMethod method = SolveMethod::picard;
    double residual = 0.0;
    bool converged = false;
    bool nontrivial = false;  // f(t, 0) != 0 somewhere and ||y|| > tol
};

// (F y)(t) = sum_s G(t,s) f(s, y(s)). Throws NonFiniteError on NaN/inf from f.
GridFunction apply_F(const GreenKernel& kernel, const NonlinearRHS& f, const GridFunction& y);

// h(s) = f(s, y(s)) on the forcing grid.
GridFunction evaluate_rhs(const ProblemSpec& spec, const NonlinearRHS& f, const GridFunction& y);

// y <- (1 - damping) y + damping F(y) until ||change|| < tol.
// Throws DivergenceError when ||y|| exceeds 1e12.
SolveOutcome solve_picard(const GreenKernel& kernel, const NonlinearRHS& f, const GridFunction& y0,
                          const SolveOptions& opts = {});

// Damped Newton on the collocation system M y = [f(s, y(s)); 0; 0].
// Throws SingularMatrixError for a singular Jacobian and StagnationError when
// 30 step halvings fail to reduce the residual.
SolveOutcome solve_newton(const ProblemSpec& spec, const NonlinearRHS& f, const GridFunction& y0,
                          const SolveOptions& opts = {});

}  // namespace fracgreen
