#include "fracgreen/solver.hpp"

#include "fracgreen/errors.hpp"
#include "fracgreen/matrix.hpp"
#include "fracgreen/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

namespace fracgreen {

namespace {

constexpr double kDivergenceBound = 1e12;
constexpr int kMaxHalvings = 30;
constexpr double kFirstLambda = 1.0 / 64.0;
constexpr double kLambdaGrowth = 1.5;
constexpr double kMinLambdaStep = 1e-6;

double checked(double value, double t, double r) {
    if (!std::isfinite(value)) {
        std::ostringstream msg;
        msg << "nonlinearity returned a non-finite value at (t, r) = (" << t << ", " << r << ")";
        throw NonFiniteError(msg.str());
    }
    return value;
}

double euclid(std::span<const double> v) {
    double acc = 0.0;
    for (double x : v) {
        acc += x * x;
    }
    return std::sqrt(acc);
}

double sup(std::span<const double> v) {
    double m = 0.0;
    for (double x : v) {
        m = std::max(m, std::abs(x));
    }
    return m;
}

void require_solution_grid(const ProblemSpec& spec, const GridFunction& y) {
    if (!(y.grid() == make_solution_grid(spec))) {
        throw GridMismatchError("iterate must be sampled on the grid v-2, ..., v+b+1");
    }
}

bool forcing_at_zero_nonzero(const ProblemSpec& spec, const NonlinearRHS& f) {
    const Grid forcing = make_forcing_grid(spec);
    for (std::size_t k = 0; k < forcing.count(); ++k) {
        if (f(forcing.point(k), 0.0) != 0.0) {
            return true;
        }
    }
    return false;
}

void finish(SolveOutcome& outcome, const ProblemSpec& spec, const NonlinearRHS& f, const SolveOptions& opts,
            bool step_converged) {
    const GridFunction h = evaluate_rhs(spec, f, outcome.y);
    outcome.residual = oracle::residual(spec, outcome.y, h);
    outcome.converged = step_converged && outcome.residual <= opts.residual_tol * (1.0 + h.sup_norm());
    outcome.nontrivial = forcing_at_zero_nonzero(spec, f) && outcome.y.sup_norm() > opts.tol;
}

}  // namespace

const char* to_string(SolveMethod method) {
    return method == SolveMethod::picard ? "picard" : "newton";
}

GridFunction evaluate_rhs(const ProblemSpec& spec, const NonlinearRHS& f, const GridFunction& y) {
    require_solution_grid(spec, y);
    const Grid forcing = make_forcing_grid(spec);
    std::vector<double> h(forcing.count());
    for (std::size_t j = 0; j < h.size(); ++j) {
        // Forcing point s = v-1+j is solution index j+1.
        const double s = forcing.point(j);
        h[j] = checked(f(s, y[j + 1]), s, y[j + 1]);
    }
    return GridFunction(forcing, std::move(h));
}

GridFunction apply_F(const GreenKernel& kernel, const NonlinearRHS& f, const GridFunction& y) {
    return solve_linear(kernel, evaluate_rhs(kernel.spec(), f, y));
}

SolveOutcome solve_picard(const GreenKernel& kernel, const NonlinearRHS& f, const GridFunction& y0,
                          const SolveOptions& opts) {
    if (!(opts.tol > 0.0)) {
        throw InputError("solver tolerance must be positive");
    }
    if (!(opts.damping > 0.0 && opts.damping <= 1.0)) {
        throw InputError("damping must lie in (0, 1]");
    }
    const ProblemSpec& spec = kernel.spec();
    require_solution_grid(spec, y0);
    std::vector<double> y(y0.values().begin(), y0.values().end());
    const Grid grid = y0.grid();
    SolveOutcome outcome{y0, 0, SolveMethod::picard, 0.0, false, false};
    bool settled = false;
    for (int it = 1; it <= opts.max_iter; ++it) {
        const GridFunction fy = apply_F(kernel, f, GridFunction(grid, y));
        double change = 0.0;
        for (std::size_t k = 0; k < y.size(); ++k) {
            const double next = (1.0 - opts.damping) * y[k] + opts.damping * fy[k];
            change = std::max(change, std::abs(next - y[k]));
            y[k] = next;
        }
        outcome.iterations = it;
        if (!(sup(y) <= kDivergenceBound)) {
            throw DivergenceError("Picard iteration diverged: ||y|| exceeded 1e12 at iteration " +
                                  std::to_string(it));
        }
        if (change < opts.tol) {
            settled = true;
            break;
        }
    }
    outcome.y = GridFunction(grid, y);
    finish(outcome, spec, f, opts, settled);
    return outcome;
}

namespace {

SolveOutcome newton_plain(const ProblemSpec& spec, const NonlinearRHS& f, const GridFunction& y0,
                          const SolveOptions& opts) {
    if (!(opts.tol > 0.0)) {
        throw InputError("solver tolerance must be positive");
    }
    spec.validate();
    require_solution_grid(spec, y0);
    const Matrix op = oracle::assemble_operator(spec);
    const Grid grid = y0.grid();
    const Grid forcing = make_forcing_grid(spec);
    const std::size_t n = grid.count();
    const std::size_t equations = forcing.count();

    const auto residual_vector = [&](const std::vector<double>& y) {
        std::vector<double> r = op.multiply(y);
        for (std::size_t t = 0; t < equations; ++t) {
            const double s = forcing.point(t);
            r[t] -= checked(f(s, y[t + 1]), s, y[t + 1]);
        }
        return r;
    };

    std::vector<double> y(y0.values().begin(), y0.values().end());
    std::vector<double> r = residual_vector(y);
    SolveOutcome outcome{y0, 0, SolveMethod::newton, 0.0, false, false};
    bool settled = false;
    for (int it = 1; it <= opts.max_iter; ++it) {
        // Jacobian: operator minus d f / d r on the diagonal band (row t, unknown t+1).
        Matrix jac = op;
        for (std::size_t t = 0; t < equations; ++t) {
            const double s = forcing.point(t);
            const double r0 = y[t + 1];
            const double step = 1e-6 * (1.0 + std::abs(r0));
            const double slope = (checked(f(s, r0 + step), s, r0 + step) - checked(f(s, r0 - step), s, r0 - step)) /
                                 (2.0 * step);
            jac(t, t + 1) -= slope;
        }
        std::vector<double> delta;
        try {
            delta = LuDecomposition(std::move(jac)).solve(r);
        } catch (const SingularMatrixError& err) {
            throw SingularMatrixError(std::string("Newton Jacobian is singular: ") + err.what());
        }

        const double r_norm = euclid(r);
        double scale = 1.0;
        std::vector<double> trial(n);
        std::vector<double> r_trial;
        bool improved = false;
        for (int halving = 0; halving <= kMaxHalvings; ++halving) {
            for (std::size_t k = 0; k < n; ++k) {
                trial[k] = y[k] - scale * delta[k];
            }
            r_trial = residual_vector(trial);
            if (euclid(r_trial) < r_norm || euclid(r_trial) == 0.0) {
                improved = true;
                break;
            }
            scale *= 0.5;
        }
        outcome.iterations = it;
        const double step_norm = scale * sup(delta);
        if (!improved) {
            // Already at the rounding floor: the full step no longer changes anything visible.
            if (sup(delta) <= opts.tol * (1.0 + sup(y))) {
                settled = true;
                break;
            }
            throw StagnationError("Newton step halving failed to reduce the residual at iteration " +
                                  std::to_string(it));
        }
        y = trial;
        r = std::move(r_trial);
        if (sup(r) <= opts.tol || step_norm <= opts.tol * (1.0 + sup(y))) {
            settled = true;
            break;
        }
    }
    outcome.y = GridFunction(grid, y);
    finish(outcome, spec, f, opts, settled);
    return outcome;
}

}  // namespace

SolveOutcome solve_newton(const ProblemSpec& spec, const NonlinearRHS& f, const GridFunction& y0,
                          const SolveOptions& opts) {
    try {
        return newton_plain(spec, f, y0, opts);
    } catch (const StagnationError&) {
    } catch (const SingularMatrixError&) {
    }

    // Plain Newton got trapped (typically near a singular Jacobian). Follow
    // the solution branch of lambda*f from lambda small up to 1 instead.
    GridFunction y = y0;
    double done = 0.0;
    double lambda = kFirstLambda;
    int iterations = 0;
    while (true) {
        const NonlinearRHS scaled{[&f, lambda](double t, double r) { return lambda * f(t, r); }, f.descriptor};
        try {
            SolveOutcome stage = newton_plain(spec, lambda == 1.0 ? f : scaled, y, opts);
            iterations += stage.iterations;
            y = stage.y;
            done = lambda;
            if (lambda == 1.0) {
                stage.iterations = iterations;
                return stage;
            }
            lambda = std::min(1.0, lambda * kLambdaGrowth);
            continue;
        } catch (const StagnationError&) {
        } catch (const SingularMatrixError&) {
        }
        lambda = 0.5 * (done + lambda);
        if (lambda - done < kMinLambdaStep) {
            throw StagnationError("Newton continuation stalled at lambda = " + std::to_string(done));
        }
    }
}

}  // namespace fracgreen
