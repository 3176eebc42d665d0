#include "fracgreen/oracle.hpp"

#include "fracgreen/errors.hpp"
#include "fracgreen/fracops.hpp"
#include "fracgreen/mittag.hpp"
#include "fracgreen/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace fracgreen::oracle {

namespace {

constexpr double kPivotTolerance = 1e-12;

void require_forcing_grid(const ProblemSpec& spec, const GridFunction& h) {
    if (!(h.grid() == make_forcing_grid(spec))) {
        throw GridMismatchError("forcing must be sampled on the grid v-1, ..., v+b");
    }
}

}  // namespace

Matrix assemble_operator(const ProblemSpec& spec) {
    spec.validate();
    const Grid grid = make_solution_grid(spec);
    const std::size_t n = grid.count();
    const std::size_t equations = n - 2;
    const FractionalOrder main_order(spec.upsilon);
    const FractionalOrder lower_order(spec.mu);

    const Grid shifted(spec.upsilon - 1.0, n - 1);

    // Column k is the operator applied to the unit pulse at y(v-2+k).
    Matrix op(n, n);
    parallel_for(n, [&](std::size_t col) {
        std::vector<double> pulse(n, 0.0);
        pulse[col] = 1.0;
        // D^v y lives on N_0 with n-2 samples: entry t is the equation at t.
        const GridFunction main_part = fractional_difference(GridFunction(grid, pulse), main_order);
        for (std::size_t t = 0; t < equations; ++t) {
            op(t, col) = -main_part[t];
        }
        if (col == 0) {
            return;
        }
        // D^mu acts on y restricted to N_{v-1}; it lives on N_{v-mu}, so entry t is t+v-mu.
        std::vector<double> tail(pulse.begin() + 1, pulse.end());
        const GridFunction lower_part = fractional_difference(GridFunction(shifted, std::move(tail)), lower_order);
        for (std::size_t t = 0; t < equations; ++t) {
            op(t, col) += spec.alpha * lower_part[t];
        }
    });
    op(equations, 0) = 1.0;
    op(equations + 1, n - 1) = 1.0;
    return op;
}

CollocationSystem assemble(const ProblemSpec& spec, const GridFunction& h) {
    spec.validate();
    require_forcing_grid(spec, h);
    CollocationSystem system{spec, assemble_operator(spec), {}};
    system.rhs.assign(h.values().begin(), h.values().end());
    system.rhs.push_back(0.0);
    system.rhs.push_back(0.0);
    return system;
}

GridFunction solve_collocation(const ProblemSpec& spec, const GridFunction& h) {
    const CollocationSystem system = assemble(spec, h);
    try {
        const LuDecomposition lu(system.matrix, kPivotTolerance);
        return GridFunction(make_solution_grid(spec), lu.solve(system.rhs));
    } catch (const SingularMatrixError& err) {
        std::ostringstream msg;
        msg << err.what() << "; uniqueness indicator e_{v-mu,v}(alpha, b+2) = "
            << ml({spec.upsilon - spec.mu, spec.upsilon, spec.alpha}, spec.b + 2, 1e-14, 1'000'000);
        throw SingularMatrixError(msg.str());
    }
}

double residual(const Matrix& op, const GridFunction& y, const GridFunction& h) {
    if (y.size() != op.cols() || h.size() + 2 != op.rows()) {
        throw GridMismatchError("residual operands do not match the collocation system");
    }
    const std::vector<double> applied = op.multiply(y.values());
    double worst = 0.0;
    for (std::size_t t = 0; t < h.size(); ++t) {
        worst = std::max(worst, std::abs(applied[t] - h[t]));
    }
    worst = std::max(worst, std::abs(applied[h.size()]));
    worst = std::max(worst, std::abs(applied[h.size() + 1]));
    return worst;
}

double residual(const ProblemSpec& spec, const GridFunction& y, const GridFunction& h) {
    require_forcing_grid(spec, h);
    if (!(y.grid() == make_solution_grid(spec))) {
        throw GridMismatchError("solution must be sampled on the grid v-2, ..., v+b+1");
    }
    return residual(assemble_operator(spec), y, h);
}

double collocation_determinant(const ProblemSpec& spec) {
    return determinant(assemble_operator(spec));
}

void write_matrix_csv(std::ostream& out, const CollocationSystem& system) {
    const auto old_flags = out.flags();
    const auto old_precision = out.precision();
    out.imbue(std::locale::classic());
    out << std::setprecision(12);
    for (std::size_t i = 0; i < system.matrix.rows(); ++i) {
        for (std::size_t j = 0; j < system.matrix.cols(); ++j) {
            out << system.matrix(i, j) << ',';
        }
        out << system.rhs[i] << '\n';
    }
    out.flags(old_flags);
    out.precision(old_precision);
}

}  // namespace fracgreen::oracle
