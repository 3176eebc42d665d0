#pragma once

#include "fracgreen/grid.hpp"
#include "fracgreen/matrix.hpp"
#include "fracgreen/problem.hpp"

namespace fracgreen {

// Problems whose |e_{v-mu,v}(alpha, b+2)| falls below this are rejected as singular.
inline constexpr double kSingularDenominator = 1e-10;

// Green's kernel G(t, s) on [v-2, v+b+1] x [v-1, v+b]. Row i is t = v-2+i,
// column j is s = v-1+j. The linear problem is solved by y(t) = sum_s G(t,s) h(s).
class GreenKernel {
public:
    GreenKernel(ProblemSpec spec, Matrix table, double denominator);

    const ProblemSpec& spec() const noexcept { return spec_; }
    const Matrix& table() const noexcept { return table_; }
    double denominator() const noexcept { return denominator_; }

    Grid solution_grid() const { return make_solution_grid(spec_); }
    Grid forcing_grid() const { return make_forcing_grid(spec_); }

    double operator()(std::size_t row, std::size_t col) const noexcept { return table_(row, col); }
    // Lookup by grid points; throws OffGridError for points outside the tables.
    double at(double t, double s) const;

private:
    ProblemSpec spec_;
    Matrix table_;
    double denominator_;
};

// e_{v-mu,v}(alpha, b+2). The problem has a unique solution iff this is nonzero.
double uniqueness_indicator(const ProblemSpec& spec);

// Throws SingularProblemError when |uniqueness_indicator| <= kSingularDenominator.
GreenKernel build_kernel(const ProblemSpec& spec);

// Closed-form kernel of the alpha = 0 problem on the same index ranges.
Matrix atici_eloe_kernel(double upsilon, int b);

// A = y(v-2), B = (1-v) y(v-2) + y(v-1).
struct IVPState {
    double A = 0.0;
    double B = 0.0;
};

// The state that, fed to ivp_solution, satisfies both Dirichlet conditions.
IVPState dirichlet_state(const ProblemSpec& spec, const GridFunction& h);

// General solution of the equation on the solution grid for prescribed A, B.
GridFunction ivp_solution(const ProblemSpec& spec, const IVPState& state, const GridFunction& h);

GridFunction solve_linear(const GreenKernel& kernel, const GridFunction& h);
GridFunction solve_linear(const ProblemSpec& spec, const GridFunction& h);

}  // namespace fracgreen
