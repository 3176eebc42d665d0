#pragma once

#include "fracgreen/grid.hpp"
#include "fracgreen/matrix.hpp"
#include "fracgreen/problem.hpp"

#include <iosfwd>
#include <vector>

// Brute-force discretization of the boundary value problem. Shares only the
// fractional-sum weights with the analytic kernel in green.hpp.
namespace fracgreen::oracle {

// Rows 0..b+1: equation at t = 0..b+1. Rows b+2 and b+3: y(v-2) = 0 and
// y(v+b+1) = 0. Column k is the unknown y(v-2+k).
struct CollocationSystem {
    ProblemSpec spec;
    Matrix matrix;
    std::vector<double> rhs;
};

// Operator matrix only (Dirichlet rows included), independent of h.
Matrix assemble_operator(const ProblemSpec& spec);

CollocationSystem assemble(const ProblemSpec& spec, const GridFunction& h);

// Gaussian elimination with partial pivoting, pivot threshold 1e-12.
// Throws SingularMatrixError, with the uniqueness indicator in the message.
GridFunction solve_collocation(const ProblemSpec& spec, const GridFunction& h);

// max_t |-D^v y(t) + alpha D^mu y(t+v-mu) - h(t+v-1)|, folded with |y(v-2)| and |y(v+b+1)|.
double residual(const ProblemSpec& spec, const GridFunction& y, const GridFunction& h);
double residual(const Matrix& op, const GridFunction& y, const GridFunction& h);

double collocation_determinant(const ProblemSpec& spec);

void write_matrix_csv(std::ostream& out, const CollocationSystem& system);

}  // namespace fracgreen::oracle
