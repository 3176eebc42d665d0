#pragma once

#include "fracgreen/grid.hpp"

namespace fracgreen {

// One instance of
//   -D^v y(t) + alpha D^mu y(t+v-mu) = h(t+v-1),  t = 0..b+1,
//   y(v-2) = y(v+b+1) = 0.
struct ProblemSpec {
    double upsilon = 1.5;  // 1 < upsilon < 2
    double mu = 0.5;       // 0 < mu < 1
    double alpha = 0.0;    // |alpha| < 1
    int b = 1;             // b >= 1

    // Throws InvalidSpecError when a bound is violated.
    void validate() const;
};

// Points v-2, ..., v+b+1 where y lives.
Grid make_solution_grid(const ProblemSpec& spec);
// Points v-1, ..., v+b where h (or f(., y)) is sampled.
Grid make_forcing_grid(const ProblemSpec& spec);

}  // namespace fracgreen
