#pragma once

#include "fracgreen/problem.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace fracgreen {

struct VerifyOptions {
    std::uint64_t seed = 1;
    int sweeps = 20;
    // Replaces every check's own threshold when set.
    std::optional<double> tol;
};

struct CheckResult {
    std::string name;
    double measured = 0.0;
    double threshold = 0.0;
    bool pass = false;
};

// Random nonsingular spec: v in (1.05, 1.95), mu in (0.05, 0.95),
// |alpha| <= 0.9, b in [1, 8]. Redraws while |e_{v-mu,v}(alpha, b+2)| < 1e-6.
ProblemSpec random_spec(std::mt19937_64& rng);

// Numerical identity suite behind the `verify` command.
std::vector<CheckResult> run_verification(const VerifyOptions& opts);

}  // namespace fracgreen
