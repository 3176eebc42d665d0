#include "fracgreen/problem.hpp"

#include "fracgreen/errors.hpp"

#include <cmath>
#include <sstream>

namespace fracgreen {

void ProblemSpec::validate() const {
    std::ostringstream msg;
    if (!(upsilon > 1.0 && upsilon < 2.0)) {
        msg << "upsilon must satisfy 1 < upsilon < 2 (got " << upsilon << ")";
    } else if (!(mu > 0.0 && mu < 1.0)) {
        msg << "mu must satisfy 0 < mu < 1 (got " << mu << ")";
    } else if (!(std::abs(alpha) < 1.0)) {
        msg << "alpha must satisfy |alpha| < 1 (got " << alpha << ")";
    } else if (b < 1) {
        msg << "b must be >= 1 (got " << b << ")";
    } else {
        return;
    }
    throw InvalidSpecError(msg.str());
}

namespace {

void require_nonnegative_b(const ProblemSpec& spec) {
    if (spec.b < 0) {
        throw InvalidSpecError("b must be nonnegative");
    }
}

}  // namespace

Grid make_solution_grid(const ProblemSpec& spec) {
    require_nonnegative_b(spec);
    return Grid(spec.upsilon - 2.0, static_cast<std::size_t>(spec.b) + 4);
}

Grid make_forcing_grid(const ProblemSpec& spec) {
    require_nonnegative_b(spec);
    return Grid(spec.upsilon - 1.0, static_cast<std::size_t>(spec.b) + 2);
}

}  // namespace fracgreen
