#pragma once

#include "fracgreen/existence.hpp"
#include "fracgreen/green.hpp"
#include "fracgreen/problem.hpp"
#include "fracgreen/solver.hpp"

#include <json.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace fracgreen::io {

// Twelve significant digits, '.' as decimal separator.
std::string format_number(double x);
// x rounded to twelve significant digits (what format_number prints).
double round12(double x);

// Header row "t\s" followed by the s points; one row per t point.
void write_kernel_csv(std::ostream& out, const GreenKernel& kernel);
nlohmann::json kernel_to_json(const GreenKernel& kernel);

nlohmann::json spec_to_json(const ProblemSpec& spec);
nlohmann::json outcome_to_json(const SolveOutcome& outcome);
nlohmann::json report_to_json(const ExistenceReport& report);

// JSON problem description. Exactly one of h, h_expr, f_expr selects the
// solve mode; all three may be absent for kernel and existence commands.
struct ProblemFile {
    ProblemSpec spec;
    std::optional<std::vector<double>> h;
    std::optional<std::string> h_expr;
    std::optional<std::string> f_expr;
    std::optional<std::string> g_expr;
    std::optional<std::string> psi_expr;
    std::optional<double> m;

    // Throws InputError/InvalidSpecError on violated invariants.
    void validate() const;
};

// Accepts a bare problem object or any object carrying it under "problem"
// (as emitted by the solve command), so outputs can be fed back in.
ProblemFile parse_problem(const nlohmann::json& j);
ProblemFile load_problem(const std::string& path);
nlohmann::json problem_to_json(const ProblemFile& problem);

}  // namespace fracgreen::io
