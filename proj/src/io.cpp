#include "fracgreen/io.hpp"

#include "fracgreen/errors.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>

namespace fracgreen::io {

using nlohmann::json;

std::string format_number(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

double round12(double x) {
    if (!std::isfinite(x)) {
        return x;
    }
    return std::stod(format_number(x));
}

void write_kernel_csv(std::ostream& out, const GreenKernel& kernel) {
    const Grid t_grid = kernel.solution_grid();
    const Grid s_grid = kernel.forcing_grid();
    out << "t\\s";
    for (std::size_t j = 0; j < s_grid.count(); ++j) {
        out << ',' << format_number(s_grid.point(j));
    }
    out << '\n';
    for (std::size_t i = 0; i < t_grid.count(); ++i) {
        out << format_number(t_grid.point(i));
        for (std::size_t j = 0; j < s_grid.count(); ++j) {
            out << ',' << format_number(kernel(i, j));
        }
        out << '\n';
    }
}

json spec_to_json(const ProblemSpec& spec) {
    return {{"upsilon", spec.upsilon}, {"mu", spec.mu}, {"alpha", spec.alpha}, {"b", spec.b}};
}

json kernel_to_json(const GreenKernel& kernel) {
    const Grid t_grid = kernel.solution_grid();
    const Grid s_grid = kernel.forcing_grid();
    json t_points = json::array();
    json s_points = json::array();
    for (std::size_t i = 0; i < t_grid.count(); ++i) t_points.push_back(round12(t_grid.point(i)));
    for (std::size_t j = 0; j < s_grid.count(); ++j) s_points.push_back(round12(s_grid.point(j)));
    json table = json::array();
    for (double v : kernel.table().data()) {
        table.push_back(round12(v));
    }
    return {{"spec", spec_to_json(kernel.spec())},
            {"rows", t_grid.count()},
            {"cols", s_grid.count()},
            {"t_points", t_points},
            {"s_points", s_points},
            {"denominator", round12(kernel.denominator())},
            {"table", table}};
}

json outcome_to_json(const SolveOutcome& outcome) {
    json values = json::array();
    for (double v : outcome.y.values()) {
        values.push_back(round12(v));
    }
    return {{"y", {{"offset", round12(outcome.y.grid().offset())}, {"count", outcome.y.size()}, {"values", values}}},
            {"iterations", outcome.iterations},
            {"method", to_string(outcome.method)},
            {"residual", round12(outcome.residual)},
            {"converged", outcome.converged},
            {"nontrivial", outcome.nontrivial}};
}

json report_to_json(const ExistenceReport& report) {
    json j{{"d", round12(report.d)},
           {"m", report.m},
           {"kz_pass", report.kz_pass},
           {"M", round12(report.M)},
           {"minimal_L", nullptr},
           {"ls_pass", report.ls_pass}};
    if (report.minimal_L) {
        j["minimal_L"] = round12(*report.minimal_L);
    }
    return j;
}

void ProblemFile::validate() const {
    spec.validate();
    const int modes = (h ? 1 : 0) + (h_expr ? 1 : 0) + (f_expr ? 1 : 0);
    if (modes > 1) {
        throw InputError("problem must give at most one of h, h_expr, f_expr");
    }
    if (h && h->size() != static_cast<std::size_t>(spec.b) + 2) {
        throw InputError("h must have b+2 = " + std::to_string(spec.b + 2) + " entries, got " +
                         std::to_string(h->size()));
    }
}

namespace {

template <typename T>
std::optional<T> optional_field(const json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null()) {
        return std::nullopt;
    }
    return j.at(key).get<T>();
}

}  // namespace

ProblemFile parse_problem(const json& j) {
    if (!j.is_object()) {
        throw InputError("problem file must contain a JSON object");
    }
    if (j.contains("problem") && j.at("problem").is_object()) {
        return parse_problem(j.at("problem"));
    }
    ProblemFile p;
    try {
        const json& spec = j.contains("spec") ? j.at("spec") : j;
        p.spec.upsilon = spec.at("upsilon").get<double>();
        p.spec.mu = spec.at("mu").get<double>();
        p.spec.alpha = spec.at("alpha").get<double>();
        p.spec.b = spec.at("b").get<int>();
        p.h = optional_field<std::vector<double>>(j, "h");
        p.h_expr = optional_field<std::string>(j, "h_expr");
        p.f_expr = optional_field<std::string>(j, "f_expr");
        p.g_expr = optional_field<std::string>(j, "g_expr");
        p.psi_expr = optional_field<std::string>(j, "psi_expr");
        p.m = optional_field<double>(j, "m");
    } catch (const json::exception& err) {
        throw InputError(std::string("malformed problem file: ") + err.what());
    }
    p.validate();
    return p;
}

ProblemFile load_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open problem file '" + path + "'");
    }
    json j;
    try {
        in >> j;
    } catch (const json::exception& err) {
        throw InputError("problem file '" + path + "' is not valid JSON: " + err.what());
    }
    return parse_problem(j);
}

json problem_to_json(const ProblemFile& problem) {
    json j = spec_to_json(problem.spec);
    if (problem.h) j["h"] = *problem.h;
    if (problem.h_expr) j["h_expr"] = *problem.h_expr;
    if (problem.f_expr) j["f_expr"] = *problem.f_expr;
    if (problem.g_expr) j["g_expr"] = *problem.g_expr;
    if (problem.psi_expr) j["psi_expr"] = *problem.psi_expr;
    if (problem.m) j["m"] = *problem.m;
    return j;
}

}  // namespace fracgreen::io
