#include "fracgreen/green.hpp"

#include "fracgreen/errors.hpp"
#include "fracgreen/mittag.hpp"
#include "fracgreen/special.hpp"

#include <cmath>
#include <sstream>

namespace fracgreen {

namespace {

using wide_real = special::wide::real;

// Profile of e_{v-mu,beta}(alpha, x) for x in [-1, x_max]; element x+1.
class MittagTable {
public:
    MittagTable(const ProblemSpec& spec, double beta, long x_max)
        : values_(ml_profile_wide({spec.upsilon - spec.mu, beta, spec.alpha}, -1, x_max, kKernelSeriesOptions)) {}

    wide_real operator()(long x) const { return x < -1 ? wide_real(0) : values_[static_cast<std::size_t>(x + 1)]; }

private:
    std::vector<wide_real> values_;
};

void require_forcing_grid(const ProblemSpec& spec, const GridFunction& h) {
    if (!(h.grid() == make_forcing_grid(spec))) {
        throw GridMismatchError("forcing must be sampled on the grid v-1, ..., v+b (" +
                                std::to_string(spec.b + 2) + " points)");
    }
}

}  // namespace

GreenKernel::GreenKernel(ProblemSpec spec, Matrix table, double denominator)
    : spec_(spec), table_(std::move(table)), denominator_(denominator) {
    spec_.validate();
    const auto b = static_cast<std::size_t>(spec_.b);
    if (table_.rows() != b + 4 || table_.cols() != b + 2) {
        throw InputError("Green's kernel table must be (b+4) x (b+2)");
    }
    if (!(std::abs(denominator_) > kSingularDenominator)) {
        throw SingularProblemError("Green's kernel denominator vanishes");
    }
}

double GreenKernel::at(double t, double s) const {
    return table_(solution_grid().index_of(t), forcing_grid().index_of(s));
}

double uniqueness_indicator(const ProblemSpec& spec) {
    spec.validate();
    return ml({spec.upsilon - spec.mu, spec.upsilon, spec.alpha}, spec.b + 2, kKernelSeriesOptions.tol,
              kKernelSeriesOptions.kmax);
}

GreenKernel build_kernel(const ProblemSpec& spec) {
    spec.validate();
    const long b = spec.b;
    const MittagTable e(spec, spec.upsilon, b + 2);
    const wide_real denominator = e(b + 2);
    if (!(special::wide::abs(denominator) > kSingularDenominator)) {
        std::ostringstream msg;
        msg << "problem is singular: e_{v-mu,v}(alpha, b+2) = " << special::wide::to_double(denominator)
            << " (|.| <= " << kSingularDenominator << ")";
        throw SingularProblemError(msg.str());
    }
    const auto rows = static_cast<std::size_t>(b + 4);
    const auto cols = static_cast<std::size_t>(b + 2);
    Matrix table(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const auto row = static_cast<long>(i);
        // t - v + 1 = i - 1.
        const wide_real ratio = e(row - 1) / denominator;
        for (std::size_t j = 0; j < cols; ++j) {
            const auto col = static_cast<long>(j);
            // v + b - s = b + 1 - j.
            wide_real g = ratio * e(b + 1 - col);
            if (col <= row - 1) {
                // s <= t: subtract e(alpha, t - s - 1) with t - s - 1 = i - j - 2.
                g -= e(row - col - 2);
            }
            table(i, j) = special::wide::to_double(g);
        }
    }
    return GreenKernel(spec, std::move(table), special::wide::to_double(denominator));
}

Matrix atici_eloe_kernel(double upsilon, int b) {
    if (!(upsilon > 1.0 && upsilon < 2.0)) {
        throw InvalidSpecError("atici_eloe_kernel needs 1 < upsilon < 2");
    }
    if (b < 1) {
        throw InvalidSpecError("atici_eloe_kernel needs b >= 1");
    }
    using special::falling_factorial;
    const auto rows = static_cast<std::size_t>(b + 4);
    const auto cols = static_cast<std::size_t>(b + 2);
    const double nu = upsilon - 1.0;
    const double scale = 1.0 / special::gamma(upsilon);
    const double end_power = falling_factorial(upsilon + b + 1.0, nu);
    Matrix g0(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const double t = upsilon - 2.0 + static_cast<double>(i);
        const double t_power = falling_factorial(t, nu);
        for (std::size_t j = 0; j < cols; ++j) {
            // Column j is s = j in the shifted index of the alpha = 0 problem.
            const double s = static_cast<double>(j);
            double value = t_power * falling_factorial(upsilon + b - s, nu) / end_power;
            if (s < t - upsilon + 1.0 - kGridSnap) {
                value -= falling_factorial(t - s - 1.0, nu);
            }
            g0(i, j) = scale * value;
        }
    }
    return g0;
}

IVPState dirichlet_state(const ProblemSpec& spec, const GridFunction& h) {
    spec.validate();
    require_forcing_grid(spec, h);
    const long b = spec.b;
    const MittagTable e(spec, spec.upsilon, b + 2);
    const wide_real denominator = e(b + 2);
    if (!(special::wide::abs(denominator) > kSingularDenominator)) {
        throw SingularProblemError("problem is singular: Dirichlet state undefined");
    }
    wide_real acc = 0;
    for (std::size_t j = 0; j < h.size(); ++j) {
        acc += e(b + 1 - static_cast<long>(j)) * static_cast<wide_real>(h[j]);
    }
    const wide_real one_minus_alpha = 1 - static_cast<wide_real>(spec.alpha);
    return {0.0, special::wide::to_double(acc / (one_minus_alpha * denominator))};
}

GridFunction ivp_solution(const ProblemSpec& spec, const IVPState& state, const GridFunction& h) {
    spec.validate();
    require_forcing_grid(spec, h);
    const long b = spec.b;
    const MittagTable e_main(spec, spec.upsilon, b + 3);
    const MittagTable e_lower(spec, spec.upsilon - 1.0, b + 3);
    const MittagTable e_shift(spec, spec.upsilon - spec.mu, b + 3);
    const wide_real alpha = spec.alpha;
    const wide_real a = state.A;
    const wide_real bb = state.B;
    const wide_real one_minus_v = 1 - static_cast<wide_real>(spec.upsilon);

    const Grid grid = make_solution_grid(spec);
    std::vector<double> y(grid.count());
    for (std::size_t i = 0; i < grid.count(); ++i) {
        const auto row = static_cast<long>(i);
        // t - v + 2 = i and t - v + 1 = i - 1.
        const wide_real a_coeff = e_lower(row) + alpha * one_minus_v * e_main(row - 1) - alpha * e_shift(row);
        wide_real value = a_coeff * a + (1 - alpha) * e_main(row - 1) * bb;
        // Sum over s = v-1 .. t, i.e. j <= i - 1; t - s - 1 = i - j - 2.
        for (long j = 0; j <= row - 1 && j < static_cast<long>(h.size()); ++j) {
            value -= e_main(row - j - 2) * static_cast<wide_real>(h[static_cast<std::size_t>(j)]);
        }
        y[i] = special::wide::to_double(value);
    }
    return GridFunction(grid, std::move(y));
}

GridFunction solve_linear(const GreenKernel& kernel, const GridFunction& h) {
    require_forcing_grid(kernel.spec(), h);
    return GridFunction(kernel.solution_grid(), kernel.table().multiply(h.values()));
}

GridFunction solve_linear(const ProblemSpec& spec, const GridFunction& h) {
    return solve_linear(build_kernel(spec), h);
}

}  // namespace fracgreen
