#include "fracgreen/grid.hpp"

#include "fracgreen/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace fracgreen {

Grid::Grid(double offset, std::size_t count) : offset_(offset), count_(count) {
    if (count == 0) {
        throw InputError("grid must contain at least one point");
    }
    if (!std::isfinite(offset)) {
        throw InputError("grid offset must be finite");
    }
}

std::size_t Grid::index_of(double p) const {
    const double shifted = p - offset_;
    const double r = std::round(shifted);
    if (std::abs(shifted - r) > kGridSnap || r < 0.0 || r >= static_cast<double>(count_)) {
        std::ostringstream msg;
        msg << "point " << p << " is not on grid N_" << offset_ << " with " << count_ << " points";
        throw OffGridError(msg.str());
    }
    return static_cast<std::size_t>(r);
}

bool Grid::contains(double p) const noexcept {
    const double shifted = p - offset_;
    const double r = std::round(shifted);
    return std::abs(shifted - r) <= kGridSnap && r >= 0.0 && r < static_cast<double>(count_);
}

bool operator==(const Grid& a, const Grid& b) noexcept {
    return a.count_ == b.count_ && std::abs(a.offset_ - b.offset_) <= kGridSnap;
}

GridFunction::GridFunction(Grid grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
    if (values_.size() != grid_.count()) {
        throw InputError("grid function has " + std::to_string(values_.size()) + " values for " +
                         std::to_string(grid_.count()) + " grid points");
    }
    for (double v : values_) {
        if (!std::isfinite(v)) {
            throw NonFiniteError("grid function values must be finite");
        }
    }
}

GridFunction GridFunction::zeros(const Grid& grid) {
    return GridFunction(grid, std::vector<double>(grid.count(), 0.0));
}

double GridFunction::sup_norm() const noexcept {
    double m = 0.0;
    for (double v : values_) {
        m = std::max(m, std::abs(v));
    }
    return m;
}

}  // namespace fracgreen
