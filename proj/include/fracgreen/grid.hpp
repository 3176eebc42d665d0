#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace fracgreen {

inline constexpr double kGridSnap = 1e-9;

// Finite window {offset, offset+1, ..., offset+count-1} of N_offset.
class Grid {
public:
    Grid(double offset, std::size_t count);

    double offset() const noexcept { return offset_; }
    std::size_t count() const noexcept { return count_; }
    double point(std::size_t k) const noexcept { return offset_ + static_cast<double>(k); }
    double last() const noexcept { return point(count_ - 1); }

    // Throws OffGridError unless p is (within kGridSnap) one of the points.
    std::size_t index_of(double p) const;
    bool contains(double p) const noexcept;

    friend bool operator==(const Grid& a, const Grid& b) noexcept;

private:
    double offset_;
    std::size_t count_;
};

// Real samples on a Grid. Values are required to be finite.
class GridFunction {
public:
    GridFunction(Grid grid, std::vector<double> values);
    static GridFunction zeros(const Grid& grid);

    const Grid& grid() const noexcept { return grid_; }
    std::size_t size() const noexcept { return values_.size(); }
    std::span<const double> values() const noexcept { return values_; }

    double operator[](std::size_t k) const noexcept { return values_[k]; }
    double at_point(double p) const { return values_[grid_.index_of(p)]; }

    double sup_norm() const noexcept;

private:
    Grid grid_;
    std::vector<double> values_;
};

}  // namespace fracgreen
