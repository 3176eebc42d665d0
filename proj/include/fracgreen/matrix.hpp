#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace fracgreen {

// Dense row-major matrix.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    double& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }

    std::span<const double> row(std::size_t i) const noexcept { return {data_.data() + i * cols_, cols_}; }
    std::span<const double> data() const noexcept { return data_; }

    std::vector<double> multiply(std::span<const double> x) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

double max_abs_difference(const Matrix& a, const Matrix& b);

// LU factorization with partial pivoting. Throws SingularMatrixError when a
// pivot falls to or below pivot_tol in magnitude.
class LuDecomposition {
public:
    explicit LuDecomposition(Matrix a, double pivot_tol = 1e-12);

    std::vector<double> solve(std::span<const double> rhs) const;
    double determinant() const noexcept;
    double min_pivot() const noexcept { return min_pivot_; }

private:
    Matrix lu_;
    std::vector<std::size_t> perm_;
    int perm_sign_ = 1;
    double min_pivot_ = 0.0;
};

// Determinant by elimination without the singularity guard.
double determinant(Matrix a);

}  // namespace fracgreen
