#include "fracgreen/matrix.hpp"

#include "fracgreen/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace fracgreen {

std::vector<double> Matrix::multiply(std::span<const double> x) const {
    std::vector<double> y(rows_, 0.0);
    for (std::size_t i = 0; i < rows_; ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < cols_; ++j) {
            acc += (*this)(i, j) * x[j];
        }
        y[i] = acc;
    }
    return y;
}

double max_abs_difference(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        return std::numeric_limits<double>::infinity();
    }
    double m = 0.0;
    for (std::size_t k = 0; k < a.data().size(); ++k) {
        m = std::max(m, std::abs(a.data()[k] - b.data()[k]));
    }
    return m;
}

LuDecomposition::LuDecomposition(Matrix a, double pivot_tol) : lu_(std::move(a)) {
    const std::size_t n = lu_.rows();
    if (n != lu_.cols()) {
        throw InputError("LU decomposition needs a square matrix");
    }
    perm_.resize(n);
    std::iota(perm_.begin(), perm_.end(), 0);
    min_pivot_ = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (std::abs(lu_(i, k)) > std::abs(lu_(p, k))) {
                p = i;
            }
        }
        const double pivot = std::abs(lu_(p, k));
        min_pivot_ = std::min(min_pivot_, pivot);
        if (!(pivot > pivot_tol)) {
            std::ostringstream msg;
            msg << "matrix is singular: pivot " << pivot << " at column " << k << " is below " << pivot_tol;
            throw SingularMatrixError(msg.str());
        }
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(lu_(k, j), lu_(p, j));
            }
            std::swap(perm_[k], perm_[p]);
            perm_sign_ = -perm_sign_;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            const double factor = lu_(i, k) / lu_(k, k);
            lu_(i, k) = factor;
            if (factor == 0.0) {
                continue;
            }
            for (std::size_t j = k + 1; j < n; ++j) {
                lu_(i, j) -= factor * lu_(k, j);
            }
        }
    }
}

std::vector<double> LuDecomposition::solve(std::span<const double> rhs) const {
    const std::size_t n = lu_.rows();
    if (rhs.size() != n) {
        throw InputError("right-hand side length does not match the matrix");
    }
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) {
        double acc = rhs[perm_[i]];
        for (std::size_t j = 0; j < i; ++j) {
            acc -= lu_(i, j) * x[j];
        }
        x[i] = acc;
    }
    for (std::size_t i = n; i-- > 0;) {
        double acc = x[i];
        for (std::size_t j = i + 1; j < n; ++j) {
            acc -= lu_(i, j) * x[j];
        }
        x[i] = acc / lu_(i, i);
    }
    return x;
}

double LuDecomposition::determinant() const noexcept {
    double d = perm_sign_;
    for (std::size_t i = 0; i < lu_.rows(); ++i) {
        d *= lu_(i, i);
    }
    return d;
}

double determinant(Matrix a) {
    try {
        return LuDecomposition(std::move(a), 0.0).determinant();
    } catch (const SingularMatrixError&) {
        return 0.0;
    }
}

}  // namespace fracgreen
