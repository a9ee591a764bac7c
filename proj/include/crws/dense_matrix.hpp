#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace crws {

using Complex = std::complex<double>;

/// Dense complex matrix with row-major storage. The single carrier type for
/// every vertex-indexed (n x n) and arc-indexed (2m x 2m) operator in the
/// library. Values are immutable by convention once a construction routine
/// returns them; all library functions take matrices by const reference.
class DenseMatrix {
public:
    DenseMatrix() = default;

    DenseMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, Complex(0.0, 0.0)) {}

    static DenseMatrix identity(std::size_t n) {
        DenseMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    const std::vector<Complex>& entries() const { return entries_; }

    DenseMatrix transpose() const {
        DenseMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    DenseMatrix conj_transpose() const {
        DenseMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = std::conj((*this)(i, j));
        return t;
    }

    /// Largest entry magnitude (max norm).
    double max_abs() const {
        double m = 0.0;
        for (const Complex& z : entries_) m = std::max(m, std::abs(z));
        return m;
    }

    double frobenius_norm() const {
        double s = 0.0;
        for (const Complex& z : entries_) s += std::norm(z);
        return std::sqrt(s);
    }

    Complex trace() const {
        require_square("trace");
        Complex t = 0.0;
        for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
        return t;
    }

    void require_square(const char* op) const {
        if (!square()) throw std::invalid_argument(std::string(op) + ": matrix is not square");
    }

    friend DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b) {
        check_same_shape(a, b, "operator+");
        DenseMatrix c(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.entries_.size(); ++k) c.entries_[k] = a.entries_[k] + b.entries_[k];
        return c;
    }

    friend DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) {
        check_same_shape(a, b, "operator-");
        DenseMatrix c(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.entries_.size(); ++k) c.entries_[k] = a.entries_[k] - b.entries_[k];
        return c;
    }

    friend DenseMatrix operator*(const Complex& s, const DenseMatrix& a) {
        DenseMatrix c(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.entries_.size(); ++k) c.entries_[k] = s * a.entries_[k];
        return c;
    }

    friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
        if (a.cols_ != b.rows_)
            throw std::invalid_argument("operator*: inner dimensions do not match");
        DenseMatrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Complex aik = a(i, k);
                if (aik == Complex(0.0, 0.0)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        }
        return c;
    }

private:
    static void check_same_shape(const DenseMatrix& a, const DenseMatrix& b, const char* op) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument(std::string(op) + ": shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> entries_;
};

}  // namespace crws
