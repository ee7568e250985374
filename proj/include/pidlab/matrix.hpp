#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace pidlab {

/// Dense real matrix, row-major. Small sizes only (desk scale, N <= 256).
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);
    Matrix(std::initializer_list<std::initializer_list<double>> rows);

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }
    bool square() const { return rows_ == cols_ && rows_ > 0; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }

    Matrix& operator+=(const Matrix& rhs);
    Matrix& operator-=(const Matrix& rhs);
    Matrix& operator*=(double s);

    Matrix transposed() const;
    bool all_finite() const;

    bool same_shape(const Matrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

/// N x D token matrix, one token per row. Shares representation with Matrix;
/// the alias marks which argument is the evolving state rather than an operator.
using TokenMatrix = Matrix;

Matrix operator+(Matrix lhs, const Matrix& rhs);
Matrix operator-(Matrix lhs, const Matrix& rhs);
Matrix operator*(Matrix lhs, double s);
Matrix operator*(double s, Matrix rhs);
Matrix operator*(const Matrix& lhs, const Matrix& rhs);  // matrix product

/// Largest absolute entry.
double max_abs(const Matrix& a);
/// Largest absolute entry of (a - b); shapes must agree.
double max_abs_diff(const Matrix& a, const Matrix& b);
/// Induced infinity norm: max absolute row sum.
double inf_norm(const Matrix& a);
/// Frobenius norm.
double frobenius_norm(const Matrix& a);

/// a*x + y with scalar a; shapes must agree.
Matrix axpy(double a, const Matrix& x, const Matrix& y);

void require_same_shape(const Matrix& a, const Matrix& b, const char* where);

}  // namespace pidlab
