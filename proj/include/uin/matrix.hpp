#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace uin {

using cdouble = std::complex<double>;

// Dense complex matrix, row-major storage. Everything here is desk-scale
// (blocks up to a few dozen rows), so there are no views, no expression
// templates and no BLAS bindings; plain loops are fast enough and easy to
// audit.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, cdouble(0.0, 0.0)) {}

    static Matrix identity(std::size_t n);
    static Matrix diag(std::span<const cdouble> d);
    static Matrix diag(std::span<const double> d);
    static Matrix from_rows(std::initializer_list<std::initializer_list<cdouble>> rows);
    // x y^* for column vectors x, y
    static Matrix outer(std::span<const cdouble> x, std::span<const cdouble> y);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }
    bool square() const { return rows_ == cols_; }

    cdouble& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const cdouble& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Matrix adjoint() const;
    Matrix transpose() const;
    Matrix conjugate() const;
    cdouble trace() const;
    double frobenius_norm() const;
    double max_abs() const;
    bool is_finite() const;

    std::vector<cdouble> column(std::size_t j) const;
    void set_column(std::size_t j, std::span<const cdouble> v);
    Matrix columns(std::size_t first, std::size_t count) const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(cdouble s);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cdouble> a_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(cdouble s, Matrix a);
Matrix operator*(double s, Matrix a);

// max entrywise |a - b|; matrices must have equal shape
double max_abs_diff(const Matrix& a, const Matrix& b);

// Hermitian part (M + M^*)/2 of a square matrix
Matrix hermitian_part(const Matrix& m);

}  // namespace uin
