#pragma once

#include <cassert>
#include <complex>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "asrnn/errors.hpp"

namespace asrnn {

using Complex = std::complex<double>;
using Vector = std::vector<double>;

// Dense row-major matrix of doubles. Treated as immutable once built; the
// free functions below are pure and return fresh matrices. Inner products
// accumulate strictly left-to-right over the contraction index so results
// are bit-reproducible across runs and thread counts.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<double> data);

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t i, std::size_t j) {
        assert(i < rows_ && j < cols_);
        return data_[i * cols_ + j];
    }
    double operator()(std::size_t i, std::size_t j) const {
        assert(i < rows_ && j < cols_);
        return data_[i * cols_ + j];
    }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }
    const double* row(std::size_t i) const { return data_.data() + i * cols_; }
    double* row(std::size_t i) { return data_.data() + i * cols_; }
    std::size_t size() const { return data_.size(); }

    bool operator==(const Matrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

// Standard product; throws ValidationError on inner-dimension mismatch.
Matrix mat_product(const Matrix& a, const Matrix& b);
inline Matrix operator*(const Matrix& a, const Matrix& b) { return mat_product(a, b); }

Matrix transpose(const Matrix& m);
Matrix mat_add(const Matrix& a, const Matrix& b);
Matrix mat_sub(const Matrix& a, const Matrix& b);
Matrix mat_scale(const Matrix& a, double s);

// y = A x (left-to-right over columns). Raw-pointer form for hot loops.
void matvec_into(const Matrix& a, const double* x, double* y);
Vector matvec(const Matrix& a, const Vector& x);
// y = A^T x without materializing the transpose.
void matvec_transposed_into(const Matrix& a, const double* x, double* y);

double trace(const Matrix& m);
double max_abs(const Matrix& m);

// CSV form: one row per line, comma separated, 17 significant digits,
// no header. Round-trips doubles exactly.
void write_matrix_csv(const Matrix& m, std::ostream& out);
void write_matrix_csv(const Matrix& m, const std::string& path);
Matrix read_matrix_csv(std::istream& in);
Matrix read_matrix_csv(const std::string& path);

// "%.17g" rendering used for all numeric CLI/file output.
std::string format_double(double v);

}  // namespace asrnn
