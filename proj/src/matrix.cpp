#include "asrnn/matrix.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

namespace asrnn {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) {
        throw ValidationError("matrix data length " + std::to_string(data_.size()) +
                              " != rows*cols " + std::to_string(rows_ * cols_));
    }
    for (double v : data_) {
        if (!std::isfinite(v)) throw ValidationError("matrix entry not finite");
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix mat_product(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) {
        throw ValidationError("mat_product dimension mismatch: " + std::to_string(a.cols()) +
                              " vs " + std::to_string(b.rows()));
    }
    Matrix c(a.rows(), b.cols());
    const std::size_t n = a.rows(), k_dim = a.cols(), m = b.cols();
    // i-k-j order: for each (i,j) the k index still runs strictly ascending.
    for (std::size_t i = 0; i < n; ++i) {
        double* ci = c.row(i);
        const double* ai = a.row(i);
        for (std::size_t k = 0; k < k_dim; ++k) {
            const double aik = ai[k];
            const double* bk = b.row(k);
            for (std::size_t j = 0; j < m; ++j) ci[j] += aik * bk[j];
        }
    }
    return c;
}

Matrix transpose(const Matrix& m) {
    Matrix t(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
    return t;
}

Matrix mat_add(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw ValidationError("mat_add shape mismatch");
    Matrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.size(); ++i) c.data()[i] = a.data()[i] + b.data()[i];
    return c;
}

Matrix mat_sub(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw ValidationError("mat_sub shape mismatch");
    Matrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.size(); ++i) c.data()[i] = a.data()[i] - b.data()[i];
    return c;
}

Matrix mat_scale(const Matrix& a, double s) {
    Matrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.size(); ++i) c.data()[i] = a.data()[i] * s;
    return c;
}

void matvec_into(const Matrix& a, const double* x, double* y) {
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const double* ai = a.row(i);
        double acc = 0.0;
        for (std::size_t k = 0; k < a.cols(); ++k) acc += ai[k] * x[k];
        y[i] = acc;
    }
}

Vector matvec(const Matrix& a, const Vector& x) {
    if (x.size() != a.cols()) throw ValidationError("matvec dimension mismatch");
    Vector y(a.rows());
    matvec_into(a, x.data(), y.data());
    return y;
}

void matvec_transposed_into(const Matrix& a, const double* x, double* y) {
    // y_j = sum_i a(i,j) x_i; i ascends so the accumulation order is fixed.
    for (std::size_t j = 0; j < a.cols(); ++j) y[j] = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const double* ai = a.row(i);
        const double xi = x[i];
        for (std::size_t j = 0; j < a.cols(); ++j) y[j] += ai[j] * xi;
    }
}

double trace(const Matrix& m) {
    double t = 0.0;
    for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) t += m(i, i);
    return t;
}

double max_abs(const Matrix& m) {
    double mx = 0.0;
    for (std::size_t i = 0; i < m.size(); ++i) mx = std::max(mx, std::fabs(m.data()[i]));
    return mx;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_matrix_csv(const Matrix& m, std::ostream& out) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out << ',';
            out << format_double(m(i, j));
        }
        out << '\n';
    }
}

void write_matrix_csv(const Matrix& m, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot open for writing: " + path);
    write_matrix_csv(m, out);
}

Matrix read_matrix_csv(std::istream& in) {
    std::vector<double> data;
    std::size_t rows = 0, cols = 0;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::size_t line_cols = 0;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            std::size_t pos = 0;
            double v;
            try {
                v = std::stod(cell, &pos);
            } catch (const std::exception&) {
                throw ValidationError("bad CSV number: '" + cell + "'");
            }
            while (pos < cell.size() && std::isspace(static_cast<unsigned char>(cell[pos]))) ++pos;
            if (pos != cell.size()) throw ValidationError("bad CSV number: '" + cell + "'");
            data.push_back(v);
            ++line_cols;
        }
        if (rows == 0) {
            cols = line_cols;
        } else if (line_cols != cols) {
            throw ValidationError("ragged CSV: row " + std::to_string(rows) + " has " +
                                  std::to_string(line_cols) + " cells, expected " +
                                  std::to_string(cols));
        }
        ++rows;
    }
    if (rows == 0) throw ValidationError("empty CSV matrix");
    return Matrix(rows, cols, std::move(data));
}

Matrix read_matrix_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open: " + path);
    return read_matrix_csv(in);
}

}  // namespace asrnn
