#include "blockshift/complex_matrix.hpp"

#include <cmath>
#include <cstdlib>

#include "blockshift/errors.hpp"

namespace blockshift {

namespace {

void check_dims(int rows, int cols) {
    if (rows < 1 || cols < 1)
        throw DimensionError("matrix dimensions must be positive");
}

void check_finite(const std::vector<Complex>& entries) {
    for (const Complex& z : entries)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw ValidationError("matrix entries must be finite");
}

}  // namespace

ComplexMatrix::ComplexMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    check_dims(rows, cols);
    entries_.assign(static_cast<size_t>(rows) * cols, Complex(0.0, 0.0));
}

ComplexMatrix::ComplexMatrix(int rows, int cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    check_dims(rows, cols);
    if (entries_.size() != static_cast<size_t>(rows) * cols)
        throw DimensionError("entry count does not match rows*cols");
    check_finite(entries_);
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(static_cast<int>(rows.size())), cols_(0) {
    if (rows.size() == 0) throw DimensionError("matrix dimensions must be positive");
    cols_ = static_cast<int>(rows.begin()->size());
    check_dims(rows_, cols_);
    entries_.reserve(static_cast<size_t>(rows_) * cols_);
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != cols_)
            throw DimensionError("rows have inconsistent lengths");
        entries_.insert(entries_.end(), r.begin(), r.end());
    }
    check_finite(entries_);
}

ComplexMatrix ComplexMatrix::identity(int n) {
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::column_vector(std::vector<Complex> entries) {
    const int n = static_cast<int>(entries.size());
    return ComplexMatrix(n, 1, std::move(entries));
}

ComplexMatrix ComplexMatrix::block(int row0, int col0, int nrows, int ncols) const {
    if (row0 < 0 || col0 < 0 || nrows < 1 || ncols < 1 || row0 + nrows > rows_ ||
        col0 + ncols > cols_)
        throw DimensionError("block range out of bounds");
    ComplexMatrix out(nrows, ncols);
    for (int i = 0; i < nrows; ++i)
        for (int j = 0; j < ncols; ++j) out(i, j) = (*this)(row0 + i, col0 + j);
    return out;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows())
        throw DimensionError("matmul: inner dimensions disagree");
    ComplexMatrix out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int l = 0; l < a.cols(); ++l) {
            const Complex ail = a(i, l);
            if (ail == Complex(0.0, 0.0)) continue;
            for (int j = 0; j < b.cols(); ++j) out(i, j) += ail * b(l, j);
        }
    return out;
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
    ComplexMatrix out(a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out(j, i) = std::conj(a(i, j));
    return out;
}

ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionError("add: shapes disagree");
    ComplexMatrix out(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) + b(i, j);
    return out;
}

ComplexMatrix sub(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionError("sub: shapes disagree");
    ComplexMatrix out(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) - b(i, j);
    return out;
}

ComplexMatrix scale(const ComplexMatrix& a, Complex factor) {
    ComplexMatrix out(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out(i, j) = factor * a(i, j);
    return out;
}

ComplexMatrix hermitian_part(const ComplexMatrix& m) {
    if (m.rows() != m.cols())
        throw DimensionError("hermitian_part: matrix must be square");
    ComplexMatrix out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            out(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
    return out;
}

ComplexMatrix vstack(const ComplexMatrix& top, const ComplexMatrix& bottom) {
    if (top.cols() != bottom.cols())
        throw DimensionError("vstack: column counts disagree");
    ComplexMatrix out(top.rows() + bottom.rows(), top.cols());
    for (int i = 0; i < top.rows(); ++i)
        for (int j = 0; j < top.cols(); ++j) out(i, j) = top(i, j);
    for (int i = 0; i < bottom.rows(); ++i)
        for (int j = 0; j < bottom.cols(); ++j) out(top.rows() + i, j) = bottom(i, j);
    return out;
}

ComplexMatrix hstack(const ComplexMatrix& left, const ComplexMatrix& right) {
    if (left.rows() != right.rows())
        throw DimensionError("hstack: row counts disagree");
    ComplexMatrix out(left.rows(), left.cols() + right.cols());
    for (int i = 0; i < left.rows(); ++i) {
        for (int j = 0; j < left.cols(); ++j) out(i, j) = left(i, j);
        for (int j = 0; j < right.cols(); ++j) out(i, left.cols() + j) = right(i, j);
    }
    return out;
}

ComplexMatrix column(const ComplexMatrix& m, int j) {
    if (j < 0 || j >= m.cols()) throw DimensionError("column index out of range");
    ComplexMatrix out(m.rows(), 1);
    for (int i = 0; i < m.rows(); ++i) out(i, 0) = m(i, j);
    return out;
}

double frobenius_norm(const ComplexMatrix& m) {
    double sum = 0.0;
    for (const Complex& z : m.entries()) sum += std::norm(z);
    return std::sqrt(sum);
}

Complex vec_inner(const ComplexMatrix& x, const ComplexMatrix& y) {
    if (x.cols() != 1 || y.cols() != 1 || x.rows() != y.rows())
        throw DimensionError("vec_inner: expects column vectors of equal length");
    Complex sum(0.0, 0.0);
    for (int i = 0; i < x.rows(); ++i) sum += x(i, 0) * std::conj(y(i, 0));
    return sum;
}

double vec_norm(const ComplexMatrix& x) {
    if (x.cols() != 1) throw DimensionError("vec_norm: expects a column vector");
    double sum = 0.0;
    for (int i = 0; i < x.rows(); ++i) sum += std::norm(x(i, 0));
    return std::sqrt(sum);
}

}  // namespace blockshift
