#pragma once

#include <complex>
#include <initializer_list>
#include <vector>

namespace blockshift {

using Complex = std::complex<double>;

// Dense row-major complex matrix.  Dimensions are always positive and every
// entry is finite; both are enforced at construction.
class ComplexMatrix {
public:
    ComplexMatrix(int rows, int cols);
    ComplexMatrix(int rows, int cols, std::vector<Complex> entries);
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(int n);
    static ComplexMatrix column_vector(std::vector<Complex> entries);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Complex& operator()(int i, int j) { return entries_[static_cast<size_t>(i) * cols_ + j]; }
    const Complex& operator()(int i, int j) const {
        return entries_[static_cast<size_t>(i) * cols_ + j];
    }

    const std::vector<Complex>& entries() const { return entries_; }

    ComplexMatrix block(int row0, int col0, int nrows, int ncols) const;

    bool operator==(const ComplexMatrix& other) const = default;

private:
    int rows_;
    int cols_;
    std::vector<Complex> entries_;
};

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix adjoint(const ComplexMatrix& a);
ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix sub(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix scale(const ComplexMatrix& a, Complex factor);

// (M + M*)/2.  Requires a square input.
ComplexMatrix hermitian_part(const ComplexMatrix& m);

// Stack on top of each other / side by side.
ComplexMatrix vstack(const ComplexMatrix& top, const ComplexMatrix& bottom);
ComplexMatrix hstack(const ComplexMatrix& left, const ComplexMatrix& right);

ComplexMatrix column(const ComplexMatrix& m, int j);

double frobenius_norm(const ComplexMatrix& m);

// <x, y> = sum_i x_i * conj(y_i) on column vectors of equal length.
Complex vec_inner(const ComplexMatrix& x, const ComplexMatrix& y);
double vec_norm(const ComplexMatrix& x);

}  // namespace blockshift
