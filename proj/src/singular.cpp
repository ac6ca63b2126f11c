#include "blockshift/singular.hpp"

#include <algorithm>
#include <cmath>

#include "blockshift/hermitian_eigen.hpp"

namespace blockshift {

std::vector<double> singular_values(const ComplexMatrix& a) {
    const bool use_gram = a.cols() <= a.rows();
    const ComplexMatrix g =
        use_gram ? matmul(adjoint(a), a) : matmul(a, adjoint(a));
    const HermitianEigen eig = hermitian_eigen(g);
    std::vector<double> sv;
    sv.reserve(eig.eigenvalues.size());
    for (auto it = eig.eigenvalues.rbegin(); it != eig.eigenvalues.rend(); ++it)
        sv.push_back(std::sqrt(std::max(0.0, *it)));
    return sv;
}

double operator_norm(const ComplexMatrix& a) { return singular_values(a).front(); }

double minimum_modulus(const ComplexMatrix& a) {
    if (a.rows() < a.cols()) return 0.0;
    return singular_values(a).back();
}

double reduced_minimum_modulus(const ComplexMatrix& a, double tol_rank) {
    const std::vector<double> sv = singular_values(a);
    const double top = sv.front();
    if (top == 0.0) return 0.0;
    double smallest = top;
    for (double s : sv)
        if (s > tol_rank * top) smallest = s;
    return smallest;
}

bool left_invertible(const ComplexMatrix& a, double tol_rank) {
    return minimum_modulus(a) > tol_rank * operator_norm(a);
}

int numerical_rank(const ComplexMatrix& a, double tol_rank) {
    const std::vector<double> sv = singular_values(a);
    const double top = sv.front();
    if (top == 0.0) return 0;
    int r = 0;
    for (double s : sv)
        if (s > tol_rank * top) ++r;
    return r;
}

}  // namespace blockshift
