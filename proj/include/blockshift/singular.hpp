#pragma once

#include <vector>

#include "blockshift/complex_matrix.hpp"

namespace blockshift {

// min(rows, cols) singular values, descending.  Computed from the Hermitian
// eigendecomposition of A*A (or AA* when that is smaller), with eigenvalues
// clamped at zero before taking square roots.
std::vector<double> singular_values(const ComplexMatrix& a);

// Largest singular value.
double operator_norm(const ComplexMatrix& a);

// Minimum modulus: min ||Ax|| over unit x, i.e. the smallest of the
// cols-many singular values.  Exactly 0 whenever rows < cols.
double minimum_modulus(const ComplexMatrix& a);

// Reduced minimum modulus: the smallest nonzero singular value, where
// "nonzero" means above tol_rank times the largest one.  0 for the zero
// matrix.
double reduced_minimum_modulus(const ComplexMatrix& a, double tol_rank = 1e-10);

// True iff minimum_modulus(a) > tol_rank * operator_norm(a).
bool left_invertible(const ComplexMatrix& a, double tol_rank = 1e-10);

// Count of singular values above tol_rank times the largest one.
int numerical_rank(const ComplexMatrix& a, double tol_rank = 1e-10);

}  // namespace blockshift
