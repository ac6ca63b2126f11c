#pragma once

#include <vector>

#include "blockshift/complex_matrix.hpp"

namespace blockshift {

struct HermitianEigen {
    std::vector<double> eigenvalues;  // ascending
    ComplexMatrix eigenvectors;       // column i pairs with eigenvalues[i]
};

// Full eigendecomposition of a Hermitian matrix by cyclic complex Jacobi
// rotations.  The input must satisfy ||H - H*||_F <= tol_eig * ||H||_F;
// the symmetrized (H + H*)/2 is then diagonalized.  Sweeps stop once the
// off-diagonal Frobenius mass falls below 1e-14 * ||H||_F, with a hard cap
// of 100 sweeps (ConvergenceError beyond that).
//
// Output is deterministic: eigenvalues ascending with ties keeping the
// pre-sort column order, and each eigenvector scaled so its largest-modulus
// entry (lowest index on ties) is real and positive.
HermitianEigen hermitian_eigen(const ComplexMatrix& h, double tol_eig = 1e-10);

}  // namespace blockshift
