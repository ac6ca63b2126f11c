#pragma once

#include "blockshift/complex_matrix.hpp"
#include "blockshift/shift.hpp"

namespace blockshift {

struct RadiusResult {
    double value;            // the numerical radius
    ComplexMatrix maximizer; // unit vector with |<M x, x>| >= value - tol
    double theta;            // rotation angle at which the maximum was taken
};

// Numerical radius of an arbitrary square matrix:
//   w(M) = max over theta of lambda_max(Re(exp(-i*theta) M)).
// The angle is scanned on a 720-point grid over [0, 2*pi) and the best grid
// cell refined by golden-section search down to width 1e-12.
RadiusResult numerical_radius_general(const ComplexMatrix& m, double tol_radius = 1e-9);

// For a block shift the function above is constant in theta (the numerical
// range is a disk centered at the origin), so a single eigenvalue problem
// lambda_max((A + A*)/2) suffices.
RadiusResult numerical_radius_blockshift(const BlockShift& bs);

// Numerical radius of the k x k nilpotent Jordan block: cos(pi/(k+1)).
double jordan_radius(int k);

}  // namespace blockshift
