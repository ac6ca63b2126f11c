#include "blockshift/radius.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "blockshift/errors.hpp"
#include "blockshift/hermitian_eigen.hpp"

namespace blockshift {

namespace {

double lambda_max_rotated(const ComplexMatrix& m, double theta) {
    const ComplexMatrix rotated = scale(m, std::polar(1.0, -theta));
    const HermitianEigen eig = hermitian_eigen(hermitian_part(rotated));
    return eig.eigenvalues.back();
}

}  // namespace

RadiusResult numerical_radius_general(const ComplexMatrix& m, double tol_radius) {
    if (m.rows() != m.cols())
        throw DimensionError("numerical_radius_general: matrix must be square");
    const int n = m.rows();

    if (frobenius_norm(m) == 0.0) {
        ComplexMatrix e1(n, 1);
        e1(0, 0) = 1.0;
        return RadiusResult{0.0, e1, 0.0};
    }

    constexpr int grid = 720;
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double best_theta = 0.0;
    double best_value = -1.0;
    for (int i = 0; i < grid; ++i) {
        const double theta = two_pi * i / grid;
        const double value = lambda_max_rotated(m, theta);
        if (value > best_value) {
            best_value = value;
            best_theta = theta;
        }
    }

    // Golden-section refinement inside the winning grid cell and its two
    // neighbours; local unimodality there is all that is assumed.
    const double step = two_pi / grid;
    double lo = best_theta - step;
    double hi = best_theta + step;
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = hi - invphi * (hi - lo);
    double d = lo + invphi * (hi - lo);
    double fc = lambda_max_rotated(m, c);
    double fd = lambda_max_rotated(m, d);
    auto consider = [&](double theta, double value) {
        if (value > best_value) {
            best_value = value;
            best_theta = theta;
        }
    };
    consider(c, fc);
    consider(d, fd);
    while (hi - lo > 1e-12) {
        if (fc < fd) {
            lo = c;
            c = d;
            fc = fd;
            d = lo + invphi * (hi - lo);
            fd = lambda_max_rotated(m, d);
            consider(d, fd);
        } else {
            hi = d;
            d = c;
            fd = fc;
            c = hi - invphi * (hi - lo);
            fc = lambda_max_rotated(m, c);
            consider(c, fc);
        }
    }

    const ComplexMatrix rotated = scale(m, std::polar(1.0, -best_theta));
    const HermitianEigen eig = hermitian_eigen(hermitian_part(rotated));
    const ComplexMatrix x = column(eig.eigenvectors, n - 1);
    const double value = eig.eigenvalues.back();
    const double attained = std::abs(vec_inner(matmul(m, x), x));
    if (attained < value - tol_radius) {
        std::ostringstream msg;
        msg << "numerical_radius_general: maximizer attains only " << attained
            << " against radius " << value;
        throw ConvergenceError(msg.str(), value - attained);
    }
    return RadiusResult{value, x, best_theta};
}

RadiusResult numerical_radius_blockshift(const BlockShift& bs) {
    const ComplexMatrix a = assemble(bs);
    const HermitianEigen eig = hermitian_eigen(hermitian_part(a));
    const int n = a.rows();
    return RadiusResult{eig.eigenvalues.back(), column(eig.eigenvectors, n - 1), 0.0};
}

double jordan_radius(int k) {
    if (k < 1) throw ValidationError("jordan_radius: k must be at least 1");
    return std::cos(std::numbers::pi / (k + 1));
}

}  // namespace blockshift
