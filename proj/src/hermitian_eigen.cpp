#include "blockshift/hermitian_eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "blockshift/errors.hpp"

namespace blockshift {

namespace {

double off_diagonal_frobenius(const ComplexMatrix& s) {
    double sum = 0.0;
    for (int i = 0; i < s.rows(); ++i)
        for (int j = 0; j < s.cols(); ++j)
            if (i != j) sum += std::norm(s(i, j));
    return std::sqrt(sum);
}

}  // namespace

HermitianEigen hermitian_eigen(const ComplexMatrix& h, double tol_eig) {
    if (h.rows() != h.cols())
        throw DimensionError("hermitian_eigen: matrix must be square");
    const int n = h.rows();
    const double h_scale = frobenius_norm(h);

    double dev = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) dev += std::norm(h(i, j) - std::conj(h(j, i)));
    dev = std::sqrt(dev);
    if (dev > tol_eig * h_scale) {
        std::ostringstream msg;
        msg << "hermitian_eigen: input deviates from its adjoint by " << dev
            << " (allowed " << tol_eig * h_scale << ")";
        throw HermitianViolationError(msg.str());
    }

    ComplexMatrix s = hermitian_part(h);
    ComplexMatrix v = ComplexMatrix::identity(n);

    const double thresh = 1e-14 * h_scale;
    const int max_sweeps = 100;
    bool converged = false;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        if (off_diagonal_frobenius(s) <= thresh) {
            converged = true;
            break;
        }
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = std::abs(s(p, q));
                if (apq == 0.0) continue;
                const double app = s(p, p).real();
                const double aqq = s(q, q).real();
                // Rotation zeroing s(p,q): phase from the pivot, angle from
                // the smaller root of t^2 + 2*tau*t - 1 = 0.
                const double tau = (aqq - app) / (2.0 * apq);
                const double t = (tau >= 0.0)
                                     ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                     : -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const Complex sc = (t * c) * (s(p, q) / apq);
                for (int i = 0; i < n; ++i) {
                    const Complex sp = s(i, p), sq = s(i, q);
                    s(i, p) = c * sp - std::conj(sc) * sq;
                    s(i, q) = sc * sp + c * sq;
                    const Complex vp = v(i, p), vq = v(i, q);
                    v(i, p) = c * vp - std::conj(sc) * vq;
                    v(i, q) = sc * vp + c * vq;
                }
                for (int j = 0; j < n; ++j) {
                    const Complex rp = s(p, j), rq = s(q, j);
                    s(p, j) = c * rp - sc * rq;
                    s(q, j) = std::conj(sc) * rp + c * rq;
                }
                s(p, q) = 0.0;
                s(q, p) = 0.0;
                s(p, p) = Complex(s(p, p).real(), 0.0);
                s(q, q) = Complex(s(q, q).real(), 0.0);
            }
        }
    }
    if (!converged && off_diagonal_frobenius(s) > thresh) {
        const double residual = off_diagonal_frobenius(s);
        std::ostringstream msg;
        msg << "hermitian_eigen: no convergence after " << max_sweeps
            << " sweeps, off-diagonal residual " << residual;
        throw ConvergenceError(msg.str(), residual);
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return s(a, a).real() < s(b, b).real();
    });

    HermitianEigen out{std::vector<double>(n), ComplexMatrix(n, n)};
    for (int col = 0; col < n; ++col) {
        const int src = order[col];
        out.eigenvalues[col] = s(src, src).real();
        int imax = 0;
        double best = -1.0;
        for (int i = 0; i < n; ++i) {
            const double a = std::abs(v(i, src));
            if (a > best) {
                best = a;
                imax = i;
            }
        }
        const Complex pivot = v(imax, src);
        const double mag = std::abs(pivot);
        const Complex corr = (mag == 0.0) ? Complex(1.0, 0.0) : std::conj(pivot) / mag;
        for (int i = 0; i < n; ++i) out.eigenvectors(i, col) = v(i, src) * corr;
    }
    return out;
}

}  // namespace blockshift
