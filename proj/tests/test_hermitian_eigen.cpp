#include <doctest.h>

#include <cmath>
#include <random>

#include "blockshift/complex_matrix.hpp"
#include "blockshift/errors.hpp"
#include "blockshift/hermitian_eigen.hpp"
#include "support.hpp"

using namespace blockshift;

namespace {

// || H V - V diag(lambda) ||_F, the full reconstruction residual.
double eigen_residual(const ComplexMatrix& h, const HermitianEigen& e) {
    const int n = h.rows();
    ComplexMatrix vl(n, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            vl(i, j) = e.eigenvectors(i, j) * e.eigenvalues[static_cast<size_t>(j)];
    return frobenius_norm(sub(matmul(h, e.eigenvectors), vl));
}

}  // namespace

TEST_CASE("eigendecomposition of trivial and analytic cases") {
    SUBCASE("1x1") {
        const HermitianEigen e = hermitian_eigen(ComplexMatrix{{Complex(5, 0)}});
        CHECK(e.eigenvalues.size() == 1);
        CHECK(e.eigenvalues[0] == doctest::Approx(5.0));
    }
    SUBCASE("real part of the 2-dim shift") {
        // [[0, 1/2], [1/2, 0]] has eigenvalues -1/2, 1/2.
        ComplexMatrix h{{Complex(0, 0), Complex(0.5, 0)}, {Complex(0.5, 0), Complex(0, 0)}};
        const HermitianEigen e = hermitian_eigen(h);
        CHECK(e.eigenvalues[0] == doctest::Approx(-0.5).epsilon(1e-12));
        CHECK(e.eigenvalues[1] == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(eigen_residual(h, e) < 1e-14);
    }
    SUBCASE("real part of the 3-dim shift") {
        ComplexMatrix h(3, 3);
        h(0, 1) = h(1, 0) = h(1, 2) = h(2, 1) = Complex(0.5, 0);
        const HermitianEigen e = hermitian_eigen(h);
        const double r = std::sqrt(2.0) / 2.0;  // frozen: cos(pi/4)
        CHECK(e.eigenvalues[0] == doctest::Approx(-r).epsilon(1e-12));
        CHECK(e.eigenvalues[1] == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(e.eigenvalues[2] == doctest::Approx(r).epsilon(1e-12));
    }
}

TEST_CASE("eigenvalues come out ascending with orthonormal eigenvectors") {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 25; ++t) {
        const int n = 1 + static_cast<int>(rng() % 8);
        const ComplexMatrix h = testsupport::random_hermitian(rng, n);
        const HermitianEigen e = hermitian_eigen(h);
        for (size_t i = 0; i + 1 < e.eigenvalues.size(); ++i)
            CHECK(e.eigenvalues[i] <= e.eigenvalues[i + 1]);
        const ComplexMatrix gram = matmul(adjoint(e.eigenvectors), e.eigenvectors);
        CHECK(frobenius_norm(sub(gram, ComplexMatrix::identity(n))) < 1e-12);
        CHECK(eigen_residual(h, e) <= 1e-10 * (1.0 + frobenius_norm(h)));
    }
}

TEST_CASE("non-Hermitian input is rejected") {
    ComplexMatrix m{{Complex(0, 0), Complex(1, 0)}, {Complex(0, 0), Complex(0, 0)}};
    CHECK_THROWS_AS(hermitian_eigen(m), HermitianViolationError);
    ComplexMatrix rect(2, 3);
    CHECK_THROWS_AS(hermitian_eigen(rect), DimensionError);
}

TEST_CASE("deterministic output: same input, same bits") {
    std::mt19937_64 rng(33);
    const ComplexMatrix h = testsupport::random_hermitian(rng, 6);
    const HermitianEigen a = hermitian_eigen(h);
    const HermitianEigen b = hermitian_eigen(h);
    CHECK(a.eigenvalues == b.eigenvalues);
    CHECK(a.eigenvectors == b.eigenvectors);
}
