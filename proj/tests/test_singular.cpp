#include <doctest.h>

#include <cmath>
#include <random>

#include "blockshift/complex_matrix.hpp"
#include "blockshift/singular.hpp"
#include "support.hpp"

using namespace blockshift;

TEST_CASE("singular values of small analytic cases") {
    SUBCASE("column vector") {
        // [[1], [-1]] has the single singular value sqrt(2).
        ComplexMatrix a{{Complex(1, 0)}, {Complex(-1, 0)}};
        const auto sv = singular_values(a);
        REQUIRE(sv.size() == 1);
        CHECK(sv[0] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
        CHECK(minimum_modulus(a) == doctest::Approx(std::sqrt(2.0)));
    }
    SUBCASE("wide row") {
        ComplexMatrix a{{Complex(1, 0), Complex(0, 0)}};
        CHECK(operator_norm(a) == doctest::Approx(1.0));
        CHECK(minimum_modulus(a) == 0.0);  // more columns than rows: exact zero
    }
    SUBCASE("diagonal") {
        ComplexMatrix a(3, 3);
        a(0, 0) = 3.0;
        a(1, 1) = 0.0;
        a(2, 2) = 2.0;
        const auto sv = singular_values(a);
        CHECK(sv[0] == doctest::Approx(3.0));
        CHECK(sv[1] == doctest::Approx(2.0));
        CHECK(sv[2] == doctest::Approx(0.0));
        CHECK(reduced_minimum_modulus(a) == doctest::Approx(2.0));
        CHECK(minimum_modulus(a) == doctest::Approx(0.0));
        CHECK(numerical_rank(a) == 2);
        CHECK_FALSE(left_invertible(a));
    }
    SUBCASE("zero matrix") {
        ComplexMatrix z(2, 2);
        CHECK(operator_norm(z) == 0.0);
        CHECK(reduced_minimum_modulus(z) == 0.0);
        CHECK(numerical_rank(z) == 0);
    }
}

TEST_CASE("singular values are unitarily invariant and ordered") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 20; ++t) {
        const int rows = 1 + static_cast<int>(rng() % 4);
        const int cols = 1 + static_cast<int>(rng() % 4);
        const ComplexMatrix a = testsupport::random_matrix(rng, rows, cols);
        const auto sv = singular_values(a);
        for (size_t i = 0; i + 1 < sv.size(); ++i) CHECK(sv[i] >= sv[i + 1]);

        const ComplexMatrix u = testsupport::random_unitary(rng, rows);
        const ComplexMatrix w = testsupport::random_unitary(rng, cols);
        const auto sv2 = singular_values(matmul(u, matmul(a, w)));
        REQUIRE(sv2.size() == sv.size());
        for (size_t i = 0; i < sv.size(); ++i)
            CHECK(sv2[i] == doctest::Approx(sv[i]).epsilon(1e-9));
    }
}

TEST_CASE("norm and minimum modulus bracket ||Ax||") {
    std::mt19937_64 rng(8);
    for (int t = 0; t < 20; ++t) {
        const int rows = 2 + static_cast<int>(rng() % 3);
        const int cols = 1 + static_cast<int>(rng() % 3);
        const ComplexMatrix a = testsupport::random_matrix(rng, rows, cols);
        const double top = operator_norm(a);
        const double bottom = minimum_modulus(a);
        const double gamma = reduced_minimum_modulus(a);
        CHECK(top >= gamma);
        CHECK(gamma >= bottom);
        CHECK(bottom >= 0.0);
        for (int s = 0; s < 10; ++s) {
            const ComplexMatrix x = testsupport::random_unit_vector(rng, cols);
            const double len = vec_norm(matmul(a, x));
            CHECK(len <= top + 1e-10);
            CHECK(len >= bottom - 1e-10);
        }
    }
}

TEST_CASE("minimum modulus is 1-Lipschitz in the operator norm") {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 20; ++t) {
        const int rows = 2 + static_cast<int>(rng() % 3);
        const int cols = 1 + static_cast<int>(rng() % 2);
        const ComplexMatrix a = testsupport::random_matrix(rng, rows, cols);
        const ComplexMatrix d = scale(testsupport::random_matrix(rng, rows, cols), 0.05);
        const ComplexMatrix b = add(a, d);
        CHECK(std::abs(minimum_modulus(a) - minimum_modulus(b)) <=
              operator_norm(d) + 1e-10);
    }
}
