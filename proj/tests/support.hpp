#pragma once

#include <random>
#include <vector>

#include "blockshift/complex_matrix.hpp"
#include "blockshift/shift.hpp"

// Shared seeded generators for the test suites.  Everything funnels through
// a caller-owned engine so each test is reproducible in isolation.
namespace testsupport {

using blockshift::Complex;
using blockshift::ComplexMatrix;

inline ComplexMatrix random_matrix(std::mt19937_64& rng, int rows, int cols) {
    std::normal_distribution<double> g(0.0, 1.0);
    std::vector<Complex> e;
    e.reserve(static_cast<size_t>(rows) * static_cast<size_t>(cols));
    for (int i = 0; i < rows * cols; ++i) e.emplace_back(g(rng), g(rng));
    return ComplexMatrix(rows, cols, e);
}

inline ComplexMatrix random_hermitian(std::mt19937_64& rng, int n) {
    const ComplexMatrix m = random_matrix(rng, n, n);
    return blockshift::scale(blockshift::add(m, blockshift::adjoint(m)), 0.5);
}

inline ComplexMatrix random_unit_vector(std::mt19937_64& rng, int n) {
    ComplexMatrix v = random_matrix(rng, n, 1);
    return blockshift::scale(v, 1.0 / blockshift::vec_norm(v));
}

// Modified Gram-Schmidt on a random square matrix; Gaussian entries make it
// almost surely nonsingular, so the columns come out orthonormal.
inline ComplexMatrix random_unitary(std::mt19937_64& rng, int n) {
    ComplexMatrix m = random_matrix(rng, n, n);
    for (int j = 0; j < n; ++j) {
        for (int l = 0; l < j; ++l) {
            Complex proj(0.0, 0.0);
            for (int i = 0; i < n; ++i) proj += m(i, j) * std::conj(m(i, l));
            for (int i = 0; i < n; ++i) m(i, j) -= proj * m(i, l);
        }
        double norm = 0.0;
        for (int i = 0; i < n; ++i) norm += std::norm(m(i, j));
        norm = std::sqrt(norm);
        for (int i = 0; i < n; ++i) m(i, j) /= norm;
    }
    return m;
}

inline blockshift::BlockShift random_blockshift(std::mt19937_64& rng, int k_min = 2,
                                                int k_max = 5, int dim_max = 4) {
    std::uniform_int_distribution<int> pick_k(k_min, k_max);
    std::uniform_int_distribution<int> pick_dim(1, dim_max);
    const int k = pick_k(rng);
    std::vector<int> dims(static_cast<size_t>(k));
    for (int& d : dims) d = pick_dim(rng);
    std::vector<ComplexMatrix> blocks;
    blocks.reserve(static_cast<size_t>(k) - 1);
    for (int j = 0; j + 1 < k; ++j)
        blocks.push_back(random_matrix(rng, dims[static_cast<size_t>(j)],
                                       dims[static_cast<size_t>(j) + 1]));
    return blockshift::BlockShift(std::move(blocks));
}

// Crude lower estimate of the numerical radius by sampling unit vectors;
// usable only as a one-sided cross-check.
inline double sampled_rayleigh_max(std::mt19937_64& rng, const ComplexMatrix& m,
                                   int samples) {
    double best = 0.0;
    for (int s = 0; s < samples; ++s) {
        const ComplexMatrix x = random_unit_vector(rng, m.rows());
        best = std::max(best, std::abs(blockshift::vec_inner(blockshift::matmul(m, x), x)));
    }
    return best;
}

}  // namespace testsupport
