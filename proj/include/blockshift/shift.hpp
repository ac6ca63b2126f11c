#pragma once

#include <vector>

#include "blockshift/complex_matrix.hpp"

namespace blockshift {

// A block shift of order k: the n x n matrix carrying blocks A_1..A_{k-1}
// on its block superdiagonal, with segment sizes dims = (n_1, ..., n_k) and
// block j of shape n_j x n_{j+1}.  k = 1 means no blocks at all and an
// n_1 x n_1 zero matrix.
class BlockShift {
public:
    // k >= 2; segment sizes are inferred from the block shapes.
    explicit BlockShift(std::vector<ComplexMatrix> blocks);
    // k = 1 zero shift on a space of the given dimension.
    explicit BlockShift(int dim);

    int k() const { return static_cast<int>(dims_.size()); }
    int total_dim() const;
    const std::vector<int>& dims() const { return dims_; }
    const std::vector<ComplexMatrix>& blocks() const { return blocks_; }
    const ComplexMatrix& block(int j) const { return blocks_[static_cast<size_t>(j)]; }

private:
    std::vector<ComplexMatrix> blocks_;
    std::vector<int> dims_;
};

// The all-scalar special case: nonnegative weights w_1..w_{k-1} on the
// superdiagonal of a k x k matrix.  Empty weights give the 1 x 1 zero.
class ScalarShift {
public:
    explicit ScalarShift(std::vector<double> weights);

    int k() const { return static_cast<int>(weights_.size()) + 1; }
    const std::vector<double>& weights() const { return weights_; }

private:
    std::vector<double> weights_;
};

ComplexMatrix assemble(const BlockShift& bs);
ComplexMatrix assemble_scalar(const ScalarShift& ss);

// A scalar shift is a block shift whose segments are all one-dimensional.
BlockShift to_blockshift(const ScalarShift& ss);

// Scalar shifts obtained by replacing each block with a single number:
// its operator norm, its minimum modulus, or its reduced minimum modulus.
ScalarShift norm_compression(const BlockShift& bs);
ScalarShift min_modulus_compression(const BlockShift& bs);
ScalarShift gamma_compression(const BlockShift& bs, double tol_rank = 1e-10);

// A_1 * A_2 * ... * A_{k-1}.  NoChainError when there are no blocks.
ComplexMatrix product_chain(const BlockShift& bs);

// Diagonal unitary D with segment j scaled by exp(i*(j-1)*theta), so that
// D* A D = exp(i*theta) A.  This is why the numerical range of a block
// shift is a disk centered at the origin.
ComplexMatrix rotate_equivalence_basis(const BlockShift& bs, double theta);

// Start offsets of the k segments inside the assembled matrix.
std::vector<int> segment_offsets(const BlockShift& bs);

}  // namespace blockshift
