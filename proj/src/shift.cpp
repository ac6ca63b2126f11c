#include "blockshift/shift.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "blockshift/errors.hpp"
#include "blockshift/singular.hpp"

namespace blockshift {

BlockShift::BlockShift(std::vector<ComplexMatrix> blocks) : blocks_(std::move(blocks)) {
    if (blocks_.empty())
        throw DimensionError(
            "BlockShift: no blocks given; use the dimension constructor for k = 1");
    dims_.reserve(blocks_.size() + 1);
    dims_.push_back(blocks_.front().rows());
    for (size_t j = 0; j < blocks_.size(); ++j) {
        if (j + 1 < blocks_.size() && blocks_[j].cols() != blocks_[j + 1].rows()) {
            std::ostringstream msg;
            msg << "BlockShift: block " << j + 1 << " has " << blocks_[j].cols()
                << " cols but block " << j + 2 << " has " << blocks_[j + 1].rows()
                << " rows";
            throw DimensionError(msg.str());
        }
        dims_.push_back(blocks_[j].cols());
    }
}

BlockShift::BlockShift(int dim) {
    if (dim < 1) throw DimensionError("BlockShift: dimension must be positive");
    dims_.push_back(dim);
}

int BlockShift::total_dim() const {
    return std::accumulate(dims_.begin(), dims_.end(), 0);
}

ScalarShift::ScalarShift(std::vector<double> weights) : weights_(std::move(weights)) {
    for (double w : weights_) {
        if (!std::isfinite(w)) throw ValidationError("ScalarShift: weights must be finite");
        if (w < 0.0) throw ValidationError("ScalarShift: weights must be nonnegative");
    }
}

std::vector<int> segment_offsets(const BlockShift& bs) {
    std::vector<int> offs(bs.k());
    int acc = 0;
    for (int j = 0; j < bs.k(); ++j) {
        offs[static_cast<size_t>(j)] = acc;
        acc += bs.dims()[static_cast<size_t>(j)];
    }
    return offs;
}

ComplexMatrix assemble(const BlockShift& bs) {
    const int n = bs.total_dim();
    ComplexMatrix a(n, n);
    const std::vector<int> offs = segment_offsets(bs);
    for (int j = 0; j + 1 < bs.k(); ++j) {
        const ComplexMatrix& blk = bs.block(j);
        const int r0 = offs[static_cast<size_t>(j)];
        const int c0 = offs[static_cast<size_t>(j) + 1];
        for (int i = 0; i < blk.rows(); ++i)
            for (int c = 0; c < blk.cols(); ++c) a(r0 + i, c0 + c) = blk(i, c);
    }
    return a;
}

ComplexMatrix assemble_scalar(const ScalarShift& ss) {
    const int k = ss.k();
    ComplexMatrix a(k, k);
    for (int j = 0; j + 1 < k; ++j) a(j, j + 1) = ss.weights()[static_cast<size_t>(j)];
    return a;
}

BlockShift to_blockshift(const ScalarShift& ss) {
    if (ss.k() == 1) return BlockShift(1);
    std::vector<ComplexMatrix> blocks;
    blocks.reserve(ss.weights().size());
    for (double w : ss.weights()) blocks.push_back(ComplexMatrix{{Complex(w, 0.0)}});
    return BlockShift(std::move(blocks));
}

namespace {

template <typename F>
ScalarShift compress(const BlockShift& bs, F&& weight_of) {
    std::vector<double> weights;
    weights.reserve(bs.blocks().size());
    for (const ComplexMatrix& blk : bs.blocks()) weights.push_back(weight_of(blk));
    return ScalarShift(std::move(weights));
}

}  // namespace

ScalarShift norm_compression(const BlockShift& bs) {
    return compress(bs, [](const ComplexMatrix& b) { return operator_norm(b); });
}

ScalarShift min_modulus_compression(const BlockShift& bs) {
    return compress(bs, [](const ComplexMatrix& b) { return minimum_modulus(b); });
}

ScalarShift gamma_compression(const BlockShift& bs, double tol_rank) {
    return compress(bs, [tol_rank](const ComplexMatrix& b) {
        return reduced_minimum_modulus(b, tol_rank);
    });
}

ComplexMatrix product_chain(const BlockShift& bs) {
    if (bs.k() < 2)
        throw NoChainError("product_chain: the shift has no blocks");
    ComplexMatrix p = bs.block(0);
    for (int j = 1; j + 1 < bs.k(); ++j) p = matmul(p, bs.block(j));
    return p;
}

ComplexMatrix rotate_equivalence_basis(const BlockShift& bs, double theta) {
    const int n = bs.total_dim();
    ComplexMatrix d(n, n);
    const std::vector<int> offs = segment_offsets(bs);
    for (int j = 0; j < bs.k(); ++j) {
        const Complex phase = std::polar(1.0, theta * j);
        const int o = offs[static_cast<size_t>(j)];
        for (int i = 0; i < bs.dims()[static_cast<size_t>(j)]; ++i) d(o + i, o + i) = phase;
    }
    return d;
}

}  // namespace blockshift
