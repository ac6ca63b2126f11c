#include "blockshift/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "blockshift/errors.hpp"
#include "blockshift/hermitian_eigen.hpp"
#include "blockshift/radius.hpp"
#include "blockshift/singular.hpp"

namespace blockshift {

namespace {

double scalar_shift_radius(const ScalarShift& ss) {
    return numerical_radius_blockshift(to_blockshift(ss)).value;
}

double max_block_norm(const BlockShift& bs) {
    double m = 0.0;
    for (const ComplexMatrix& b : bs.blocks()) m = std::max(m, operator_norm(b));
    return m;
}

double min_block_modulus(const BlockShift& bs) {
    if (bs.blocks().empty()) return 0.0;
    double m = std::numeric_limits<double>::infinity();
    for (const ComplexMatrix& b : bs.blocks()) m = std::min(m, minimum_modulus(b));
    return m;
}

bool is_zero(const ComplexMatrix& m) { return frobenius_norm(m) == 0.0; }

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(12);
    os << x;
    return os.str();
}

}  // namespace

double upper_bound(const BlockShift& bs) {
    return scalar_shift_radius(norm_compression(bs));
}

double lower_bound(const BlockShift& bs) {
    return scalar_shift_radius(min_modulus_compression(bs));
}

double coarse_upper(const BlockShift& bs) {
    if (bs.k() == 1) return 0.0;
    return max_block_norm(bs) * jordan_radius(bs.k());
}

double coarse_lower(const BlockShift& bs) {
    if (bs.k() == 1) return 0.0;
    return min_block_modulus(bs) * jordan_radius(bs.k());
}

GammaBound gamma_lower(const BlockShift& bs, double tol_rank) {
    const int k = bs.k();
    if (k == 1)
        return GammaBound{false, std::nullopt, "no blocks (k = 1), nothing to bound"};
    if (k == 2)
        return GammaBound{true, scalar_shift_radius(gamma_compression(bs, tol_rank)),
                          "valid unconditionally for k = 2"};
    if (k == 3) {
        const int r1 = numerical_rank(bs.block(0), tol_rank);
        const int r2 = numerical_rank(bs.block(1), tol_rank);
        const int n2 = bs.dims()[1];
        std::ostringstream reason;
        if (r1 + r2 > n2) {
            reason << "rank A_1 + rank A_2 = " << r1 << " + " << r2 << " > n_2 = " << n2;
            return GammaBound{true, scalar_shift_radius(gamma_compression(bs, tol_rank)),
                              reason.str()};
        }
        reason << "rank A_1 + rank A_2 = " << r1 << " + " << r2
               << " does not exceed n_2 = " << n2;
        return GammaBound{false, std::nullopt, reason.str()};
    }
    return GammaBound{false, std::nullopt,
                      "bound established for k = 2 and k = 3 only (k = " +
                          std::to_string(k) + ")"};
}

bool gamma_k2_summand_structure(const BlockShift& bs, double tol) {
    if (bs.k() != 2)
        throw ValidationError("gamma_k2_summand_structure: defined for k = 2 only");
    const ComplexMatrix& a1 = bs.block(0);
    const double gamma = reduced_minimum_modulus(a1);
    if (gamma == 0.0) return true;  // zero block: nothing but zeros to split off
    for (double s : singular_values(a1)) {
        if (s <= 1e-10 * operator_norm(a1)) continue;
        if (std::abs(s - gamma) > tol) return false;
    }
    return true;
}

std::string to_string(CertificateStatus s) {
    switch (s) {
        case CertificateStatus::EqualityWithSummand: return "equality-with-summand";
        case CertificateStatus::EqualityHypothesisViolated:
            return "equality-hypothesis-violated";
        case CertificateStatus::NoEquality: return "no-equality";
    }
    return "unknown";
}

// ---------------------------------------------------------------------------
// Zero-chain perturbation
// ---------------------------------------------------------------------------

namespace {

ComplexMatrix chain_of(const std::vector<ComplexMatrix>& blocks, size_t first, size_t last) {
    ComplexMatrix p = blocks[first];
    for (size_t j = first + 1; j <= last; ++j) p = matmul(p, blocks[j]);
    return p;
}

std::pair<int, int> argmax_entry(const ComplexMatrix& m) {
    int bi = 0, bj = 0;
    double best = -1.0;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            const double a = std::abs(m(i, j));
            if (a > best) {
                best = a;
                bi = i;
                bj = j;
            }
        }
    return {bi, bj};
}

int argmax_column_norm(const ComplexMatrix& m) {
    int bj = 0;
    double best = -1.0;
    for (int j = 0; j < m.cols(); ++j) {
        double s = 0.0;
        for (int i = 0; i < m.rows(); ++i) s += std::norm(m(i, j));
        if (s > best) {
            best = s;
            bj = j;
        }
    }
    return bj;
}

// x and y are adjacent factors with x*y = 0; moves each by at most eps/2 so
// the product becomes nonzero.  When x is an accumulated prefix product the
// callers guarantee it is nonzero, so only y changes.
void perturb_pair(ComplexMatrix& x, ComplexMatrix& y, double eps) {
    const bool xz = is_zero(x);
    const bool yz = is_zero(y);
    if (xz && yz) {
        x(0, 0) = eps / 2.0;
        y(0, 0) = eps / 2.0;
    } else if (!xz && yz) {
        const auto [i, j] = argmax_entry(x);
        (void)i;
        y(j, 0) = eps / 2.0;
    } else if (xz && !yz) {
        const auto [i, j] = argmax_entry(y);
        (void)j;
        x(0, i) = eps / 2.0;
    } else {
        const auto [i, l] = argmax_entry(x);  // row i of x is nonzero, peak at column l
        const int jy = argmax_column_norm(y);
        y(l, jy) += (eps / 2.0) * std::conj(x(i, l)) / std::abs(x(i, l));
    }
}

}  // namespace

std::vector<ComplexMatrix> perturb_nonzero_chain(const std::vector<ComplexMatrix>& blocks,
                                                 double eps, std::uint64_t seed) {
    if (eps <= 0.0 || !std::isfinite(eps))
        throw ValidationError("perturb_nonzero_chain: eps must be positive");
    if (blocks.empty())
        throw DimensionError("perturb_nonzero_chain: needs at least one block");
    for (size_t j = 0; j + 1 < blocks.size(); ++j)
        if (blocks[j].cols() != blocks[j + 1].rows())
            throw DimensionError("perturb_nonzero_chain: adjacent block shapes disagree");

    std::vector<ComplexMatrix> out = blocks;
    if (!is_zero(chain_of(out, 0, out.size() - 1))) return out;

    if (out.size() == 1) {
        out[0](0, 0) = eps / 2.0;
        return out;
    }
    if (out.size() == 2) {
        perturb_pair(out[0], out[1], eps);
        return out;
    }
    // Longer chains: make the prefix product nonzero first, then fix up the
    // last factor against that product.
    if (is_zero(chain_of(out, 0, out.size() - 2))) {
        std::vector<ComplexMatrix> prefix(out.begin(), out.end() - 1);
        prefix = perturb_nonzero_chain(prefix, eps, seed);
        std::copy(prefix.begin(), prefix.end(), out.begin());
    }
    ComplexMatrix pre = chain_of(out, 0, out.size() - 2);
    if (is_zero(matmul(pre, out.back()))) perturb_pair(pre, out.back(), eps);
    return out;
}

// ---------------------------------------------------------------------------
// Witness
// ---------------------------------------------------------------------------

namespace {

std::vector<ComplexMatrix> split_segments(const ComplexMatrix& v, const std::vector<int>& dims) {
    std::vector<ComplexMatrix> segs;
    segs.reserve(dims.size());
    int off = 0;
    for (int d : dims) {
        segs.push_back(v.block(off, 0, d, 1));
        off += d;
    }
    return segs;
}

// Entrywise-nonnegative unit maximizer of Re of a scalar shift.  For a
// nonnegative symmetric matrix, |top eigenvector| attains the same Rayleigh
// value, so taking moduli is sound even when the matrix is reducible.
std::vector<double> perron_maximizer(const ScalarShift& ss) {
    const ComplexMatrix re = hermitian_part(assemble_scalar(ss));
    const HermitianEigen eig = hermitian_eigen(re);
    const int k = re.rows();
    std::vector<double> y(static_cast<size_t>(k));
    double norm = 0.0;
    for (int i = 0; i < k; ++i) {
        y[static_cast<size_t>(i)] = std::abs(eig.eigenvectors(i, k - 1));
        norm += y[static_cast<size_t>(i)] * y[static_cast<size_t>(i)];
    }
    norm = std::sqrt(norm);
    for (double& t : y) t /= norm;
    return y;
}

// Top right-singular vector of p (eigenvector of p*p for the largest
// eigenvalue).
ComplexMatrix top_right_singular_vector(const ComplexMatrix& p) {
    const ComplexMatrix gram = matmul(adjoint(p), p);
    const HermitianEigen eig = hermitian_eigen(gram);
    return column(eig.eigenvectors, gram.cols() - 1);
}

}  // namespace

WitnessVector lower_witness(const BlockShift& bs, std::uint64_t seed,
                            std::optional<double> eps_opt) {
    if (bs.k() < 2)
        throw NoWitnessError("lower_witness: the shift has no blocks");
    const double eps = eps_opt.value_or(1e-6 * (1.0 + max_block_norm(bs)));
    if (eps <= 0.0 || !std::isfinite(eps))
        throw ValidationError("lower_witness: eps must be positive");

    const int k = bs.k();
    const ComplexMatrix a = assemble(bs);

    // Work on perturbed blocks only when the chain construction degenerates:
    // an exactly zero chain product, or a vanishing partial chain.
    std::vector<ComplexMatrix> work = bs.blocks();
    bool perturbed = false;
    for (int round = 0; round < 2; ++round) {
        const BlockShift wbs{std::vector<ComplexMatrix>(work)};
        const ComplexMatrix p = product_chain(wbs);
        bool degenerate = is_zero(p);
        ComplexMatrix u = degenerate ? ComplexMatrix(bs.dims().back(), 1)
                                     : top_right_singular_vector(p);
        std::vector<ComplexMatrix> suffix(static_cast<size_t>(k), u);
        if (!degenerate) {
            ComplexMatrix t = u;
            for (int j = k - 2; j >= 0; --j) {
                t = matmul(wbs.block(j), t);
                suffix[static_cast<size_t>(j)] = t;
                if (vec_norm(t) < 1e-300) {
                    degenerate = true;
                    break;
                }
            }
        }
        if (degenerate) {
            if (perturbed)
                throw ConvergenceError("lower_witness: chain still degenerate after perturbation",
                                       0.0);
            work = perturb_nonzero_chain(bs.blocks(), eps, seed);
            perturbed = true;
            continue;
        }

        std::vector<ComplexMatrix> xs;
        xs.reserve(static_cast<size_t>(k));
        for (int j = 0; j < k; ++j) {
            const ComplexMatrix& t = suffix[static_cast<size_t>(j)];
            xs.push_back(scale(t, 1.0 / vec_norm(t)));
        }

        const std::vector<double> y = perron_maximizer(min_modulus_compression(wbs));

        ComplexMatrix v(bs.total_dim(), 1);
        const std::vector<int> offs = segment_offsets(bs);
        for (int j = 0; j < k; ++j) {
            const int o = offs[static_cast<size_t>(j)];
            for (int i = 0; i < bs.dims()[static_cast<size_t>(j)]; ++i)
                v(o + i, 0) = y[static_cast<size_t>(j)] * xs[static_cast<size_t>(j)](i, 0);
        }
        const double vn = vec_norm(v);
        v = scale(v, 1.0 / vn);

        const double attained = vec_inner(matmul(a, v), v).real();
        return WitnessVector{v,  attained, y, xs, u, perturbed,
                             perturbed ? eps : 0.0};
    }
    throw ConvergenceError("lower_witness: unreachable", 0.0);
}

// ---------------------------------------------------------------------------
// Equality certificates
// ---------------------------------------------------------------------------

namespace {

// Orthonormal basis of the orthogonal complement of a unit vector, read off
// a Householder reflection mapping x to a multiple of e_1.  Empty for 1-dim
// segments (signalled by nullopt).
std::optional<ComplexMatrix> unit_complement_basis(const ComplexMatrix& x) {
    const int n = x.rows();
    if (n == 1) return std::nullopt;
    const double x0 = std::abs(x(0, 0));
    const Complex phase = (x0 == 0.0) ? Complex(1.0, 0.0) : x(0, 0) / x0;
    ComplexMatrix w = x;
    w(0, 0) += phase;  // w = x - alpha e_1 with alpha = -phase
    const double wnorm2 = vec_norm(w) * vec_norm(w);
    // Columns 2..n of H = I - 2 w w* / ||w||^2 span the complement of x.
    ComplexMatrix out(n, n - 1);
    for (int c = 1; c < n; ++c)
        for (int i = 0; i < n; ++i) {
            const Complex h = ((i == c) ? Complex(1.0, 0.0) : Complex(0.0, 0.0)) -
                              2.0 * w(i, 0) * std::conj(w(c, 0)) / wnorm2;
            out(i, c - 1) = h;
        }
    return out;
}

struct Decomposition {
    ComplexMatrix K;                   // n x k
    ComplexMatrix S;                   // k x k, nonnegative superdiagonal
    std::optional<ComplexMatrix> Q;    // n x (n-k)
    std::optional<ComplexMatrix> C;    // (n-k) x (n-k)
    double invariance = 0.0;
    double similarity = 0.0;
    double w_summand = 0.0;
    double w_complement = 0.0;
};

// Builds the candidate splitting of A along unit segment vectors xs and
// measures how far it is from an honest direct-summand decomposition.
Decomposition build_decomposition(const ComplexMatrix& a, const std::vector<int>& dims,
                                  const std::vector<ComplexMatrix>& xs,
                                  const ComplexMatrix& target) {
    const int n = a.rows();
    const int k = static_cast<int>(dims.size());
    std::vector<int> offs(static_cast<size_t>(k));
    int acc = 0;
    for (int j = 0; j < k; ++j) {
        offs[static_cast<size_t>(j)] = acc;
        acc += dims[static_cast<size_t>(j)];
    }

    ComplexMatrix k0(n, k);
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < dims[static_cast<size_t>(j)]; ++i)
            k0(offs[static_cast<size_t>(j)] + i, j) = xs[static_cast<size_t>(j)](i, 0);

    // Absorb superdiagonal phases into the basis so the compression lines up
    // with the (nonnegative) scalar-shift target.
    ComplexMatrix s_pre = matmul(adjoint(k0), matmul(a, k0));
    std::vector<Complex> phi(static_cast<size_t>(k), Complex(1.0, 0.0));
    for (int j = 0; j + 1 < k; ++j) {
        const Complex sj = s_pre(j, j + 1);
        const double m = std::abs(sj);
        const Complex dir = (m == 0.0) ? Complex(1.0, 0.0) : sj / m;
        phi[static_cast<size_t>(j) + 1] = phi[static_cast<size_t>(j)] * std::conj(dir);
    }
    ComplexMatrix kb = k0;
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < n; ++i) kb(i, j) = k0(i, j) * phi[static_cast<size_t>(j)];

    Decomposition d{kb, matmul(adjoint(kb), matmul(a, kb)), std::nullopt, std::nullopt};
    d.invariance = std::max(
        frobenius_norm(sub(matmul(a, d.K), matmul(d.K, d.S))),
        frobenius_norm(sub(matmul(adjoint(a), d.K), matmul(d.K, adjoint(d.S)))));
    d.similarity = frobenius_norm(sub(d.S, target));
    d.w_summand = numerical_radius_general(d.S).value;

    if (n > k) {
        ComplexMatrix q(n, n - k);
        int col = 0;
        for (int j = 0; j < k; ++j) {
            const auto basis = unit_complement_basis(xs[static_cast<size_t>(j)]);
            if (!basis) continue;
            for (int c = 0; c < basis->cols(); ++c, ++col)
                for (int i = 0; i < basis->rows(); ++i)
                    q(offs[static_cast<size_t>(j)] + i, col) = (*basis)(i, c);
        }
        d.Q = q;
        d.C = matmul(adjoint(q), matmul(a, q));
        d.w_complement = numerical_radius_general(*d.C).value;
    }
    return d;
}

bool decomposition_ok(const Decomposition& d, double tol_cert) {
    if (d.invariance > tol_cert || d.similarity > tol_cert) return false;
    if (d.C && d.w_complement > d.w_summand + tol_cert) return false;
    return true;
}

BlockShift scale_blocks(const BlockShift& bs, double factor) {
    if (bs.k() == 1) return bs;
    std::vector<ComplexMatrix> blocks;
    blocks.reserve(bs.blocks().size());
    for (const ComplexMatrix& b : bs.blocks()) blocks.push_back(scale(b, factor));
    return BlockShift(std::move(blocks));
}

void attach(EqualityCertificate& cert, const Decomposition& d, double back_scale) {
    cert.K_basis = d.K;
    cert.summand = scale(d.S, back_scale);
    if (d.C) {
        cert.complement = scale(*d.C, back_scale);
        cert.complement_basis = d.Q;
    }
    cert.residuals = CertificateResiduals{d.invariance, d.similarity};
}

double uniform01(std::mt19937_64& g) {
    return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

Complex gaussian(std::mt19937_64& g) {
    const double u1 = uniform01(g);
    const double u2 = uniform01(g);
    const double r = std::sqrt(-2.0 * std::log1p(-u1));
    const double t = 2.0 * std::numbers::pi * u2;
    return Complex(r * std::cos(t), r * std::sin(t));
}

}  // namespace

EqualityCertificate certify_upper_equality(const BlockShift& bs, double tol_cert,
                                           std::uint64_t seed) {
    if (bs.k() < 2)
        throw ValidationError("certify_upper_equality: needs at least one block");
    const double scale_norm = operator_norm(assemble(bs));
    const BlockShift nbs = (scale_norm > 0.0) ? scale_blocks(bs, 1.0 / scale_norm) : bs;
    const ComplexMatrix an = assemble(nbs);
    const ScalarShift comp = norm_compression(nbs);
    const double w_a = numerical_radius_blockshift(nbs).value;
    const double w_comp = scalar_shift_radius(comp);

    EqualityCertificate cert{CertificateStatus::NoEquality, std::nullopt, std::nullopt,
                             std::nullopt, std::nullopt, CertificateResiduals{}, ""};
    if (std::abs(w_a - w_comp) > tol_cert) {
        cert.reason = "radii differ: w(A) = " + fmt(w_a * scale_norm) +
                      ", w(A') = " + fmt(w_comp * scale_norm);
        return cert;
    }

    double wmax = 0.0, wmin = std::numeric_limits<double>::infinity();
    for (double w : comp.weights()) {
        wmax = std::max(wmax, w);
        wmin = std::min(wmin, w);
    }
    const bool hypothesis_ok = wmin > tol_cert * wmax;

    // Extremal vector search over the top eigenspace of Re(A).
    const HermitianEigen eig = hermitian_eigen(hermitian_part(an));
    const int n = an.rows();
    const double lam_max = eig.eigenvalues.back();
    const double group_tol = 1e-10 * std::max(1.0, std::abs(lam_max));
    std::vector<int> group;
    for (int i = n - 1; i >= 0; --i)
        if (eig.eigenvalues[static_cast<size_t>(i)] >= lam_max - group_tol)
            group.push_back(i);

    const ComplexMatrix target = assemble_scalar(comp);
    std::mt19937_64 rng(seed);
    std::optional<Decomposition> found;
    int attempts = 0;
    const int max_attempts = 64;
    const auto try_candidate = [&](const ComplexMatrix& x) {
        ++attempts;
        const std::vector<ComplexMatrix> segs = split_segments(x, nbs.dims());
        std::vector<ComplexMatrix> xs;
        xs.reserve(segs.size());
        for (const ComplexMatrix& seg : segs) {
            const double norm = vec_norm(seg);
            if (norm <= 1e-10) return false;
            xs.push_back(scale(seg, 1.0 / norm));
        }
        Decomposition d = build_decomposition(an, nbs.dims(), xs, target);
        if (!decomposition_ok(d, tol_cert)) return false;
        found = std::move(d);
        return true;
    };

    for (int idx : group) {
        if (attempts >= max_attempts || found) break;
        try_candidate(column(eig.eigenvectors, idx));
    }
    if (!found && group.size() >= 2) {
        while (attempts < max_attempts && !found) {
            ComplexMatrix x(n, 1);
            for (int idx : group) {
                const Complex c = gaussian(rng);
                for (int i = 0; i < n; ++i) x(i, 0) += c * eig.eigenvectors(i, idx);
            }
            const double norm = vec_norm(x);
            if (norm == 0.0) continue;
            try_candidate(scale(x, 1.0 / norm));
        }
    }

    if (!hypothesis_ok) {
        cert.status = CertificateStatus::EqualityHypothesisViolated;
        cert.reason = "some block has operator norm ~ 0; the equality characterization "
                      "needs every block nonzero";
        if (found) attach(cert, *found, scale_norm);
        return cert;
    }
    if (found) {
        cert.status = CertificateStatus::EqualityWithSummand;
        cert.reason = "invariant subspace found after " + std::to_string(attempts) +
                      " extremal-vector attempt(s)";
        attach(cert, *found, scale_norm);
        return cert;
    }
    cert.reason = "no extremal vector yielded an invariant K (" +
                  std::to_string(attempts) + " attempts)";
    return cert;
}

EqualityCertificate certify_lower_equality(const BlockShift& bs, double tol_cert,
                                           std::uint64_t /*seed*/) {
    if (bs.k() < 2)
        throw ValidationError("certify_lower_equality: needs at least one block");
    const double scale_norm = operator_norm(assemble(bs));
    const BlockShift nbs = (scale_norm > 0.0) ? scale_blocks(bs, 1.0 / scale_norm) : bs;
    const ComplexMatrix an = assemble(nbs);
    const ScalarShift comp = min_modulus_compression(nbs);
    const double w_a = numerical_radius_blockshift(nbs).value;
    const double w_comp = scalar_shift_radius(comp);
    const int k = nbs.k();

    EqualityCertificate cert{CertificateStatus::NoEquality, std::nullopt, std::nullopt,
                             std::nullopt, std::nullopt, CertificateResiduals{}, ""};
    if (std::abs(w_a - w_comp) > tol_cert) {
        cert.reason = "radii differ: w(A) = " + fmt(w_a * scale_norm) +
                      ", w(A'') = " + fmt(w_comp * scale_norm);
        return cert;
    }

    const ComplexMatrix p = product_chain(nbs);
    const bool hypothesis_ok = operator_norm(p) > tol_cert;

    // Chain construction from a top right-singular vector of the product.
    std::optional<Decomposition> found;
    std::string failure;
    do {
        if (operator_norm(p) <= 0.0) {
            failure = "chain product is zero";
            break;
        }
        const ComplexMatrix u = top_right_singular_vector(p);
        std::vector<ComplexMatrix> suffix(static_cast<size_t>(k), u);
        bool dead = false;
        {
            ComplexMatrix t = u;
            for (int j = k - 2; j >= 0; --j) {
                t = matmul(nbs.block(j), t);
                suffix[static_cast<size_t>(j)] = t;
                if (vec_norm(t) < 1e-300) dead = true;
            }
        }
        if (dead) {
            failure = "a partial chain vanished";
            break;
        }
        bool ratios_ok = true;
        for (int j = 0; j + 1 < k && ratios_ok; ++j) {
            const double r = vec_norm(suffix[static_cast<size_t>(j)]) /
                             vec_norm(suffix[static_cast<size_t>(j) + 1]);
            const double mj = comp.weights()[static_cast<size_t>(j)];
            if (std::abs(r - mj) > tol_cert) {
                failure = "the chain attains ratio " + fmt(r) + " on block " +
                          std::to_string(j + 1) + " instead of m = " + fmt(mj);
                ratios_ok = false;
            }
        }
        if (!ratios_ok) break;

        std::vector<ComplexMatrix> xs;
        xs.reserve(static_cast<size_t>(k));
        for (int j = 0; j < k; ++j)
            xs.push_back(scale(suffix[static_cast<size_t>(j)],
                               1.0 / vec_norm(suffix[static_cast<size_t>(j)])));

        bool eigen_ok = true;
        for (int j = 0; j + 1 < k && eigen_ok; ++j) {
            const ComplexMatrix& aj = nbs.block(j);
            const double mj = comp.weights()[static_cast<size_t>(j)];
            const ComplexMatrix lhs = matmul(adjoint(aj), matmul(aj, xs[static_cast<size_t>(j) + 1]));
            const ComplexMatrix rhs = scale(xs[static_cast<size_t>(j) + 1], mj * mj);
            if (vec_norm(sub(lhs, rhs)) > tol_cert) {
                failure = "x_" + std::to_string(j + 2) +
                          " is not a minimal singular vector of block " + std::to_string(j + 1);
                eigen_ok = false;
            }
        }
        if (!eigen_ok) break;

        Decomposition d = build_decomposition(an, nbs.dims(), xs, assemble_scalar(comp));
        if (!decomposition_ok(d, tol_cert)) {
            failure = "candidate subspace is not invariant within tolerance (invariance " +
                      fmt(d.invariance) + ", similarity " + fmt(d.similarity) + ")";
            break;
        }
        found = std::move(d);
    } while (false);

    if (!hypothesis_ok) {
        cert.status = CertificateStatus::EqualityHypothesisViolated;
        cert.reason = "chain product A_1...A_{k-1} is zero; the equality characterization "
                      "needs it nonzero";
        if (found) attach(cert, *found, scale_norm);
        return cert;
    }
    if (found) {
        cert.status = CertificateStatus::EqualityWithSummand;
        cert.reason = "chain vectors span an invariant subspace carrying the compression";
        attach(cert, *found, scale_norm);
        return cert;
    }
    cert.reason = failure;
    return cert;
}

bool kernel_intersection_trivial(const ComplexMatrix& m, double tol_rank) {
    if (m.rows() != m.cols())
        throw DimensionError("kernel_intersection_trivial: matrix must be square");
    const ComplexMatrix stacked = vstack(m, adjoint(m));
    const double smin = singular_values(stacked).back();
    return smin > tol_rank * operator_norm(m);
}

BoundsReport bounds_report(const BlockShift& bs, double tol_rank) {
    BoundsReport r{};
    r.w_A = numerical_radius_blockshift(bs).value;
    r.w_upper = upper_bound(bs);
    r.w_lower = lower_bound(bs);
    r.M = max_block_norm(bs);
    r.m_min = min_block_modulus(bs);
    r.coarse_upper = coarse_upper(bs);
    r.coarse_lower = coarse_lower(bs);
    const GammaBound g = gamma_lower(bs, tol_rank);
    r.gamma_bound = g.value;
    r.gamma_applicable = g.applicable;
    r.gamma_reason = g.reason;

    const double tol = 1e-9;
    if (r.w_lower > r.w_A + tol || r.w_A > r.w_upper + tol ||
        r.coarse_lower > r.w_lower + tol || r.w_upper > r.coarse_upper + tol) {
        std::ostringstream msg;
        msg << "bounds_report: ordering violated: coarse_lower = " << r.coarse_lower
            << ", w_lower = " << r.w_lower << ", w_A = " << r.w_A
            << ", w_upper = " << r.w_upper << ", coarse_upper = " << r.coarse_upper;
        throw OrderingViolationError(msg.str());
    }
    return r;
}

}  // namespace blockshift
