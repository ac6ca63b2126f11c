// Acceptance suite: nine checks, one line each, nonzero exit on any failure.
// Every tolerance and time limit is pinned here on purpose.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "blockshift/bounds.hpp"
#include "blockshift/complex_matrix.hpp"
#include "blockshift/hermitian_eigen.hpp"
#include "blockshift/io.hpp"
#include "blockshift/radius.hpp"
#include "blockshift/shift.hpp"
#include "blockshift/singular.hpp"
#include "support.hpp"

using namespace blockshift;

namespace {

constexpr double kHalfSqrt2 = 0.7071067811865476;

std::string g_detail;

bool expect(bool ok, const std::string& what) {
    if (!ok && g_detail.empty()) g_detail = what;
    return ok;
}

bool near(double a, double b, double tol, const std::string& what) {
    return expect(std::abs(a - b) <= tol,
                  what + ": " + std::to_string(a) + " vs " + std::to_string(b));
}

std::string fixture(const char* name) {
    return std::string(BLOCKSHIFT_FIXTURES_DIR) + "/" + name;
}

// --- constructions ---------------------------------------------------------

// Forces the chain product of a random shift to exactly zero.  Three ways:
// zero out one block, split adjacent supports, or zero two adjacent blocks.
BlockShift forced_zero_chain(std::mt19937_64& rng, int variant) {
    for (;;) {
        const BlockShift bs = testsupport::random_blockshift(rng);
        std::vector<ComplexMatrix> blocks = bs.blocks();
        const int nb = static_cast<int>(blocks.size());
        if (variant == 1) {
            // split support at an inner dimension >= 2
            std::vector<int> candidates;
            for (int j = 0; j + 1 < nb; ++j)
                if (blocks[static_cast<size_t>(j)].cols() >= 2) candidates.push_back(j);
            if (candidates.empty()) continue;
            const int j = candidates[rng() % candidates.size()];
            ComplexMatrix& x = blocks[static_cast<size_t>(j)];
            ComplexMatrix& y = blocks[static_cast<size_t>(j) + 1];
            const int r = 1 + static_cast<int>(rng() % (x.cols() - 1));
            for (int i = 0; i < x.rows(); ++i)
                for (int c = r; c < x.cols(); ++c) x(i, c) = 0.0;
            for (int i = 0; i < r; ++i)
                for (int c = 0; c < y.cols(); ++c) y(i, c) = 0.0;
        } else if (variant == 2 && nb >= 2) {
            const int j = static_cast<int>(rng() % (nb - 1));
            blocks[static_cast<size_t>(j)] = ComplexMatrix(
                blocks[static_cast<size_t>(j)].rows(), blocks[static_cast<size_t>(j)].cols());
            blocks[static_cast<size_t>(j) + 1] =
                ComplexMatrix(blocks[static_cast<size_t>(j) + 1].rows(),
                              blocks[static_cast<size_t>(j) + 1].cols());
        } else {
            const int j = static_cast<int>(rng() % nb);
            blocks[static_cast<size_t>(j)] = ComplexMatrix(
                blocks[static_cast<size_t>(j)].rows(), blocks[static_cast<size_t>(j)].cols());
        }
        const BlockShift forced(std::move(blocks));
        if (frobenius_norm(product_chain(forced)) == 0.0) return forced;
    }
}

// Embeds the given scalar weights as a direct summand next to a strictly
// smaller block shift, then hides the split behind per-segment unitaries.
BlockShift scrambled_upper_instance(std::mt19937_64& rng, std::vector<double>& weights_out) {
    std::uniform_real_distribution<double> weight(0.5, 2.0);
    std::uniform_real_distribution<double> shrink(0.3, 1.0);
    const int k = 2 + static_cast<int>(rng() % 3);
    std::vector<double> s(static_cast<size_t>(k) - 1);
    double s_min = 1e300;
    for (double& x : s) {
        x = weight(rng);
        s_min = std::min(s_min, x);
    }
    std::vector<int> pad(static_cast<size_t>(k));
    for (int& b : pad) b = 1 + static_cast<int>(rng() % 2);

    std::vector<ComplexMatrix> blocks;
    for (int j = 0; j + 1 < k; ++j) {
        ComplexMatrix bj = testsupport::random_matrix(rng, pad[static_cast<size_t>(j)],
                                                      pad[static_cast<size_t>(j) + 1]);
        const double target = 0.4 * s_min * shrink(rng);
        bj = scale(bj, target / operator_norm(bj));
        ComplexMatrix aj(1 + pad[static_cast<size_t>(j)], 1 + pad[static_cast<size_t>(j) + 1]);
        aj(0, 0) = s[static_cast<size_t>(j)];
        for (int r = 0; r < bj.rows(); ++r)
            for (int c = 0; c < bj.cols(); ++c) aj(1 + r, 1 + c) = bj(r, c);
        blocks.push_back(aj);
    }
    std::vector<ComplexMatrix> u;
    for (int j = 0; j < k; ++j)
        u.push_back(testsupport::random_unitary(rng, 1 + pad[static_cast<size_t>(j)]));
    for (int j = 0; j + 1 < k; ++j)
        blocks[static_cast<size_t>(j)] = matmul(
            adjoint(u[static_cast<size_t>(j)]),
            matmul(blocks[static_cast<size_t>(j)], u[static_cast<size_t>(j) + 1]));
    weights_out = s;
    return BlockShift(std::move(blocks));
}

// Mirror construction: scalar weights m_j as a summand next to scaled tall
// isometries, so every block has all singular values equal to m_j.
BlockShift scrambled_lower_instance(std::mt19937_64& rng, std::vector<double>& weights_out) {
    std::uniform_real_distribution<double> weight(0.5, 2.0);
    const int k = 2 + static_cast<int>(rng() % 3);
    std::vector<double> m(static_cast<size_t>(k) - 1);
    for (double& x : m) x = weight(rng);
    std::vector<int> pad(static_cast<size_t>(k));
    for (int& c : pad) c = 1 + static_cast<int>(rng() % 3);
    std::sort(pad.begin(), pad.end(), std::greater<int>());  // tall isometries need descent

    std::vector<ComplexMatrix> blocks;
    for (int j = 0; j + 1 < k; ++j) {
        const int rows = pad[static_cast<size_t>(j)];
        const int cols = pad[static_cast<size_t>(j) + 1];
        // Orthonormal columns out of a Gaussian block (rows >= cols).
        ComplexMatrix w = testsupport::random_unitary(rng, rows).block(0, 0, rows, cols);
        ComplexMatrix aj(1 + rows, 1 + cols);
        aj(0, 0) = m[static_cast<size_t>(j)];
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c)
                aj(1 + r, 1 + c) = m[static_cast<size_t>(j)] * w(r, c);
        blocks.push_back(aj);
    }
    std::vector<ComplexMatrix> u;
    for (int j = 0; j < k; ++j)
        u.push_back(testsupport::random_unitary(rng, 1 + pad[static_cast<size_t>(j)]));
    for (int j = 0; j + 1 < k; ++j)
        blocks[static_cast<size_t>(j)] = matmul(
            adjoint(u[static_cast<size_t>(j)]),
            matmul(blocks[static_cast<size_t>(j)], u[static_cast<size_t>(j) + 1]));
    weights_out = m;
    return BlockShift(std::move(blocks));
}

double reconstruction_residual(const EqualityCertificate& c, const ComplexMatrix& a) {
    ComplexMatrix m = matmul(*c.K_basis, matmul(*c.summand, adjoint(*c.K_basis)));
    if (c.complement)
        m = add(m, matmul(*c.complement_basis,
                          matmul(*c.complement, adjoint(*c.complement_basis))));
    return frobenius_norm(sub(m, a));
}

// --- criteria ---------------------------------------------------------------

bool criterion_six_dim() {
    const BlockShift bs = to_blockshift(load_blockshift_document(fixture("example23.json")));
    bool ok = near(numerical_radius_blockshift(bs).value, kHalfSqrt2, 1e-8, "w(A)");
    ok = near(upper_bound(bs), kHalfSqrt2, 1e-8, "w(A')") && ok;
    const EqualityCertificate c = certify_upper_equality(bs);
    ok = expect(c.status == CertificateStatus::EqualityHypothesisViolated,
                "upper certificate status " + to_string(c.status)) && ok;
    ok = expect(kernel_intersection_trivial(assemble(bs)), "kernel intersection") && ok;
    return ok;
}

bool criterion_four_dim() {
    const BlockShift bs = to_blockshift(load_blockshift_document(fixture("example35.json")));
    bool ok = near(numerical_radius_blockshift(bs).value, kHalfSqrt2, 1e-8, "w(A) disk");
    ok = near(operator_norm(assemble(bs)) / 2.0, kHalfSqrt2, 1e-8, "w(A) as norm/2") && ok;
    ok = near(lower_bound(bs), kHalfSqrt2, 1e-8, "w(A'')") && ok;
    const EqualityCertificate c = certify_lower_equality(bs);
    ok = expect(c.status == CertificateStatus::EqualityHypothesisViolated,
                "lower certificate status " + to_string(c.status)) && ok;
    const GammaBound g = gamma_lower(bs);
    ok = expect(!g.applicable, "gamma bound should not apply") && ok;
    return ok;
}

bool criterion_jordan() {
    bool ok = true;
    for (int k = 1; k <= 12; ++k) {
        const ScalarShift jk(std::vector<double>(static_cast<size_t>(k) - 1, 1.0));
        const double w = numerical_radius_blockshift(to_blockshift(jk)).value;
        const double closed = std::cos(std::numbers::pi / (k + 1));
        ok = near(w, closed, 1e-8, "dimension " + std::to_string(k)) && ok;
        if (!ok) break;
    }
    return ok;
}

bool criterion_sandwich() {
    std::mt19937_64 rng(0xB10C5EED);
    for (int t = 0; t < 1000; ++t) {
        const BlockShift bs = testsupport::random_blockshift(rng);
        const double w = numerical_radius_blockshift(bs).value;
        const double lo = lower_bound(bs);
        const double hi = upper_bound(bs);
        if (!expect(lo <= w + 1e-7 && w <= hi + 1e-7,
                    "fine sandwich at instance " + std::to_string(t)))
            return false;
        if (!expect(coarse_lower(bs) <= lo + 1e-9 && hi <= coarse_upper(bs) + 1e-9,
                    "coarse sandwich at instance " + std::to_string(t)))
            return false;
    }
    return true;
}

bool criterion_witness() {
    std::mt19937_64 rng(0x817E55);
    int done = 0;
    while (done < 200) {
        const BlockShift bs = testsupport::random_blockshift(rng);
        if (operator_norm(product_chain(bs)) <= 1e-12) continue;
        const WitnessVector w = lower_witness(bs, rng());
        if (!expect(!w.perturbed, "unexpected perturbation at instance " +
                                      std::to_string(done)))
            return false;
        if (!expect(std::abs(vec_norm(w.v) - 1.0) <= 1e-12,
                    "witness norm at instance " + std::to_string(done)))
            return false;
        if (!expect(w.attained >= lower_bound(bs) - 1e-8,
                    "witness floor at instance " + std::to_string(done)))
            return false;
        ++done;
    }
    return true;
}

bool criterion_perturbation() {
    std::mt19937_64 rng(0x9E4712);
    const double epsilons[] = {1e-2, 1e-4, 1e-6};
    for (int t = 0; t < 200; ++t) {
        const BlockShift bs = forced_zero_chain(rng, t % 3);
        for (const double eps : epsilons) {
            const std::vector<ComplexMatrix> out =
                perturb_nonzero_chain(bs.blocks(), eps, rng());
            for (size_t j = 0; j < out.size(); ++j) {
                if (!expect(operator_norm(sub(out[j], bs.blocks()[j])) < eps,
                            "perturbation size at instance " + std::to_string(t)))
                    return false;
            }
            const BlockShift moved{std::vector<ComplexMatrix>(out)};
            if (!expect(operator_norm(product_chain(moved)) > 0.0,
                        "chain still zero at instance " + std::to_string(t)))
                return false;
        }
    }
    return true;
}

bool criterion_certificates() {
    std::mt19937_64 rng(0xCE87);
    for (int t = 0; t < 50; ++t) {
        std::vector<double> s;
        const BlockShift bs = scrambled_upper_instance(rng, s);
        const EqualityCertificate c = certify_upper_equality(bs, 1e-8, rng());
        if (!expect(c.status == CertificateStatus::EqualityWithSummand,
                    "upper instance " + std::to_string(t) + ": " + c.reason))
            return false;
        if (!expect(reconstruction_residual(c, assemble(bs)) <= 1e-8,
                    "upper reconstruction at instance " + std::to_string(t)))
            return false;
        const double ws = numerical_radius_general(*c.summand).value;
        if (!near(ws, numerical_radius_blockshift(bs).value, 1e-8,
                  "upper summand radius at instance " + std::to_string(t)))
            return false;
    }
    for (int t = 0; t < 50; ++t) {
        std::vector<double> m;
        const BlockShift bs = scrambled_lower_instance(rng, m);
        const EqualityCertificate c = certify_lower_equality(bs, 1e-8, rng());
        if (!expect(c.status == CertificateStatus::EqualityWithSummand,
                    "lower instance " + std::to_string(t) + ": " + c.reason))
            return false;
        if (!expect(reconstruction_residual(c, assemble(bs)) <= 1e-8,
                    "lower reconstruction at instance " + std::to_string(t)))
            return false;
        const double ws = numerical_radius_general(*c.summand).value;
        if (!near(ws, numerical_radius_blockshift(bs).value, 1e-8,
                  "lower summand radius at instance " + std::to_string(t)))
            return false;
    }
    return true;
}

bool criterion_disk() {
    std::mt19937_64 rng(0xD15C);
    for (int t = 0; t < 100; ++t) {
        const BlockShift bs = testsupport::random_blockshift(rng);
        const ComplexMatrix a = assemble(bs);
        const double base = hermitian_eigen(hermitian_part(a)).eigenvalues.back();
        for (int sidx = 0; sidx < 16; ++sidx) {
            const double theta = 2.0 * std::numbers::pi * sidx / 16.0;
            const ComplexMatrix rot = scale(a, std::polar(1.0, -theta));
            const double lam = hermitian_eigen(hermitian_part(rot)).eigenvalues.back();
            if (!expect(std::abs(lam - base) <= 1e-9,
                        "rotation " + std::to_string(sidx) + " at instance " +
                            std::to_string(t)))
                return false;
        }
    }
    return true;
}

bool criterion_oracle() {
    std::mt19937_64 rng(0x04AC1E);
    for (int t = 0; t < 100; ++t) {
        const BlockShift bs = testsupport::random_blockshift(rng, 2, 5, 3);
        const double sweep = numerical_radius_general(assemble(bs)).value;
        const double direct = numerical_radius_blockshift(bs).value;
        if (!near(sweep, direct, 1e-8, "instance " + std::to_string(t))) return false;
    }
    return true;
}

struct Criterion {
    const char* name;
    double limit_s;
    bool (*run)();
};

}  // namespace

int main() {
    const Criterion criteria[] = {
        {"six-dim counterexample reproduction", 1.0, criterion_six_dim},
        {"four-dim counterexample reproduction", 1.0, criterion_four_dim},
        {"closed form for unit-weight shifts", 1.0, criterion_jordan},
        {"sandwich bounds on 1000 random shifts", 60.0, criterion_sandwich},
        {"witness vectors on 200 nonzero-chain shifts", 30.0, criterion_witness},
        {"perturbation on 200 forced-zero chains", 30.0, criterion_perturbation},
        {"equality certificates on 100 split instances", 60.0, criterion_certificates},
        {"disk symmetry under 16 rotations", 30.0, criterion_disk},
        {"sweep oracle agreement on 100 shifts", 60.0, criterion_oracle},
    };

    int failures = 0;
    int id = 0;
    for (const Criterion& c : criteria) {
        ++id;
        g_detail.clear();
        const auto start = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.run();
        } catch (const std::exception& e) {
            g_detail = std::string("exception: ") + e.what();
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = elapsed <= c.limit_s;
        if (ok && in_time) {
            std::printf("PASS  %d  %s  (%.2f s, limit %.0f s)\n", id, c.name, elapsed,
                        c.limit_s);
        } else {
            ++failures;
            std::printf("FAIL  %d  %s  (%.2f s, limit %.0f s)%s%s\n", id, c.name, elapsed,
                        c.limit_s, g_detail.empty() ? "" : " -- ",
                        g_detail.c_str());
            if (!in_time && ok) std::printf("      over time limit\n");
        }
        std::fflush(stdout);
    }
    if (failures > 0) {
        std::printf("%d of 9 criteria failed\n", failures);
        return 1;
    }
    std::printf("all 9 criteria passed\n");
    return 0;
}
