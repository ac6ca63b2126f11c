#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "blockshift/complex_matrix.hpp"
#include "blockshift/shift.hpp"

namespace blockshift {

// w(A) <= w(A'), where A' is the norm compression.
double upper_bound(const BlockShift& bs);

// w(A) >= w(A''), where A'' is the minimum-modulus compression.
double lower_bound(const BlockShift& bs);

// max_j ||A_j|| * cos(pi/(k+1)) and min_j m(A_j) * cos(pi/(k+1)).
double coarse_upper(const BlockShift& bs);
double coarse_lower(const BlockShift& bs);

struct GammaBound {
    bool applicable;
    std::optional<double> value;  // w of the reduced-minimum-modulus compression
    std::string reason;
};

// Lower bound through the reduced minimum modulus.  Valid unconditionally
// for k = 2; for k = 3 only when rank A_1 + rank A_2 exceeds n_2; reported
// not applicable otherwise.
GammaBound gamma_lower(const BlockShift& bs, double tol_rank = 1e-10);

// For k = 2 with w(A) = w(A''') the shift splits into copies of the
// one-weight shift [0 gamma; 0 0] plus zeros exactly when every nonzero
// singular value of A_1 equals gamma(A_1).  This checks that singular-value
// condition.
bool gamma_k2_summand_structure(const BlockShift& bs, double tol = 1e-8);

struct WitnessVector {
    ComplexMatrix v;                    // unit vector in the full space
    double attained;                    // Re <A v, v> against the input shift
    std::vector<double> perron_y;       // nonnegative unit maximizer of the compression
    std::vector<ComplexMatrix> chain_x; // unit segment vectors x_1..x_k
    ComplexMatrix u;                    // seed vector in the last segment
    bool perturbed;                     // true when the zero-chain fallback ran
    double eps_used;                    // perturbation size (0 when not perturbed)
};

// Constructs a unit vector v with <A v, v> >= w(A'') (minus eps terms when
// the chain product vanishes and the blocks had to be perturbed first):
// v's segment j is y_j * x_j with x_j the normalized partial chain
// A_j...A_{k-1} u and y the entrywise-nonnegative maximizer of Re(A'').
WitnessVector lower_witness(const BlockShift& bs, std::uint64_t seed = 0,
                            std::optional<double> eps = std::nullopt);

// Replaces blocks with a nonzero chain product by themselves, and otherwise
// moves each block by strictly less than eps so the chain product becomes
// nonzero.  Pair-of-blocks base cases: both zero -> eps/2 into each (1,1)
// entry; exactly one zero -> eps/2 at the index matched to the other
// factor's largest entry; both nonzero -> one column of the second factor
// nudged along the conjugate direction of the first factor's largest entry.
// Longer chains recurse on the prefix and repeat the pair step against the
// accumulated product.  The construction is deterministic; seed is accepted
// for interface stability.
std::vector<ComplexMatrix> perturb_nonzero_chain(const std::vector<ComplexMatrix>& blocks,
                                                 double eps, std::uint64_t seed = 0);

enum class CertificateStatus {
    EqualityWithSummand,
    EqualityHypothesisViolated,
    NoEquality,
};

std::string to_string(CertificateStatus s);

struct CertificateResiduals {
    double invariance = 0.0;  // max(||A K - K S||_F, ||A* K - K S*||_F), unit-norm frame
    double similarity = 0.0;  // ||S - compression||_F, unit-norm frame
};

struct EqualityCertificate {
    CertificateStatus status;
    std::optional<ComplexMatrix> K_basis;          // n x k orthonormal columns
    std::optional<ComplexMatrix> summand;          // k x k compression of A onto K
    std::optional<ComplexMatrix> complement;       // compression of A onto the orthocomplement
    std::optional<ComplexMatrix> complement_basis; // n x (n-k)
    CertificateResiduals residuals;
    std::string reason;
};

// Decides whether w(A) = w(A') comes with A' split off as a direct summand.
// A is normalized to unit operator norm first and tol_cert read absolutely
// in that frame.  Requires every block nonzero (equality-hypothesis-violated
// otherwise); searches extremal vectors of Re(A) over the top eigenspace,
// including seeded random combinations, at most 64 attempts.
EqualityCertificate certify_upper_equality(const BlockShift& bs, double tol_cert = 1e-8,
                                           std::uint64_t seed = 0);

// Mirror certificate for w(A) = w(A''), built from a top right-singular
// vector of the chain product.  Requires a nonzero chain product.
EqualityCertificate certify_lower_equality(const BlockShift& bs, double tol_cert = 1e-8,
                                           std::uint64_t seed = 0);

// ker M intersect ker M* = {0}, tested through the smallest singular value
// of [M; M*] stacked.
bool kernel_intersection_trivial(const ComplexMatrix& m, double tol_rank = 1e-10);

struct BoundsReport {
    double w_A;
    double w_upper;
    double w_lower;
    double coarse_upper;
    double coarse_lower;
    double M;      // max block operator norm
    double m_min;  // min block minimum modulus
    std::optional<double> gamma_bound;
    bool gamma_applicable;
    std::string gamma_reason;
};

// All of the above in one shot.  Throws OrderingViolationError if the
// computed numbers violate w_lower <= w_A <= w_upper or the coarse
// brackets; that would mean a bug, not bad input.
BoundsReport bounds_report(const BlockShift& bs, double tol_rank = 1e-10);

}  // namespace blockshift
