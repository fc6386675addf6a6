#pragma once

#include <optional>
#include <string>

#include "factorwidth/sparse_vector.hpp"
#include "factorwidth/sym_matrix.hpp"

namespace fw {

/// Separating certificate for non-membership in the width-k cone: a matrix
/// whose every k x k principal submatrix is PSD, paired with a strictly
/// negative trace inner product against the tested matrix.
struct DualWitness {
    SymMatrix w;
    double inner_product = 0.0;
};

enum class Membership { Member, NotMember, Undetermined };

const char* membership_name(Membership m);

/// Verdict of the width-k cone membership solver.
///
/// Member       => certificate reconstructs the input within tol_recon and
///                 every vector has support <= k.
/// NotMember    => witness passes verify_dual_witness, which is a proof.
/// Undetermined => neither side could be certified within budget;
///                 distance_estimate carries the final residual norm, an
///                 upper bound on the Frobenius distance to the cone.
struct MembershipVerdict {
    Membership status = Membership::Undetermined;
    double distance_estimate = 0.0;
    std::optional<FWDecomposition> certificate;
    std::optional<DualWitness> witness;
    long iterations_used = 0;
};

/// Width 1 holds exactly for diagonal PSD matrices. Throws NotPsd.
bool factor_width_1(const SymMatrix& a, const ToleranceConfig& cfg = {});

/// Width <= 2 is equivalent to scaled diagonal dominance; decided exactly by
/// a diagonal-dominance fast accept followed by the comparison-matrix PSD
/// test. Throws NotPsd.
bool factor_width_le_2(const SymMatrix& a, const ToleranceConfig& cfg = {});

/// Structural width bound: min of the bandwidth, the clique number when the
/// support graph is chordal, and n. `source` is one of "bandwidth",
/// "chordal", "trivial" ("trivial" when nothing beats n).
struct WidthBound {
    int bound = 0;
    std::string source;
};

WidthBound structural_width_upper_bound(const SymMatrix& a, const ToleranceConfig& cfg = {});

/// Block-coordinate descent over one PSD block per k-subset of indices,
/// minimizing || A - sum of blocks ||_F. Sweeps are cyclic in lexicographic
/// subset order, each step projecting the residual-adjusted block onto the
/// PSD cone of its k x k submatrix; results are deterministic. An optional
/// warm start seeds the blocks from an existing decomposition.
///
/// Throws NotPsd and BadK; an exhausted iteration budget yields
/// Undetermined, not an error.
MembershipVerdict membership(const SymMatrix& a, int k, const ToleranceConfig& cfg = {},
                             const FWDecomposition* warm_start = nullptr);

/// True iff every k x k principal submatrix of w.w is PSD within tol_psd and
/// trace(w.w * a) < -tol_psd * ||a||_F * ||w||_F. A true result proves that
/// `a` lies outside the width-k cone.
bool verify_dual_witness(const SymMatrix& a, const DualWitness& w, int k,
                         const ToleranceConfig& cfg = {});

enum class Exactness { Exact, Numeric };

/// Factor width search result. When the solver could not separate some
/// widths, bracket_lo/bracket_hi report the surviving range (they equal
/// `width` otherwise) and exactness is Numeric.
struct FactorWidthResult {
    int width = 0;
    Exactness exactness = Exactness::Exact;
    int bracket_lo = 0;
    int bracket_hi = 0;

    bool determined() const noexcept { return bracket_lo == bracket_hi; }
};

/// Smallest k admitting a width-k decomposition: exact fast paths for
/// k in {1,2}, then a structural upper bound, then binary search over the
/// membership solver (valid because the width-k cones are nested).
FactorWidthResult factor_width(const SymMatrix& a, const ToleranceConfig& cfg = {});

}  // namespace fw
