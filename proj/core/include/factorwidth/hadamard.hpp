#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "factorwidth/membership.hpp"
#include "factorwidth/sym_matrix.hpp"

namespace fw {

/// Term-count bound for an entrywise product: r_A * r_B. Overflow-checked.
long fran_product_bound(long r_a, long r_b);

/// Term-count bound for the s-th entrywise power: C(r + s - 1, s).
/// Throws Overflow when the binomial leaves the 64-bit range.
long fran_power_bound(long r, long s);

enum class PowerVerdict { Guaranteed, NotGuaranteed, CounterexampleClass };

const char* power_verdict_name(PowerVerdict v);

/// Rule lookup for "does the s-th entrywise power of a width-<=k matrix keep
/// width <= k". `rule` names the governing fact:
///   "diagonal"         k = 1, trivially preserved;
///   "integer-power"    any positive integer s;
///   "fw2-power"        k = 2 and s >= 1;
///   "fitzgerald-horn"  k = n and (s integer or s >= n-2);
///   "below-threshold"  s < min(k-1, n-2) non-integer: a counterexample
///                      class exists;
///   "conjectural"      the open regime, nothing guaranteed either way.
struct PowerRule {
    PowerVerdict verdict = PowerVerdict::NotGuaranteed;
    std::string rule;
};

/// Preconditions checked: A PSD, and entrywise nonnegative when s is not an
/// integer. Width <= k itself is the caller's contract.
PowerRule power_preserves_width(const SymMatrix& a, int k, double s,
                                const ToleranceConfig& cfg = {});

/// first_success is the least m <= m_cap whose m-th entrywise power passes
/// the width-2 test; verified_through is the largest m' <= m_cap such that
/// every power in [first_success, m'] passed too (the test sequence is not
/// assumed monotone). Requires every 2x2 principal submatrix positive
/// definite, otherwise DegenerateSubmatrix; CapExceeded past m_cap.
struct MinimalPowerResult {
    long first_success = 0;
    long verified_through = 0;
};

MinimalPowerResult minimal_power_to_fw2(const SymMatrix& a, long m_cap = 10000,
                                        const ToleranceConfig& cfg = {});

struct TrialRecord {
    long trial = 0;
    std::uint64_t seed = 0;
    std::string verdict;       // membership verdict on the powered sample
    double residual = 0.0;     // solver distance estimate
    bool counterexample = false;
};

struct CounterexampleHit {
    long trial = 0;
    SymMatrix matrix;    // the sampled width-<=k matrix A
    SymMatrix powered;   // A^{element-wise s}
    DualWitness witness;
};

struct ConjectureSearchResult {
    std::vector<CounterexampleHit> counterexamples;
    long tested = 0;
    std::vector<TrialRecord> trials;
};

/// Samples random entrywise-nonnegative width-<=k matrices (sums of
/// nonnegative k-support outer products), raises them to the s-th entrywise
/// power, and reports any verified non-membership at width k. Only the
/// regime s >= min(k-1, n-2) with s non-integer is searchable; anything else
/// is BadRegime. Per-trial sub-seeds derive from (seed, trial), so results
/// do not depend on execution order.
ConjectureSearchResult conjecture_search(int n, int k, double s, long trials,
                                         std::uint64_t seed, const ToleranceConfig& cfg = {});

}  // namespace fw
