#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "factorwidth/sym_matrix.hpp"

namespace fw {

struct BoundEntry {
    long value = 0;
    std::string source;
};

/// Provenance-tagged bounds on the width-k term count, collapsed to an exact
/// value when the best lower and upper bounds meet. `notes` carries
/// uncertified side information (e.g. a greedy clique-cover value, which
/// bounds the cover but not the term count).
struct BoundsReport {
    int k = 0;
    std::vector<BoundEntry> lower;
    std::vector<BoundEntry> upper;
    std::optional<long> exact;
    std::vector<std::string> notes;
};

/// Lower bounds: rank, the pair-counting bound ceil(2*nnzu/(k(k-1))), the
/// covering number (exact when certified, else its classical bound) for
/// all-nonzero matrices, and the k-clique cover number of the support graph
/// when certified. Uncertified solver values never enter the list.
std::vector<BoundEntry> fran_lower_bounds(const SymMatrix& a, int k,
                                          const ToleranceConfig& cfg = {},
                                          std::uint64_t budget = 10'000'000);

/// Upper bounds: k * C(n,k), the real Caratheodory bound n(n+1)/2, the term
/// count of every applicable constructive decomposition, and the membership
/// certificate size when the solver proves membership.
std::vector<BoundEntry> fran_upper_bounds(const SymMatrix& a, int k,
                                          const ToleranceConfig& cfg = {},
                                          std::uint64_t budget = 10'000'000);

BoundsReport bounds_report(const SymMatrix& a, int k, const ToleranceConfig& cfg = {},
                           std::uint64_t budget = 10'000'000);

/// Exact width-k term count for matrices up to 4x4, where the closed case
/// analysis closes every pattern except the pentadiagonal and cyclic ones
/// (reported as a range). `k` is the factor width the value refers to;
/// `trace` records every rule that fired. Throws TooLarge past n = 4.
struct SmallFranResult {
    int k = 0;
    bool exact = false;
    long lo = 0;
    long hi = 0;
    std::vector<std::string> trace;

    long value() const { return lo; }
};

SmallFranResult fran_exact_small(const SymMatrix& a, const ToleranceConfig& cfg = {},
                                 std::uint64_t budget = 10'000'000);

}  // namespace fw
