#pragma once

// Exact brute-force oracles at desk scale: partitioning number p(M), signed
// rectangle rank ur(M), and the maximum monochromatic rectangle. These are
// ground truth for the constructive engine; budgets are node counts, so
// results are reproducible.

#include <cstdint>
#include <optional>

#include "sigrect/matrix.hpp"

namespace sigrect {

inline constexpr std::uint64_t kDefaultNodeBudget = 20'000'000;

// Cap on min(m, n) for the monochromatic enumeration (2^min subsets).
inline constexpr int kDefaultMonoCap = 20;

struct OracleResult {
    // Optimum when exhausted. Otherwise the best upper bound found so far,
    // or lower_bound if no complete solution was seen.
    int value = 0;
    int lower_bound = 0;
    bool exhausted = false;
    std::uint64_t nodes = 0;
    // Partition witnesses carry all-(+1) terms; signed witnesses carry signs.
    std::optional<SignedDecomposition> witness;
};

// Minimum number of all-1 rectangles partitioning the 1-entries of M.
// Branches on the first uncovered 1-cell over all rectangles of the
// uncovered region that contain it (restricting to maximal rectangles is
// unsound for partitions), pruned by the region's rank, a fooling set, and
// a density bound.
OracleResult exact_partition_number(const BoolMatrix& M, std::uint64_t budget_nodes = kDefaultNodeBudget);

// Minimum t with M = sum of t signed primitive rectangles. Iterative
// deepening on t starting at exact_rank(M); the residual search prunes on
// residual rank and residual magnitude, with terms in a fixed canonical
// order to break permutation symmetry.
OracleResult exact_signed_rank(const BoolMatrix& M, std::uint64_t budget_nodes = kDefaultNodeBudget);

struct MonoRectResult {
    Rectangle rect;
    int value = 0;  // 0 or 1
    Rational density;
};

// Maximum-area monochromatic rectangle. Ties break toward value 1, then the
// lexicographically least row set, then column set.
MonoRectResult max_monochromatic_rectangle(const BoolMatrix& M, int enumeration_cap = kDefaultMonoCap);

}  // namespace sigrect
