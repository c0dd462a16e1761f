#pragma once

// Constructive signed-rectangle decomposition engine. Pipeline:
//   1. grow a maximal independent set S of columns (greedy, in a given order),
//   2. express every column as a +-1 combination of columns of S via a
//      subset-sum collision in S u {c},
//   3. split coefficients by sign into at most one positive and one negative
//      rectangle per member of S, giving <= 2|S| primitive terms.

#include <utility>
#include <vector>

#include "sigrect/matrix.hpp"

namespace sigrect {

// Maximal independent column set, in greedy acceptance order.
struct IndependentSet {
    std::vector<int> columns;
    int m = 0, n = 0;
};

// Coefficients of one column over the members of S. `columns` mirrors the
// independent set's order; values are in {-1, 0, +1}.
struct CoefficientVector {
    std::vector<int> columns;
    std::vector<int> values;

    int at(int col) const;
};

// Greedy maximal independent set scanned in `order` (a permutation of the
// column indices; empty means ascending). Deterministic for a fixed order.
IndependentSet maximal_independent_columns(const BoolMatrix& M, const std::vector<int>& order = {},
                                           int cap = kDefaultIndependenceCap);

// Two disjoint subsets (A, B) of s u {c} with equal column-sums and c in B.
// Subsets of s u {c} (sorted ascending) are scanned in increasing bitmask
// order; the first collision wins, then common elements are stripped.
// Throws std::logic_error if s u {c} is independent (s was not maximal).
std::pair<std::vector<int>, std::vector<int>> find_equal_sum_subsets(const BoolMatrix& M, const IndependentSet& s,
                                                                     int c);

// Column c as a +-1 combination of columns of s: col_c = sum(A) - sum(B\{c}).
// Members of s get their unit vector directly.
CoefficientVector express_column(const BoolMatrix& M, const IndependentSet& s, int c);

// The full constructive decomposition: for each c in S emits the positive
// rectangle support(c) x {y : alpha_c(y) = +1} and then the negative one,
// skipping empty sides. The all-zero matrix yields the empty decomposition.
SignedDecomposition signed_rectangle_decomposition(const BoolMatrix& M, const std::vector<int>& order = {},
                                                   int cap = kDefaultIndependenceCap);

// Exact integer check of 2^sizeS <= (sizeS+1)^r.
bool independent_set_bound_check(int size_s, int r);

}  // namespace sigrect
