#pragma once

// Cross-intersecting set systems and their matrix correspondence:
// M[i,j] = |S_i cap T_j| equals the sum of the d element rectangles
// R_k[i,j] = 1 iff k in S_i cap T_j, so {a,b}-valued matrices that are sums
// of d primitive matrices and {a,b}-cross-intersecting pairs over [d] are
// the same object. signed_to_cross_intersecting converts a verified signed
// decomposition of length u into a {u,u+1}-cross-intersecting pair over a
// universe of exactly 2u elements by replacing each signed rectangle with a
// pair of unsigned ones summing to J + sign * R.

#include <optional>
#include <vector>

#include "sigrect/matrix.hpp"
#include "sigrect/oracles.hpp"

namespace sigrect {

// Two list-families of subsets of {0..d-1}; repeated member sets are
// allowed, the matrix correspondence is index-based.
struct SetFamilyPair {
    int d = 0;
    std::vector<std::vector<int>> S, T;
};

// Admissible intersection sizes L.
struct IntersectionSpec {
    std::vector<int> sizes;
};

// Throws ValidationError unless every set is within {0..d-1} and both
// families are nonempty. Member sets are expected sorted and deduplicated;
// parsing and construction helpers maintain that.
void validate_family(const SetFamilyPair& p);

// entry (i,j) = |S_i cap T_j|
IntMatrix family_to_matrix(const SetFamilyPair& p);

// Rectangle k has rows {i : k in S_i} and cols {j : k in T_j}; an element
// missing from one side contributes the zero matrix and yields nullopt.
std::vector<std::optional<Rectangle>> element_rectangles(const SetFamilyPair& p);

// Inverse direction: d = |rects|, S_i = {k : i in rows(rect_k)},
// T_j = {k : j in cols(rect_k)}.
SetFamilyPair rectangles_to_family(const std::vector<std::optional<Rectangle>>& rects, int m, int n);
SetFamilyPair rectangles_to_family(const std::vector<Rectangle>& rects, int m, int n);

struct CrossIntersectingReduction {
    SetFamilyPair pair;
    int u = 0;
};

// Requires verify_decomposition(M, dec); u = |dec|. The result satisfies
// |S_i cap T_j| = M[i,j] + u for all cells, hence is {u,u+1}-cross-
// intersecting over a universe of size exactly 2u (gadget rectangles with an
// empty side stay as universe elements belonging to no set).
CrossIntersectingReduction signed_to_cross_intersecting(const BoolMatrix& M, const SignedDecomposition& dec);

// true iff every pairwise |S_i cap T_j| is an admissible size
bool check_cross_intersecting(const SetFamilyPair& p, const IntersectionSpec& spec);

// B[i,j] = 1 iff Mab[i,j] = b, so Mab = (b-a)B + aJ. Requires a < b and all
// entries in {a,b}.
BoolMatrix ab_to_boolean(const IntMatrix& Mab, std::int64_t a, std::int64_t b);

struct MonochromaticSubfamilies {
    std::vector<int> s_indices, t_indices;  // indices into S and T
    std::int64_t value = 0;                 // a or b
    Rational density;
};

// Largest product subfamily pair that is {a}- or {b}-cross-intersecting;
// delegates to max_monochromatic_rectangle on the 0/1 image of the
// intersection matrix. Requires the pair to be {a,b}-cross-intersecting.
MonochromaticSubfamilies best_monochromatic_subfamilies(const SetFamilyPair& p, std::int64_t a, std::int64_t b,
                                                        int enumeration_cap = kDefaultMonoCap);

}  // namespace sigrect
