#include "sigrect/setsys.hpp"

#include <algorithm>

namespace sigrect {

namespace {

int intersection_size(const std::vector<int>& a, const std::vector<int>& b) {
    int count = 0;
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib)
            ++ia;
        else if (*ib < *ia)
            ++ib;
        else {
            ++count;
            ++ia;
            ++ib;
        }
    }
    return count;
}

std::vector<int> full_range(int n) {
    std::vector<int> out(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) out[static_cast<size_t>(i)] = i;
    return out;
}

std::vector<int> complement(const std::vector<int>& set, int n) {
    std::vector<int> out;
    auto it = set.begin();
    for (int i = 0; i < n; ++i) {
        if (it != set.end() && *it == i)
            ++it;
        else
            out.push_back(i);
    }
    return out;
}

}  // namespace

void validate_family(const SetFamilyPair& p) {
    if (p.d < 0) throw ValidationError("SetFamilyPair: universe size must be nonnegative");
    if (p.S.empty() || p.T.empty()) throw ValidationError("SetFamilyPair: both families must be nonempty");
    auto check = [&](const std::vector<std::vector<int>>& fam, const char* name) {
        for (const auto& set : fam) {
            for (size_t t = 0; t < set.size(); ++t) {
                if (set[t] < 0 || set[t] >= p.d)
                    throw ValidationError(std::string("SetFamilyPair: ") + name + " member outside universe of size " +
                                          std::to_string(p.d));
                if (t > 0 && set[t] <= set[t - 1])
                    throw ValidationError(std::string("SetFamilyPair: ") + name + " member set not sorted/deduplicated");
            }
        }
    };
    check(p.S, "S");
    check(p.T, "T");
}

IntMatrix family_to_matrix(const SetFamilyPair& p) {
    validate_family(p);
    IntMatrix out(static_cast<int>(p.S.size()), static_cast<int>(p.T.size()));
    for (int i = 0; i < out.rows(); ++i)
        for (int j = 0; j < out.cols(); ++j)
            out.at(i, j) = intersection_size(p.S[static_cast<size_t>(i)], p.T[static_cast<size_t>(j)]);
    return out;
}

std::vector<std::optional<Rectangle>> element_rectangles(const SetFamilyPair& p) {
    validate_family(p);
    std::vector<std::optional<Rectangle>> out;
    out.reserve(static_cast<size_t>(p.d));
    for (int k = 0; k < p.d; ++k) {
        std::vector<int> rows, cols;
        for (size_t i = 0; i < p.S.size(); ++i)
            if (std::binary_search(p.S[i].begin(), p.S[i].end(), k)) rows.push_back(static_cast<int>(i));
        for (size_t j = 0; j < p.T.size(); ++j)
            if (std::binary_search(p.T[j].begin(), p.T[j].end(), k)) cols.push_back(static_cast<int>(j));
        if (rows.empty() || cols.empty())
            out.push_back(std::nullopt);
        else
            out.push_back(Rectangle(std::move(rows), std::move(cols)));
    }
    return out;
}

SetFamilyPair rectangles_to_family(const std::vector<std::optional<Rectangle>>& rects, int m, int n) {
    if (m < 1 || n < 1) throw ValidationError("rectangles_to_family: dimensions must be >= 1");
    SetFamilyPair p;
    p.d = static_cast<int>(rects.size());
    p.S.assign(static_cast<size_t>(m), {});
    p.T.assign(static_cast<size_t>(n), {});
    for (int k = 0; k < p.d; ++k) {
        const auto& r = rects[static_cast<size_t>(k)];
        if (!r) continue;
        if (!r->fits(m, n)) throw BoundsError("rectangles_to_family: rectangle outside ambient shape");
        for (const int i : r->rows) p.S[static_cast<size_t>(i)].push_back(k);
        for (const int j : r->cols) p.T[static_cast<size_t>(j)].push_back(k);
    }
    return p;  // element indices were visited in increasing order, sets are sorted
}

SetFamilyPair rectangles_to_family(const std::vector<Rectangle>& rects, int m, int n) {
    std::vector<std::optional<Rectangle>> opt(rects.begin(), rects.end());
    return rectangles_to_family(opt, m, n);
}

CrossIntersectingReduction signed_to_cross_intersecting(const BoolMatrix& M, const SignedDecomposition& dec) {
    if (!verify_decomposition(M, dec))
        throw ValidationError("signed_to_cross_intersecting: decomposition does not evaluate to the matrix");
    const int m = M.rows(), n = M.cols();
    const int u = static_cast<int>(dec.terms.size());

    // Gadget pair (2i-1, 2i): the positive case contributes J and R_i, the
    // negative case the two rectangles tiling J - R_i; either way the pair
    // sums to J + sign * R_i, so the whole list sums to M + uJ.
    std::vector<std::optional<Rectangle>> gadgets;
    gadgets.reserve(static_cast<size_t>(2 * u));
    for (const auto& term : dec.terms) {
        if (term.sign == 1) {
            gadgets.push_back(Rectangle(full_range(m), full_range(n)));
            gadgets.push_back(term.rect);
        } else {
            const std::vector<int> row_comp = complement(term.rect.rows, m);
            const std::vector<int> col_comp = complement(term.rect.cols, n);
            if (row_comp.empty())
                gadgets.push_back(std::nullopt);
            else
                gadgets.push_back(Rectangle(row_comp, full_range(n)));
            if (col_comp.empty())
                gadgets.push_back(std::nullopt);
            else
                gadgets.push_back(Rectangle(term.rect.rows, col_comp));
        }
    }
    return CrossIntersectingReduction{rectangles_to_family(gadgets, m, n), u};
}

bool check_cross_intersecting(const SetFamilyPair& p, const IntersectionSpec& spec) {
    validate_family(p);
    if (spec.sizes.empty()) throw ValidationError("IntersectionSpec: admissible sizes must be nonempty");
    for (const auto& s : p.S)
        for (const auto& t : p.T)
            if (std::find(spec.sizes.begin(), spec.sizes.end(), intersection_size(s, t)) == spec.sizes.end())
                return false;
    return true;
}

BoolMatrix ab_to_boolean(const IntMatrix& Mab, std::int64_t a, std::int64_t b) {
    if (a >= b) throw ValidationError("ab_to_boolean: requires a < b");
    BoolMatrix out(Mab.rows(), Mab.cols());
    for (int i = 0; i < Mab.rows(); ++i)
        for (int j = 0; j < Mab.cols(); ++j) {
            const std::int64_t x = Mab.at(i, j);
            if (x != a && x != b)
                throw ValidationError("ab_to_boolean: entry " + std::to_string(x) + " at (" + std::to_string(i) + "," +
                                      std::to_string(j) + ") is neither " + std::to_string(a) + " nor " +
                                      std::to_string(b));
            out.set(i, j, x == b ? 1 : 0);
        }
    return out;
}

MonochromaticSubfamilies best_monochromatic_subfamilies(const SetFamilyPair& p, std::int64_t a, std::int64_t b,
                                                        int enumeration_cap) {
    const IntMatrix mab = family_to_matrix(p);
    const BoolMatrix image = ab_to_boolean(mab, a, b);  // also enforces the {a,b} precondition
    const MonoRectResult mono = max_monochromatic_rectangle(image, enumeration_cap);
    return MonochromaticSubfamilies{mono.rect.rows, mono.rect.cols, mono.value ? b : a, mono.density};
}

}  // namespace sigrect
