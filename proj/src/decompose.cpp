#include "sigrect/decompose.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_map>

#include <boost/multiprecision/cpp_int.hpp>

namespace sigrect {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t row_weight(int i) { return splitmix64(0x5171726563740000ULL + static_cast<std::uint64_t>(i)); }

std::uint64_t column_fingerprint(const BoolMatrix& M, int c) {
    std::uint64_t fp = 0;
    for (int i = 0; i < M.rows(); ++i)
        if (M.at(i, c)) fp += row_weight(i);
    return fp;
}

std::vector<int> masked_columns(const std::vector<int>& elems, std::uint64_t mask) {
    std::vector<int> out;
    for (size_t t = 0; t < elems.size(); ++t)
        if ((mask >> t) & 1u) out.push_back(elems[t]);
    return out;
}

}  // namespace

int CoefficientVector::at(int col) const {
    for (size_t i = 0; i < columns.size(); ++i)
        if (columns[i] == col) return values[i];
    throw BoundsError("CoefficientVector: column " + std::to_string(col) + " is not a member of S");
}

IndependentSet maximal_independent_columns(const BoolMatrix& M, const std::vector<int>& order, int cap) {
    const int n = M.cols();
    std::vector<int> scan = order;
    if (scan.empty()) {
        scan.resize(static_cast<size_t>(n));
        for (int j = 0; j < n; ++j) scan[static_cast<size_t>(j)] = j;
    } else {
        std::vector<int> sorted = scan;
        std::sort(sorted.begin(), sorted.end());
        bool valid = sorted.size() == static_cast<size_t>(n);
        for (int j = 0; valid && j < n; ++j) valid = sorted[static_cast<size_t>(j)] == j;
        if (!valid)
            throw ValidationError("maximal_independent_columns: order must be a permutation of the column indices");
    }

    if (cap > kIndependenceCapCeiling)
        throw ResourceLimitError("maximal_independent_columns: cap " + std::to_string(cap) +
                                 " above the supported ceiling " + std::to_string(kIndependenceCapCeiling));

    IndependentSet s;
    s.m = M.rows();
    s.n = n;

    // All subset sums of the current S, kept as (additive fingerprint, mask).
    // Candidate c joins iff no sum(Y) + col_c equals some sum(Z); fingerprint
    // hits are re-verified exactly before rejecting c.
    std::vector<std::pair<std::uint64_t, std::uint64_t>> subsets{{0u, 0u}};
    std::unordered_multimap<std::uint64_t, std::uint64_t> by_fp{{0u, 0u}};

    auto exact_sum = [&](std::uint64_t mask, int extra_col) {
        std::vector<int> cols = masked_columns(s.columns, mask);
        if (extra_col >= 0) cols.push_back(extra_col);
        return column_sum(M, cols);
    };

    for (const int c : scan) {
        if (static_cast<int>(s.columns.size()) + 1 > cap)
            throw ResourceLimitError("maximal_independent_columns: |S|+1=" +
                                     std::to_string(s.columns.size() + 1) + " exceeds independence cap " +
                                     std::to_string(cap));
        const std::uint64_t fpc = column_fingerprint(M, c);
        bool collides = false;
        for (const auto& [fp_y, mask_y] : subsets) {
            auto [lo, hi] = by_fp.equal_range(fp_y + fpc);
            for (auto it = lo; it != hi && !collides; ++it)
                collides = exact_sum(mask_y, c) == exact_sum(it->second, -1);
            if (collides) break;
        }
        if (collides) continue;
        const std::uint64_t bit = std::uint64_t{1} << s.columns.size();
        s.columns.push_back(c);
        const size_t old_count = subsets.size();
        for (size_t t = 0; t < old_count; ++t) {
            const auto [fp_y, mask_y] = subsets[t];
            subsets.emplace_back(fp_y + fpc, mask_y | bit);
            by_fp.emplace(fp_y + fpc, mask_y | bit);
        }
    }
    return s;
}

std::pair<std::vector<int>, std::vector<int>> find_equal_sum_subsets(const BoolMatrix& M, const IndependentSet& s,
                                                                     int c) {
    if (c < 0 || c >= M.cols()) throw BoundsError("find_equal_sum_subsets: column " + std::to_string(c) + " out of range");
    for (const int j : s.columns)
        if (j == c) throw ValidationError("find_equal_sum_subsets: c is already a member of s");

    std::vector<int> elems = s.columns;
    elems.push_back(c);
    std::sort(elems.begin(), elems.end());
    const int k = static_cast<int>(elems.size());

    std::vector<std::uint64_t> elem_fp(static_cast<size_t>(k));
    for (int t = 0; t < k; ++t) elem_fp[static_cast<size_t>(t)] = column_fingerprint(M, elems[static_cast<size_t>(t)]);

    auto exact_sum = [&](std::uint64_t mask) { return column_sum(M, masked_columns(elems, mask)); };

    std::unordered_multimap<std::uint64_t, std::uint64_t> by_fp;
    std::uint64_t found_a = 0, found_b = 0;
    bool found = false;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k) && !found; ++mask) {
        std::uint64_t fp = 0;
        for (int t = 0; t < k; ++t)
            if ((mask >> t) & 1u) fp += elem_fp[static_cast<size_t>(t)];
        auto [lo, hi] = by_fp.equal_range(fp);
        for (auto it = lo; it != hi; ++it) {
            if (exact_sum(it->second) == exact_sum(mask)) {
                // Earlier subsets are pairwise distinct, so this match is unique.
                found_a = it->second;
                found_b = mask;
                found = true;
                break;
            }
        }
        by_fp.emplace(fp, mask);
    }
    if (!found)
        throw std::logic_error("find_equal_sum_subsets: s u {c} is independent; s is not a maximal independent set");

    // Exactly one side holds c, else s itself had a collision.
    const size_t c_pos = static_cast<size_t>(std::find(elems.begin(), elems.end(), c) - elems.begin());
    const std::uint64_t c_bit = std::uint64_t{1} << c_pos;
    const bool a_has_c = (found_a & c_bit) != 0;
    const bool b_has_c = (found_b & c_bit) != 0;
    if (a_has_c == b_has_c)
        throw std::logic_error("find_equal_sum_subsets: collision inside s; s was not independent");
    if (a_has_c) std::swap(found_a, found_b);

    // Strip common elements; the column-sums stay equal.
    const std::uint64_t common = found_a & found_b;
    return {masked_columns(elems, found_a & ~common), masked_columns(elems, found_b & ~common)};
}

CoefficientVector express_column(const BoolMatrix& M, const IndependentSet& s, int c) {
    CoefficientVector cv;
    cv.columns = s.columns;
    cv.values.assign(s.columns.size(), 0);

    const auto member = std::find(s.columns.begin(), s.columns.end(), c);
    if (member != s.columns.end()) {
        cv.values[static_cast<size_t>(member - s.columns.begin())] = 1;
        return cv;
    }

    const auto [a, b] = find_equal_sum_subsets(M, s, c);
    for (const int j : a) cv.values[static_cast<size_t>(std::find(cv.columns.begin(), cv.columns.end(), j) - cv.columns.begin())] = 1;
    for (const int j : b) {
        if (j == c) continue;
        cv.values[static_cast<size_t>(std::find(cv.columns.begin(), cv.columns.end(), j) - cv.columns.begin())] = -1;
    }

    // col_c = sum(A) - sum(B\{c}) must hold exactly.
    std::vector<int> recon(static_cast<size_t>(M.rows()), 0);
    for (size_t t = 0; t < cv.columns.size(); ++t)
        if (cv.values[t] != 0)
            for (int i = 0; i < M.rows(); ++i) recon[static_cast<size_t>(i)] += cv.values[t] * M.at(i, cv.columns[t]);
    for (int i = 0; i < M.rows(); ++i)
        if (recon[static_cast<size_t>(i)] != M.at(i, c))
            throw std::logic_error("express_column: combination does not reproduce the column");
    return cv;
}

SignedDecomposition signed_rectangle_decomposition(const BoolMatrix& M, const std::vector<int>& order, int cap) {
    const int m = M.rows(), n = M.cols();
    SignedDecomposition d(m, n);
    if (M.is_zero()) return d;

    const IndependentSet s = maximal_independent_columns(M, order, cap);
    std::vector<CoefficientVector> alpha;
    alpha.reserve(static_cast<size_t>(n));
    for (int y = 0; y < n; ++y) alpha.push_back(express_column(M, s, y));

    for (size_t k = 0; k < s.columns.size(); ++k) {
        const int c = s.columns[k];
        std::vector<int> support;
        for (int i = 0; i < m; ++i)
            if (M.at(i, c)) support.push_back(i);
        std::vector<int> plus, minus;
        for (int y = 0; y < n; ++y) {
            if (alpha[static_cast<size_t>(y)].values[k] == 1) plus.push_back(y);
            if (alpha[static_cast<size_t>(y)].values[k] == -1) minus.push_back(y);
        }
        // support is nonempty: a zero column never joins an independent set
        if (!plus.empty()) d.terms.emplace_back(1, Rectangle(support, plus));
        if (!minus.empty()) d.terms.emplace_back(-1, Rectangle(support, minus));
    }

    if (!verify_decomposition(M, d))
        throw std::logic_error("signed_rectangle_decomposition: reconstruction failed");
    return d;
}

bool independent_set_bound_check(int size_s, int r) {
    if (size_s < 0 || r < 0) throw ValidationError("independent_set_bound_check: arguments must be nonnegative");
    using boost::multiprecision::cpp_int;
    const cpp_int lhs = cpp_int(1) << size_s;
    cpp_int rhs = 1;
    for (int i = 0; i < r; ++i) {
        rhs *= size_s + 1;
        if (rhs >= lhs) return true;
    }
    return lhs <= rhs;
}

}  // namespace sigrect
