#include "sigrect/oracles.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <tuple>

namespace sigrect {

namespace {

std::vector<int> mask_to_indices(std::uint64_t mask) {
    std::vector<int> out;
    while (mask) {
        out.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return out;
}

// ---------------------------------------------------------------------------
// exact_partition_number
// ---------------------------------------------------------------------------

struct PartitionSearch {
    int m = 0, n = 0;
    std::vector<std::uint64_t> uncovered;  // per-row mask of uncovered 1-cells
    int remaining = 0;

    std::uint64_t budget = 0;
    std::uint64_t nodes = 0;
    bool budget_hit = false;

    int best = INT_MAX;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> stack, best_stack;

    bool first_cell(int& i, int& j) const {
        for (int r = 0; r < m; ++r) {
            if (uncovered[static_cast<size_t>(r)]) {
                i = r;
                j = std::countr_zero(uncovered[static_cast<size_t>(r)]);
                return true;
            }
        }
        return false;
    }

    // Every rectangle of the uncovered region containing (i,j), enumerated as
    // (column subset B of row i's mask containing j) x (row subset of the rows
    // that carry all of B, containing i). Restricting this to maximal
    // rectangles is NOT sound: there are matrices whose optimal partitions
    // must cover the first cell with a non-maximal rectangle (e.g. a 6x6
    // instance whose unique-size-5 partitions start from a rectangle strictly
    // inside its column closure). Sorted area-descending so the upper bound
    // improves early.
    std::vector<std::pair<std::uint64_t, std::uint64_t>> candidates(int i, int j) const {
        constexpr size_t kCandidateCap = size_t{1} << 22;
        const std::uint64_t di = uncovered[static_cast<size_t>(i)] & ~(std::uint64_t{1} << j);
        if (std::popcount(di) > 24)
            throw ResourceLimitError("exact_partition_number: column candidate enumeration cap (24) exceeded");
        std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
        std::uint64_t sub = di;
        while (true) {
            const std::uint64_t b = sub | (std::uint64_t{1} << j);
            std::uint64_t avail = 0;
            for (int r = 0; r < m; ++r)
                if (r != i && (uncovered[static_cast<size_t>(r)] & b) == b) avail |= std::uint64_t{1} << r;
            if (std::popcount(avail) > 24 || out.size() + (size_t{1} << std::popcount(avail)) > kCandidateCap)
                throw ResourceLimitError("exact_partition_number: candidate enumeration cap (2^22) exceeded");
            std::uint64_t rsub = avail;
            while (true) {
                out.emplace_back(rsub | (std::uint64_t{1} << i), b);
                if (rsub == 0) break;
                rsub = (rsub - 1) & avail;
            }
            if (sub == 0) break;
            sub = (sub - 1) & di;
        }
        std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
            const auto area_a = std::popcount(a.first) * std::popcount(a.second);
            const auto area_b = std::popcount(b.first) * std::popcount(b.second);
            return area_a != area_b ? area_a > area_b : a < b;
        });
        return out;
    }

    // Lower bound on the rectangles still needed. The uncovered region is an
    // exact partition subproblem of its own indicator matrix, so three sound
    // bounds apply: its rational rank, a greedy fooling set (cells no two of
    // which fit in a common uncovered rectangle), and a density bound against
    // an upper bound on the largest uncovered rectangle.
    int lower_bound() const {
        if (remaining == 0) return 0;
        int max_row = 0, live_rows = 0;
        for (int r = 0; r < m; ++r) {
            const int pc = std::popcount(uncovered[static_cast<size_t>(r)]);
            if (pc > 0) ++live_rows;
            max_row = std::max(max_row, pc);
        }
        const int density = (remaining + max_row * live_rows - 1) / (max_row * live_rows);

        std::vector<std::pair<int, int>> fool;
        for (int r = 0; r < m; ++r) {
            for (std::uint64_t cm = uncovered[static_cast<size_t>(r)]; cm; cm &= cm - 1) {
                const int c = std::countr_zero(cm);
                bool clashes = false;
                for (const auto& [fr, fc] : fool) {
                    const bool same_rect =
                        ((uncovered[static_cast<size_t>(fr)] >> c) & 1u) && ((uncovered[static_cast<size_t>(r)] >> fc) & 1u);
                    if (same_rect) { clashes = true; break; }
                }
                if (!clashes) fool.emplace_back(r, c);
            }
        }

        std::vector<std::int64_t> indicator(static_cast<size_t>(m) * n, 0);
        for (int r = 0; r < m; ++r)
            for (std::uint64_t cm = uncovered[static_cast<size_t>(r)]; cm; cm &= cm - 1)
                indicator[static_cast<size_t>(r) * n + std::countr_zero(cm)] = 1;
        const int region_rank = exact_rank(indicator, m, n);

        return std::max({density, static_cast<int>(fool.size()), region_rank});
    }

    void apply(std::uint64_t rows, std::uint64_t cols) {
        for (std::uint64_t rm = rows; rm; rm &= rm - 1) uncovered[static_cast<size_t>(std::countr_zero(rm))] &= ~cols;
        remaining -= std::popcount(rows) * std::popcount(cols);
        stack.emplace_back(rows, cols);
    }
    void undo(std::uint64_t rows, std::uint64_t cols) {
        for (std::uint64_t rm = rows; rm; rm &= rm - 1) uncovered[static_cast<size_t>(std::countr_zero(rm))] |= cols;
        remaining += std::popcount(rows) * std::popcount(cols);
        stack.pop_back();
    }

    void dfs(int count) {
        int i, j;
        if (!first_cell(i, j)) {
            if (count < best) {
                best = count;
                best_stack = stack;
            }
            return;
        }
        if (++nodes > budget) {
            budget_hit = true;
            return;
        }
        if (count + lower_bound() >= best) return;
        for (const auto& [rows, cols] : candidates(i, j)) {
            apply(rows, cols);
            dfs(count + 1);
            undo(rows, cols);
            if (budget_hit) return;
        }
    }

    void greedy_seed() {
        int i, j, count = 0;
        while (first_cell(i, j)) {
            const auto cands = candidates(i, j);
            apply(cands.front().first, cands.front().second);
            ++count;
        }
        best = count;
        best_stack = stack;
        while (!stack.empty()) undo(stack.back().first, stack.back().second);
    }
};

// ---------------------------------------------------------------------------
// exact_signed_rank
// ---------------------------------------------------------------------------

struct SignedSearch {
    int m = 0, n = 0, t = 0;
    std::vector<std::int64_t> res;  // residual, row-major
    std::vector<std::pair<std::uint64_t, std::uint64_t>> rects;  // canonical order

    std::uint64_t budget = 0;
    std::uint64_t nodes = 0;
    bool budget_hit = false;

    std::vector<std::pair<int, int>> stack;  // (rect index, sign)

    void add(int idx, int sign) {
        const auto [rows, cols] = rects[static_cast<size_t>(idx)];
        for (std::uint64_t rm = rows; rm; rm &= rm - 1) {
            const int r = std::countr_zero(rm);
            for (std::uint64_t cm = cols; cm; cm &= cm - 1)
                res[static_cast<size_t>(r) * n + std::countr_zero(cm)] += sign;
        }
    }

    bool dfs(int depth, int min_idx, int min_sign) {
        if (std::all_of(res.begin(), res.end(), [](std::int64_t x) { return x == 0; })) return true;
        const int k = t - depth;
        if (k == 0) return false;
        if (++nodes > budget) {
            budget_hit = true;
            return false;
        }
        std::int64_t maxabs = 0;
        for (const auto x : res) maxabs = std::max(maxabs, x < 0 ? -x : x);
        if (maxabs > k) return false;
        if (exact_rank(res, m, n) > k) return false;

        for (int idx = min_idx; idx < static_cast<int>(rects.size()); ++idx) {
            for (int si = (idx == min_idx ? min_sign : 0); si < 2; ++si) {
                const int sign = si == 0 ? 1 : -1;
                add(idx, -sign);
                stack.emplace_back(idx, sign);
                if (dfs(depth + 1, idx, si)) return true;
                stack.pop_back();
                add(idx, sign);
                if (budget_hit) return false;
            }
        }
        return false;
    }
};

}  // namespace

OracleResult exact_partition_number(const BoolMatrix& M, std::uint64_t budget_nodes) {
    const int m = M.rows(), n = M.cols();
    if (m > 64) throw ResourceLimitError("exact_partition_number: more than 64 rows");

    PartitionSearch ps;
    ps.m = m;
    ps.n = n;
    ps.uncovered.resize(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) ps.uncovered[static_cast<size_t>(i)] = M.row_bits(i);
    ps.remaining = M.ones();
    ps.budget = budget_nodes;

    OracleResult out;
    if (ps.remaining == 0) {
        out.exhausted = true;
        out.witness = SignedDecomposition(m, n);
        return out;
    }

    ps.greedy_seed();
    const int root_lb = ps.lower_bound();  // includes rank(M) at the root
    if (root_lb < ps.best) ps.dfs(0);

    out.nodes = ps.nodes;
    out.exhausted = !ps.budget_hit;
    out.value = ps.best;
    out.lower_bound = out.exhausted ? ps.best : root_lb;
    SignedDecomposition witness(m, n);
    for (const auto& [rows, cols] : ps.best_stack)
        witness.terms.emplace_back(1, Rectangle(mask_to_indices(rows), mask_to_indices(cols)));
    out.witness = std::move(witness);
    return out;
}

OracleResult exact_signed_rank(const BoolMatrix& M, std::uint64_t budget_nodes) {
    const int m = M.rows(), n = M.cols();
    if (m > 20 || n > 20)
        throw ResourceLimitError("exact_signed_rank: rectangle enumeration cap (2^20) exceeded");
    const std::uint64_t rect_count = ((std::uint64_t{1} << m) - 1) * ((std::uint64_t{1} << n) - 1);
    if (rect_count > (std::uint64_t{1} << 20))
        throw ResourceLimitError("exact_signed_rank: rectangle enumeration cap (2^20) exceeded");

    OracleResult out;
    const int r = exact_rank(M);
    if (M.is_zero()) {
        out.exhausted = true;
        out.witness = SignedDecomposition(m, n);
        return out;
    }

    SignedSearch ss;
    ss.m = m;
    ss.n = n;
    ss.budget = budget_nodes;
    ss.rects.reserve(rect_count);
    for (std::uint64_t rm = 1; rm < (std::uint64_t{1} << m); ++rm)
        for (std::uint64_t cm = 1; cm < (std::uint64_t{1} << n); ++cm) ss.rects.emplace_back(rm, cm);

    // Iterative deepening: each refuted level t pushes the lower bound to t+1;
    // t = ones(M) always admits the cell-by-cell decomposition, so this stops.
    for (int t = std::max(r, 1);; ++t) {
        ss.t = t;
        ss.res.assign(static_cast<size_t>(m) * n, 0);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j) ss.res[static_cast<size_t>(i) * n + j] = M.at(i, j);
        ss.stack.clear();
        const bool found = ss.dfs(0, 0, 0);
        out.nodes = ss.nodes;
        if (found) {
            out.exhausted = true;
            out.value = t;
            out.lower_bound = t;
            SignedDecomposition witness(m, n);
            for (const auto& [idx, sign] : ss.stack) {
                const auto [rows, cols] = ss.rects[static_cast<size_t>(idx)];
                witness.terms.emplace_back(sign, Rectangle(mask_to_indices(rows), mask_to_indices(cols)));
            }
            out.witness = std::move(witness);
            return out;
        }
        if (ss.budget_hit) {
            out.exhausted = false;
            out.lower_bound = t;  // every level below t was fully refuted
            out.value = t;
            return out;
        }
    }
}

MonoRectResult max_monochromatic_rectangle(const BoolMatrix& M, int enumeration_cap) {
    const int m = M.rows(), n = M.cols();
    if (std::min(m, n) > enumeration_cap)
        throw ResourceLimitError("max_monochromatic_rectangle: min(m,n)=" + std::to_string(std::min(m, n)) +
                                 " exceeds enumeration cap " + std::to_string(enumeration_cap));
    if (std::max(m, n) > 64) throw ResourceLimitError("max_monochromatic_rectangle: more than 64 rows");

    const bool swapped = m > n;
    const BoolMatrix W = swapped ? M.transposed() : M;
    const int wr = W.rows(), wc = W.cols();
    const std::uint64_t full = wc == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << wc) - 1;

    long long best_area = -1;
    int best_value = 0;
    std::vector<int> best_rows, best_cols;

    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << wr); ++mask) {
        if (static_cast<long long>(std::popcount(mask)) * wc < best_area) continue;
        std::uint64_t and1 = full, and0 = full;
        for (std::uint64_t rm = mask; rm; rm &= rm - 1) {
            const std::uint64_t bits = W.row_bits(std::countr_zero(rm));
            and1 &= bits;
            and0 &= ~bits & full;
        }
        for (const int v : {1, 0}) {
            const std::uint64_t colmask = v ? and1 : and0;
            if (!colmask) continue;
            const long long area = static_cast<long long>(std::popcount(mask)) * std::popcount(colmask);
            std::vector<int> rows = swapped ? mask_to_indices(colmask) : mask_to_indices(mask);
            std::vector<int> cols = swapped ? mask_to_indices(mask) : mask_to_indices(colmask);
            const bool better = area > best_area ||
                                (area == best_area &&
                                 (v > best_value ||
                                  (v == best_value &&
                                   (std::lexicographical_compare(rows.begin(), rows.end(), best_rows.begin(), best_rows.end()) ||
                                    (rows == best_rows &&
                                     std::lexicographical_compare(cols.begin(), cols.end(), best_cols.begin(), best_cols.end()))))));
            if (better) {
                best_area = area;
                best_value = v;
                best_rows = std::move(rows);
                best_cols = std::move(cols);
            }
        }
    }

    return MonoRectResult{Rectangle(best_rows, best_cols), best_value,
                          Rational(best_area, static_cast<long long>(m) * n)};
}

}  // namespace sigrect
