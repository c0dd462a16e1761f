#include "sigrect/matrix.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>

#include <boost/multiprecision/cpp_int.hpp>

namespace sigrect {

namespace {

using boost::multiprecision::cpp_int;

// splitmix64; fixed weights make subset-sum fingerprints deterministic
// across runs and platforms.
std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t row_weight(int i) { return splitmix64(0x5171726563740000ULL + static_cast<std::uint64_t>(i)); }

struct Int64Overflow {};

// Fraction-free (Bareiss) elimination with row pivoting and column skipping.
// Working entries are minors of the input, so every division by the previous
// pivot is exact (Sylvester identity); rank is the number of pivots.
template <typename T>
int bareiss_rank(std::vector<T> a, int m, int n) {
    auto at = [&](int i, int j) -> T& { return a[static_cast<size_t>(i) * n + j]; };
    int rank = 0;
    T prev = 1;
    for (int c = 0; c < n && rank < m; ++c) {
        int piv = -1;
        for (int i = rank; i < m; ++i) {
            if (at(i, c) != 0) { piv = i; break; }
        }
        if (piv < 0) continue;
        if (piv != rank) {
            for (int j = 0; j < n; ++j) std::swap(at(piv, j), at(rank, j));
        }
        for (int i = rank + 1; i < m; ++i) {
            if constexpr (std::is_same_v<T, std::int64_t>) {
                const __int128 ic = at(i, c);
                const __int128 rc = at(rank, c);
                for (int j = c + 1; j < n; ++j) {
                    const __int128 t = rc * at(i, j) - ic * at(rank, j);
                    const __int128 q = t / prev;
                    if (q > INT64_MAX || q < INT64_MIN) throw Int64Overflow{};
                    at(i, j) = static_cast<std::int64_t>(q);
                }
            } else {
                for (int j = c + 1; j < n; ++j)
                    at(i, j) = (at(rank, c) * at(i, j) - at(i, c) * at(rank, j)) / prev;
            }
            at(i, c) = 0;
        }
        prev = at(rank, c);
        ++rank;
    }
    return rank;
}

int bareiss_rank_checked(std::vector<std::int64_t> a, int m, int n) {
    try {
        return bareiss_rank<std::int64_t>(a, m, n);
    } catch (const Int64Overflow&) {
        std::vector<cpp_int> b(a.begin(), a.end());
        return bareiss_rank<cpp_int>(std::move(b), m, n);
    }
}

}  // namespace

BoolMatrix BoolMatrix::from_entries(int m, int n, const std::vector<int>& entries) {
    if (entries.size() != static_cast<size_t>(m) * static_cast<size_t>(n))
        throw DimensionError("BoolMatrix::from_entries: entry count does not match dimensions");
    BoolMatrix out(m, n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) out.set(i, j, entries[static_cast<size_t>(i) * n + j]);
    return out;
}

int BoolMatrix::ones() const {
    int total = 0;
    for (const auto r : rows_) total += std::popcount(r);
    return total;
}

bool BoolMatrix::is_zero() const {
    return std::all_of(rows_.begin(), rows_.end(), [](std::uint64_t r) { return r == 0; });
}

BoolMatrix BoolMatrix::transposed() const {
    BoolMatrix out(n_, m_);
    for (int i = 0; i < m_; ++i)
        for (int j = 0; j < n_; ++j) out.set(j, i, at(i, j));
    return out;
}

IntMatrix::IntMatrix(const BoolMatrix& b) : IntMatrix(b.rows(), b.cols()) {
    for (int i = 0; i < m_; ++i)
        for (int j = 0; j < n_; ++j) at(i, j) = b.at(i, j);
}

bool IntMatrix::is_zero() const {
    return std::all_of(v_.begin(), v_.end(), [](std::int64_t x) { return x == 0; });
}

Rectangle::Rectangle(std::vector<int> rows_in, std::vector<int> cols_in)
    : rows(std::move(rows_in)), cols(std::move(cols_in)) {
    auto normalize = [](std::vector<int>& v, const char* side) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        if (v.empty()) throw ValidationError(std::string("Rectangle: empty ") + side + " set");
        if (v.front() < 0) throw BoundsError(std::string("Rectangle: negative ") + side + " index");
    };
    normalize(rows, "row");
    normalize(cols, "column");
}

SignedTerm::SignedTerm(int sign_in, Rectangle rect_in) : sign(sign_in), rect(std::move(rect_in)) {
    if (sign != 1 && sign != -1) throw ValidationError("SignedTerm: sign must be +1 or -1");
}

SignedDecomposition::SignedDecomposition(int m_in, int n_in, std::vector<SignedTerm> terms_in)
    : m(m_in), n(n_in), terms(std::move(terms_in)) {
    for (const auto& t : terms)
        if (!t.rect.fits(m, n))
            throw BoundsError("SignedDecomposition: rectangle outside " + std::to_string(m) + "x" + std::to_string(n));
}

BoolMatrix rect_to_matrix(const Rectangle& rect, int m, int n) {
    if (!rect.fits(m, n))
        throw BoundsError("rect_to_matrix: rectangle outside " + std::to_string(m) + "x" + std::to_string(n));
    BoolMatrix out(m, n);
    for (const int i : rect.rows)
        for (const int j : rect.cols) out.set(i, j, 1);
    return out;
}

IntMatrix evaluate_decomposition(const SignedDecomposition& d) {
    IntMatrix out(d.m, d.n);
    for (const auto& t : d.terms) {
        if (!t.rect.fits(d.m, d.n)) throw BoundsError("evaluate_decomposition: rectangle outside ambient shape");
        for (const int i : t.rect.rows)
            for (const int j : t.rect.cols) out.at(i, j) += t.sign;
    }
    return out;
}

bool verify_decomposition(const BoolMatrix& M, const SignedDecomposition& d) {
    if (M.rows() != d.m || M.cols() != d.n)
        throw DimensionError("verify_decomposition: matrix is " + std::to_string(M.rows()) + "x" +
                             std::to_string(M.cols()) + " but decomposition claims " + std::to_string(d.m) + "x" +
                             std::to_string(d.n));
    return evaluate_decomposition(d) == IntMatrix(M);
}

int exact_rank(const BoolMatrix& M) { return exact_rank(IntMatrix(M)); }

int exact_rank(const IntMatrix& M) {
    const int m = M.rows(), n = M.cols();
    std::vector<std::int64_t> a(static_cast<size_t>(m) * n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) a[static_cast<size_t>(i) * n + j] = M.at(i, j);
    return bareiss_rank_checked(std::move(a), m, n);
}

int exact_rank(const std::vector<std::int64_t>& row_major, int m, int n) {
    if (row_major.size() != static_cast<size_t>(m) * static_cast<size_t>(n))
        throw DimensionError("exact_rank: buffer size does not match dimensions");
    return bareiss_rank_checked(row_major, m, n);
}

ColumnSum column_sum(const BoolMatrix& M, const std::vector<int>& cols) {
    std::vector<int> s = cols;
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    ColumnSum out(static_cast<size_t>(M.rows()), 0);
    for (const int j : s) {
        if (j < 0 || j >= M.cols())
            throw BoundsError("column_sum: column " + std::to_string(j) + " outside 0.." + std::to_string(M.cols() - 1));
        for (int i = 0; i < M.rows(); ++i) out[static_cast<size_t>(i)] += M.at(i, j);
    }
    return out;
}

bool is_independent(const BoolMatrix& M, const std::vector<int>& s_in, int cap) {
    std::vector<int> s = s_in;
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (const int j : s)
        if (j < 0 || j >= M.cols())
            throw BoundsError("is_independent: column " + std::to_string(j) + " outside 0.." + std::to_string(M.cols() - 1));
    const int k = static_cast<int>(s.size());
    if (cap > kIndependenceCapCeiling)
        throw ResourceLimitError("is_independent: cap " + std::to_string(cap) + " above the supported ceiling " +
                                 std::to_string(kIndependenceCapCeiling));
    if (k > cap)
        throw ResourceLimitError("is_independent: |s|=" + std::to_string(k) + " exceeds independence cap " +
                                 std::to_string(cap));
    if (k == 0) return true;

    // Additive fingerprint of each column: fp(v) = sum_i v[i] * w_i mod 2^64,
    // so subset-sum fingerprints compose by addition. Equal sums always have
    // equal fingerprints; fingerprint matches are re-verified exactly.
    const int m = M.rows();
    std::vector<std::uint64_t> colfp(static_cast<size_t>(k), 0);
    for (int t = 0; t < k; ++t)
        for (int i = 0; i < m; ++i)
            if (M.at(i, s[static_cast<size_t>(t)])) colfp[static_cast<size_t>(t)] += row_weight(i);

    auto subset_sum = [&](std::uint32_t mask) {
        std::vector<int> sum(static_cast<size_t>(m), 0);
        for (int t = 0; t < k; ++t)
            if ((mask >> t) & 1u)
                for (int i = 0; i < m; ++i) sum[static_cast<size_t>(i)] += M.at(i, s[static_cast<size_t>(t)]);
        return sum;
    };

    // Gray-code walk over all subsets keeps the fingerprint update O(1).
    std::vector<std::pair<std::uint64_t, std::uint32_t>> seen;
    seen.reserve(size_t{1} << k);
    std::uint64_t fp = 0;
    std::uint32_t gray = 0;
    seen.emplace_back(fp, gray);
    for (std::uint64_t i = 1; i < (std::uint64_t{1} << k); ++i) {
        const int b = std::countr_zero(i);
        gray ^= (std::uint32_t{1} << b);
        if ((gray >> b) & 1u)
            fp += colfp[static_cast<size_t>(b)];
        else
            fp -= colfp[static_cast<size_t>(b)];
        seen.emplace_back(fp, gray);
    }
    std::sort(seen.begin(), seen.end());
    for (size_t i = 0; i + 1 < seen.size(); ++i) {
        size_t j = i + 1;
        while (j < seen.size() && seen[j].first == seen[i].first) {
            if (subset_sum(seen[i].second) == subset_sum(seen[j].second)) return false;
            ++j;
        }
    }
    return true;
}

}  // namespace sigrect
