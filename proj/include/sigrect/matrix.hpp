#pragma once

// Dense Boolean and integer matrices, signed rectangle decompositions, and
// the exact-arithmetic primitives everything else is built on: integer rank
// (fraction-free elimination), column sums, and independence of column sets
// (all subset column-sums pairwise distinct).

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "sigrect/errors.hpp"

namespace sigrect {

// Column count is capped so a row always fits one machine word. Row counts
// are only sanity-capped (tensor flattenings produce tall matrices).
inline constexpr int kMaxCols = 64;
inline constexpr int kMaxRows = 1 << 20;

// Default cap on |s| for independence checks; 2^|s| subset sums are
// enumerated, so this bounds both time and memory. The cap is configurable
// up to a hard ceiling beyond which the tables no longer fit in memory.
inline constexpr int kDefaultIndependenceCap = 24;
inline constexpr int kIndependenceCapCeiling = 26;

// 0/1 matrix, row-major, one 64-bit mask per row (bit j = entry (i,j)).
class BoolMatrix {
  public:
    BoolMatrix(int m, int n) : m_(m), n_(n), rows_(static_cast<size_t>(m), 0) {
        if (m < 1 || n < 1) throw ValidationError("BoolMatrix: dimensions must be >= 1");
        if (n > kMaxCols) throw ResourceLimitError("BoolMatrix: column cap kMaxCols=64 exceeded");
        if (m > kMaxRows) throw ResourceLimitError("BoolMatrix: row cap 2^20 exceeded");
    }

    // entries given row-major as 0/1 values
    static BoolMatrix from_entries(int m, int n, const std::vector<int>& entries);

    int rows() const { return m_; }
    int cols() const { return n_; }

    int at(int i, int j) const {
        check_index(i, j);
        return static_cast<int>((rows_[static_cast<size_t>(i)] >> j) & 1u);
    }
    void set(int i, int j, int v) {
        check_index(i, j);
        if (v != 0 && v != 1) throw ValidationError("BoolMatrix: entry must be 0 or 1");
        const std::uint64_t bit = std::uint64_t{1} << j;
        if (v)
            rows_[static_cast<size_t>(i)] |= bit;
        else
            rows_[static_cast<size_t>(i)] &= ~bit;
    }

    std::uint64_t row_bits(int i) const { return rows_.at(static_cast<size_t>(i)); }
    int ones() const;

    bool is_zero() const;
    BoolMatrix transposed() const;

    friend bool operator==(const BoolMatrix& a, const BoolMatrix& b) = default;

  private:
    void check_index(int i, int j) const {
        if (i < 0 || i >= m_ || j < 0 || j >= n_)
            throw BoundsError("BoolMatrix: index (" + std::to_string(i) + "," + std::to_string(j) +
                              ") outside " + std::to_string(m_) + "x" + std::to_string(n_));
    }

    int m_, n_;
    std::vector<std::uint64_t> rows_;
};

// General integer matrix (entrywise sums, residuals, intersection matrices).
class IntMatrix {
  public:
    IntMatrix(int m, int n) : m_(m), n_(n), v_(static_cast<size_t>(m) * static_cast<size_t>(n), 0) {
        if (m < 1 || n < 1) throw ValidationError("IntMatrix: dimensions must be >= 1");
    }
    explicit IntMatrix(const BoolMatrix& b);

    int rows() const { return m_; }
    int cols() const { return n_; }

    std::int64_t at(int i, int j) const { return v_[idx(i, j)]; }
    std::int64_t& at(int i, int j) { return v_[idx(i, j)]; }

    bool is_zero() const;

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

  private:
    size_t idx(int i, int j) const {
        if (i < 0 || i >= m_ || j < 0 || j >= n_)
            throw BoundsError("IntMatrix: index (" + std::to_string(i) + "," + std::to_string(j) +
                              ") outside " + std::to_string(m_) + "x" + std::to_string(n_));
        return static_cast<size_t>(i) * static_cast<size_t>(n_) + static_cast<size_t>(j);
    }

    int m_, n_;
    std::vector<std::int64_t> v_;
};

// Row set x column set of a primitive matrix (all-1 on the product set).
// Both sides are nonempty by construction; index sets are kept sorted and
// deduplicated. Indices are 0-based; bounds are checked against an ambient
// matrix at the point of use.
struct Rectangle {
    Rectangle(std::vector<int> rows_in, std::vector<int> cols_in);

    std::vector<int> rows;
    std::vector<int> cols;

    long long area() const { return static_cast<long long>(rows.size()) * static_cast<long long>(cols.size()); }
    bool fits(int m, int n) const { return rows.front() >= 0 && rows.back() < m && cols.front() >= 0 && cols.back() < n; }

    friend bool operator==(const Rectangle& a, const Rectangle& b) = default;
};

struct SignedTerm {
    SignedTerm(int sign_in, Rectangle rect_in);

    int sign;  // +1 or -1
    Rectangle rect;

    friend bool operator==(const SignedTerm& a, const SignedTerm& b) = default;
};

// Ordered list of signed primitive rectangles inside an m x n ambient shape.
// Its length is the size t of the decomposition M = sum_i sign_i * R_i.
struct SignedDecomposition {
    SignedDecomposition(int m_in, int n_in) : m(m_in), n(n_in) {}
    SignedDecomposition(int m_in, int n_in, std::vector<SignedTerm> terms_in);

    int m, n;
    std::vector<SignedTerm> terms;

    size_t size() const { return terms.size(); }

    friend bool operator==(const SignedDecomposition& a, const SignedDecomposition& b) = default;
};

// Entrywise sum of a set of columns along all rows.
using ColumnSum = std::vector<int>;

// Exact nonnegative rational, used for rectangle densities.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d) : num(n), den(d) {
        if (den == 0) throw ValidationError("Rational: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        const long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }

    friend bool operator==(const Rational& a, const Rational& b) = default;
};

// The 0/1 matrix that is 1 exactly on rows(rect) x cols(rect).
BoolMatrix rect_to_matrix(const Rectangle& rect, int m, int n);

// Entrywise signed sum of the terms; the empty decomposition is all-zero.
IntMatrix evaluate_decomposition(const SignedDecomposition& d);

// True iff the decomposition evaluates entrywise to M.
bool verify_decomposition(const BoolMatrix& M, const SignedDecomposition& d);

// Rank over the rationals, computed by fraction-free (Bareiss) integer
// elimination. Falls back to arbitrary-precision integers if intermediate
// minors overflow 64 bits; no floating point anywhere.
int exact_rank(const BoolMatrix& M);
int exact_rank(const IntMatrix& M);
// Same, over a row-major buffer (no copies beyond the elimination workspace).
int exact_rank(const std::vector<std::int64_t>& row_major, int m, int n);

// Component i is sum_{j in cols} M[i][j]; empty set gives the zero vector.
ColumnSum column_sum(const BoolMatrix& M, const std::vector<int>& cols);

// True iff all 2^|s| subsets of s have pairwise distinct column-sums.
// The empty set is independent. Throws ResourceLimitError if |s| > cap.
bool is_independent(const BoolMatrix& M, const std::vector<int>& s, int cap = kDefaultIndependenceCap);

}  // namespace sigrect
