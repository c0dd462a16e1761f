#include <set>

#include "doctest.h"

#include "reference_oracles.hpp"
#include "sigrect/matrix.hpp"
#include "test_helpers.hpp"

using namespace sigrect;
using testers::all_ones;
using testers::identity;
using testers::mat;
using testers::nth_matrix;

TEST_CASE("BoolMatrix basics and invariants") {
    BoolMatrix a(2, 3);
    CHECK(a.is_zero());
    a.set(1, 2, 1);
    CHECK(a.at(1, 2) == 1);
    CHECK(a.ones() == 1);
    CHECK_THROWS_AS(a.set(0, 0, 2), ValidationError);
    CHECK_THROWS_AS(a.at(2, 0), BoundsError);
    CHECK_THROWS_AS(a.at(0, 3), BoundsError);
    CHECK_THROWS_AS(BoolMatrix(0, 1), ValidationError);
    CHECK_THROWS_AS(BoolMatrix(1, 65), ResourceLimitError);
    CHECK(mat({"010", "001"}).transposed() == mat({"00", "10", "01"}));
}

TEST_CASE("Rectangle normalizes and rejects empty sides") {
    const Rectangle r({2, 0, 2}, {1});
    CHECK(r.rows == std::vector<int>{0, 2});
    CHECK(r.cols == std::vector<int>{1});
    CHECK(r.area() == 2);
    CHECK_THROWS_AS(Rectangle({}, {0}), ValidationError);
    CHECK_THROWS_AS(Rectangle({0}, {}), ValidationError);
    CHECK_THROWS_AS(Rectangle({-1}, {0}), BoundsError);
    CHECK_THROWS_AS(SignedTerm(0, Rectangle({0}, {0})), ValidationError);
    CHECK_THROWS_AS(SignedDecomposition(1, 1, {SignedTerm(1, Rectangle({1}, {0}))}), BoundsError);
}

TEST_CASE("rect_to_matrix examples") {
    CHECK(rect_to_matrix(Rectangle({0, 1}, {0, 1}), 2, 2) == all_ones(2, 2));
    CHECK(rect_to_matrix(Rectangle({0}, {1}), 2, 2) == mat({"01", "00"}));
    CHECK(rect_to_matrix(Rectangle({1}, {0, 1}), 3, 2) == mat({"00", "11", "00"}));
    CHECK_THROWS_AS(rect_to_matrix(Rectangle({2}, {0}), 2, 2), BoundsError);
}

TEST_CASE("evaluate_decomposition examples") {
    const Rectangle full({0, 1}, {0, 1});
    CHECK(evaluate_decomposition(SignedDecomposition(2, 2, {SignedTerm(1, full)})) == IntMatrix(all_ones(2, 2)));
    CHECK(evaluate_decomposition(SignedDecomposition(2, 2)) == IntMatrix(2, 2));
    // entrywise hand sum: J - E22 = [[1,1],[1,0]]
    const SignedDecomposition d(2, 2, {SignedTerm(1, full), SignedTerm(-1, Rectangle({1}, {1}))});
    CHECK(evaluate_decomposition(d) == IntMatrix(mat({"11", "10"})));
}

TEST_CASE("verify_decomposition examples") {
    const Rectangle full({0, 1}, {0, 1});
    CHECK(verify_decomposition(all_ones(2, 2), SignedDecomposition(2, 2, {SignedTerm(1, full)})));
    CHECK_FALSE(verify_decomposition(all_ones(2, 2), SignedDecomposition(2, 2)));
    CHECK(verify_decomposition(mat({"11", "10"}),
                               SignedDecomposition(2, 2, {SignedTerm(1, full), SignedTerm(-1, Rectangle({1}, {1}))})));
    CHECK_THROWS_AS(verify_decomposition(all_ones(2, 3), SignedDecomposition(2, 2)), DimensionError);
}

TEST_CASE("evaluate_decomposition is linear in the term list") {
    Rng rng(41);
    for (int iter = 0; iter < 50; ++iter) {
        const int m = 1 + static_cast<int>(rng.next_below(4));
        const int n = 1 + static_cast<int>(rng.next_below(4));
        auto random_terms = [&](int count) {
            std::vector<SignedTerm> ts;
            for (int k = 0; k < count; ++k) {
                std::vector<int> rows{static_cast<int>(rng.next_below(static_cast<std::uint64_t>(m)))};
                std::vector<int> cols{static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)))};
                for (int i = 0; i < m; ++i)
                    if (rng.next_unit() < 0.4) rows.push_back(i);
                for (int j = 0; j < n; ++j)
                    if (rng.next_unit() < 0.4) cols.push_back(j);
                ts.emplace_back(rng.next_unit() < 0.5 ? 1 : -1, Rectangle(rows, cols));
            }
            return ts;
        };
        const auto t1 = random_terms(static_cast<int>(rng.next_below(4)));
        const auto t2 = random_terms(static_cast<int>(rng.next_below(4)));
        std::vector<SignedTerm> both = t1;
        both.insert(both.end(), t2.begin(), t2.end());
        const IntMatrix a = evaluate_decomposition(SignedDecomposition(m, n, t1));
        const IntMatrix b = evaluate_decomposition(SignedDecomposition(m, n, t2));
        const IntMatrix c = evaluate_decomposition(SignedDecomposition(m, n, both));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j) CHECK(c.at(i, j) == a.at(i, j) + b.at(i, j));
    }
}

TEST_CASE("exact_rank examples") {
    CHECK(exact_rank(identity(3)) == 3);
    CHECK(exact_rank(all_ones(3, 3)) == 1);
    // independent oracle: cofactor determinant of the circulant is nonzero
    const std::vector<std::vector<long long>> circulant{{1, 1, 0}, {0, 1, 1}, {1, 0, 1}};
    CHECK(refo::det_cofactor(circulant) != 0);
    CHECK(exact_rank(mat({"110", "011", "101"})) == 3);
}

TEST_CASE("exact_rank agrees with rational elimination on all 3x3 matrices") {
    for (unsigned id = 0; id < 512; ++id) {
        const BoolMatrix M = nth_matrix(3, 3, id);
        CHECK(exact_rank(M) == refo::rank_rational(M));
    }
}

TEST_CASE("exact_rank handles tall flattening-shaped and integer matrices") {
    BoolMatrix tall(100, 2);
    for (int i = 0; i < 100; ++i) tall.set(i, i % 2, 1);
    CHECK(exact_rank(tall) == 2);

    IntMatrix z(2, 2);
    z.at(0, 0) = 5;
    z.at(0, 1) = -10;
    z.at(1, 0) = -2;
    z.at(1, 1) = 4;
    CHECK(exact_rank(z) == 1);  // second row is -2/5 of the first
}

TEST_CASE("column_sum examples") {
    CHECK(column_sum(identity(2), {0, 1}) == ColumnSum{1, 1});
    CHECK(column_sum(mat({"101", "110"}), {}) == ColumnSum{0, 0});
    CHECK(column_sum(mat({"101", "110"}), {0, 2}) == ColumnSum{2, 1});
    CHECK_THROWS_AS(column_sum(identity(2), {2}), BoundsError);
}

TEST_CASE("is_independent examples") {
    CHECK(is_independent(identity(2), {0, 1}));
    CHECK_FALSE(is_independent(mat({"11", "11"}), {0, 1}));
    // the zero column collides with the empty subset
    CHECK_FALSE(is_independent(mat({"01", "01"}), {0}));
    CHECK(is_independent(mat({"01", "01"}), {1}));
    CHECK(is_independent(identity(2), {}));
}

TEST_CASE("is_independent cap errors name the cap") {
    std::vector<int> s(10);
    for (int i = 0; i < 10; ++i) s[static_cast<size_t>(i)] = i;
    CHECK_THROWS_WITH_AS(is_independent(identity(10), s, 9), doctest::Contains("cap 9"), ResourceLimitError);
    CHECK_THROWS_AS(is_independent(identity(10), s, kIndependenceCapCeiling + 1), ResourceLimitError);
}

TEST_CASE("exact_rank falls back to big integers when minors overflow") {
    // det = 2^80 - 1, far beyond int64; the 64-bit elimination must restart
    // on arbitrary precision rather than wrap
    const std::int64_t big = std::int64_t{1} << 40;
    IntMatrix a(2, 2);
    a.at(0, 0) = big;
    a.at(0, 1) = 1;
    a.at(1, 0) = 1;
    a.at(1, 1) = big;
    CHECK(exact_rank(a) == 2);

    IntMatrix b(2, 2);
    b.at(0, 0) = big;
    b.at(0, 1) = big;
    b.at(1, 0) = big;
    b.at(1, 1) = big;
    CHECK(exact_rank(b) == 1);

    // 3x3 with a huge pivot: rank detectable only with exact arithmetic
    IntMatrix c(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) c.at(i, j) = big + (i + 1) * (j + 1);
    CHECK(exact_rank(c) == 2);  // rank-1 outer product plus the constant matrix
}

namespace {

// naive reference: gather all subset sums as exact vectors, independent iff
// all 2^k of them are distinct
bool is_independent_naive(const BoolMatrix& M, const std::vector<int>& s) {
    std::set<std::vector<int>> sums;
    const size_t k = s.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        std::vector<int> sum(static_cast<size_t>(M.rows()), 0);
        for (size_t t = 0; t < k; ++t)
            if ((mask >> t) & 1u)
                for (int i = 0; i < M.rows(); ++i) sum[static_cast<size_t>(i)] += M.at(i, s[t]);
        sums.insert(std::move(sum));
    }
    return sums.size() == (size_t{1} << k);
}

}  // namespace

TEST_CASE("is_independent agrees with the naive subset-sum reference") {
    Rng rng(1234);
    for (int iter = 0; iter < 300; ++iter) {
        const int m = 1 + static_cast<int>(rng.next_below(6));
        const int n = 1 + static_cast<int>(rng.next_below(10));
        const BoolMatrix M = testers::random_matrix(rng, m, n, 0.15 + 0.7 * rng.next_unit());
        std::vector<int> s;
        for (int j = 0; j < n; ++j)
            if (rng.next_unit() < 0.5) s.push_back(j);
        CHECK(is_independent(M, s) == is_independent_naive(M, s));
    }
}

TEST_CASE("is_independent is false on zero or duplicated columns") {
    Rng rng(7);
    for (int iter = 0; iter < 100; ++iter) {
        const int m = 1 + static_cast<int>(rng.next_below(5));
        const int n = 2 + static_cast<int>(rng.next_below(5));
        BoolMatrix M = testers::random_matrix(rng, m, n);
        const int a = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
        int b = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
        if (b == a) b = (a + 1) % n;

        // duplicate column b := a
        BoolMatrix dup = M;
        for (int i = 0; i < m; ++i) dup.set(i, b, dup.at(i, a));
        CHECK_FALSE(is_independent(dup, {a, b}));

        // zero column
        BoolMatrix zeroed = M;
        for (int i = 0; i < m; ++i) zeroed.set(i, a, 0);
        std::vector<int> s{a};
        for (int j = 0; j < n; ++j)
            if (rng.next_unit() < 0.3 && j != a) s.push_back(j);
        CHECK_FALSE(is_independent(zeroed, s));
    }
}

TEST_CASE("any verifying decomposition is at least as long as the rank") {
    Rng rng(99);
    int checked = 0;
    for (int iter = 0; iter < 400; ++iter) {
        const int m = 1 + static_cast<int>(rng.next_below(3));
        const int n = 1 + static_cast<int>(rng.next_below(3));
        std::vector<SignedTerm> terms;
        const int count = static_cast<int>(rng.next_below(4));
        for (int k = 0; k < count; ++k) {
            std::vector<int> rows{static_cast<int>(rng.next_below(static_cast<std::uint64_t>(m)))};
            std::vector<int> cols{static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)))};
            for (int i = 0; i < m; ++i)
                if (rng.next_unit() < 0.5) rows.push_back(i);
            for (int j = 0; j < n; ++j)
                if (rng.next_unit() < 0.5) cols.push_back(j);
            terms.emplace_back(rng.next_unit() < 0.5 ? 1 : -1, Rectangle(rows, cols));
        }
        const SignedDecomposition d(m, n, terms);
        const IntMatrix value = evaluate_decomposition(d);
        bool boolean = true;
        for (int i = 0; i < m && boolean; ++i)
            for (int j = 0; j < n; ++j)
                if (value.at(i, j) != 0 && value.at(i, j) != 1) { boolean = false; break; }
        if (!boolean) continue;
        BoolMatrix M(m, n);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j) M.set(i, j, static_cast<int>(value.at(i, j)));
        REQUIRE(verify_decomposition(M, d));
        CHECK(static_cast<int>(d.size()) >= exact_rank(M));
        ++checked;
    }
    CHECK(checked > 50);  // the sampler must actually hit Boolean sums
}

TEST_CASE("Rational reduces and prints") {
    CHECK(Rational(2, 8) == Rational(1, 4));
    CHECK(Rational(0, 5).str() == "0/1");
    CHECK(Rational(3, 4).str() == "3/4");
    CHECK_THROWS_AS(Rational(1, 0), ValidationError);
}
