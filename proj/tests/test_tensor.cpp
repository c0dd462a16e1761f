#include "doctest.h"

#include "reference_oracles.hpp"
#include "sigrect/tensor.hpp"
#include "test_helpers.hpp"

using namespace sigrect;
using testers::mat;

namespace {

BoolTensor ones_tensor(const std::vector<int>& dims) {
    BoolTensor t(dims);
    for (size_t p = 0; p < t.entry_count(); ++p) t.set_flat(p, 1);
    return t;
}

BoolTensor diagonal_222() {
    BoolTensor t({2, 2, 2});
    t.set({0, 0, 0}, 1);
    t.set({1, 1, 1}, 1);
    return t;
}

BoolTensor nth_tensor_222(unsigned id) {
    BoolTensor t({2, 2, 2});
    for (size_t p = 0; p < 8; ++p) t.set_flat(p, (id >> p) & 1u);
    return t;
}

BoolTensor random_tensor(Rng& rng, const std::vector<int>& dims, double density) {
    BoolTensor t(dims);
    for (size_t p = 0; p < t.entry_count(); ++p) t.set_flat(p, rng.next_unit() < density ? 1 : 0);
    return t;
}

}  // namespace

TEST_CASE("BoolTensor basics") {
    CHECK_THROWS_AS(BoolTensor({3}), ValidationError);
    CHECK_THROWS_AS(BoolTensor({2, 0}), ValidationError);
    CHECK_THROWS_AS(BoolTensor({2, 65}), ResourceLimitError);
    BoolTensor t({2, 3, 2});
    CHECK(t.entry_count() == 12);
    t.set({1, 2, 0}, 1);
    CHECK(t.at({1, 2, 0}) == 1);
    CHECK(t.at_flat(10) == 1);  // (1*3 + 2)*2 + 0
    CHECK_THROWS_AS(t.at({1, 3, 0}), BoundsError);
    CHECK_THROWS_AS(t.at({1, 2}), DimensionError);
}

TEST_CASE("slice examples") {
    CHECK(slice(ones_tensor({2, 2, 2}), 0, 0) == ones_tensor({2, 2}));

    const BoolTensor s = slice(diagonal_222(), 2, 1);
    BoolTensor want({2, 2});
    want.set({1, 1}, 1);
    CHECK(s == want);

    CHECK(slice(BoolTensor({2, 2, 2}), 1, 0) == BoolTensor({2, 2}));
    CHECK_THROWS_AS(slice(diagonal_222(), 3, 0), BoundsError);
    CHECK_THROWS_AS(slice(diagonal_222(), 0, 2), BoundsError);
}

TEST_CASE("slice of an order-2 tensor is a single-column tensor") {
    const BoolTensor t = BoolTensor::from_entries({2, 3}, {1, 0, 1, 0, 1, 1});
    const BoolTensor row = slice(t, 0, 1);  // row 1 -> 3x1
    CHECK(row.dims() == std::vector<int>{3, 1});
    CHECK(row.at({0, 0}) == 0);
    CHECK(row.at({1, 0}) == 1);
    CHECK(row.at({2, 0}) == 1);
    const BoolTensor col = slice(t, 1, 2);  // column 2 -> 2x1
    CHECK(col.dims() == std::vector<int>{2, 1});
    CHECK(col.at({0, 0}) == 1);
    CHECK(col.at({1, 0}) == 1);
}

TEST_CASE("flatten examples") {
    for (int lambda = 0; lambda < 3; ++lambda)
        CHECK(flatten(ones_tensor({2, 2, 2}), lambda) == testers::all_ones(4, 2));

    CHECK(flatten(diagonal_222(), 0) == mat({"10", "00", "00", "01"}));

    const BoolTensor t = BoolTensor::from_entries({2, 3}, {1, 0, 1, 0, 1, 1});
    CHECK(flatten(t, 1) == mat({"101", "011"}));           // identity flattening
    CHECK(flatten(t, 0) == mat({"101", "011"}).transposed());
}

TEST_CASE("flattening_rank examples") {
    CHECK(flattening_rank(ones_tensor({2, 2, 2})) == 1);
    CHECK(flattening_rank(diagonal_222()) == 2);
    const BoolTensor t = BoolTensor::from_entries({2, 3}, {1, 0, 1, 0, 1, 1});
    CHECK(flattening_rank(t) == exact_rank(mat({"101", "011"})));
}

TEST_CASE("maximal_independent_slices examples") {
    CHECK(maximal_independent_slices(ones_tensor({2, 2, 2}), 2) == std::vector<int>{0});
    CHECK(maximal_independent_slices(diagonal_222(), 0) == std::vector<int>{0, 1});
    CHECK(maximal_independent_slices(BoolTensor({2, 2, 2}), 2).empty());
}

TEST_CASE("tensor_signed_decomposition examples") {
    const SignedTensorDecomposition ones = tensor_signed_decomposition(ones_tensor({2, 2, 2}));
    REQUIRE(ones.size() == 1);
    CHECK(ones.terms[0].sign == 1);
    CHECK(ones.terms[0].tensor.sets == std::vector<std::vector<int>>{{0, 1}, {0, 1}, {0, 1}});

    CHECK(tensor_signed_decomposition(BoolTensor({2, 2, 2})).size() == 0);

    const BoolTensor diag = diagonal_222();
    const SignedTensorDecomposition d = tensor_signed_decomposition(diag);
    const IntTensor value = evaluate_tensor_decomposition(d);
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int z = 0; z < 2; ++z) CHECK(value.at({x, y, z}) == diag.at({x, y, z}));
    CHECK(refo::tensor_signed_rank_222(diag) == 2);
    CHECK(d.size() >= 2);
    CHECK(d.size() <= 8);  // 2 * (matrix-stage bound 2|S|) with |S| = 2
}

TEST_CASE("evaluate_tensor_decomposition examples") {
    CHECK(evaluate_tensor_decomposition(SignedTensorDecomposition({2, 2, 2})) == IntTensor({2, 2, 2}));

    SignedTensorDecomposition full({2, 2, 2});
    full.terms.emplace_back(1, PrimitiveTensor({{0, 1}, {0, 1}, {0, 1}}));
    IntTensor ones({2, 2, 2});
    for (auto& x : ones.data) x = 1;
    CHECK(evaluate_tensor_decomposition(full) == ones);

    full.terms.emplace_back(-1, PrimitiveTensor({{1}, {1}, {1}}));
    const IntTensor almost = evaluate_tensor_decomposition(full);
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int z = 0; z < 2; ++z) CHECK(almost.at({x, y, z}) == ((x == 1 && y == 1 && z == 1) ? 0 : 1));
}

TEST_CASE("tensor engine reconstructs every 2x2x2 tensor") {
    for (unsigned id = 0; id < 256; ++id) {
        const BoolTensor t = nth_tensor_222(id);
        const SignedTensorDecomposition d = tensor_signed_decomposition(t);
        const IntTensor value = evaluate_tensor_decomposition(d);
        std::vector<int> idx(3);
        for (int x = 0; x < 2; ++x)
            for (int y = 0; y < 2; ++y)
                for (int z = 0; z < 2; ++z) {
                    idx = {x, y, z};
                    REQUIRE(value.at(idx) == t.at(idx));
                }
        for (const auto& term : d.terms)
            for (const auto& q : term.tensor.sets) CHECK(!q.empty());

        // any signed decomposition flattens to one of every flattening, so
        // the exhaustive minimum sits between the flattening rank and the
        // engine's term count
        const int ref_min = refo::tensor_signed_rank_222(t);
        CHECK(flattening_rank(t) <= ref_min);
        CHECK(ref_min <= static_cast<int>(d.size()));
    }
}

TEST_CASE("order-2 decomposition agrees with the matrix engine term for term") {
    Rng rng(808);
    for (int iter = 0; iter < 40; ++iter) {
        const int m = 1 + static_cast<int>(rng.next_below(6));
        const int n = 1 + static_cast<int>(rng.next_below(6));
        const BoolMatrix M = testers::random_matrix(rng, m, n, 0.25 + 0.5 * rng.next_unit());
        BoolTensor t({m, n});
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j) t.set({i, j}, M.at(i, j));
        const SignedDecomposition md = signed_rectangle_decomposition(M);
        const SignedTensorDecomposition td = tensor_signed_decomposition(t);
        REQUIRE(md.size() == td.size());
        for (size_t k = 0; k < md.size(); ++k) {
            CHECK(md.terms[k].sign == td.terms[k].sign);
            CHECK(md.terms[k].rect.rows == td.terms[k].tensor.sets[0]);
            CHECK(md.terms[k].rect.cols == td.terms[k].tensor.sets[1]);
        }
    }
}

TEST_CASE("column v of the flattening is the vectorized slice") {
    Rng rng(909);
    for (int iter = 0; iter < 20; ++iter) {
        const std::vector<int> dims{1 + static_cast<int>(rng.next_below(3)), 1 + static_cast<int>(rng.next_below(3)),
                                    1 + static_cast<int>(rng.next_below(3))};
        const BoolTensor t = random_tensor(rng, dims, 0.5);
        for (int lambda = 0; lambda < 3; ++lambda) {
            const BoolMatrix flat = flatten(t, lambda);
            for (int v = 0; v < dims[static_cast<size_t>(lambda)]; ++v) {
                const BoolTensor s = slice(t, lambda, v);
                for (size_t p = 0; p < s.entry_count(); ++p)
                    REQUIRE(flat.at(static_cast<int>(p), v) == s.at_flat(p));
            }
        }
    }
}

TEST_CASE("independent slice sets satisfy the size bound") {
    Rng rng(161);
    for (int iter = 0; iter < 20; ++iter) {
        const std::vector<int> dims{2 + static_cast<int>(rng.next_below(2)), 2 + static_cast<int>(rng.next_below(2)),
                                    2 + static_cast<int>(rng.next_below(2))};
        const BoolTensor t = random_tensor(rng, dims, 0.3 + 0.4 * rng.next_unit());
        const int r = flattening_rank(t);
        for (int lambda = 0; lambda < 3; ++lambda) {
            const auto s = maximal_independent_slices(t, lambda);
            CHECK(independent_set_bound_check(static_cast<int>(s.size()), r));
        }
    }
}

TEST_CASE("order-4 tensors decompose and the order cap triggers beyond") {
    Rng rng(272);
    const BoolTensor t = random_tensor(rng, {2, 3, 2, 2}, 0.4);
    const SignedTensorDecomposition d = tensor_signed_decomposition(t);
    const IntTensor value = evaluate_tensor_decomposition(d);
    std::vector<int> idx(4, 0);
    size_t p = 0;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 2; ++c)
                for (int e = 0; e < 2; ++e) {
                    idx = {a, b, c, e};
                    REQUIRE(value.at(idx) == t.at_flat(p++));
                }

    CHECK_THROWS_AS(tensor_signed_decomposition(BoolTensor({2, 2, 2, 2, 2})), ResourceLimitError);
    CHECK_NOTHROW(tensor_signed_decomposition(BoolTensor({2, 2, 2, 2, 2}), std::nullopt, kDefaultIndependenceCap, 5));
}

TEST_CASE("random order-3 tensors reconstruct under every recursion coordinate") {
    Rng rng(515);
    for (int iter = 0; iter < 25; ++iter) {
        const std::vector<int> dims{1 + static_cast<int>(rng.next_below(4)), 1 + static_cast<int>(rng.next_below(4)),
                                    1 + static_cast<int>(rng.next_below(4))};
        const BoolTensor t = random_tensor(rng, dims, 0.2 + 0.6 * rng.next_unit());
        for (int lambda = 0; lambda < 3; ++lambda) {
            const SignedTensorDecomposition d = tensor_signed_decomposition(t, lambda);
            const IntTensor value = evaluate_tensor_decomposition(d);
            std::vector<int> idx(3, 0);
            size_t p = 0;
            for (int a = 0; a < dims[0]; ++a)
                for (int b = 0; b < dims[1]; ++b)
                    for (int c = 0; c < dims[2]; ++c) {
                        idx = {a, b, c};
                        REQUIRE(value.at(idx) == t.at_flat(p++));
                    }
            for (const auto& term : d.terms)
                for (const auto& q : term.tensor.sets) CHECK(!q.empty());
        }
    }
}

TEST_CASE("a 3x3x3 batch reconstructs exactly") {
    Rng rng(626);
    for (int iter = 0; iter < 15; ++iter) {
        const BoolTensor t = random_tensor(rng, {3, 3, 3}, 0.5);
        const SignedTensorDecomposition d = tensor_signed_decomposition(t);
        const IntTensor value = evaluate_tensor_decomposition(d);
        std::vector<int> idx(3, 0);
        size_t p = 0;
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
                for (int c = 0; c < 3; ++c) {
                    idx = {a, b, c};
                    REQUIRE(value.at(idx) == t.at_flat(p++));
                }
    }
}

TEST_CASE("explicit lambda choice is honored at the top level") {
    const BoolTensor diag = diagonal_222();
    for (int lambda = 0; lambda < 3; ++lambda) {
        const SignedTensorDecomposition d = tensor_signed_decomposition(diag, lambda);
        const IntTensor value = evaluate_tensor_decomposition(d);
        std::vector<int> idx(3);
        for (int x = 0; x < 2; ++x)
            for (int y = 0; y < 2; ++y)
                for (int z = 0; z < 2; ++z) {
                    idx = {x, y, z};
                    REQUIRE(value.at(idx) == diag.at(idx));
                }
    }
}
