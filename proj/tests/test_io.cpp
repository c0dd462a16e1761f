#include "doctest.h"

#include "sigrect/decompose.hpp"
#include "sigrect/io.hpp"
#include "sigrect/tensor.hpp"
#include "test_helpers.hpp"

using namespace sigrect;
using testers::mat;

TEST_CASE("matrix text format") {
    CHECK(io::parse_matrix_text("11\n10\n") == mat({"11", "10"}));
    CHECK(io::parse_matrix_text("# header\n\n11\n\n# note\n10\n") == mat({"11", "10"}));
    CHECK(io::parse_matrix_text("101") == mat({"101"}));
    CHECK(io::parse_matrix_text("10 \n01\t\n") == mat({"10", "01"}));  // trailing whitespace tolerated

    CHECK_THROWS_AS(io::parse_matrix_text(""), ValidationError);
    CHECK_THROWS_AS(io::parse_matrix_text("# only comments\n"), ValidationError);
    CHECK_THROWS_AS(io::parse_matrix_text("11\n1\n"), ValidationError);
    CHECK_THROWS_AS(io::parse_matrix_text("12\n"), ValidationError);

    const BoolMatrix M = mat({"0110", "1001"});
    CHECK(io::parse_matrix_text(io::matrix_to_text(M)) == M);
}

TEST_CASE("matrix JSON and autodetection") {
    const BoolMatrix M = mat({"10", "11"});
    CHECK(io::matrix_from_json(io::matrix_to_json(M)) == M);
    CHECK(io::parse_matrix("  {\"m\":2,\"n\":2,\"rows\":[\"10\",\"11\"]}") == M);
    CHECK(io::parse_matrix("10\n11\n") == M);
    CHECK_THROWS_AS(io::parse_matrix("{\"m\":2}"), ValidationError);
    CHECK_THROWS_AS(io::parse_matrix("{broken"), ValidationError);
    CHECK_THROWS_AS(io::parse_matrix("{\"m\":2,\"n\":2,\"rows\":[\"10\"]}"), DimensionError);
}

TEST_CASE("decomposition JSON round trip and 1-based indexing") {
    const SignedDecomposition d(2, 3, {SignedTerm(1, Rectangle({0, 1}, {0, 2})), SignedTerm(-1, Rectangle({1}, {1}))});
    const nlohmann::json j = io::decomposition_to_json(d);
    CHECK(j.at("terms")[0].at("rows") == nlohmann::json::array({1, 2}));
    CHECK(j.at("terms")[0].at("cols") == nlohmann::json::array({1, 3}));
    CHECK(io::decomposition_from_json(j) == d);
    CHECK(io::parse_decomposition(j.dump()) == d);

    CHECK_THROWS_AS(io::parse_decomposition("{\"m\":2,\"n\":2,\"terms\":[{\"sign\":2,\"rows\":[1],\"cols\":[1]}]}"),
                    ValidationError);
    CHECK_THROWS_AS(io::parse_decomposition("{\"m\":2,\"n\":2,\"terms\":[{\"sign\":1,\"rows\":[0],\"cols\":[1]}]}"),
                    ValidationError);
    CHECK_THROWS_AS(io::parse_decomposition("{\"m\":2,\"n\":2,\"terms\":[{\"sign\":1,\"rows\":[3],\"cols\":[1]}]}"),
                    BoundsError);
    CHECK_THROWS_AS(io::parse_decomposition("{\"m\":2,\"n\":2,\"terms\":[{\"sign\":1}]}"), ValidationError);
}

TEST_CASE("engine output survives a JSON round trip") {
    Rng rng(404);
    for (int iter = 0; iter < 30; ++iter) {
        const int m = 1 + static_cast<int>(rng.next_below(6));
        const int n = 1 + static_cast<int>(rng.next_below(6));
        const BoolMatrix M = testers::random_matrix(rng, m, n, 0.5);
        const SignedDecomposition d = signed_rectangle_decomposition(M);
        CHECK(io::decomposition_from_json(io::decomposition_to_json(d)) == d);
    }
}

TEST_CASE("tensor text format") {
    const std::string text = "dims: 2 2 2\n11\n10\n# comment\n01\n11\n";
    const BoolTensor t = io::parse_tensor_text(text);
    CHECK(t.dims() == std::vector<int>{2, 2, 2});
    CHECK(t.at({0, 0, 0}) == 1);
    CHECK(t.at({0, 1, 1}) == 0);
    CHECK(t.at({1, 0, 0}) == 0);
    CHECK(io::parse_tensor_text(io::tensor_to_text(t)) == t);

    CHECK_THROWS_AS(io::parse_tensor_text("11\n10\n"), ValidationError);
    CHECK_THROWS_AS(io::parse_tensor_text("dims: 2 2\n111\n"), DimensionError);
    CHECK_THROWS_AS(io::parse_tensor_text("dims: 2 x\n1111\n"), ValidationError);
    CHECK_THROWS_AS(io::parse_tensor_text("dims: 2 2\n12\n11\n"), ValidationError);
}

TEST_CASE("tensor decomposition JSON round trip") {
    SignedTensorDecomposition d({2, 2, 2});
    d.terms.emplace_back(1, PrimitiveTensor({{0, 1}, {0}, {1}}));
    d.terms.emplace_back(-1, PrimitiveTensor({{1}, {1}, {0, 1}}));
    const nlohmann::json j = io::tensor_decomposition_to_json(d);
    CHECK(j.at("terms")[0].at("sets")[0] == nlohmann::json::array({1, 2}));
    CHECK(io::tensor_decomposition_from_json(j) == d);
}

TEST_CASE("family JSON round trip and 1-based elements") {
    const SetFamilyPair p{2, {{0}, {0, 1}}, {{0}, {1}}};
    const nlohmann::json j = io::family_to_json(p);
    CHECK(j.at("S")[1] == nlohmann::json::array({1, 2}));
    const SetFamilyPair back = io::family_from_json(j);
    CHECK(back.d == p.d);
    CHECK(back.S == p.S);
    CHECK(back.T == p.T);
    CHECK_THROWS_AS(io::parse_family("{\"d\":1,\"S\":[[2]],\"T\":[[1]]}"), ValidationError);
    CHECK_THROWS_AS(io::parse_family("{\"d\":1,\"S\":[[1]]}"), ValidationError);
}

TEST_CASE("oracle and monorect JSON carry value and flags") {
    OracleResult r;
    r.value = 3;
    r.lower_bound = 2;
    r.exhausted = false;
    r.nodes = 17;
    r.witness = SignedDecomposition(2, 2, {SignedTerm(1, Rectangle({0}, {0}))});
    const nlohmann::json j = io::oracle_result_to_json(r, 2, 2);
    CHECK(j.at("value") == 3);
    CHECK(j.at("lower_bound") == 2);
    CHECK(j.at("exhausted") == false);
    CHECK(j.at("nodes") == 17);
    CHECK(j.at("terms").size() == 1);

    const MonoRectResult mono{Rectangle({0}, {0, 1}), 1, Rational(1, 2)};
    const nlohmann::json mj = io::monorect_to_json(mono, 2, 2);
    CHECK(mj.at("density") == "1/2");
    CHECK(mj.at("rows") == nlohmann::json::array({1}));
    CHECK(mj.at("cols") == nlohmann::json::array({1, 2}));
    CHECK(mj.at("area") == 2);
}
