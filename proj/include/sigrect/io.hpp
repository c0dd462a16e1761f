#pragma once

// Text and JSON formats. Matrix text is one line of '0'/'1' per row; blank
// lines and lines starting with '#' are ignored. Tensor text starts with a
// "dims: n1 n2 ..." line followed by the entries in row-major order (last
// coordinate fastest). All JSON indices and universe elements are 1-based.

#include <string>

#include "json.hpp"
#include "sigrect/matrix.hpp"
#include "sigrect/oracles.hpp"
#include "sigrect/setsys.hpp"
#include "sigrect/tensor.hpp"

namespace sigrect::io {

BoolMatrix parse_matrix_text(const std::string& text);
std::string matrix_to_text(const BoolMatrix& M);

nlohmann::json matrix_to_json(const BoolMatrix& M);
BoolMatrix matrix_from_json(const nlohmann::json& j);

// Autodetects JSON (first significant character '{') vs text.
BoolMatrix parse_matrix(const std::string& input);

// { "m":…, "n":…, "terms":[ {"sign":1|-1, "rows":[…], "cols":[…]} … ] }
nlohmann::json decomposition_to_json(const SignedDecomposition& d);
SignedDecomposition decomposition_from_json(const nlohmann::json& j);
SignedDecomposition parse_decomposition(const std::string& input);

BoolTensor parse_tensor_text(const std::string& text);
std::string tensor_to_text(const BoolTensor& T);

// { "dims":[…], "terms":[ {"sign":1|-1, "sets":[[…],…]} … ] }
nlohmann::json tensor_decomposition_to_json(const SignedTensorDecomposition& d);
SignedTensorDecomposition tensor_decomposition_from_json(const nlohmann::json& j);

// { "d":…, "S":[[…],…], "T":[[…],…] }
nlohmann::json family_to_json(const SetFamilyPair& p);
SetFamilyPair family_from_json(const nlohmann::json& j);
SetFamilyPair parse_family(const std::string& input);

// Decomposition JSON of the witness (when present) plus value/bounds/flags.
nlohmann::json oracle_result_to_json(const OracleResult& r, int m, int n);

nlohmann::json monorect_to_json(const MonoRectResult& r, int m, int n);

// Wraps nlohmann parse errors in ValidationError.
nlohmann::json parse_json(const std::string& input);

}  // namespace sigrect::io
