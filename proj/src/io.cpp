#include "sigrect/io.hpp"

#include <algorithm>
#include <sstream>

namespace sigrect::io {

namespace {

using nlohmann::json;

std::vector<std::string> significant_lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
        if (line.empty()) continue;
        if (line.front() == '#') continue;
        out.push_back(line);
    }
    return out;
}

bool looks_like_json(const std::string& input) {
    for (const char c : input) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
        return c == '{';
    }
    return false;
}

int get_int(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number_integer())
        throw ValidationError(std::string("JSON: missing or non-integer field \"") + key + "\"");
    return j.at(key).get<int>();
}

// 1-based JSON index lists -> 0-based vectors
std::vector<int> indices_from_json(const json& arr, const char* what) {
    if (!arr.is_array()) throw ValidationError(std::string("JSON: \"") + what + "\" must be an array");
    std::vector<int> out;
    out.reserve(arr.size());
    for (const auto& x : arr) {
        if (!x.is_number_integer() || x.get<int>() < 1)
            throw ValidationError(std::string("JSON: \"") + what + "\" entries must be integers >= 1");
        out.push_back(x.get<int>() - 1);
    }
    return out;
}

json indices_to_json(const std::vector<int>& v) {
    json arr = json::array();
    for (const int x : v) arr.push_back(x + 1);
    return arr;
}

}  // namespace

json parse_json(const std::string& input) {
    try {
        return json::parse(input);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("JSON parse error: ") + e.what());
    }
}

BoolMatrix parse_matrix_text(const std::string& text) {
    const std::vector<std::string> lines = significant_lines(text);
    if (lines.empty()) throw ValidationError("matrix text: no rows");
    const size_t width = lines.front().size();
    BoolMatrix out(static_cast<int>(lines.size()), static_cast<int>(width));
    for (size_t i = 0; i < lines.size(); ++i) {
        if (lines[i].size() != width)
            throw ValidationError("matrix text: row " + std::to_string(i + 1) + " has length " +
                                  std::to_string(lines[i].size()) + ", expected " + std::to_string(width));
        for (size_t j = 0; j < width; ++j) {
            const char c = lines[i][j];
            if (c != '0' && c != '1')
                throw ValidationError(std::string("matrix text: invalid character '") + c + "' in row " +
                                      std::to_string(i + 1));
            out.set(static_cast<int>(i), static_cast<int>(j), c - '0');
        }
    }
    return out;
}

std::string matrix_to_text(const BoolMatrix& M) {
    std::string out;
    out.reserve(static_cast<size_t>(M.rows()) * (static_cast<size_t>(M.cols()) + 1));
    for (int i = 0; i < M.rows(); ++i) {
        for (int j = 0; j < M.cols(); ++j) out.push_back(M.at(i, j) ? '1' : '0');
        out.push_back('\n');
    }
    return out;
}

json matrix_to_json(const BoolMatrix& M) {
    json rows = json::array();
    for (int i = 0; i < M.rows(); ++i) {
        std::string row;
        for (int j = 0; j < M.cols(); ++j) row.push_back(M.at(i, j) ? '1' : '0');
        rows.push_back(row);
    }
    return json{{"m", M.rows()}, {"n", M.cols()}, {"rows", rows}};
}

BoolMatrix matrix_from_json(const json& j) {
    const int m = get_int(j, "m"), n = get_int(j, "n");
    if (!j.contains("rows") || !j.at("rows").is_array())
        throw ValidationError("matrix JSON: missing \"rows\" array");
    std::string text;
    for (const auto& row : j.at("rows")) {
        if (!row.is_string()) throw ValidationError("matrix JSON: rows must be strings of '0'/'1'");
        text += row.get<std::string>();
        text += '\n';
    }
    const BoolMatrix out = parse_matrix_text(text);
    if (out.rows() != m || out.cols() != n)
        throw DimensionError("matrix JSON: rows do not match the declared dimensions");
    return out;
}

BoolMatrix parse_matrix(const std::string& input) {
    if (looks_like_json(input)) return matrix_from_json(parse_json(input));
    return parse_matrix_text(input);
}

json decomposition_to_json(const SignedDecomposition& d) {
    json terms = json::array();
    for (const auto& t : d.terms)
        terms.push_back(json{{"sign", t.sign}, {"rows", indices_to_json(t.rect.rows)}, {"cols", indices_to_json(t.rect.cols)}});
    return json{{"m", d.m}, {"n", d.n}, {"terms", terms}};
}

SignedDecomposition decomposition_from_json(const json& j) {
    const int m = get_int(j, "m"), n = get_int(j, "n");
    if (!j.contains("terms") || !j.at("terms").is_array())
        throw ValidationError("decomposition JSON: missing \"terms\" array");
    std::vector<SignedTerm> terms;
    for (const auto& t : j.at("terms")) {
        const int sign = get_int(t, "sign");
        if (!t.contains("rows") || !t.contains("cols"))
            throw ValidationError("decomposition JSON: term missing \"rows\" or \"cols\"");
        terms.emplace_back(sign, Rectangle(indices_from_json(t.at("rows"), "rows"), indices_from_json(t.at("cols"), "cols")));
    }
    return SignedDecomposition(m, n, std::move(terms));
}

SignedDecomposition parse_decomposition(const std::string& input) {
    return decomposition_from_json(parse_json(input));
}

BoolTensor parse_tensor_text(const std::string& text) {
    const std::vector<std::string> lines = significant_lines(text);
    if (lines.empty() || lines.front().rfind("dims:", 0) != 0)
        throw ValidationError("tensor text: first line must be \"dims: n1 n2 ...\"");
    std::istringstream head(lines.front().substr(5));
    std::vector<int> dims;
    int d;
    while (head >> d) dims.push_back(d);
    if (!head.eof()) throw ValidationError("tensor text: malformed dims line");

    std::vector<int> entries;
    for (size_t i = 1; i < lines.size(); ++i) {
        for (const char c : lines[i]) {
            if (c != '0' && c != '1')
                throw ValidationError(std::string("tensor text: invalid character '") + c + "'");
            entries.push_back(c - '0');
        }
    }
    return BoolTensor::from_entries(std::move(dims), entries);
}

std::string tensor_to_text(const BoolTensor& T) {
    std::string out = "dims:";
    for (const int d : T.dims()) out += " " + std::to_string(d);
    out += "\n";
    const size_t width = static_cast<size_t>(T.dims().back());
    for (size_t p = 0; p < T.entry_count(); ++p) {
        out.push_back(T.at_flat(p) ? '1' : '0');
        if ((p + 1) % width == 0) out.push_back('\n');
    }
    return out;
}

json tensor_decomposition_to_json(const SignedTensorDecomposition& d) {
    json terms = json::array();
    for (const auto& t : d.terms) {
        json sets = json::array();
        for (const auto& q : t.tensor.sets) sets.push_back(indices_to_json(q));
        terms.push_back(json{{"sign", t.sign}, {"sets", sets}});
    }
    return json{{"dims", d.dims}, {"terms", terms}};
}

SignedTensorDecomposition tensor_decomposition_from_json(const json& j) {
    if (!j.contains("dims") || !j.at("dims").is_array())
        throw ValidationError("tensor decomposition JSON: missing \"dims\" array");
    std::vector<int> dims;
    for (const auto& x : j.at("dims")) {
        if (!x.is_number_integer()) throw ValidationError("tensor decomposition JSON: dims must be integers");
        dims.push_back(x.get<int>());
    }
    if (!j.contains("terms") || !j.at("terms").is_array())
        throw ValidationError("tensor decomposition JSON: missing \"terms\" array");
    std::vector<SignedTensorTerm> terms;
    for (const auto& t : j.at("terms")) {
        const int sign = get_int(t, "sign");
        if (!t.contains("sets") || !t.at("sets").is_array())
            throw ValidationError("tensor decomposition JSON: term missing \"sets\"");
        std::vector<std::vector<int>> sets;
        for (const auto& q : t.at("sets")) sets.push_back(indices_from_json(q, "sets"));
        terms.emplace_back(sign, PrimitiveTensor(std::move(sets)));
    }
    return SignedTensorDecomposition(std::move(dims), std::move(terms));
}

json family_to_json(const SetFamilyPair& p) {
    auto encode = [](const std::vector<std::vector<int>>& fam) {
        json out = json::array();
        for (const auto& set : fam) out.push_back(indices_to_json(set));
        return out;
    };
    return json{{"d", p.d}, {"S", encode(p.S)}, {"T", encode(p.T)}};
}

SetFamilyPair family_from_json(const json& j) {
    SetFamilyPair p;
    p.d = get_int(j, "d");
    auto decode = [&](const char* key) {
        if (!j.contains(key) || !j.at(key).is_array())
            throw ValidationError(std::string("family JSON: missing \"") + key + "\" array");
        std::vector<std::vector<int>> fam;
        for (const auto& set : j.at(key)) {
            std::vector<int> s = indices_from_json(set, key);
            std::sort(s.begin(), s.end());
            s.erase(std::unique(s.begin(), s.end()), s.end());
            fam.push_back(std::move(s));
        }
        return fam;
    };
    p.S = decode("S");
    p.T = decode("T");
    validate_family(p);
    return p;
}

SetFamilyPair parse_family(const std::string& input) { return family_from_json(parse_json(input)); }

json oracle_result_to_json(const OracleResult& r, int m, int n) {
    json out{{"value", r.value},
             {"lower_bound", r.lower_bound},
             {"exhausted", r.exhausted},
             {"nodes", r.nodes},
             {"m", m},
             {"n", n}};
    if (r.witness) out["terms"] = decomposition_to_json(*r.witness).at("terms");
    return out;
}

json monorect_to_json(const MonoRectResult& r, int m, int n) {
    return json{{"m", m},
                {"n", n},
                {"value", r.value},
                {"rows", indices_to_json(r.rect.rows)},
                {"cols", indices_to_json(r.rect.cols)},
                {"area", r.rect.area()},
                {"density", r.density.str()}};
}

}  // namespace sigrect::io
