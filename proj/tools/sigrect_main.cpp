// sigrect: signed rectangle decomposition toolkit CLI.
//
// Exit codes: 0 success, 2 usage error, 3 resource limit, 4 validation
// failure (bad input, failed verify/check).

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "sigrect/decompose.hpp"
#include "sigrect/experiment.hpp"
#include "sigrect/io.hpp"

namespace {

using namespace sigrect;

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot open output file: " + path);
    out << content;
}

// "asc" (default), "desc", or a 1-based comma-separated permutation
std::vector<int> parse_order_flag(const std::string& order, int n) {
    if (order.empty() || order == "asc") return {};
    std::vector<int> out;
    if (order == "desc") {
        for (int j = n - 1; j >= 0; --j) out.push_back(j);
        return out;
    }
    std::istringstream in(order);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        try {
            out.push_back(std::stoi(tok) - 1);
        } catch (const std::exception&) {
            throw ValidationError("--order: expected asc, desc, or a comma-separated permutation");
        }
    }
    return out;
}

std::vector<int> parse_l_values(const std::string& values) {
    std::vector<int> out;
    std::istringstream in(values);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        try {
            out.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw ValidationError("--l-values: expected comma-separated integers");
        }
    }
    if (out.empty()) throw ValidationError("--l-values: expected at least one size");
    return out;
}

struct Options {
    std::string input, output, format = "text";
    std::string decomposition_path;
    std::string order = "asc";
    std::string l_values;
    std::string kind;
    int m = 0, n = 0, rects = 0, lambda = 0, count = 0;
    double density = 0.5;
    bool exhaustive = false;
    std::uint64_t seed = 0, budget = kDefaultNodeBudget;
    int cap = kDefaultIndependenceCap;
    int max_order = kDefaultMaxTensorOrder;
};

int cmd_rank(const Options& opt) {
    const BoolMatrix M = io::parse_matrix(read_input(opt.input));
    const int r = exact_rank(M);
    if (opt.format == "json")
        write_output(opt.output, nlohmann::json{{"rank", r}}.dump(2) + "\n");
    else
        write_output(opt.output, std::to_string(r) + "\n");
    return 0;
}

int cmd_decompose(const Options& opt) {
    const BoolMatrix M = io::parse_matrix(read_input(opt.input));
    const SignedDecomposition d = signed_rectangle_decomposition(M, parse_order_flag(opt.order, M.cols()), opt.cap);
    write_output(opt.output, io::decomposition_to_json(d).dump(2) + "\n");
    return 0;
}

int cmd_verify(const Options& opt) {
    const BoolMatrix M = io::parse_matrix(read_input(opt.input));
    const SignedDecomposition d = io::parse_decomposition(read_input(opt.decomposition_path));
    const bool ok = verify_decomposition(M, d);
    if (opt.format == "json")
        write_output(opt.output, nlohmann::json{{"verified", ok}}.dump(2) + "\n");
    else
        write_output(opt.output, ok ? "true\n" : "false\n");
    return ok ? 0 : 4;
}

int cmd_oracle(const Options& opt, bool signed_rank) {
    const BoolMatrix M = io::parse_matrix(read_input(opt.input));
    const OracleResult r = signed_rank ? exact_signed_rank(M, opt.budget) : exact_partition_number(M, opt.budget);
    write_output(opt.output, io::oracle_result_to_json(r, M.rows(), M.cols()).dump(2) + "\n");
    return 0;
}

int cmd_monorect(const Options& opt) {
    const BoolMatrix M = io::parse_matrix(read_input(opt.input));
    const MonoRectResult r = max_monochromatic_rectangle(M);
    write_output(opt.output, io::monorect_to_json(r, M.rows(), M.cols()).dump(2) + "\n");
    return 0;
}

int cmd_tensor_decompose(const Options& opt) {
    const BoolTensor T = io::parse_tensor_text(read_input(opt.input));
    std::optional<int> lambda;
    if (opt.lambda > 0) lambda = opt.lambda - 1;
    const SignedTensorDecomposition d = tensor_signed_decomposition(T, lambda, opt.cap, opt.max_order);
    write_output(opt.output, io::tensor_decomposition_to_json(d).dump(2) + "\n");
    return 0;
}

int cmd_to_setsys(const Options& opt) {
    const BoolMatrix M = io::parse_matrix(read_input(opt.input));
    SignedDecomposition d(M.rows(), M.cols());
    if (opt.decomposition_path.empty())
        d = signed_rectangle_decomposition(M, parse_order_flag(opt.order, M.cols()), opt.cap);
    else
        d = io::parse_decomposition(read_input(opt.decomposition_path));
    const CrossIntersectingReduction red = signed_to_cross_intersecting(M, d);
    nlohmann::json j = io::family_to_json(red.pair);
    j["u"] = red.u;
    write_output(opt.output, j.dump(2) + "\n");
    return 0;
}

int cmd_check_setsys(const Options& opt) {
    const SetFamilyPair p = io::parse_family(read_input(opt.input));
    const IntersectionSpec spec{parse_l_values(opt.l_values)};
    const bool ok = check_cross_intersecting(p, spec);
    if (opt.format == "json")
        write_output(opt.output, nlohmann::json{{"cross_intersecting", ok}}.dump(2) + "\n");
    else
        write_output(opt.output, ok ? "true\n" : "false\n");
    return ok ? 0 : 4;
}

int cmd_gen(const Options& opt) {
    try {
        const GeneratorKind kind = generator_kind_from_string(opt.kind);
        GeneratorParams params;
        params.m = opt.m;
        params.n = opt.n;
        params.density = opt.density;
        params.rect_count = opt.rects;
        const BoolMatrix M = generate_matrix(kind, params, opt.seed);
        if (opt.format == "json")
            write_output(opt.output, io::matrix_to_json(M).dump(2) + "\n");
        else
            write_output(opt.output, io::matrix_to_text(M));
        return 0;
    } catch (const ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }
}

int cmd_experiment(const Options& opt) {
    if (!opt.exhaustive && opt.count < 1) {
        std::cerr << "usage error: experiment needs --count or --exhaustive\n";
        return 2;
    }
    ExperimentConfig config;
    try {
        config.kind = generator_kind_from_string(opt.kind.empty() ? "random-density" : opt.kind);
    } catch (const ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }
    config.params.m = opt.m;
    config.params.n = opt.n;
    config.params.density = opt.density;
    config.params.rect_count = opt.rects;
    config.exhaustive = opt.exhaustive;
    config.count = opt.count;
    config.seed = opt.seed;
    config.ur_budget = opt.budget;
    config.p_budget = opt.budget;
    config.independence_cap = opt.cap;

    std::ostringstream csv;
    run_experiment(config, &csv);
    write_output(opt.output, csv.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"signed rectangle decompositions of Boolean matrices and tensors"};
    app.require_subcommand(1);

    Options opt;
    std::function<int()> action;

    auto add_io = [&](CLI::App* cmd, bool with_format = true) {
        cmd->add_option("--input", opt.input, "input file ('-' or omitted: stdin)");
        cmd->add_option("--output", opt.output, "output file (omitted: stdout)");
        if (with_format) cmd->add_option("--format", opt.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
    };

    auto* rank = app.add_subcommand("rank", "exact rank over the rationals");
    add_io(rank);
    rank->callback([&] { action = [&] { return cmd_rank(opt); }; });

    auto* dec = app.add_subcommand("decompose", "signed rectangle decomposition (at most 2|S| terms)");
    add_io(dec);
    dec->add_option("--order", opt.order, "column scan order: asc, desc, or 1-based permutation");
    dec->add_option("--cap-independence", opt.cap, "independence enumeration cap")->check(CLI::Range(1, 26));
    dec->callback([&] { action = [&] { return cmd_decompose(opt); }; });

    auto* ver = app.add_subcommand("verify", "check a decomposition against a matrix");
    add_io(ver);
    ver->add_option("--decomposition", opt.decomposition_path, "decomposition JSON file")->required();
    ver->callback([&] { action = [&] { return cmd_verify(opt); }; });

    auto* ur = app.add_subcommand("exact-ur", "exact signed rectangle rank (iterative deepening)");
    add_io(ur, false);
    ur->add_option("--budget-nodes", opt.budget, "search node budget");
    ur->callback([&] { action = [&] { return cmd_oracle(opt, true); }; });

    auto* pn = app.add_subcommand("exact-p", "exact partitioning number (branch and bound)");
    add_io(pn, false);
    pn->add_option("--budget-nodes", opt.budget, "search node budget");
    pn->callback([&] { action = [&] { return cmd_oracle(opt, false); }; });

    auto* mono = app.add_subcommand("monorect", "maximum monochromatic rectangle");
    add_io(mono, false);
    mono->callback([&] { action = [&] { return cmd_monorect(opt); }; });

    auto* td = app.add_subcommand("tensor-decompose", "signed primitive-tensor decomposition");
    add_io(td, false);
    td->add_option("--lambda", opt.lambda, "1-based recursion coordinate (default: last)")->check(CLI::Range(1, 64));
    td->add_option("--cap-independence", opt.cap, "independence enumeration cap")->check(CLI::Range(1, 26));
    td->add_option("--max-order", opt.max_order, "tensor order cap")->check(CLI::Range(2, 16));
    td->callback([&] { action = [&] { return cmd_tensor_decompose(opt); }; });

    auto* tss = app.add_subcommand("to-setsys", "convert matrix + signed decomposition to a {u,u+1}-cross-intersecting pair");
    add_io(tss, false);
    tss->add_option("--decomposition", opt.decomposition_path, "decomposition JSON (computed when omitted)");
    tss->add_option("--order", opt.order, "column scan order when computing the decomposition");
    tss->add_option("--cap-independence", opt.cap, "independence enumeration cap")->check(CLI::Range(1, 26));
    tss->callback([&] { action = [&] { return cmd_to_setsys(opt); }; });

    auto* css = app.add_subcommand("check-setsys", "check a family pair against admissible intersection sizes");
    add_io(css);
    css->add_option("--l-values", opt.l_values, "comma-separated admissible intersection sizes")->required();
    css->callback([&] { action = [&] { return cmd_check_setsys(opt); }; });

    auto* gen = app.add_subcommand("gen", "generate an instance matrix");
    add_io(gen);
    gen->add_option("--kind", opt.kind, "random-density | rectangle-sum | identity | complement-identity")->required();
    gen->add_option("--m", opt.m, "rows");
    gen->add_option("--n", opt.n, "columns");
    gen->add_option("--density", opt.density, "probability of a 1 entry (random-density)")->check(CLI::Range(0.0, 1.0));
    gen->add_option("--rects", opt.rects, "rectangle count for rectangle-sum");
    gen->add_option("--seed", opt.seed, "PRNG seed");
    gen->callback([&] { action = [&] { return cmd_gen(opt); }; });

    auto* exp = app.add_subcommand("experiment", "run the harness and emit one CSV row per instance");
    add_io(exp, false);
    exp->add_option("--gen", opt.kind, "generator kind (default random-density)");
    exp->add_flag("--exhaustive", opt.exhaustive, "enumerate all 2^(m*n) matrices");
    exp->add_option("--m", opt.m, "rows");
    exp->add_option("--n", opt.n, "columns");
    exp->add_option("--density", opt.density, "probability of a 1 entry")->check(CLI::Range(0.0, 1.0));
    exp->add_option("--rects", opt.rects, "rectangle count for rectangle-sum");
    exp->add_option("--count", opt.count, "number of instances");
    exp->add_option("--seed", opt.seed, "base seed; instance i uses seed+i");
    exp->add_option("--budget-nodes", opt.budget, "oracle node budget (0 disables the oracles)");
    exp->add_option("--cap-independence", opt.cap, "independence enumeration cap")->check(CLI::Range(1, 26));
    exp->callback([&] { action = [&] { return cmd_experiment(opt); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        return action();
    } catch (const ResourceLimitError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 3;
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 4;
    } catch (const DimensionError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 4;
    } catch (const BoundsError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
