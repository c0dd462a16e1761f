#include "sigrect/experiment.hpp"

#include <chrono>
#include <sstream>
#include <stdexcept>

#include "sigrect/decompose.hpp"

namespace sigrect {

namespace {

long long now_us() {
    return std::chrono::duration_cast<std::chrono::microseconds>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

BoolMatrix exhaustive_instance(int m, int n, int id) {
    BoolMatrix out(m, n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) out.set(i, j, (id >> (i * n + j)) & 1);
    return out;
}

void check(bool ok, const std::string& what, int id) {
    if (!ok) throw std::logic_error("experiment invariant failed on instance " + std::to_string(id) + ": " + what);
}

}  // namespace

std::string experiment_csv_header() {
    return "id,kind,m,n,seed,ones,rank,indep_size,constructive_terms,"
           "ur_value,ur_lower_bound,ur_exhausted,ur_nodes,"
           "p_value,p_lower_bound,p_exhausted,p_nodes,"
           "mono_value,mono_density,"
           "rank_us,decomp_us,ur_us,p_us,mono_us";
}

std::string record_to_csv(const ExperimentRecord& r) {
    std::ostringstream out;
    out << r.id << ',' << r.kind << ',' << r.m << ',' << r.n << ',' << r.seed << ',' << r.ones << ',' << r.rank << ','
        << r.indep_size << ',' << r.constructive_terms << ',';
    auto oracle = [&](bool ran, const OracleResult& o) {
        if (ran)
            out << o.value << ',' << o.lower_bound << ',' << (o.exhausted ? 1 : 0) << ',' << o.nodes << ',';
        else
            out << ",,,,";
    };
    oracle(r.ur_ran, r.ur);
    oracle(r.p_ran, r.p);
    out << r.mono_value << ',' << r.mono_density.str() << ',' << r.rank_us << ',' << r.decomp_us << ',' << r.ur_us
        << ',' << r.p_us << ',' << r.mono_us;
    return out.str();
}

std::string strip_timing_columns(const std::string& csv) {
    std::istringstream in(csv);
    std::ostringstream out;
    std::string line;
    std::vector<bool> keep;
    bool first = true;
    while (std::getline(in, line)) {
        std::istringstream cells(line);
        std::string cell;
        std::vector<std::string> row;
        while (std::getline(cells, cell, ',')) row.push_back(cell);
        // header rows may repeat when files are concatenated
        if (first) {
            keep.clear();
            for (const auto& name : row)
                keep.push_back(name.size() < 3 || name.substr(name.size() - 3) != "_us");
            first = false;
        }
        bool first_cell = true;
        for (size_t i = 0; i < row.size(); ++i) {
            if (i < keep.size() && !keep[i]) continue;
            if (!first_cell) out << ',';
            out << row[i];
            first_cell = false;
        }
        out << '\n';
    }
    return out.str();
}

std::vector<ExperimentRecord> run_experiment(const ExperimentConfig& config, std::ostream* csv) {
    int count = config.count;
    if (config.exhaustive) {
        if (config.params.m < 1 || config.params.n < 1)
            throw ValidationError("run_experiment: exhaustive mode requires dimensions");
        if (config.params.m * config.params.n > 20)
            throw ResourceLimitError("run_experiment: exhaustive mode caps m*n at 20");
        count = 1 << (config.params.m * config.params.n);
    }
    if (count < 1) throw ValidationError("run_experiment: empty config (set count or exhaustive)");

    if (csv) *csv << experiment_csv_header() << '\n';

    std::vector<ExperimentRecord> records;
    records.reserve(static_cast<size_t>(count));
    for (int id = 0; id < count; ++id) {
        ExperimentRecord r;
        r.id = id;
        r.m = config.params.m;
        r.n = config.params.n;
        BoolMatrix M(1, 1);
        if (config.exhaustive) {
            r.kind = "exhaustive";
            r.seed = 0;
            M = exhaustive_instance(config.params.m, config.params.n, id);
        } else {
            r.kind = generator_kind_to_string(config.kind);
            r.seed = config.seed + static_cast<std::uint64_t>(id);
            M = generate_matrix(config.kind, config.params, r.seed);
            r.m = M.rows();
            r.n = M.cols();
        }
        r.ones = M.ones();

        long long t0 = now_us();
        r.rank = exact_rank(M);
        r.rank_us = now_us() - t0;

        t0 = now_us();
        const IndependentSet s = maximal_independent_columns(M, {}, config.independence_cap);
        const SignedDecomposition dec = signed_rectangle_decomposition(M, {}, config.independence_cap);
        r.decomp_us = now_us() - t0;
        r.indep_size = static_cast<int>(s.columns.size());
        r.constructive_terms = static_cast<int>(dec.terms.size());

        check(verify_decomposition(M, dec), "reconstruction", id);
        check(r.constructive_terms <= 2 * r.indep_size, "term count <= 2|S|", id);
        check(independent_set_bound_check(r.indep_size, r.rank), "2^|S| <= (|S|+1)^r", id);

        if (config.ur_budget > 0) {
            t0 = now_us();
            r.ur = exact_signed_rank(M, config.ur_budget);
            r.ur_us = now_us() - t0;
            r.ur.witness.reset();
            r.ur_ran = true;
            check(r.rank <= r.ur.lower_bound, "rank <= ur lower bound", id);
            if (r.ur.exhausted) check(r.ur.value <= r.constructive_terms, "ur <= constructive terms", id);
        }
        if (config.p_budget > 0) {
            t0 = now_us();
            r.p = exact_partition_number(M, config.p_budget);
            r.p_us = now_us() - t0;
            r.p.witness.reset();
            r.p_ran = true;
            if (r.ur_ran && r.ur.exhausted && r.p.exhausted)
                check(r.rank <= r.ur.value && r.ur.value <= r.p.value, "rank <= ur <= p", id);
        }

        t0 = now_us();
        const MonoRectResult mono = max_monochromatic_rectangle(M, config.mono_cap);
        r.mono_us = now_us() - t0;
        r.mono_value = mono.value;
        r.mono_density = mono.density;

        if (csv) *csv << record_to_csv(r) << '\n';
        records.push_back(std::move(r));
    }
    return records;
}

}  // namespace sigrect
