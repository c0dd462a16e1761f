#pragma once

// Experiment harness: generate instances, run the constructive engine and
// the exact oracles on each, validate the reconstruction / sandwich / bound
// invariants, and stream one CSV row per instance. Rows are deterministic
// for a fixed config except the *_us timing columns.

#include <ostream>
#include <string>
#include <vector>

#include "sigrect/generate.hpp"
#include "sigrect/oracles.hpp"

namespace sigrect {

struct ExperimentConfig {
    GeneratorKind kind = GeneratorKind::RandomDensity;
    GeneratorParams params;
    bool exhaustive = false;  // enumerate all 2^(m*n) matrices of params.m x params.n
    int count = 0;            // ignored when exhaustive
    std::uint64_t seed = 0;   // instance i uses seed + i
    std::uint64_t ur_budget = 20'000;  // 0 disables the oracle
    std::uint64_t p_budget = 50'000;   // 0 disables the oracle
    int independence_cap = kDefaultIndependenceCap;
    int mono_cap = kDefaultMonoCap;
};

struct ExperimentRecord {
    int id = 0;
    std::string kind;
    int m = 0, n = 0;
    std::uint64_t seed = 0;
    int ones = 0;
    int rank = 0;
    int indep_size = 0;
    int constructive_terms = 0;
    bool ur_ran = false, p_ran = false;
    OracleResult ur, p;  // witnesses dropped
    int mono_value = 0;
    Rational mono_density;
    long long rank_us = 0, decomp_us = 0, ur_us = 0, p_us = 0, mono_us = 0;
};

std::string experiment_csv_header();
std::string record_to_csv(const ExperimentRecord& r);

// Drops the *_us columns; used by determinism checks.
std::string strip_timing_columns(const std::string& csv);

// Throws ValidationError for an empty config (neither count nor exhaustive).
// Internal invariant violations (failed reconstruction, sandwich, or bound
// checks) abort with std::logic_error; oracle budget exhaustion is recorded
// per instance and is not an error.
std::vector<ExperimentRecord> run_experiment(const ExperimentConfig& config, std::ostream* csv = nullptr);

}  // namespace sigrect
