#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "topoqec/decoders.hpp"

namespace topoqec {

struct ExperimentConfig {
    std::string code = "toric"; // toric | planar
    std::vector<std::size_t> sizes;
    double p_min = 0.08, p_max = 0.13;
    std::size_t steps = 11;
    std::size_t trials = 10000;
    std::string noise = "iid-z"; // iid-z | depolarizing | phenomenological
    /// Optional noise stanza, e.g. `noise = { kind = "phenomenological",
    /// p_data = 0.03, p_meas = 0.01 }`. When set it overrides `noise`; the
    /// sweep scales all rates proportionally so the largest equals the grid p.
    std::string noise_spec;
    std::string decoder = "mwpm"; // mwpm | ml
    std::size_t rounds = 0;       // phenomenological: 0 means rounds = size
    std::uint64_t seed = 1;
    std::string out;

    void validate() const; // throws std::invalid_argument on bad configs
};

struct ResultRow {
    std::string code;
    std::size_t size = 0;
    double p = 0;
    std::size_t trials = 0;
    std::size_t failures = 0;
    double logical_error_rate = 0;
    double standard_error = 0;
};

struct ResultTable {
    std::vector<ResultRow> rows;

    /// Exact column set: code,size,p,trials,failures,logical_error_rate,stderr
    std::string csv() const;
};

/// Runs the sweep. Deterministic for a fixed config: every trial draws from
/// the counter-based stream (seed, size, p index, trial), independent of the
/// worker count.
ResultTable run_threshold_experiment(const ExperimentConfig& cfg, unsigned num_threads = 0);

/// One decoding trial; exposed for the Python bindings and tests.
bool threshold_trial_fails(const SurfaceCodeLayout& code, const NoiseModel& model,
                           const std::string& decoder, std::size_t rounds, RngStream& rng);

struct CrossingEstimate {
    double p_th = 0;
    double lo = 0, hi = 0;          // min-max spread of pairwise crossings
    std::vector<double> pairwise;   // one entry per consecutive size pair
};

/// Pairwise linear-interpolation crossings of consecutive size curves;
/// nullopt when no pair brackets a sign change.
std::optional<CrossingEstimate> estimate_crossing(const ResultTable& table);

} // namespace topoqec
