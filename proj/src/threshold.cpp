#include "topoqec/threshold.hpp"

#include <memory>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <iomanip>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace topoqec {

namespace {

// Noise model at sweep point p: the stanza's rates are scaled proportionally
// so the largest one equals p.
NoiseModel sweep_model(const ExperimentConfig& cfg, double p) {
    if (cfg.noise_spec.empty()) {
        if (cfg.noise == "depolarizing") return NoiseModel::depolarizing(p);
        if (cfg.noise == "phenomenological") return NoiseModel::phenomenological(p, p);
        return NoiseModel::iid_z(p);
    }
    const NoiseModel base = parse_noise_spec(cfg.noise_spec);
    switch (base.kind) {
        case NoiseKind::IidXZ: {
            const double top = std::max(base.p_x, base.p_z);
            if (top == 0) return NoiseModel::iid_xz(0, 0);
            return NoiseModel::iid_xz(p * base.p_x / top, p * base.p_z / top);
        }
        case NoiseKind::Depolarizing:
            return NoiseModel::depolarizing(p);
        case NoiseKind::Phenomenological: {
            const double top = std::max(base.p_data, base.p_meas);
            if (top == 0) return NoiseModel::phenomenological(0, 0);
            return NoiseModel::phenomenological(p * base.p_data / top, p * base.p_meas / top);
        }
        case NoiseKind::CircuitLevel:
            throw std::invalid_argument("circuit-level noise has analytics only, no sampler");
    }
    throw std::logic_error("unreachable");
}

} // namespace

void ExperimentConfig::validate() const {
    if (code != "toric" && code != "planar") throw std::invalid_argument("unknown code: " + code);
    if (sizes.empty()) throw std::invalid_argument("at least one size required");
    for (auto s : sizes)
        if (s < 2) throw std::invalid_argument("sizes must be at least 2");
    if (trials < 1) throw std::invalid_argument("at least one trial required");
    if (steps < 1) throw std::invalid_argument("at least one p step required");
    if (!(p_min >= 0 && p_max < 0.5 && p_min <= p_max))
        throw std::invalid_argument("p grid must be increasing within [0, 0.5)");
    if (steps > 1 && p_min == p_max)
        throw std::invalid_argument("p grid must be strictly increasing");
    if (noise != "iid-z" && noise != "depolarizing" && noise != "phenomenological")
        throw std::invalid_argument("unknown noise model: " + noise);
    if (decoder != "mwpm" && decoder != "ml")
        throw std::invalid_argument("unknown decoder: " + decoder);
    NoiseKind kind = NoiseKind::IidXZ;
    if (noise == "depolarizing") kind = NoiseKind::Depolarizing;
    if (noise == "phenomenological") kind = NoiseKind::Phenomenological;
    if (!noise_spec.empty()) kind = sweep_model(*this, 0.01).kind;
    if (kind == NoiseKind::Phenomenological && code != "toric")
        throw std::invalid_argument("phenomenological runs require the toric code");
    if (kind == NoiseKind::Phenomenological && decoder == "ml")
        throw std::invalid_argument("ML decoding is 2D only");
    if (decoder == "ml") {
        for (auto s : sizes)
            if (2 * s * s > 32)
                throw std::invalid_argument("size too large for the ML decoder (max toric 4)");
    }
}

bool threshold_trial_fails(const SurfaceCodeLayout& code, const NoiseModel& model,
                           const std::string& decoder, std::size_t rounds, RngStream& rng) {
    if (model.kind == NoiseKind::Phenomenological) {
        const SpaceTimeSample sample = sample_spacetime_error(model, code, rounds, rng);
        DecodeResult res = decode_3d(code, sample.s, model);
        Chain err = code.zero_error('Z');
        err.bits = sample.accumulated;
        res.classify(code, err, 'Z');
        return !res.success;
    }
    const PauliErrorSample err = sample_error(model, code, rng);
    bool fail = false;
    if (model.kind == NoiseKind::IidXZ || model.kind == NoiseKind::Depolarizing) {
        // Z errors are flagged by the star generators.
        if (decoder == "ml") {
            static thread_local const SurfaceCodeLayout* cached_code = nullptr;
            static thread_local std::unique_ptr<MlDecoder> cached;
            if (cached_code != &code) {
                cached = std::make_unique<MlDecoder>(code);
                cached_code = &code;
            }
            const double p =
                model.kind == NoiseKind::Depolarizing ? 2.0 * model.p / 3.0 : model.p_z;
            const auto res = cached->decode(syndrome_of(code, err.z_chain, 'Z'), p);
            Chain net = err.z_chain;
            net ^= res.recovery;
            fail |= !residual_class(code, net, 'Z').trivial();
        } else {
            DecodeResult res = decode_2d(code, syndrome_of(code, err.z_chain, 'Z'), 'Z');
            res.classify(code, err.z_chain, 'Z');
            fail |= !res.success;
        }
        if (model.kind == NoiseKind::Depolarizing ||
            (model.kind == NoiseKind::IidXZ && model.p_x > 0)) {
            DecodeResult res = decode_2d(code, syndrome_of(code, err.x_chain, 'X'), 'X');
            res.classify(code, err.x_chain, 'X');
            fail |= !res.success;
        }
    }
    return fail;
}

ResultTable run_threshold_experiment(const ExperimentConfig& cfg, unsigned num_threads) {
    cfg.validate();
    if (num_threads == 0) num_threads = std::max(1u, std::thread::hardware_concurrency());
    ResultTable table;
    for (std::size_t si = 0; si < cfg.sizes.size(); ++si) {
        const std::size_t size = cfg.sizes[si];
        const SurfaceCodeLayout code = build_code(code_kind_from_name(cfg.code), size);
        const std::size_t rounds = cfg.rounds ? cfg.rounds : size;
        for (std::size_t pi = 0; pi < cfg.steps; ++pi) {
            const double p = cfg.steps == 1 ? cfg.p_min
                                            : cfg.p_min + (cfg.p_max - cfg.p_min) *
                                                              static_cast<double>(pi) /
                                                              static_cast<double>(cfg.steps - 1);
            const NoiseModel model = sweep_model(cfg, p);

            std::atomic<std::size_t> next_trial{0};
            std::atomic<std::size_t> failures{0};
            auto worker = [&]() {
                std::size_t local = 0;
                for (;;) {
                    const std::size_t t = next_trial.fetch_add(64);
                    if (t >= cfg.trials) break;
                    const std::size_t hi = std::min(cfg.trials, t + 64);
                    for (std::size_t trial = t; trial < hi; ++trial) {
                        RngStream rng(cfg.seed, size, pi, trial);
                        if (threshold_trial_fails(code, model, cfg.decoder, rounds, rng)) ++local;
                    }
                }
                failures.fetch_add(local);
            };
            std::vector<std::thread> pool;
            for (unsigned w = 1; w < num_threads; ++w) pool.emplace_back(worker);
            worker();
            for (auto& th : pool) th.join();

            ResultRow row;
            row.code = cfg.code;
            row.size = size;
            row.p = p;
            row.trials = cfg.trials;
            row.failures = failures.load();
            row.logical_error_rate =
                static_cast<double>(row.failures) / static_cast<double>(row.trials);
            row.standard_error = std::sqrt(row.logical_error_rate *
                                           (1.0 - row.logical_error_rate) /
                                           static_cast<double>(row.trials));
            table.rows.push_back(row);
        }
    }
    return table;
}

std::string ResultTable::csv() const {
    std::ostringstream out;
    out << "code,size,p,trials,failures,logical_error_rate,stderr\n";
    out << std::setprecision(10);
    for (const auto& r : rows) {
        out << r.code << ',' << r.size << ',' << r.p << ',' << r.trials << ',' << r.failures
            << ',' << r.logical_error_rate << ',' << r.standard_error << '\n';
    }
    return out.str();
}

std::optional<CrossingEstimate> estimate_crossing(const ResultTable& table) {
    // Group rows by size, preserving first-seen order; p values ascending per
    // size as produced by the sweep.
    std::vector<std::size_t> sizes;
    std::map<std::size_t, std::vector<const ResultRow*>> by_size;
    for (const auto& r : table.rows) {
        if (!by_size.count(r.size)) sizes.push_back(r.size);
        by_size[r.size].push_back(&r);
    }
    if (sizes.size() < 2) return std::nullopt;
    CrossingEstimate est;
    for (std::size_t i = 0; i + 1 < sizes.size(); ++i) {
        const auto& a = by_size[sizes[i]];
        const auto& b = by_size[sizes[i + 1]];
        if (a.size() != b.size() || a.size() < 2) continue;
        for (std::size_t j = 0; j + 1 < a.size(); ++j) {
            const double g0 = a[j]->logical_error_rate - b[j]->logical_error_rate;
            const double g1 = a[j + 1]->logical_error_rate - b[j + 1]->logical_error_rate;
            if ((g0 > 0 && g1 > 0) || (g0 < 0 && g1 < 0)) continue;
            if (g0 == g1) continue;
            const double frac = g0 / (g0 - g1);
            est.pairwise.push_back(a[j]->p + frac * (a[j + 1]->p - a[j]->p));
            break; // first bracketing interval per size pair
        }
    }
    if (est.pairwise.empty()) return std::nullopt;
    std::vector<double> sorted = est.pairwise;
    std::sort(sorted.begin(), sorted.end());
    const std::size_t m = sorted.size();
    est.p_th = m % 2 ? sorted[m / 2] : 0.5 * (sorted[m / 2 - 1] + sorted[m / 2]);
    est.lo = sorted.front();
    est.hi = sorted.back();
    return est;
}

} // namespace topoqec
