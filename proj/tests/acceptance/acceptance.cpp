// Acceptance suite: one check per headline claim, each printing a single
// PASS/FAIL line with the measured numbers. Run everything with no
// arguments, one criterion by name, or --list to enumerate.

#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "topoqec/circuit.hpp"
#include "topoqec/css.hpp"
#include "topoqec/defects.hpp"
#include "topoqec/threshold.hpp"

#include "../support/dense_sim.hpp"
#include "../support/graph_rules.hpp"

using namespace topoqec;
using namespace topoqec::testing;

namespace {

struct Criterion {
    std::string name;
    std::function<bool(std::string&)> run;
};

bool toric_threshold(std::string& detail) {
    ExperimentConfig cfg;
    cfg.code = "toric";
    cfg.sizes = {8, 12, 16};
    cfg.p_min = 0.08;
    cfg.p_max = 0.13;
    cfg.steps = 11;
    cfg.trials = 10000;
    cfg.noise = "iid-z";
    cfg.decoder = "mwpm";
    cfg.seed = 20260811;
    const ResultTable table = run_threshold_experiment(cfg);
    const auto est = estimate_crossing(table);
    if (!est) {
        detail = "no crossing found";
        return false;
    }
    std::ostringstream os;
    os << "crossing " << est->p_th << " spread [" << est->lo << ", " << est->hi
       << "] target [0.095, 0.110] around 10.3%";
    detail = os.str();
    return est->p_th >= 0.095 && est->p_th <= 0.110;
}

bool phenomenological_threshold(std::string& detail) {
    ExperimentConfig cfg;
    cfg.code = "toric";
    cfg.sizes = {4, 6, 8};
    cfg.p_min = 0.02;
    cfg.p_max = 0.04;
    cfg.steps = 11;
    cfg.trials = 10000;
    cfg.noise = "phenomenological";
    cfg.decoder = "mwpm";
    cfg.rounds = 0; // rounds = size, plus the perfect round
    cfg.seed = 31337;
    const ResultTable table = run_threshold_experiment(cfg);
    const auto est = estimate_crossing(table);
    if (!est) {
        detail = "no crossing found";
        return false;
    }
    std::ostringstream os;
    os << "crossing " << est->p_th << " spread [" << est->lo << ", " << est->hi
       << "] target [0.025, 0.034] around 2.93%";
    detail = os.str();
    return est->p_th >= 0.025 && est->p_th <= 0.034;
}

bool syndrome_bias_locators(std::string& detail) {
    // Solve (1-2p)^6 = 0.70 by bisection and compare with 0.0289 +- 0.0001.
    double lo = 0.0, hi = 0.25;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (syndrome_bias(NoiseModel::phenomenological(mid, mid)) > 0.70)
            lo = mid;
        else
            hi = mid;
    }
    const double p_star = 0.5 * (lo + hi);
    const bool phen_ok = std::abs(p_star - 0.0289) <= 1e-4;
    // Circuit-level expression evaluated at the quoted locator p2 = 0.63%.
    const double circuit = syndrome_bias(NoiseModel::circuit_level(0.0063));
    const bool circ_ok = std::abs(circuit - 0.70) <= 0.005;
    // Where the circuit-level expression actually hits 0.70, for the record.
    lo = 0.0;
    hi = 0.05;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (syndrome_bias(NoiseModel::circuit_level(mid)) > 0.70)
            lo = mid;
        else
            hi = mid;
    }
    std::ostringstream os;
    os << "phenomenological locator p = " << p_star << " (target 0.0289 +- 0.0001, "
       << (phen_ok ? "ok" : "off") << "); circuit expression at p2 = 0.0063 evaluates to "
       << circuit << " (target 0.70 +- 0.005, " << (circ_ok ? "ok" : "off")
       << "; the expression reaches 0.70 at p2 = " << 0.5 * (lo + hi) << ")";
    detail = os.str();
    return phen_ok && circ_ok;
}

bool distillation_analytics(std::string& detail) {
    // Exhaustive 2^15 oracle at three rates, to 1e-12.
    const auto& hx = reed_muller15_hx();
    const auto& hz = reed_muller15_hz();
    std::vector<std::uint32_t> hx_masks;
    for (const auto& r : hx) {
        std::uint32_t m = 0;
        for (auto j : r.set_bits()) m |= 1u << j;
        hx_masks.push_back(m);
    }
    std::vector<std::uint32_t> hz_masks;
    for (const auto& r : hz) {
        std::uint32_t m = 0;
        for (auto j : r.set_bits()) m |= 1u << j;
        hz_masks.push_back(m);
    }
    std::set<std::uint32_t> vhz;
    for (std::uint32_t v = 0; v < (1u << hz_masks.size()); ++v) {
        std::uint32_t acc = 0;
        for (std::size_t i = 0; i < hz_masks.size(); ++i)
            if (v & (1u << i)) acc ^= hz_masks[i];
        vhz.insert(acc);
    }
    const std::uint32_t ones = (1u << 15) - 1;
    bool oracle_ok = true;
    double worst = 0;
    for (double p : {0.01, 0.05, 0.1}) {
        double pass = 0, joint = 0;
        for (std::uint32_t c = 0; c < (1u << 15); ++c) {
            bool commutes = true;
            for (auto m : hx_masks)
                if (__builtin_parity(c & m)) {
                    commutes = false;
                    break;
                }
            if (!commutes) continue;
            const int w = __builtin_popcount(c);
            const double prob = std::pow(p, w) * std::pow(1 - p, 15 - w);
            pass += prob;
            if (vhz.count(c ^ ones)) joint += prob;
        }
        const DistillPoint pt = distill_curve(p);
        worst = std::max({worst, std::abs(pt.p_pass - pass), std::abs(pt.p_out - joint / pass)});
        oracle_ok = oracle_ok && std::abs(pt.p_pass - pass) < 1e-12 &&
                    std::abs(pt.p_out - joint / pass) < 1e-12;
    }
    const DistillThreshold th = distill_threshold();
    const bool fixed_ok = std::abs(th.fixed_point - 0.141) <= 0.001;
    const double ratio = distill_curve(0.01).p_out / (35.0 * 1e-6);
    const bool ratio_ok = ratio >= 0.97 && ratio <= 1.10;
    const double expo = std::log(15.0) / std::log(3.0);
    const bool expo_ok = std::abs(expo - 2.465) < 0.005;
    std::ostringstream os;
    os << "oracle deviation " << worst << " (<= 1e-12); fixed point " << th.fixed_point
       << "; p_out(0.01)/35p^3 = " << ratio << "; cost exponent " << expo;
    detail = os.str();
    return oracle_ok && fixed_ok && ratio_ok && expo_ok;
}

CliffordCircuit random_clifford(std::size_t n, std::size_t depth, RngStream& rng) {
    CliffordCircuit c;
    c.n = n;
    for (std::size_t i = 0; i < depth; ++i) {
        Gate g;
        switch (rng.below(8)) {
            case 0: g.kind = GateKind::H; break;
            case 1: g.kind = GateKind::S; break;
            case 2: g.kind = GateKind::Sdg; break;
            case 3: g.kind = GateKind::X; break;
            case 4: g.kind = GateKind::Y; break;
            case 5: g.kind = GateKind::Z; break;
            case 6: g.kind = GateKind::CNOT; break;
            default: g.kind = GateKind::CZ; break;
        }
        g.q0 = rng.below(n);
        if (g.kind == GateKind::CNOT || g.kind == GateKind::CZ)
            do { g.q1 = rng.below(n); } while (g.q1 == g.q0);
        c.gates.push_back(g);
    }
    for (std::size_t q = 0; q < n; ++q) c.measured.push_back(q);
    return c;
}

bool stabilizer_oracle_equivalence(std::string& detail) {
    RngStream rng(0xACCE);
    double worst_prob = 0, worst_sigma = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 8;
        const CliffordCircuit c = random_clifford(n, 40, rng);
        DenseState dense(n);
        dense.apply_circuit(c);
        // Strong simulation across every full outcome.
        std::vector<int> bits(n);
        for (std::size_t v = 0; v < (std::size_t(1) << n); ++v) {
            for (std::size_t q = 0; q < n; ++q) bits[q] = (v >> q) & 1;
            const double got = outcome_probability(c, bits).value();
            const double want = dense.outcome_probability(c.measured, bits);
            worst_prob = std::max(worst_prob, std::abs(got - want));
            if (worst_prob > 1e-10) {
                detail = "strong-simulation deviation " + std::to_string(worst_prob);
                return false;
            }
        }
        // Weak-sampling marginals within 4 sigma.
        const int shots = 1000;
        std::vector<int> onecount(n, 0);
        const std::vector<PauliBasisMixture> inputs(n, PauliBasisMixture::zero());
        for (int s = 0; s < shots; ++s) {
            const auto sample = weak_sample(c, inputs, rng);
            for (std::size_t q = 0; q < n; ++q) onecount[q] += sample[q];
        }
        for (std::size_t q = 0; q < n; ++q) {
            std::vector<int> one = {1};
            const double pq = dense.outcome_probability({c.measured[q]}, one);
            const double freq = static_cast<double>(onecount[q]) / shots;
            const double sigma = std::sqrt(std::max(pq * (1 - pq) / shots, 1e-12));
            const double pull = std::abs(freq - pq) / sigma;
            if (pq == 0 || pq == 1) {
                if (freq != pq) {
                    detail = "deterministic marginal violated";
                    return false;
                }
            } else {
                worst_sigma = std::max(worst_sigma, pull);
                if (pull > 4.0) {
                    std::ostringstream os;
                    os << "weak-sampling marginal off by " << pull << " sigma";
                    detail = os.str();
                    return false;
                }
            }
        }
    }
    std::ostringstream os;
    os << "100 circuits: max strong-simulation deviation " << worst_prob
       << " (<= 1e-10), max weak-sampling pull " << worst_sigma << " sigma (<= 4)";
    detail = os.str();
    return true;
}

bool graph_rule_suite(std::string& detail) {
    const GraphRuleStats st = run_graph_rule_suite(12);
    std::ostringstream os;
    os << st.checked << " rule instances on chains up to length 12, " << st.failed
       << " failures";
    detail = os.str();
    return st.failed == 0 && st.checked > 0;
}

bool mwpm_exactness(std::string& detail) {
    RngStream rng(0xB10550);
    for (int it = 0; it < 1000; ++it) {
        const std::size_t n = 2 * (1 + rng.below(5));
        MatchingGraph g = MatchingGraph::complete(n);
        const std::int64_t wmax = it % 4 == 0 ? 4 : 100;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                g.set_weight(i, j, static_cast<std::int64_t>(rng.below(wmax + 1)));
        const auto m = mwpm(g);
        // exhaustive minimum over pairings
        std::function<std::int64_t(std::vector<std::size_t>&)> brute =
            [&](std::vector<std::size_t>& rem) -> std::int64_t {
            if (rem.empty()) return 0;
            const std::size_t a = rem.front();
            std::int64_t best = INT64_MAX;
            for (std::size_t k = 1; k < rem.size(); ++k) {
                std::vector<std::size_t> next(rem.begin() + 1, rem.end());
                next.erase(next.begin() + static_cast<std::ptrdiff_t>(k - 1));
                best = std::min(best, g.weight[a][rem[k]] + brute(next));
            }
            return best;
        };
        std::vector<std::size_t> all;
        for (std::size_t i = 0; i < n; ++i) all.push_back(i);
        const std::int64_t want = brute(all);
        if (matching_weight(g, m) != want) {
            std::ostringstream os;
            os << "instance " << it << ": matching weight " << matching_weight(g, m)
               << " vs exhaustive minimum " << want;
            detail = os.str();
            return false;
        }
    }
    detail = "1000 random instances up to 10 nodes match the exhaustive pairing minimum";
    return true;
}

bool ml_optimality(std::string& detail) {
    const SurfaceCodeLayout code = build_code(CodeKind::Toric, 3);
    const MlDecoder ml(code);
    const double p = 0.1;
    // Paired Monte Carlo.
    std::size_t ml_ok = 0, mwpm_ok = 0;
    for (std::size_t trial = 0; trial < 10000; ++trial) {
        RngStream rng(0xA11, trial);
        const auto err = sample_error(NoiseModel::iid_z(p), code, rng);
        const Syndrome s = syndrome_of(code, err.z_chain, 'Z');
        const auto res = ml.decode(s, p);
        Chain net = err.z_chain;
        net ^= res.recovery;
        ml_ok += residual_class(code, net, 'Z').trivial();
        DecodeResult mw = decode_2d(code, s, 'Z');
        mw.classify(code, err.z_chain, 'Z');
        mwpm_ok += mw.success;
    }
    // Posterior check on 20 fixed syndromes against the full 2^18 brute force.
    const std::size_t nq = code.num_qubits;
    std::vector<std::uint32_t> edge_syndrome(nq);
    for (std::size_t e = 0; e < nq; ++e) {
        Chain c = code.zero_error('Z');
        c.bits.set(e);
        std::uint32_t m = 0;
        for (auto v : code.surface.boundary(c).bits.set_bits()) m |= 1u << v;
        edge_syndrome[e] = m;
    }
    std::vector<std::uint32_t> logical_mask(2, 0);
    for (int i = 0; i < 2; ++i)
        for (auto e : code.x_logicals[i].set_bits()) logical_mask[i] |= 1u << e;
    std::map<std::uint32_t, std::array<double, 4>> table;
    for (std::uint32_t err = 0; err < (1u << nq); ++err) {
        std::uint32_t syn = 0;
        for (std::uint32_t rest = err; rest;) {
            syn ^= edge_syndrome[__builtin_ctz(rest)];
            rest &= rest - 1;
        }
        unsigned cls = 0;
        for (int i = 0; i < 2; ++i)
            cls |= static_cast<unsigned>(__builtin_parity(err & logical_mask[i])) << i;
        table[syn][cls] += std::pow(p, __builtin_popcount(err)) *
                           std::pow(1 - p, static_cast<int>(nq) - __builtin_popcount(err));
    }
    double worst = 0;
    std::size_t tested = 0;
    for (const auto& [syn, dist] : table) {
        if (tested >= 20) break;
        ++tested;
        Syndrome s;
        s.vertex_flags = BitVec(code.surface.num_vertices);
        s.face_flags = BitVec(code.surface.num_faces);
        for (unsigned v = 0; v < code.surface.num_vertices; ++v)
            if (syn & (1u << v)) s.vertex_flags.set(v);
        const auto res = ml.decode(s, p);
        const Chain ref = ml.reference_recovery(s);
        unsigned shift = 0;
        for (int i = 0; i < 2; ++i)
            shift |= static_cast<unsigned>(BitVec::dot(ref.bits, code.x_logicals[i])) << i;
        double total = 0;
        for (unsigned c = 0; c < 4; ++c) total += dist[c];
        for (unsigned c = 0; c < 4; ++c)
            worst = std::max(worst, std::abs(res.posteriors[c] - dist[c ^ shift] / total));
    }
    std::ostringstream os;
    os << "ML success " << ml_ok << "/10000 vs MWPM " << mwpm_ok
       << "/10000; max posterior deviation on " << tested << " syndromes " << worst;
    detail = os.str();
    return ml_ok >= mwpm_ok && worst < 1e-10 && tested == 20;
}

bool braiding_cnot(std::string& detail) {
    const BraidReport once = braid_cnot_verify(9, 1, 2026);
    const BraidReport twice = braid_cnot_verify(9, 2, 2027);
    std::ostringstream os;
    os << "single braid: " << once.detail << " double braid: " << twice.detail;
    detail = os.str();
    return once.cnot_verified && once.definite_values_ok && twice.cnot_verified &&
           twice.definite_values_ok;
}

bool bp_decoder(std::string& detail) {
    const ConcatenatedCode cc = make_concatenated(code_fixture("bitflip3"), 2);
    const double p = 0.09;
    std::map<std::vector<std::vector<int>>, std::array<double, 2>> table;
    for (std::uint32_t e = 0; e < 512; ++e) {
        BitVec err(9);
        for (unsigned b = 0; b < 9; ++b)
            if (e & (1u << b)) err.set(b);
        const auto syn = concatenated_syndromes(cc, err);
        table[syn.levels][static_cast<std::size_t>(syn.top_logical)] +=
            std::pow(p, __builtin_popcount(e)) * std::pow(1 - p, 9 - __builtin_popcount(e));
    }
    double worst = 0;
    for (const auto& [syn, dist] : table) {
        const auto res = bp_decode(cc, syn, p);
        const double total = dist[0] + dist[1];
        worst = std::max({worst, std::abs(res.posterior[0] - dist[0] / total),
                          std::abs(res.posterior[1] - dist[1] / total)});
    }
    std::ostringstream os;
    os << table.size() << " syndrome patterns, max posterior deviation " << worst;
    detail = os.str();
    return table.size() == 256 && worst < 1e-12;
}

bool concat_analytics_exact(std::string& detail) {
    const auto fp = concat_analytics(1.0 / 0.01, 10.0, 0.01, 1.0);
    bool fixed_ok = true;
    for (std::size_t l = 0; l < 8; ++l)
        fixed_ok = fixed_ok && fp.level_error[l] == fp.level_error[0];
    const auto big = concat_analytics(1e4, 100.0, 1e-5, 1e10);
    const double q = 1e4 * 1e-5;
    const double q2 = q * q, q4 = q2 * q2, q8 = q4 * q4;
    const bool cubic_ok = big.level_error[3] == q8 / 1e4;
    std::ostringstream os;
    os << "fixed point held over 8 levels: " << (fixed_ok ? "yes" : "no")
       << "; p^(3) = " << big.level_error[3] << " equals (Cp)^8/C exactly: "
       << (cubic_ok ? "yes" : "no");
    detail = os.str();
    return fixed_ok && cubic_ok;
}

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> all = {
        {"toric_mwpm_threshold", toric_threshold},
        {"phenomenological_3d_threshold", phenomenological_threshold},
        {"syndrome_bias_locators", syndrome_bias_locators},
        {"distillation_analytics", distillation_analytics},
        {"stabilizer_oracle_equivalence", stabilizer_oracle_equivalence},
        {"graph_state_rules", graph_rule_suite},
        {"mwpm_exactness", mwpm_exactness},
        {"ml_decoder_optimality", ml_optimality},
        {"braiding_cnot", braiding_cnot},
        {"bp_decoder", bp_decoder},
        {"concatenation_analytics", concat_analytics_exact},
    };
    return all;
}

} // namespace

int main(int argc, char** argv) {
    if (argc > 1 && std::strcmp(argv[1], "--list") == 0) {
        for (const auto& c : criteria()) std::printf("%s\n", c.name.c_str());
        return 0;
    }
    int failures = 0;
    int ran = 0;
    for (const auto& c : criteria()) {
        if (argc > 1 && c.name != argv[1]) continue;
        ++ran;
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        std::printf("[%s] %s: %s\n", ok ? "PASS" : "FAIL", c.name.c_str(), detail.c_str());
        std::fflush(stdout);
        failures += ok ? 0 : 1;
    }
    if (ran == 0) {
        std::fprintf(stderr, "unknown criterion: %s\n", argv[1]);
        return 64;
    }
    return failures;
}
