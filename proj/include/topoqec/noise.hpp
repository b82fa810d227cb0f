#pragma once

#include <vector>

#include "topoqec/rng.hpp"
#include "topoqec/surface_code.hpp"

namespace topoqec {

enum class NoiseKind { IidXZ, Depolarizing, Phenomenological, CircuitLevel };

/// Error-model parameters. Circuit-level noise derives p1, p_prep and p_meas
/// from p2 by p1 = p2 = (3/2) p_prep = (3/2) p_meas; only its closed-form
/// syndrome bias is evaluated (no gate-level sampling).
struct NoiseModel {
    NoiseKind kind = NoiseKind::IidXZ;
    double p_x = 0, p_z = 0;      // iid
    double p = 0;                 // depolarizing
    double p_data = 0, p_meas = 0; // phenomenological
    double p2 = 0;                // circuit level

    static NoiseModel iid_z(double pz);
    static NoiseModel iid_xz(double px, double pz);
    static NoiseModel depolarizing(double p);
    static NoiseModel phenomenological(double p_data, double p_meas);
    static NoiseModel circuit_level(double p2);

    double circuit_p1() const { return p2; }
    double circuit_p_prep() const { return 2.0 * p2 / 3.0; }
    double circuit_p_meas() const { return 2.0 * p2 / 3.0; }
};

/// One sampled Pauli error: a Z part and an X part. A Y error on a qubit sets
/// the bit in both chains. Chain primal/dual flags follow the code's
/// convention for the basis.
struct PauliErrorSample {
    Chain z_chain;
    Chain x_chain;
};

PauliErrorSample sample_error(const NoiseModel& m, const SurfaceCodeLayout& code, RngStream& rng);

/// Space-time sample of a phenomenological run: T noisy rounds followed by
/// one perfect round. Index t of m/s runs over rounds 0..T, the last perfect.
struct SpaceTimeSample {
    std::vector<BitVec> data_errors; // fresh Z errors per noisy round, over edges
    std::vector<BitVec> meas_errors; // syndrome flips per noisy round, over vertices
    std::vector<BitVec> m;           // measured syndromes m_k(t)
    std::vector<BitVec> s;           // differenced s_k(t) = m_k(t) xor m_k(t-1)
    BitVec accumulated;              // total data-error chain after all rounds
};

SpaceTimeSample sample_spacetime_error(const NoiseModel& m, const SurfaceCodeLayout& code,
                                       std::size_t rounds, RngStream& rng);

/// Expectation <(-1)^s> of one differenced syndrome bit:
/// phenomenological (1-2 p_data)^4 (1-2 p_meas)^2, circuit level
/// (1 - 2 p_prep - 2 p_meas - 8 p2)^2 (1 - 8 p2)^4.
double syndrome_bias(const NoiseModel& m);

/// Matching weight unit J with e^-J = sqrt(p / (1-p)); requires 0 < p < 1/2.
double coupling_from_p(double p);

/// Parses a noise stanza of the config-file form
///   noise = { kind = "phenomenological", p_data = 0.03, p_meas = 0.03 }
/// Accepted kinds: iid_xz (p_x, p_z), depolarizing (p),
/// phenomenological (p_data, p_meas), circuit_level (p2).
NoiseModel parse_noise_spec(const std::string& text);

} // namespace topoqec
