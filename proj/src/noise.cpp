#include "topoqec/noise.hpp"
#include <map>
#include <sstream>

#include <cmath>
#include <stdexcept>

namespace topoqec {

namespace {

void check_prob(double p) {
    if (!(p >= 0.0 && p <= 0.5)) throw std::domain_error("error probability out of [0, 1/2]");
}

} // namespace

NoiseModel NoiseModel::iid_z(double pz) { return iid_xz(0.0, pz); }

NoiseModel NoiseModel::iid_xz(double px, double pz) {
    check_prob(px);
    check_prob(pz);
    NoiseModel m;
    m.kind = NoiseKind::IidXZ;
    m.p_x = px;
    m.p_z = pz;
    return m;
}

NoiseModel NoiseModel::depolarizing(double p) {
    check_prob(p);
    NoiseModel m;
    m.kind = NoiseKind::Depolarizing;
    m.p = p;
    return m;
}

NoiseModel NoiseModel::phenomenological(double p_data, double p_meas) {
    check_prob(p_data);
    check_prob(p_meas);
    NoiseModel m;
    m.kind = NoiseKind::Phenomenological;
    m.p_data = p_data;
    m.p_meas = p_meas;
    return m;
}

NoiseModel NoiseModel::circuit_level(double p2) {
    check_prob(p2);
    NoiseModel m;
    m.kind = NoiseKind::CircuitLevel;
    m.p2 = p2;
    return m;
}

PauliErrorSample sample_error(const NoiseModel& m, const SurfaceCodeLayout& code, RngStream& rng) {
    PauliErrorSample out{code.zero_error('Z'), code.zero_error('X')};
    const std::size_t ne = code.num_qubits;
    if (m.kind == NoiseKind::IidXZ) {
        for (std::size_t e = 0; e < ne; ++e)
            if (m.p_z > 0 && rng.bernoulli(m.p_z)) out.z_chain.bits.set(e);
        for (std::size_t e = 0; e < ne; ++e)
            if (m.p_x > 0 && rng.bernoulli(m.p_x)) out.x_chain.bits.set(e);
        return out;
    }
    if (m.kind == NoiseKind::Depolarizing) {
        for (std::size_t e = 0; e < ne; ++e) {
            if (!rng.bernoulli(m.p)) continue;
            switch (rng.below(3)) {
                case 0: out.x_chain.bits.set(e); break;                          // X
                case 1: out.x_chain.bits.set(e); out.z_chain.bits.set(e); break; // Y
                default: out.z_chain.bits.set(e); break;                         // Z
            }
        }
        return out;
    }
    throw std::domain_error("sample_error supports the iid and depolarizing models");
}

SpaceTimeSample sample_spacetime_error(const NoiseModel& m, const SurfaceCodeLayout& code,
                                       std::size_t rounds, RngStream& rng) {
    if (m.kind != NoiseKind::Phenomenological)
        throw std::domain_error("space-time sampling requires the phenomenological model");
    if (rounds < 1) throw std::invalid_argument("at least one measurement round required");
    const std::size_t ne = code.num_qubits;
    const std::size_t nv = code.surface.num_vertices;
    SpaceTimeSample out;
    out.accumulated = BitVec(ne);
    BitVec prev_m(nv);
    for (std::size_t t = 0; t < rounds; ++t) {
        BitVec fresh(ne);
        for (std::size_t e = 0; e < ne; ++e)
            if (m.p_data > 0 && rng.bernoulli(m.p_data)) fresh.set(e);
        out.accumulated ^= fresh;
        Chain acc(1, false, ne);
        acc.bits = out.accumulated;
        const BitVec truth = code.surface.boundary(acc).bits;
        BitVec flips(nv);
        for (std::size_t v = 0; v < nv; ++v)
            if (m.p_meas > 0 && rng.bernoulli(m.p_meas)) flips.set(v);
        BitVec measured = truth ^ flips;
        out.data_errors.push_back(std::move(fresh));
        out.meas_errors.push_back(std::move(flips));
        out.s.push_back(measured ^ prev_m);
        out.m.push_back(measured);
        prev_m = out.m.back();
    }
    // Final perfect round.
    Chain acc(1, false, ne);
    acc.bits = out.accumulated;
    BitVec truth = code.surface.boundary(acc).bits;
    out.s.push_back(truth ^ prev_m);
    out.m.push_back(std::move(truth));
    return out;
}

double syndrome_bias(const NoiseModel& m) {
    if (m.kind == NoiseKind::Phenomenological) {
        return std::pow(1.0 - 2.0 * m.p_data, 4) * std::pow(1.0 - 2.0 * m.p_meas, 2);
    }
    if (m.kind == NoiseKind::CircuitLevel) {
        const double pp = m.circuit_p_prep();
        const double pm = m.circuit_p_meas();
        return std::pow(1.0 - 2.0 * pp - 2.0 * pm - 8.0 * m.p2, 2) *
               std::pow(1.0 - 8.0 * m.p2, 4);
    }
    throw std::domain_error("syndrome bias is defined for the phenomenological and circuit models");
}

double coupling_from_p(double p) {
    if (!(p > 0.0 && p < 0.5)) throw std::domain_error("coupling map requires 0 < p < 1/2");
    return -0.5 * std::log(p / (1.0 - p));
}

NoiseModel parse_noise_spec(const std::string& text) {
    // noise = { kind = "...", key = value, ... }
    const auto open = text.find('{');
    const auto close = text.rfind('}');
    if (open == std::string::npos || close == std::string::npos || close < open)
        throw std::invalid_argument("noise spec must be of the form noise = { ... }");
    std::map<std::string, std::string> fields;
    std::string body = text.substr(open + 1, close - open - 1);
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            const auto a = s.find_first_not_of(" \t\"");
            const auto b = s.find_last_not_of(" \t\"");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        fields[trim(item.substr(0, eq))] = trim(item.substr(eq + 1));
    }
    if (!fields.count("kind")) throw std::invalid_argument("noise spec missing kind");
    auto num = [&](const std::string& key, double fallback) {
        return fields.count(key) ? std::stod(fields[key]) : fallback;
    };
    const std::string kind = fields["kind"];
    if (kind == "iid_xz" || kind == "iid-xz")
        return NoiseModel::iid_xz(num("p_x", 0.0), num("p_z", 0.0));
    if (kind == "depolarizing") return NoiseModel::depolarizing(num("p", 0.0));
    if (kind == "phenomenological")
        return NoiseModel::phenomenological(num("p_data", 0.0), num("p_meas", 0.0));
    if (kind == "circuit_level" || kind == "circuit-level")
        return NoiseModel::circuit_level(num("p2", 0.0));
    throw std::invalid_argument("unknown noise kind: " + kind);
}

} // namespace topoqec
