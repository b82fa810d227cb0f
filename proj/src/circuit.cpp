#include "topoqec/circuit.hpp"

#include <sstream>
#include <stdexcept>

namespace topoqec {

namespace {

GateKind gate_kind_from_name(const std::string& name) {
    if (name == "H") return GateKind::H;
    if (name == "S") return GateKind::S;
    if (name == "SDG") return GateKind::Sdg;
    if (name == "X") return GateKind::X;
    if (name == "Y") return GateKind::Y;
    if (name == "Z") return GateKind::Z;
    if (name == "CNOT" || name == "CX") return GateKind::CNOT;
    if (name == "CZ") return GateKind::CZ;
    throw std::invalid_argument("unknown gate: " + name);
}

const char* gate_name(GateKind k) {
    switch (k) {
        case GateKind::H: return "H";
        case GateKind::S: return "S";
        case GateKind::Sdg: return "SDG";
        case GateKind::X: return "X";
        case GateKind::Y: return "Y";
        case GateKind::Z: return "Z";
        case GateKind::CNOT: return "CNOT";
        case GateKind::CZ: return "CZ";
    }
    return "?";
}

bool two_qubit(GateKind k) { return k == GateKind::CNOT || k == GateKind::CZ; }

} // namespace

CliffordCircuit CliffordCircuit::parse(const std::string& text) {
    CliffordCircuit c;
    std::istringstream in(text);
    std::string line;
    std::size_t max_index = 0;
    bool saw_any = false;
    bool saw_measure = false;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string name;
        if (!(ls >> name) || name[0] == '#') continue;
        if (saw_measure) throw std::invalid_argument("gates after the terminal M line");
        if (name == "M") {
            std::size_t q;
            while (ls >> q) {
                c.measured.push_back(q);
                max_index = std::max(max_index, q);
                saw_any = true;
            }
            saw_measure = true;
            continue;
        }
        Gate g{gate_kind_from_name(name)};
        if (!(ls >> g.q0)) throw std::invalid_argument("missing qubit index: " + line);
        max_index = std::max(max_index, g.q0);
        if (two_qubit(g.kind)) {
            if (!(ls >> g.q1)) throw std::invalid_argument("missing second qubit index: " + line);
            if (g.q1 == g.q0) throw std::invalid_argument("duplicate target: " + line);
            max_index = std::max(max_index, g.q1);
        }
        c.gates.push_back(g);
        saw_any = true;
    }
    c.n = saw_any ? max_index + 1 : 0;
    return c;
}

std::string CliffordCircuit::str() const {
    std::ostringstream out;
    for (const auto& g : gates) {
        out << gate_name(g.kind) << ' ' << g.q0;
        if (two_qubit(g.kind)) out << ' ' << g.q1;
        out << '\n';
    }
    if (!measured.empty()) {
        out << 'M';
        for (auto q : measured) out << ' ' << q;
        out << '\n';
    }
    return out.str();
}

void apply_gate(StabilizerTableau& t, const Gate& g) {
    switch (g.kind) {
        case GateKind::H: t.apply_h(g.q0); break;
        case GateKind::S: t.apply_s(g.q0); break;
        case GateKind::Sdg: t.apply_sdg(g.q0); break;
        case GateKind::X: t.apply_x(g.q0); break;
        case GateKind::Y: t.apply_y(g.q0); break;
        case GateKind::Z: t.apply_z(g.q0); break;
        case GateKind::CNOT: t.apply_cnot(g.q0, g.q1); break;
        case GateKind::CZ: t.apply_cz(g.q0, g.q1); break;
    }
}

void apply_circuit(StabilizerTableau& t, const CliffordCircuit& c) {
    for (const auto& g : c.gates) apply_gate(t, g);
}

ExactProb outcome_probability(const CliffordCircuit& c, const std::vector<int>& outcome) {
    if (outcome.size() != c.measured.size())
        throw std::invalid_argument("outcome length does not match the measurement mask");
    StabilizerTableau t = StabilizerTableau::zero_state(c.n);
    apply_circuit(t, c);
    ExactProb p;
    for (std::size_t i = 0; i < c.measured.size(); ++i) {
        const PauliProduct zq = PauliProduct::single(c.n, c.measured[i], 'Z');
        const MeasureOutcome m = t.measure_forced(zq, outcome[i] & 1);
        if (m.deterministic) {
            if (m.outcome != (outcome[i] & 1)) return {true, 0};
        } else {
            ++p.k;
        }
    }
    return p;
}

std::vector<int> weak_sample(const CliffordCircuit& c,
                             const std::vector<PauliBasisMixture>& inputs, RngStream& rng) {
    if (inputs.size() != c.n) throw std::invalid_argument("one input mixture per qubit required");
    StabilizerTableau t = StabilizerTableau::zero_state(c.n);
    for (std::size_t q = 0; q < c.n; ++q) {
        double total = 0;
        for (double w : inputs[q].w) {
            if (w < -1e-12) throw std::invalid_argument("negative mixture weight");
            total += w;
        }
        if (std::abs(total - 1.0) > 1e-9)
            throw std::invalid_argument("mixture weights must sum to 1");
        double u = rng.uniform() * total;
        std::size_t pick = 5;
        for (std::size_t i = 0; i < 6; ++i) {
            if (u < inputs[q].w[i]) { pick = i; break; }
            u -= inputs[q].w[i];
        }
        // |0> is the tableau default; rotate into the sampled basis state.
        switch (pick) {
            case 0: t.apply_h(q); break;                       // |+>
            case 1: t.apply_x(q); t.apply_h(q); break;         // |->
            case 2: t.apply_h(q); t.apply_s(q); break;         // |+i>
            case 3: t.apply_x(q); t.apply_h(q); t.apply_s(q); break; // |-i>
            case 4: break;                                     // |0>
            case 5: t.apply_x(q); break;                       // |1>
        }
    }
    apply_circuit(t, c);
    std::vector<int> out;
    out.reserve(c.measured.size());
    for (auto q : c.measured) {
        const PauliProduct zq = PauliProduct::single(c.n, q, 'Z');
        out.push_back(t.measure(zq, rng).outcome);
    }
    return out;
}

} // namespace topoqec
