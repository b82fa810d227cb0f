#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "topoqec/tableau.hpp"

namespace topoqec {

enum class GateKind { H, S, Sdg, X, Y, Z, CNOT, CZ };

struct Gate {
    GateKind kind;
    std::size_t q0 = 0;
    std::size_t q1 = 0; // second operand for CNOT/CZ
};

/// Probability that is exactly 0 or 2^-k.
struct ExactProb {
    bool zero = false;
    unsigned k = 0;

    double value() const { return zero ? 0.0 : std::ldexp(1.0, -static_cast<int>(k)); }
    bool operator==(const ExactProb& o) const { return zero == o.zero && (zero || k == o.k); }
};

/// Mixture over the six Pauli basis states of one qubit, in the order
/// |+>, |->, |+i>, |-i>, |0>, |1>.
struct PauliBasisMixture {
    std::array<double, 6> w{0, 0, 0, 0, 1, 0};

    static PauliBasisMixture zero() { return {}; }
    static PauliBasisMixture plus() { return {{1, 0, 0, 0, 0, 0}}; }
    static PauliBasisMixture maximally_mixed() {
        return {{1.0 / 6, 1.0 / 6, 1.0 / 6, 1.0 / 6, 1.0 / 6, 1.0 / 6}};
    }
};

/// Gate list with a terminal Z-measurement mask; starts from |0...0>.
struct CliffordCircuit {
    std::size_t n = 0;
    std::vector<Gate> gates;
    std::vector<std::size_t> measured; // qubits read out, in mask order

    /// One gate per line: `H 3`, `CNOT 0 1`, `CZ 2 4`, terminal `M 0 1 2`.
    /// S and SDG are accepted for the phase gate and its inverse; blank lines
    /// and lines starting with '#' are skipped.
    static CliffordCircuit parse(const std::string& text);

    std::string str() const;
};

void apply_gate(StabilizerTableau& t, const Gate& g);
void apply_circuit(StabilizerTableau& t, const CliffordCircuit& c);

/// Strong simulation: exact probability of the masked outcome bit string.
/// Marginals are obtained by omitting qubits from the measurement mask.
ExactProb outcome_probability(const CliffordCircuit& c, const std::vector<int>& outcome);

/// Weak simulation: samples one outcome bit string for product inputs that are
/// convex mixtures of Pauli basis states.
std::vector<int> weak_sample(const CliffordCircuit& c,
                             const std::vector<PauliBasisMixture>& inputs, RngStream& rng);

} // namespace topoqec
