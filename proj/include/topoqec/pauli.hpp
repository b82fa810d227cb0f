#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "topoqec/bits.hpp"

namespace topoqec {

/// Quartic phase factor i^k.
enum class Phase : std::uint8_t { PlusOne = 0, PlusI = 1, MinusOne = 2, MinusI = 3 };

inline Phase phase_mul(Phase a, Phase b) {
    return static_cast<Phase>((static_cast<int>(a) + static_cast<int>(b)) & 3);
}
inline const char* phase_str(Phase p) {
    switch (p) {
        case Phase::PlusOne: return "+";
        case Phase::PlusI: return "+i";
        case Phase::MinusOne: return "-";
        case Phase::MinusI: return "-i";
    }
    return "?";
}

/// An n-qubit Pauli product in symplectic (x|z) form with exact quartic phase.
///
/// Internally the operator is stored as i^k * X(x) Z(z); the phase reported by
/// phase() refers to the conventional per-qubit letters with Y = i X Z, so a
/// bare Y on one qubit has phase +1. Values are immutable in spirit: all
/// mutating operations return or build new objects except the gate conjugations
/// used by the tableau engine.
class PauliProduct {
public:
    PauliProduct() = default;
    explicit PauliProduct(std::size_t n) : n_(n), x_(n), z_(n), xz_phase_(0) {}

    static PauliProduct identity(std::size_t n) { return PauliProduct(n); }

    /// Single-qubit Pauli embedded in n qubits, phase +1.
    static PauliProduct single(std::size_t n, std::size_t qubit, char letter) {
        PauliProduct p(n);
        p.set_letter(qubit, letter);
        return p;
    }

    std::size_t num_qubits() const { return n_; }
    const BitVec& x_bits() const { return x_; }
    const BitVec& z_bits() const { return z_; }

    bool x_bit(std::size_t q) const { return x_.test(q); }
    bool z_bit(std::size_t q) const { return z_.test(q); }

    /// Letter on one qubit: 'I', 'X', 'Y' or 'Z'.
    char letter(std::size_t q) const {
        const bool x = x_.test(q), z = z_.test(q);
        if (x && z) return 'Y';
        if (x) return 'X';
        if (z) return 'Z';
        return 'I';
    }

    void set_letter(std::size_t q, char letter) {
        // Clear the implicit i carried by an existing Y before rewriting.
        if (x_.test(q) && z_.test(q)) xz_phase_ = (xz_phase_ + 3) & 3;
        switch (letter) {
            case 'I': x_.set(q, false); z_.set(q, false); break;
            case 'X': x_.set(q, true); z_.set(q, false); break;
            case 'Z': x_.set(q, false); z_.set(q, true); break;
            case 'Y':
                x_.set(q, true); z_.set(q, true);
                xz_phase_ = (xz_phase_ + 1) & 3; // Y = i XZ
                break;
            default: throw std::invalid_argument("unknown Pauli letter");
        }
    }

    /// Number of qubits acted on by a non-identity letter.
    std::size_t weight() const {
        return (x_ ^ z_).popcount() + BitVec::and_count(x_, z_);
    }

    /// Conventional phase with Y letters absorbed: P = phase() * prod of letters.
    Phase phase() const {
        const int k = (static_cast<int>(xz_phase_) + 4 - static_cast<int>(BitVec::and_count(x_, z_) & 3)) & 3;
        return static_cast<Phase>(k);
    }

    void set_phase(Phase p) {
        const int k = (static_cast<int>(p) + static_cast<int>(BitVec::and_count(x_, z_) & 3)) & 3;
        xz_phase_ = static_cast<std::uint8_t>(k);
    }

    bool hermitian() const {
        const Phase p = phase();
        return p == Phase::PlusOne || p == Phase::MinusOne;
    }

    /// Sign of a Hermitian product: false for +1, true for -1.
    bool negated() const {
        if (!hermitian()) throw std::logic_error("sign of a non-Hermitian Pauli product");
        return phase() == Phase::MinusOne;
    }

    void negate() { xz_phase_ = (xz_phase_ + 2) & 3; }

    PauliProduct operator*(const PauliProduct& o) const {
        if (n_ != o.n_) throw std::invalid_argument("Pauli product size mismatch");
        PauliProduct r(n_);
        r.x_ = x_ ^ o.x_;
        r.z_ = z_ ^ o.z_;
        int k = static_cast<int>(xz_phase_) + static_cast<int>(o.xz_phase_);
        if (BitVec::dot(z_, o.x_)) k += 2; // move Z(z1) past X(x2)
        r.xz_phase_ = static_cast<std::uint8_t>(k & 3);
        return r;
    }

    PauliProduct& operator*=(const PauliProduct& o) {
        if (n_ != o.n_) throw std::invalid_argument("Pauli product size mismatch");
        if (BitVec::dot(z_, o.x_)) xz_phase_ = (xz_phase_ + 2) & 3;
        xz_phase_ = static_cast<std::uint8_t>((xz_phase_ + o.xz_phase_) & 3);
        x_ ^= o.x_;
        z_ ^= o.z_;
        return *this;
    }

    bool commutes_with(const PauliProduct& o) const {
        if (n_ != o.n_) throw std::invalid_argument("Pauli product size mismatch");
        return !(BitVec::dot(x_, o.z_) ^ BitVec::dot(z_, o.x_));
    }

    /// Same letters on every qubit, phases ignored.
    bool same_letters(const PauliProduct& o) const { return x_ == o.x_ && z_ == o.z_; }

    bool operator==(const PauliProduct& o) const {
        return n_ == o.n_ && x_ == o.x_ && z_ == o.z_ && xz_phase_ == o.xz_phase_;
    }
    bool operator!=(const PauliProduct& o) const { return !(*this == o); }

    // --- In-place Clifford conjugations P -> U P U^dag, exact phase. ---

    void conj_h(std::size_t q) {
        const bool x = x_.test(q), z = z_.test(q);
        if (x && z) xz_phase_ = (xz_phase_ + 2) & 3; // XZ -> ZX = -XZ
        x_.set(q, z);
        z_.set(q, x);
    }
    void conj_s(std::size_t q) {
        if (x_.test(q)) {
            xz_phase_ = (xz_phase_ + 1) & 3; // X -> iXZ
            z_.flip(q);
        }
    }
    void conj_sdg(std::size_t q) {
        if (x_.test(q)) {
            xz_phase_ = (xz_phase_ + 3) & 3;
            z_.flip(q);
        }
    }
    void conj_x(std::size_t q) { if (z_.test(q)) negate(); }
    void conj_z(std::size_t q) { if (x_.test(q)) negate(); }
    void conj_y(std::size_t q) { if (x_.test(q) ^ z_.test(q)) negate(); }
    void conj_cnot(std::size_t c, std::size_t t) {
        if (x_.test(c)) x_.flip(t);
        if (z_.test(t)) z_.flip(c);
    }
    void conj_cz(std::size_t c, std::size_t t) {
        conj_h(t);
        conj_cnot(c, t);
        conj_h(t);
    }

    std::string str() const {
        std::string s = phase_str(phase());
        s.reserve(s.size() + n_);
        for (std::size_t q = 0; q < n_; ++q) s.push_back(letter(q));
        return s;
    }

    /// Parses the rendering produced by str(): optional sign (+, -, +i, -i),
    /// then one letter per qubit.
    static PauliProduct parse(const std::string& s) {
        std::size_t pos = 0;
        Phase ph = Phase::PlusOne;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
            const bool neg = s[pos] == '-';
            ++pos;
            if (pos < s.size() && s[pos] == 'i') {
                ph = neg ? Phase::MinusI : Phase::PlusI;
                ++pos;
            } else if (neg) {
                ph = Phase::MinusOne;
            }
        }
        PauliProduct p(s.size() - pos);
        for (std::size_t q = 0; pos < s.size(); ++pos, ++q) p.set_letter(q, s[pos]);
        p.set_phase(phase_mul(p.phase(), ph));
        return p;
    }

    std::size_t hash() const {
        std::size_t h = x_.hash();
        h ^= z_.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h * 4 + xz_phase_;
    }

private:
    std::size_t n_ = 0;
    BitVec x_, z_;
    std::uint8_t xz_phase_ = 0; // exponent k in i^k X(x) Z(z)
};

} // namespace topoqec
