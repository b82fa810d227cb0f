#pragma once

#include <optional>
#include <string>
#include <vector>

#include "topoqec/chain.hpp"
#include "topoqec/pauli.hpp"
#include "topoqec/tableau.hpp"

namespace topoqec {

/// Pauli product W(c) = prod over edges in the 1-chain of the basis letter,
/// one qubit per edge, phase +1.
PauliProduct from_chain(const Surface& s, const Chain& c, char basis);

enum class CodeKind { Toric, Planar, Bitflip };

/// Syndrome: star-type flags live on vertices, plaquette-type flags on faces.
struct Syndrome {
    BitVec vertex_flags;
    BitVec face_flags;

    bool empty() const { return !vertex_flags.any() && !face_flags.any(); }
};

/// Residual homology class of an error-plus-recovery chain. Class 0 is
/// trivial (success); bit i flags anticommutation with the i-th logical
/// operator of the opposite type.
struct ResidualClass {
    unsigned cls = 0;
    bool trivial() const { return cls == 0; }
    std::string name(char basis) const;
};

struct SurfaceCodeLayout {
    CodeKind kind;
    std::size_t n = 0;
    Surface surface;

    std::size_t num_qubits = 0;
    std::size_t num_generators = 0; // independent
    std::size_t num_logical_pairs = 0;

    // Chains c with Z(c) (resp. X(c)) in the stabilizer group, as generators.
    std::vector<BitVec> z_stabilizer_chains;
    std::vector<BitVec> x_stabilizer_chains;
    std::vector<BitVec> z_logicals; // Z-operator chains, one per pair
    std::vector<BitVec> x_logicals;

    Gf2Solver z_span;
    Gf2Solver x_span;

    Chain zero_error(char basis) const;

    /// Structural distance (the lattice size); exact by enumeration for n <= 4.
    std::size_t distance_structural() const { return kind == CodeKind::Bitflip ? 1 : n; }
};

SurfaceCodeLayout build_code(CodeKind kind, std::size_t n);
CodeKind code_kind_from_name(const std::string& name);

/// Boundary of the error chain: Z errors flag star generators (vertices),
/// X errors flag plaquettes (faces). The chain's primal/dual flag must match
/// the code's convention for the basis.
Syndrome syndrome_of(const SurfaceCodeLayout& code, const Chain& error, char basis);

/// Classifies error-plus-recovery. Precondition: empty syndrome.
ResidualClass residual_class(const SurfaceCodeLayout& code, const Chain& error_plus_recovery,
                             char basis);

/// Exact code distance by GF(2) coset enumeration; practical for n <= 4.
std::size_t distance_exact(const SurfaceCodeLayout& code);

/// Stabilizer tableau of the code state with all logical Z values +1
/// (for the bit-flip code, the logical X value instead).
StabilizerTableau code_state_tableau(const SurfaceCodeLayout& code);

} // namespace topoqec
