#include "doctest.h"

#include "topoqec/fixtures.hpp"
#include "topoqec/rng.hpp"
#include "topoqec/surface_code.hpp"

using namespace topoqec;

TEST_CASE("from_chain builds Pauli products from 1-chains") {
    const Surface s = build_surface(SurfaceKind::Torus, 2);
    CHECK(from_chain(s, s.zero_chain(1), 'Z') == PauliProduct::identity(s.num_edges));
    Chain c = s.edge_chain(3);
    const PauliProduct p = from_chain(s, c, 'Z');
    CHECK(p.letter(3) == 'Z');
    CHECK(p.weight() == 1);
    CHECK_THROWS_AS(from_chain(s, s.zero_chain(2), 'Z'), std::invalid_argument);
    CHECK_THROWS_AS(from_chain(s, c, 'Q'), std::invalid_argument);
}

TEST_CASE("from_chain is a homomorphism and matches the symplectic form") {
    const Surface s = build_surface(SurfaceKind::Torus, 3);
    RngStream rng(0xF00);
    for (int it = 0; it < 200; ++it) {
        Chain a = s.zero_chain(1), b = s.zero_chain(1);
        for (std::size_t e = 0; e < s.num_edges; ++e) {
            if (rng.below(2)) a.bits.set(e);
            if (rng.below(2)) b.bits.set(e);
        }
        Chain ab = a;
        ab ^= b;
        // W(c) W(c') = W(c + c') exactly for a fixed basis letter.
        CHECK(from_chain(s, a, 'Z') * from_chain(s, b, 'Z') == from_chain(s, ab, 'Z'));
        // X(c) and Z(c') commute iff the chains meet evenly.
        const bool even = !BitVec::dot(a.bits, b.bits);
        CHECK(from_chain(s, a, 'X').commutes_with(from_chain(s, b, 'Z')) == even);
    }
}

TEST_CASE("toric code layout") {
    const SurfaceCodeLayout code = build_code(CodeKind::Toric, 3);
    CHECK(code.num_qubits == 18);
    CHECK(code.num_generators == 16);
    CHECK(code.num_logical_pairs == 2);
    // All generators commute: star and plaquette chains meet evenly.
    for (const auto& z : code.z_stabilizer_chains)
        for (const auto& x : code.x_stabilizer_chains) CHECK_FALSE(BitVec::dot(z, x));
    // Logicals commute with generators and anticommute pairwise.
    for (std::size_t i = 0; i < code.z_logicals.size(); ++i) {
        for (const auto& x : code.x_stabilizer_chains)
            CHECK_FALSE(BitVec::dot(code.z_logicals[i], x));
        for (std::size_t j = 0; j < code.x_logicals.size(); ++j)
            CHECK(BitVec::dot(code.z_logicals[i], code.x_logicals[j]) == (i == j));
    }
}

TEST_CASE("bitflip code layout matches the fixture") {
    const SurfaceCodeLayout code = build_code(CodeKind::Bitflip, 3);
    CHECK(code.num_qubits == 3);
    CHECK(code.num_generators == 2);
    const CodeFixture f = code_fixture("bitflip3");
    // Stabilizer chains (vertex stars) generate the fixture's group.
    StabilizerTableau a = code_state_tableau(code);
    std::vector<PauliProduct> gens = f.generators;
    gens.push_back(f.logical_x[0]);
    StabilizerTableau b = StabilizerTableau::from_generators(3, gens);
    CHECK(a.same_group(b));
}

TEST_CASE("planar code has one logical pair and distance n") {
    const SurfaceCodeLayout code = build_code(CodeKind::Planar, 4);
    CHECK(code.num_logical_pairs == 1);
    CHECK(code.num_qubits == 25);
    CHECK(distance_exact(code) == 4);
}

TEST_CASE("toric code distance equals n for small n") {
    for (std::size_t n = 2; n <= 4; ++n)
        CHECK(distance_exact(build_code(CodeKind::Toric, n)) == n);
}

TEST_CASE("syndromes are boundaries") {
    const SurfaceCodeLayout code = build_code(CodeKind::Toric, 3);
    // Single edge Z error flags its endpoints.
    Chain err = code.zero_error('Z');
    err.bits.set(torus_hedge(3, 1, 1));
    const Syndrome s = syndrome_of(code, err, 'Z');
    CHECK(s.vertex_flags.popcount() == 2);
    CHECK(s.vertex_flags.test(torus_vertex(3, 1, 1)));
    CHECK(s.vertex_flags.test(torus_vertex(3, 1, 2)));
    // A stabilizer chain has empty syndrome.
    Chain stab = code.zero_error('Z');
    stab.bits = code.z_stabilizer_chains[4];
    CHECK(syndrome_of(code, stab, 'Z').empty());
    // A logical cycle has empty syndrome but a nontrivial class.
    Chain logical = code.zero_error('Z');
    logical.bits = code.z_logicals[0];
    CHECK(syndrome_of(code, logical, 'Z').empty());
    CHECK_FALSE(residual_class(code, logical, 'Z').trivial());
}

TEST_CASE("syndrome_of is linear") {
    const SurfaceCodeLayout code = build_code(CodeKind::Toric, 4);
    RngStream rng(0x11EA);
    for (int it = 0; it < 200; ++it) {
        Chain a = code.zero_error('Z'), b = code.zero_error('Z');
        for (std::size_t e = 0; e < code.num_qubits; ++e) {
            if (rng.below(2)) a.bits.set(e);
            if (rng.below(2)) b.bits.set(e);
        }
        Chain ab = a;
        ab ^= b;
        const Syndrome sa = syndrome_of(code, a, 'Z');
        const Syndrome sb = syndrome_of(code, b, 'Z');
        const Syndrome sab = syndrome_of(code, ab, 'Z');
        CHECK(sab.vertex_flags == (sa.vertex_flags ^ sb.vertex_flags));
    }
}

TEST_CASE("residual class ignores stabilizer chains") {
    const SurfaceCodeLayout code = build_code(CodeKind::Toric, 3);
    RngStream rng(0x1DEA);
    for (int it = 0; it < 100; ++it) {
        // Random cycle: boundary of a 2-chain plus optional logicals.
        Chain c = code.zero_error('Z');
        Chain faces(2, false, code.surface.num_faces);
        for (std::size_t f = 0; f < faces.bits.size(); ++f)
            if (rng.below(2)) faces.bits.set(f);
        c = code.surface.boundary(faces);
        const unsigned base = residual_class(code, c, 'Z').cls;
        CHECK(base == 0);
        Chain shifted = c;
        shifted.bits ^= code.z_stabilizer_chains[rng.below(code.z_stabilizer_chains.size())];
        CHECK(residual_class(code, shifted, 'Z').cls == base);
        Chain logical = shifted;
        logical.bits ^= code.z_logicals[0];
        CHECK(residual_class(code, logical, 'Z').cls == 1);
    }
    CHECK_THROWS_AS(residual_class(code, code.surface.edge_chain(0), 'Z'),
                    std::invalid_argument);
}

TEST_CASE("residual classification agrees with the tableau oracle on the 3x3 torus") {
    const SurfaceCodeLayout code = build_code(CodeKind::Toric, 3);
    // Stabilizer-group tableau (no logicals fixed): a residual chain is
    // trivial iff its Pauli product is a group member.
    std::vector<PauliProduct> gens;
    Gf2Solver indep(std::vector<BitVec>{}, code.num_qubits);
    for (const auto& c : code.z_stabilizer_chains)
        if (indep.insert_row(c)) {
            PauliProduct p(code.num_qubits);
            for (auto e : c.set_bits()) p.set_letter(e, 'Z');
            gens.push_back(p);
        }
    Gf2Solver indep_x(std::vector<BitVec>{}, code.num_qubits);
    for (const auto& c : code.x_stabilizer_chains)
        if (indep_x.insert_row(c)) {
            PauliProduct p(code.num_qubits);
            for (auto e : c.set_bits()) p.set_letter(e, 'X');
            gens.push_back(p);
        }
    const StabilizerTableau group = StabilizerTableau::from_generators(code.num_qubits, gens);
    RngStream rng(0x0AC1E);
    for (int it = 0; it < 150; ++it) {
        Chain cycle = code.zero_error('Z');
        Chain faces(2, false, code.surface.num_faces);
        for (std::size_t f = 0; f < faces.bits.size(); ++f)
            if (rng.below(2)) faces.bits.set(f);
        cycle = code.surface.boundary(faces);
        if (rng.below(2)) cycle.bits ^= code.z_logicals[0];
        if (rng.below(2)) cycle.bits ^= code.z_logicals[1];
        const ResidualClass rc = residual_class(code, cycle, 'Z');
        const PauliProduct op = from_chain(code.surface, cycle, 'Z');
        int sign = 0;
        CHECK(rc.trivial() == group.contains_up_to_sign(op, sign));
        // Class bits are the anticommutation pattern with the logical X ops.
        for (std::size_t i = 0; i < code.x_logicals.size(); ++i) {
            const bool anti = BitVec::dot(cycle.bits, code.x_logicals[i]);
            CHECK(((rc.cls >> i) & 1u) == static_cast<unsigned>(anti));
        }
    }
}

TEST_CASE("residual class names") {
    ResidualClass rc;
    CHECK(rc.name('Z') == "I");
    rc.cls = 1;
    CHECK(rc.name('Z') == "Z1");
    rc.cls = 3;
    CHECK(rc.name('X') == "X1.X2");
}

TEST_CASE("syndrome_of rejects chains from another surface") {
    const SurfaceCodeLayout code = build_code(CodeKind::Toric, 3);
    Chain wrong(1, false, 99);
    CHECK_THROWS_AS(syndrome_of(code, wrong, 'Z'), std::invalid_argument);
    Chain dual_err = code.zero_error('X');
    CHECK_THROWS_AS(syndrome_of(code, dual_err, 'Z'), std::invalid_argument);
}
