#include "topoqec/surface_code.hpp"

#include <stdexcept>

namespace topoqec {

PauliProduct from_chain(const Surface& s, const Chain& c, char basis) {
    if (c.dim != 1) throw std::invalid_argument("from_chain expects a 1-chain");
    if (basis != 'X' && basis != 'Z' && basis != 'Y')
        throw std::invalid_argument("from_chain basis must be X, Y or Z");
    PauliProduct p(s.num_edges);
    for (auto e : c.bits.set_bits()) p.set_letter(e, basis);
    p.set_phase(Phase::PlusOne);
    return p;
}

std::string ResidualClass::name(char basis) const {
    if (cls == 0) return "I";
    std::string out;
    for (unsigned i = 0; i < 8; ++i) {
        if (cls & (1u << i)) {
            if (!out.empty()) out += ".";
            out += basis;
            out += std::to_string(i + 1);
        }
    }
    return out;
}

Chain SurfaceCodeLayout::zero_error(char basis) const {
    const bool dual = (kind != CodeKind::Bitflip) && basis == 'X';
    return Chain(1, dual, surface.num_edges);
}

CodeKind code_kind_from_name(const std::string& name) {
    if (name == "toric") return CodeKind::Toric;
    if (name == "planar") return CodeKind::Planar;
    if (name == "bitflip") return CodeKind::Bitflip;
    throw std::invalid_argument("unknown code kind: " + name);
}

SurfaceCodeLayout build_code(CodeKind kind, std::size_t n) {
    if (n < 2) throw std::invalid_argument("code size must be at least 2");
    SurfaceCodeLayout code;
    code.kind = kind;
    code.n = n;
    switch (kind) {
        case CodeKind::Toric: {
            code.surface = build_surface(SurfaceKind::Torus, n);
            for (std::size_t f = 0; f < code.surface.num_faces; ++f)
                code.z_stabilizer_chains.push_back(code.surface.face_boundary(f).bits);
            for (std::size_t v = 0; v < code.surface.num_vertices; ++v)
                code.x_stabilizer_chains.push_back(code.surface.vertex_star(v).bits);
            code.z_logicals = code.surface.primal_reference_cycles;
            code.x_logicals = code.surface.dual_reference_cycles;
            code.num_generators = 2 * n * n - 2;
            code.num_logical_pairs = 2;
            break;
        }
        case CodeKind::Planar: {
            code.surface = build_surface(SurfaceKind::Planar, n);
            for (std::size_t f = 0; f < code.surface.num_faces; ++f)
                code.z_stabilizer_chains.push_back(code.surface.face_boundary(f).bits);
            for (std::size_t v = 0; v < code.surface.num_vertices; ++v)
                code.x_stabilizer_chains.push_back(code.surface.vertex_star(v).bits);
            code.z_logicals = code.surface.primal_reference_cycles;
            code.x_logicals = code.surface.dual_reference_cycles;
            code.num_generators = 2 * n * (n - 1);
            code.num_logical_pairs = 1;
            break;
        }
        case CodeKind::Bitflip: {
            code.surface = build_surface(SurfaceKind::PolygonSphere, n);
            // Stabilizers are the Z-type star operators A_k = Z(delta v_k);
            // there are no X-type generators.
            for (std::size_t v = 0; v < code.surface.num_vertices; ++v)
                code.z_stabilizer_chains.push_back(code.surface.vertex_star(v).bits);
            BitVec lz(code.surface.num_edges);
            lz.set(0);
            BitVec lx(code.surface.num_edges);
            for (std::size_t e = 0; e < n; ++e) lx.set(e); // X(boundary of f_1)
            code.z_logicals = {lz};
            code.x_logicals = {lx};
            code.num_generators = n - 1;
            code.num_logical_pairs = 1;
            break;
        }
    }
    code.num_qubits = code.surface.num_edges;
    code.z_span = Gf2Solver(code.z_stabilizer_chains, code.num_qubits);
    code.x_span = Gf2Solver(code.x_stabilizer_chains, code.num_qubits);
    return code;
}

Syndrome syndrome_of(const SurfaceCodeLayout& code, const Chain& error, char basis) {
    if (error.bits.size() != code.num_qubits)
        throw std::invalid_argument("error chain does not live on this code's surface");
    Syndrome s;
    s.vertex_flags = BitVec(code.surface.num_vertices);
    s.face_flags = BitVec(code.surface.num_faces);
    if (code.kind == CodeKind::Bitflip) {
        if (error.dual) throw std::invalid_argument("bit-flip errors are primal chains");
        if (basis == 'X') s.vertex_flags = code.surface.boundary(error).bits;
        // Z errors commute with every generator of the bit-flip code.
        return s;
    }
    if (basis == 'Z') {
        if (error.dual) throw std::invalid_argument("Z errors are primal chains");
        s.vertex_flags = code.surface.boundary(error).bits;
    } else if (basis == 'X') {
        if (!error.dual) throw std::invalid_argument("X errors are dual chains");
        s.face_flags = code.surface.boundary(error).bits;
    } else {
        throw std::invalid_argument("syndrome basis must be X or Z");
    }
    return s;
}

ResidualClass residual_class(const SurfaceCodeLayout& code, const Chain& c, char basis) {
    if (!syndrome_of(code, c, basis).empty())
        throw std::invalid_argument("residual chain has a nonzero boundary");
    ResidualClass r;
    if (basis == 'Z') {
        if (code.z_span.in_span(c.bits)) return r;
        for (std::size_t i = 0; i < code.x_logicals.size(); ++i)
            if (BitVec::dot(c.bits, code.x_logicals[i])) r.cls |= 1u << i;
    } else {
        if (code.x_span.in_span(c.bits)) return r;
        for (std::size_t i = 0; i < code.z_logicals.size(); ++i)
            if (BitVec::dot(c.bits, code.z_logicals[i])) r.cls |= 1u << i;
    }
    return r;
}

namespace {

std::size_t coset_min_weight(const std::vector<BitVec>& logicals, unsigned cls,
                             const Gf2Solver& span, std::size_t width) {
    BitVec base(width);
    for (std::size_t i = 0; i < logicals.size(); ++i)
        if (cls & (1u << i)) base ^= logicals[i];
    const auto& rows = span.rows();
    if (rows.size() > 22) throw std::invalid_argument("coset enumeration too large");
    std::size_t best = base.popcount();
    BitVec cur = base;
    std::uint32_t gray = 0;
    const std::uint32_t count = std::uint32_t(1) << rows.size();
    for (std::uint32_t i = 1; i < count; ++i) {
        const std::uint32_t g = i ^ (i >> 1);
        cur ^= rows[static_cast<std::size_t>(__builtin_ctz(g ^ gray))];
        gray = g;
        best = std::min(best, cur.popcount());
    }
    return best;
}

} // namespace

std::size_t distance_exact(const SurfaceCodeLayout& code) {
    std::size_t best = code.num_qubits;
    const unsigned zmax = 1u << code.z_logicals.size();
    for (unsigned cls = 1; cls < zmax; ++cls)
        best = std::min(best, coset_min_weight(code.z_logicals, cls, code.z_span, code.num_qubits));
    const unsigned xmax = 1u << code.x_logicals.size();
    for (unsigned cls = 1; cls < xmax; ++cls)
        best = std::min(best, coset_min_weight(code.x_logicals, cls, code.x_span, code.num_qubits));
    return best;
}

StabilizerTableau code_state_tableau(const SurfaceCodeLayout& code) {
    std::vector<PauliProduct> gens;
    const std::size_t nq = code.num_qubits;
    auto add = [&](const BitVec& chain, char letter) {
        PauliProduct p(nq);
        for (auto e : chain.set_bits()) p.set_letter(e, letter);
        p.set_phase(Phase::PlusOne);
        gens.push_back(std::move(p));
    };
    Gf2Solver zsolve(std::vector<BitVec>{}, nq), xsolve(std::vector<BitVec>{}, nq);
    for (const auto& c : code.z_stabilizer_chains)
        if (zsolve.insert_row(c)) add(c, 'Z');
    for (const auto& c : code.x_stabilizer_chains)
        if (xsolve.insert_row(c)) add(c, 'X');
    if (code.kind == CodeKind::Bitflip) {
        for (const auto& c : code.x_logicals)
            add(c, 'X');
    } else {
        for (const auto& c : code.z_logicals) add(c, 'Z');
    }
    return StabilizerTableau::from_generators(nq, std::move(gens));
}

} // namespace topoqec
