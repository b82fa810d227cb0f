#include "topoqec/chain.hpp"

#include <sstream>
#include <stdexcept>

namespace topoqec {

std::size_t torus_vertex(std::size_t n, std::size_t r, std::size_t c) { return (r % n) * n + (c % n); }
std::size_t torus_hedge(std::size_t n, std::size_t r, std::size_t c) { return (r % n) * n + (c % n); }
std::size_t torus_vedge(std::size_t n, std::size_t r, std::size_t c) {
    return n * n + (r % n) * n + (c % n);
}
std::size_t torus_face(std::size_t n, std::size_t r, std::size_t c) { return (r % n) * n + (c % n); }

Chain Surface::zero_chain(int dim, bool dual) const {
    std::size_t len = 0;
    switch (dim) {
        case 0: len = dual ? num_faces : num_vertices; break;
        case 1: len = num_edges; break;
        case 2: len = dual ? num_vertices : num_faces; break;
        default: throw std::invalid_argument("chain dimension out of range");
    }
    return Chain(dim, dual, len);
}

Chain Surface::edge_chain(std::size_t edge, bool dual) const {
    Chain c = zero_chain(1, dual);
    c.bits.set(edge);
    return c;
}

Chain Surface::vertex_star(std::size_t v) const {
    Chain c = zero_chain(1, true);
    for (auto e : vertex_edges[v]) c.bits.flip(e);
    return c;
}

Chain Surface::face_boundary(std::size_t f) const {
    Chain c = zero_chain(1, false);
    for (auto e : face_edges[f]) c.bits.flip(e);
    return c;
}

Chain Surface::boundary(const Chain& c) const {
    if (c.dim == 0) throw std::invalid_argument("boundary of a 0-chain");
    if (c.dim == 1) {
        Chain out = zero_chain(0, c.dual);
        for (auto e : c.bits.set_bits()) {
            const auto& pair = c.dual ? edge_faces[e] : edge_vertices[e];
            if (pair[0] != kNone) out.bits.flip(pair[0]);
            if (pair[1] != kNone) out.bits.flip(pair[1]);
        }
        return out;
    }
    if (c.dim == 2) {
        Chain out = zero_chain(1, c.dual);
        if (c.dual) {
            for (auto v : c.bits.set_bits())
                for (auto e : vertex_edges[v]) out.bits.flip(e);
        } else {
            for (auto f : c.bits.set_bits())
                for (auto e : face_edges[f]) out.bits.flip(e);
        }
        return out;
    }
    throw std::invalid_argument("unsupported chain dimension on a surface");
}

unsigned Surface::classify_cycle(const Chain& c) const {
    if (c.dim != 1) throw std::invalid_argument("classify_cycle expects a 1-chain");
    if (boundary(c).bits.any()) throw std::invalid_argument("classify_cycle input is not a cycle");
    const auto& refs = c.dual ? primal_reference_cycles : dual_reference_cycles;
    unsigned cls = 0;
    for (std::size_t i = 0; i < refs.size(); ++i)
        if (BitVec::dot(c.bits, refs[i])) cls |= 1u << i;
    return cls;
}

bool Surface::is_boundary(const Chain& c) const {
    if (c.dim != 1) throw std::invalid_argument("is_boundary expects a 1-chain");
    return c.dual ? dual_image_.in_span(c.bits) : primal_image_.in_span(c.bits);
}

void Surface::finalize() {
    // d1 o d2 = 0 on both lattices.
    for (std::size_t f = 0; f < num_faces; ++f) {
        Chain b = face_boundary(f);
        b.dual = false;
        if (boundary(b).bits.any()) throw std::logic_error("boundary of a face boundary is nonzero");
    }
    for (std::size_t v = 0; v < num_vertices; ++v) {
        if (boundary(vertex_star(v)).bits.any())
            throw std::logic_error("dual boundary of a vertex star is nonzero");
    }
    std::vector<BitVec> prim, du;
    for (std::size_t f = 0; f < num_faces; ++f) prim.push_back(face_boundary(f).bits);
    for (std::size_t v = 0; v < num_vertices; ++v) du.push_back(vertex_star(v).bits);
    primal_image_ = Gf2Solver(std::move(prim), num_edges);
    dual_image_ = Gf2Solver(std::move(du), num_edges);
}

Surface build_surface(SurfaceKind kind, std::size_t size) {
    if (size < 2) throw std::invalid_argument("surface size must be at least 2");
    Surface s;
    s.kind = kind;
    s.n = size;
    const std::size_t n = size;

    if (kind == SurfaceKind::Torus) {
        s.num_vertices = n * n;
        s.num_edges = 2 * n * n;
        s.num_faces = n * n;
        s.genus = 1;
        s.edge_vertices.resize(s.num_edges);
        s.edge_faces.resize(s.num_edges);
        s.face_edges.resize(s.num_faces);
        s.vertex_edges.resize(s.num_vertices);
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) {
                const std::size_t h = torus_hedge(n, r, c);
                s.edge_vertices[h] = {torus_vertex(n, r, c), torus_vertex(n, r, c + 1)};
                s.edge_faces[h] = {torus_face(n, r, c), torus_face(n, r + n - 1, c)};
                const std::size_t w = torus_vedge(n, r, c);
                s.edge_vertices[w] = {torus_vertex(n, r, c), torus_vertex(n, r + 1, c)};
                s.edge_faces[w] = {torus_face(n, r, c), torus_face(n, r, c + n - 1)};
                s.face_edges[torus_face(n, r, c)] = {torus_hedge(n, r, c), torus_hedge(n, r + 1, c),
                                                     torus_vedge(n, r, c), torus_vedge(n, r, c + 1)};
                s.vertex_edges[torus_vertex(n, r, c)] = {
                    torus_hedge(n, r, c), torus_hedge(n, r, c + n - 1), torus_vedge(n, r, c),
                    torus_vedge(n, r + n - 1, c)};
            }
        }
        BitVec prim_h(s.num_edges), prim_v(s.num_edges), dual_v(s.num_edges), dual_h(s.num_edges);
        for (std::size_t c = 0; c < n; ++c) prim_h.set(torus_hedge(n, 0, c));
        for (std::size_t r = 0; r < n; ++r) prim_v.set(torus_vedge(n, r, 0));
        // dual wrap cycles: all horizontal edges in one column, all vertical
        // edges in one face row
        for (std::size_t r = 0; r < n; ++r) dual_v.set(torus_hedge(n, r, 0));
        for (std::size_t c = 0; c < n; ++c) dual_h.set(torus_vedge(n, 0, c));
        s.primal_reference_cycles = {prim_h, prim_v};
        s.dual_reference_cycles = {dual_v, dual_h};
    } else if (kind == SurfaceKind::Planar) {
        // n x (n-1) lattice: rough left/right, smooth top/bottom.
        const std::size_t nv = n * (n - 1);
        s.num_vertices = nv;
        s.num_edges = n * n + (n - 1) * (n - 1);
        s.num_faces = nv;
        s.genus = 0;
        s.edge_vertices.resize(s.num_edges);
        s.edge_faces.resize(s.num_edges);
        s.face_edges.resize(s.num_faces);
        s.vertex_edges.resize(s.num_vertices);
        auto vid = [&](std::size_t r, std::size_t i) { return r * (n - 1) + i; };
        auto hid = [&](std::size_t r, std::size_t c) { return r * n + c; };
        auto wid = [&](std::size_t r, std::size_t j) { return n * n + r * (n - 1) + j; };
        auto fid = [&](std::size_t r, std::size_t j) { return r * n + j; };
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) {
                const std::size_t h = hid(r, c);
                s.edge_vertices[h] = {c >= 1 ? vid(r, c - 1) : Surface::kNone,
                                      c + 1 < n ? vid(r, c) : Surface::kNone};
                s.edge_faces[h] = {r >= 1 ? fid(r - 1, c) : Surface::kNone,
                                   r + 1 < n ? fid(r, c) : Surface::kNone};
            }
        }
        for (std::size_t r = 0; r + 1 < n; ++r) {
            for (std::size_t j = 0; j + 1 < n; ++j) {
                const std::size_t w = wid(r, j);
                s.edge_vertices[w] = {vid(r, j), vid(r + 1, j)};
                s.edge_faces[w] = {fid(r, j), fid(r, j + 1)};
            }
        }
        for (std::size_t r = 0; r + 1 < n; ++r) {
            for (std::size_t j = 0; j < n; ++j) {
                auto& fe = s.face_edges[fid(r, j)];
                fe = {hid(r, j), hid(r + 1, j)};
                if (j >= 1) fe.push_back(wid(r, j - 1));
                if (j + 1 < n) fe.push_back(wid(r, j));
            }
        }
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t i = 0; i + 1 < n; ++i) {
                auto& ve = s.vertex_edges[vid(r, i)];
                ve = {hid(r, i), hid(r, i + 1)};
                if (r >= 1) ve.push_back(wid(r - 1, i));
                if (r + 1 < n) ve.push_back(wid(r, i));
            }
        }
        BitVec prim(s.num_edges), du(s.num_edges);
        for (std::size_t c = 0; c < n; ++c) prim.set(hid(0, c)); // rough-to-rough crossing
        for (std::size_t r = 0; r < n; ++r) du.set(hid(r, 0));   // smooth-to-smooth dual crossing
        s.primal_reference_cycles = {prim};
        s.dual_reference_cycles = {du};
    } else if (kind == SurfaceKind::PolygonSphere) {
        s.num_vertices = n;
        s.num_edges = n;
        s.num_faces = 2;
        s.genus = 0;
        s.edge_vertices.resize(n);
        s.edge_faces.resize(n);
        s.face_edges.assign(2, {});
        s.vertex_edges.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            s.edge_vertices[i] = {i, (i + 1) % n};
            s.edge_faces[i] = {0, 1};
            s.face_edges[0].push_back(i);
            s.face_edges[1].push_back(i);
            s.vertex_edges[i] = {(i + n - 1) % n, i};
        }
    } else {
        throw std::invalid_argument("build_surface supports torus, planar and polygon_sphere");
    }
    s.finalize();
    return s;
}

Surface build_patch(std::size_t face_rows, std::size_t face_cols) {
    if (face_rows < 1 || face_cols < 1) throw std::invalid_argument("patch must have faces");
    Surface s;
    s.kind = SurfaceKind::Patch;
    s.n = 0;
    s.rows = face_rows;
    s.cols = face_cols;
    const std::size_t R = face_rows, C = face_cols;
    s.num_vertices = (R + 1) * (C + 1);
    s.num_edges = (R + 1) * C + R * (C + 1);
    s.num_faces = R * C;
    s.genus = 0;
    s.edge_vertices.resize(s.num_edges);
    s.edge_faces.resize(s.num_edges);
    s.face_edges.resize(s.num_faces);
    s.vertex_edges.resize(s.num_vertices);
    auto vid = [&](std::size_t r, std::size_t c) { return r * (C + 1) + c; };
    auto hid = [&](std::size_t r, std::size_t c) { return r * C + c; };
    auto wid = [&](std::size_t r, std::size_t c) { return (R + 1) * C + r * (C + 1) + c; };
    auto fid = [&](std::size_t r, std::size_t c) { return r * C + c; };
    for (std::size_t r = 0; r <= R; ++r)
        for (std::size_t c = 0; c < C; ++c) {
            s.edge_vertices[hid(r, c)] = {vid(r, c), vid(r, c + 1)};
            s.edge_faces[hid(r, c)] = {r >= 1 ? fid(r - 1, c) : Surface::kNone,
                                       r < R ? fid(r, c) : Surface::kNone};
        }
    for (std::size_t r = 0; r < R; ++r)
        for (std::size_t c = 0; c <= C; ++c) {
            s.edge_vertices[wid(r, c)] = {vid(r, c), vid(r + 1, c)};
            s.edge_faces[wid(r, c)] = {c >= 1 ? fid(r, c - 1) : Surface::kNone,
                                       c < C ? fid(r, c) : Surface::kNone};
        }
    for (std::size_t r = 0; r < R; ++r)
        for (std::size_t c = 0; c < C; ++c)
            s.face_edges[fid(r, c)] = {hid(r, c), hid(r + 1, c), wid(r, c), wid(r, c + 1)};
    for (std::size_t r = 0; r <= R; ++r)
        for (std::size_t c = 0; c <= C; ++c) {
            auto& ve = s.vertex_edges[vid(r, c)];
            if (c >= 1) ve.push_back(hid(r, c - 1));
            if (c < C) ve.push_back(hid(r, c));
            if (r >= 1) ve.push_back(wid(r - 1, c));
            if (r < R) ve.push_back(wid(r, c));
        }
    s.finalize();
    return s;
}

Surface dual(const Surface& s) {
    Surface d;
    d.kind = s.kind;
    d.n = s.n;
    d.rows = s.rows;
    d.cols = s.cols;
    d.genus = s.genus;
    d.num_vertices = s.num_faces;
    d.num_edges = s.num_edges;
    d.num_faces = s.num_vertices;
    d.edge_vertices = s.edge_faces;
    d.edge_faces = s.edge_vertices;
    d.face_edges = s.vertex_edges;
    d.vertex_edges = s.face_edges;
    d.primal_reference_cycles = s.dual_reference_cycles;
    d.dual_reference_cycles = s.primal_reference_cycles;
    d.finalize();
    return d;
}

std::string Surface::debug_dump() const {
    std::ostringstream out;
    out << "surface V=" << num_vertices << " E=" << num_edges << " F=" << num_faces
        << " genus=" << genus << "\n";
    for (std::size_t e = 0; e < num_edges; ++e) {
        out << "edge " << e << " vertices";
        for (auto v : edge_vertices[e])
            if (v != kNone) out << ' ' << v;
        out << " faces";
        for (auto f : edge_faces[e])
            if (f != kNone) out << ' ' << f;
        out << "\n";
    }
    return out.str();
}

// --- CubicComplex ---

CubicComplex::CubicComplex(std::size_t space, std::size_t time)
    : l_(space), t_(time), nsite_(space * space * time) {
    if (space < 2 || time < 1) throw std::invalid_argument("cubic complex needs L >= 2, T >= 1");
}

std::size_t CubicComplex::vertex_index(std::size_t x, std::size_t y, std::size_t t) const {
    return (wrap(t, t_) * l_ + wrap(y, l_)) * l_ + wrap(x, l_);
}
std::size_t CubicComplex::edge_index(int axis, std::size_t x, std::size_t y, std::size_t t) const {
    return static_cast<std::size_t>(axis) * nsite_ + vertex_index(x, y, t);
}
std::size_t CubicComplex::face_index(int axis, std::size_t x, std::size_t y, std::size_t t) const {
    return static_cast<std::size_t>(axis) * nsite_ + vertex_index(x, y, t);
}
std::size_t CubicComplex::cube_index(std::size_t x, std::size_t y, std::size_t t) const {
    return vertex_index(x, y, t);
}

std::size_t CubicComplex::vertical_face(std::size_t edge2d, std::size_t t) const {
    const std::size_t n = l_;
    if (edge2d < n * n) { // horizontal 2D edge (r, c): stars (r,c)-(r,c+1)
        const std::size_t r = edge2d / n, c = edge2d % n;
        return face_index(0, c + 1, r, t);
    }
    const std::size_t id = edge2d - n * n; // vertical 2D edge (r, c): stars (r,c)-(r+1,c)
    const std::size_t r = id / n, c = id % n;
    return face_index(1, c, r + 1, t);
}

std::size_t CubicComplex::horizontal_face(std::size_t vertex2d, std::size_t t) const {
    const std::size_t r = vertex2d / l_, c = vertex2d % l_;
    return face_index(2, c, r, t + 1);
}

std::size_t CubicComplex::syndrome_cube(std::size_t vertex2d, std::size_t t) const {
    const std::size_t r = vertex2d / l_, c = vertex2d % l_;
    return cube_index(c, r, t);
}

std::vector<std::size_t> CubicComplex::cube_faces(std::size_t cube) const {
    const std::size_t x = cube % l_, y = (cube / l_) % l_, t = cube / (l_ * l_);
    return {face_index(0, x, y, t), face_index(0, x + 1, y, t),
            face_index(1, x, y, t), face_index(1, x, y + 1, t),
            face_index(2, x, y, t), face_index(2, x, y, t + 1)};
}

std::vector<std::size_t> CubicComplex::face_edges(std::size_t face) const {
    const int axis = static_cast<int>(face / nsite_);
    const std::size_t s = face % nsite_;
    const std::size_t x = s % l_, y = (s / l_) % l_, t = s / (l_ * l_);
    switch (axis) {
        case 0:
            return {edge_index(1, x, y, t), edge_index(1, x, y, t + 1),
                    edge_index(2, x, y, t), edge_index(2, x, y + 1, t)};
        case 1:
            return {edge_index(0, x, y, t), edge_index(0, x, y, t + 1),
                    edge_index(2, x, y, t), edge_index(2, x + 1, y, t)};
        default:
            return {edge_index(0, x, y, t), edge_index(0, x, y + 1, t),
                    edge_index(1, x, y, t), edge_index(1, x + 1, y, t)};
    }
}

std::vector<std::size_t> CubicComplex::edge_vertices(std::size_t edge) const {
    const int axis = static_cast<int>(edge / nsite_);
    const std::size_t s = edge % nsite_;
    const std::size_t x = s % l_, y = (s / l_) % l_, t = s / (l_ * l_);
    switch (axis) {
        case 0: return {vertex_index(x, y, t), vertex_index(x + 1, y, t)};
        case 1: return {vertex_index(x, y, t), vertex_index(x, y + 1, t)};
        default: return {vertex_index(x, y, t), vertex_index(x, y, t + 1)};
    }
}

Chain CubicComplex::boundary(const Chain& c) const {
    if (c.dim == 3) {
        Chain out(2, c.dual, num_faces());
        for (auto q : c.bits.set_bits())
            for (auto f : cube_faces(q)) out.bits.flip(f);
        return out;
    }
    if (c.dim == 2) {
        Chain out(1, c.dual, num_edges());
        for (auto f : c.bits.set_bits())
            for (auto e : face_edges(f)) out.bits.flip(e);
        return out;
    }
    if (c.dim == 1) {
        Chain out(0, c.dual, num_vertices());
        for (auto e : c.bits.set_bits())
            for (auto v : edge_vertices(e)) out.bits.flip(v);
        return out;
    }
    throw std::invalid_argument("boundary of a 0-chain");
}

BitVec CubicComplex::dual_edge_chain_boundary(const BitVec& faces) const {
    BitVec cubes(num_cubes());
    for (auto f : faces.set_bits()) {
        const int axis = static_cast<int>(f / nsite_);
        const std::size_t s = f % nsite_;
        const std::size_t x = s % l_, y = (s / l_) % l_, t = s / (l_ * l_);
        cubes.flip(cube_index(x, y, t));
        switch (axis) {
            case 0: cubes.flip(cube_index(x + l_ - 1, y, t)); break;
            case 1: cubes.flip(cube_index(x, y + l_ - 1, t)); break;
            default: cubes.flip(cube_index(x, y, t + t_ - 1)); break;
        }
    }
    return cubes;
}

} // namespace topoqec
