#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "topoqec/bits.hpp"
#include "topoqec/gf2.hpp"

namespace topoqec {

enum class SurfaceKind { Torus, Planar, PolygonSphere, Patch };

/// Chain over GF(2) on a cell complex: a bit per basis element of the given
/// dimension, on the primal or dual lattice.
struct Chain {
    int dim = 0;
    bool dual = false;
    BitVec bits;

    Chain() = default;
    Chain(int d, bool du, std::size_t n) : dim(d), dual(du), bits(n) {}

    Chain& operator^=(const Chain& o) {
        if (dim != o.dim || dual != o.dual) throw std::invalid_argument("chain type mismatch");
        bits ^= o.bits;
        return *this;
    }
    friend Chain operator^(Chain a, const Chain& b) { a ^= b; return a; }
    bool operator==(const Chain& o) const { return dim == o.dim && dual == o.dual && bits == o.bits; }
};

/// Two-dimensional cell complex with GF(2) boundary maps.
///
/// Kinds built by build_surface:
///   torus n:          n x n square lattice, periodic, |E| = 2 n^2
///   planar n:         n x (n-1) lattice, rough left/right, smooth top/bottom,
///                     |E| = 2 n^2 - 2n + 1; rough-end edges have one endpoint
///   polygon_sphere n: n-gon on a sphere, two faces
///   patch R x C:      open rectangle with all-smooth boundary (vacuum for
///                     defect qubits); every star operator is complete
///
/// Edge/vertex/face indexing is row-major (row, then column, horizontal
/// orientation before vertical) and is stable; fixtures and CSV output rely
/// on it.
class Surface {
public:
    static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

    SurfaceKind kind;
    std::size_t n = 0;          // size parameter
    std::size_t rows = 0, cols = 0; // patch geometry

    std::size_t num_vertices = 0;
    std::size_t num_edges = 0;
    std::size_t num_faces = 0;
    int genus = 0;

    // Incidence. edge_vertices uses kNone for a dangling (rough boundary) end;
    // edge_faces uses kNone for an edge on a smooth boundary.
    std::vector<std::array<std::size_t, 2>> edge_vertices;
    std::vector<std::array<std::size_t, 2>> edge_faces;
    std::vector<std::vector<std::size_t>> face_edges;
    std::vector<std::vector<std::size_t>> vertex_edges;

    // Reference cycles fixing the homology-class labels (empty when h1 = 0).
    std::vector<BitVec> primal_reference_cycles; // logical Z representatives
    std::vector<BitVec> dual_reference_cycles;   // logical X representatives

    Chain zero_chain(int dim, bool dual = false) const;
    Chain edge_chain(std::size_t edge, bool dual = false) const;

    /// Boundary operator; accepts primal/dual 1- and 2-chains.
    Chain boundary(const Chain& c) const;

    /// delta v = set of edges incident to a vertex, as a dual 1-chain of the
    /// same index space (one qubit per edge).
    Chain vertex_star(std::size_t v) const;
    Chain face_boundary(std::size_t f) const;

    /// Homology class of a 1-cycle. Bit i of the result is the GF(2)
    /// intersection with reference cycle i of the opposite lattice; class 0 is
    /// the trivial class. Precondition: boundary(c) = 0.
    unsigned classify_cycle(const Chain& c) const;

    /// Membership of a 1-chain in the span of face boundaries (primal) or
    /// vertex stars (dual).
    bool is_boundary(const Chain& c) const;

    /// Adjacency dump used by the CLI for debugging.
    std::string debug_dump() const;

    const Gf2Solver& primal_image_solver() const { return primal_image_; }
    const Gf2Solver& dual_image_solver() const { return dual_image_; }

    void finalize(); // builds solvers and validates d o d = 0

    friend Surface build_surface(SurfaceKind kind, std::size_t size);

private:
    Gf2Solver primal_image_; // row space of { boundary(f) : f }
    Gf2Solver dual_image_;   // row space of { star(v) : v }
};

/// Builds a torus, planar, or polygon_sphere surface of the given size (>= 2).
Surface build_surface(SurfaceKind kind, std::size_t size);

/// Open rectangular patch with all-smooth boundary: R x C faces.
Surface build_patch(std::size_t face_rows, std::size_t face_cols);

/// Dual surface: faces and vertices swapped, boundary matrices transposed.
Surface dual(const Surface& s);

// --- index helpers (row-major layout) ---

std::size_t torus_vertex(std::size_t n, std::size_t r, std::size_t c);
std::size_t torus_hedge(std::size_t n, std::size_t r, std::size_t c); // (r,c)-(r,c+1)
std::size_t torus_vedge(std::size_t n, std::size_t r, std::size_t c); // (r,c)-(r+1,c)
std::size_t torus_face(std::size_t n, std::size_t r, std::size_t c);

/// L x L x T cubic cell complex on a 3-torus. C3..C0 with the boundary maps;
/// the dual identifies C_i with C_{3-i}. Vertical faces carry the 2D edges at
/// time t, horizontal faces the measurement rounds.
class CubicComplex {
public:
    CubicComplex(std::size_t space, std::size_t time);

    std::size_t space() const { return l_; }
    std::size_t rounds() const { return t_; }

    std::size_t num_vertices() const { return nsite_; }
    std::size_t num_edges() const { return 3 * nsite_; }
    std::size_t num_faces() const { return 3 * nsite_; }
    std::size_t num_cubes() const { return nsite_; }

    // axis: 0 = x, 1 = y, 2 = t (the face axis is its normal direction).
    std::size_t vertex_index(std::size_t x, std::size_t y, std::size_t t) const;
    std::size_t edge_index(int axis, std::size_t x, std::size_t y, std::size_t t) const;
    std::size_t face_index(int axis, std::size_t x, std::size_t y, std::size_t t) const;
    std::size_t cube_index(std::size_t x, std::size_t y, std::size_t t) const;

    /// The vertical face carrying 2D toric-lattice edge `edge2d` (of an
    /// L x L torus, row-major indexing) at measurement round t.
    std::size_t vertical_face(std::size_t edge2d, std::size_t t) const;
    /// The horizontal face separating syndrome cubes (k, t) and (k, t+1):
    /// a measurement error in round t.
    std::size_t horizontal_face(std::size_t vertex2d, std::size_t t) const;
    /// The cube carrying syndrome bit s_k(t).
    std::size_t syndrome_cube(std::size_t vertex2d, std::size_t t) const;

    Chain boundary(const Chain& c) const;

    std::vector<std::size_t> cube_faces(std::size_t cube) const;
    std::vector<std::size_t> face_edges(std::size_t face) const;
    std::vector<std::size_t> edge_vertices(std::size_t edge) const;

    /// Dual-boundary of a dual 1-chain indexed by faces: the set of cubes
    /// (dual vertices) with odd incidence.
    BitVec dual_edge_chain_boundary(const BitVec& faces) const;

private:
    std::size_t l_, t_, nsite_;
    std::size_t wrap(std::size_t v, std::size_t m) const { return v % m; }
};

} // namespace topoqec
