#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "topoqec/pauli.hpp"
#include "topoqec/rng.hpp"

namespace topoqec {

/// Simple undirected graph used for graph states.
class Graph {
public:
    explicit Graph(std::size_t n) : adj_(n) {}

    std::size_t num_vertices() const { return adj_.size(); }

    void add_edge(std::size_t u, std::size_t v) {
        if (u >= adj_.size() || v >= adj_.size()) throw std::out_of_range("graph vertex out of range");
        if (u == v) throw std::invalid_argument("graph state graph must not contain self-loops");
        for (auto w : adj_[u])
            if (w == v) throw std::invalid_argument("graph state graph must not contain multi-edges");
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }

    const std::vector<std::size_t>& neighbors(std::size_t v) const { return adj_[v]; }

    /// 1D path 0-1-2-...-(n-1).
    static Graph chain(std::size_t n) {
        Graph g(n);
        for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
        return g;
    }

private:
    std::vector<std::vector<std::size_t>> adj_;
};

struct MeasureOutcome {
    int outcome = 0;        // 0 for eigenvalue +1, 1 for -1
    bool deterministic = false;

    double probability() const { return deterministic ? 1.0 : 0.5; }
};

/// Generating set of a stabilizer group with destabilizer partners.
///
/// Invariants maintained across gates and measurements: generators are
/// Hermitian, mutually commuting and independent; destabs[i] anticommutes
/// with gens[i] and commutes with every other generator and destabilizer.
class StabilizerTableau {
public:
    StabilizerTableau() = default;

    static StabilizerTableau zero_state(std::size_t n);
    static StabilizerTableau plus_state(std::size_t n);

    /// Builds a tableau from a generator list; validates the stabilizer-group
    /// invariants and solves for destabilizer partners.
    static StabilizerTableau from_generators(std::size_t n, std::vector<PauliProduct> gens);

    /// K_i = X_i prod_{j in N(i)} Z_j for every vertex of the graph.
    static StabilizerTableau graph_state(const Graph& g);

    std::size_t num_qubits() const { return n_; }
    std::size_t num_generators() const { return gens_.size(); }
    const std::vector<PauliProduct>& generators() const { return gens_; }
    const std::vector<PauliProduct>& destabilizers() const { return destabs_; }

    // Gate application by conjugation of every row.
    void apply_h(std::size_t q);
    void apply_s(std::size_t q);
    void apply_sdg(std::size_t q);
    void apply_x(std::size_t q);
    void apply_y(std::size_t q);
    void apply_z(std::size_t q);
    void apply_cnot(std::size_t c, std::size_t t);
    void apply_cz(std::size_t a, std::size_t b);

    /// Measures a Hermitian Pauli product. Case (i): the outcome is
    /// deterministic and the state unchanged; case (ii): a fair coin drawn
    /// from rng decides the outcome and the generator set is updated.
    /// When a generator is replaced and `kicked` is non-null, the replaced
    /// (signed) generator is stored there.
    MeasureOutcome measure(const PauliProduct& p, RngStream& rng,
                           PauliProduct* kicked = nullptr);

    /// Same update rule with the random branch forced to the given outcome
    /// (post-selection). A deterministic outcome ignores `forced`.
    MeasureOutcome measure_forced(const PauliProduct& p, int forced,
                                  PauliProduct* kicked = nullptr);

    /// Deterministic canonical generator list: RREF of the stacked (x|z) rows,
    /// x block first, pivoting lowest column index first, signs carried along.
    std::vector<PauliProduct> canonical() const;

    /// Membership of a signed Pauli product in the stabilizer group.
    bool contains(const PauliProduct& p) const;

    /// True iff p or -p is generated; sign_out receives 0 for +, 1 for -.
    bool contains_up_to_sign(const PauliProduct& p, int& sign_out) const;

    bool same_group(const StabilizerTableau& other) const;

    /// Validates all tableau invariants (used by tests).
    void check_invariants() const;

private:
    MeasureOutcome measure_impl(const PauliProduct& p, int* forced, RngStream* rng,
                                PauliProduct* kicked);
    PauliProduct solve_destabilizer(const std::vector<PauliProduct>& against_anti,
                                    const std::vector<PauliProduct>& against_comm) const;

    std::size_t n_ = 0;
    std::vector<PauliProduct> gens_;
    std::vector<PauliProduct> destabs_;
};

} // namespace topoqec
