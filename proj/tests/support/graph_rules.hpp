#pragma once

// Graph-state single-measurement and contraction rules on 1D chains, shared
// by the unit tests and the acceptance suite. Each checker post-selects the
// +1 branch, applies the byproduct Clifford, and compares canonical forms.

#include <cstddef>
#include <vector>

#include "topoqec/tableau.hpp"

namespace topoqec::testing {

inline StabilizerTableau expected_with_extras(std::size_t n, const Graph& g,
                                              const std::vector<std::size_t>& removed,
                                              const std::vector<PauliProduct>& extras) {
    std::vector<PauliProduct> gens = extras;
    std::vector<bool> gone(n, false);
    for (auto v : removed) gone[v] = true;
    for (std::size_t i = 0; i < n; ++i) {
        if (gone[i]) continue;
        PauliProduct k = PauliProduct::single(n, i, 'X');
        for (auto j : g.neighbors(i)) {
            if (gone[j]) continue;
            k *= PauliProduct::single(n, j, 'Z');
        }
        gens.push_back(std::move(k));
    }
    return StabilizerTableau::from_generators(n, gens);
}

/// Z measurement at i: the measured vertex is cut out of the graph.
inline bool check_z_rule(std::size_t len, std::size_t i) {
    StabilizerTableau t = StabilizerTableau::graph_state(Graph::chain(len));
    t.measure_forced(PauliProduct::single(len, i, 'Z'), 0);
    Graph cut(len);
    for (std::size_t v = 0; v + 1 < len; ++v)
        if (v != i && v + 1 != i) cut.add_edge(v, v + 1);
    const auto expect =
        expected_with_extras(len, cut, {i}, {PauliProduct::single(len, i, 'Z')});
    return t.same_group(expect);
}

/// X measurement at i (needs a left neighbor): byproduct H at i-1; the left
/// neighbor keeps a single edge to i+1, its other neighbors migrate to i+1.
inline bool check_x_rule(std::size_t len, std::size_t i) {
    StabilizerTableau t = StabilizerTableau::graph_state(Graph::chain(len));
    t.measure_forced(PauliProduct::single(len, i, 'X'), 0);
    t.apply_h(i - 1);
    Graph merged(len);
    for (std::size_t v = 0; v + 1 < len; ++v) {
        if (v == i || v + 1 == i) continue;        // edges at the measured vertex
        if (v + 1 == i - 1 || v == i - 1) continue; // old edges of i-1
        merged.add_edge(v, v + 1);
    }
    if (i + 1 < len) {
        merged.add_edge(i - 1, i + 1);
        if (i >= 2) merged.add_edge(i - 2, i + 1);
    }
    const auto expect =
        expected_with_extras(len, merged, {i}, {PauliProduct::single(len, i, 'X')});
    return t.same_group(expect);
}

/// Y measurement at i: byproduct S-dagger on both neighbors; the neighbors
/// are joined directly.
inline bool check_y_rule(std::size_t len, std::size_t i) {
    StabilizerTableau t = StabilizerTableau::graph_state(Graph::chain(len));
    t.measure_forced(PauliProduct::single(len, i, 'Y'), 0);
    t.apply_sdg(i - 1);
    t.apply_sdg(i + 1);
    Graph contracted(len);
    for (std::size_t v = 0; v + 1 < len; ++v)
        if (v != i && v + 1 != i) contracted.add_edge(v, v + 1);
    contracted.add_edge(i - 1, i + 1);
    const auto expect =
        expected_with_extras(len, contracted, {i}, {PauliProduct::single(len, i, 'Y')});
    return t.same_group(expect);
}

/// Adjacent X measurements at i, i+1: both vertices drop out and the chain is
/// joined directly, no byproduct in the +1/+1 branch.
inline bool check_xx_rule(std::size_t len, std::size_t i) {
    StabilizerTableau t = StabilizerTableau::graph_state(Graph::chain(len));
    t.measure_forced(PauliProduct::single(len, i, 'X'), 0);
    t.measure_forced(PauliProduct::single(len, i + 1, 'X'), 0);
    Graph contracted(len);
    for (std::size_t v = 0; v + 1 < len; ++v)
        if (v != i && v != i + 1 && v + 1 != i && v + 1 != i + 1) contracted.add_edge(v, v + 1);
    contracted.add_edge(i - 1, i + 2);
    const auto expect = expected_with_extras(len, contracted, {i, i + 1},
                                             {PauliProduct::single(len, i, 'X'),
                                              PauliProduct::single(len, i + 1, 'X')});
    return t.same_group(expect);
}

/// Y measurements on three neighbors i-1, i, i+1: the triple contracts the
/// chain directly; the inner S-type byproducts land on measured qubits, so
/// the +1 branch needs no correction on the survivors.
inline bool check_yyy_rule(std::size_t len, std::size_t i) {
    StabilizerTableau t = StabilizerTableau::graph_state(Graph::chain(len));
    t.measure_forced(PauliProduct::single(len, i - 1, 'Y'), 0);
    t.measure_forced(PauliProduct::single(len, i, 'Y'), 0);
    t.measure_forced(PauliProduct::single(len, i + 1, 'Y'), 0);
    Graph contracted(len);
    for (std::size_t v = 0; v + 1 < len; ++v)
        if (v + 1 < i - 1 || v > i + 1) contracted.add_edge(v, v + 1);
    contracted.add_edge(i - 2, i + 2);
    const auto expect = expected_with_extras(len, contracted, {i - 1, i, i + 1},
                                             {PauliProduct::single(len, i - 1, 'Y'),
                                              PauliProduct::single(len, i, 'Y'),
                                              PauliProduct::single(len, i + 1, 'Y')});
    return t.same_group(expect);
}

struct GraphRuleStats {
    std::size_t checked = 0;
    std::size_t failed = 0;
};

/// Runs every rule at every admissible position on chains of length 3..max_len.
inline GraphRuleStats run_graph_rule_suite(std::size_t max_len) {
    GraphRuleStats st;
    auto tally = [&](bool ok) {
        ++st.checked;
        if (!ok) ++st.failed;
    };
    for (std::size_t len = 3; len <= max_len; ++len) {
        for (std::size_t i = 0; i < len; ++i) tally(check_z_rule(len, i));
        for (std::size_t i = 1; i + 1 < len; ++i) tally(check_x_rule(len, i));
        for (std::size_t i = 1; i + 1 < len; ++i) tally(check_y_rule(len, i));
        for (std::size_t i = 1; i + 2 < len; ++i) tally(check_xx_rule(len, i));
        for (std::size_t i = 2; i + 2 < len; ++i) tally(check_yyy_rule(len, i));
    }
    return st;
}

} // namespace topoqec::testing
