#include "doctest.h"

#include "topoqec/tableau.hpp"

#include "../support/graph_rules.hpp"

using namespace topoqec;
using namespace topoqec::testing;

TEST_CASE("single-vertex graph state is |+>") {
    StabilizerTableau t = StabilizerTableau::graph_state(Graph(1));
    CHECK(t.contains(PauliProduct::parse("+X")));
}

TEST_CASE("three-vertex path generators") {
    StabilizerTableau t = StabilizerTableau::graph_state(Graph::chain(3));
    StabilizerTableau want = StabilizerTableau::from_generators(
        3, {PauliProduct::parse("+XZI"), PauliProduct::parse("+ZXZ"),
            PauliProduct::parse("+IZX")});
    CHECK(t.same_group(want));
}

TEST_CASE("graph state equals CZ network applied to plus states") {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    g.add_edge(3, 0);
    g.add_edge(0, 2);
    StabilizerTableau direct = StabilizerTableau::graph_state(g);
    StabilizerTableau built = StabilizerTableau::plus_state(4);
    built.apply_cz(0, 1);
    built.apply_cz(1, 2);
    built.apply_cz(2, 3);
    built.apply_cz(3, 0);
    built.apply_cz(0, 2);
    CHECK(direct.same_group(built));
}

TEST_CASE("graph validation rejects self-loops and multi-edges") {
    Graph g(3);
    CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
    g.add_edge(0, 1);
    CHECK_THROWS_AS(g.add_edge(1, 0), std::invalid_argument);
}

TEST_CASE("star graph with Hadamards on the leaves is the cat state group") {
    const std::size_t n = 6;
    Graph star(n);
    for (std::size_t leaf = 1; leaf < n; ++leaf) star.add_edge(0, leaf);
    StabilizerTableau t = StabilizerTableau::graph_state(star);
    for (std::size_t leaf = 1; leaf < n; ++leaf) t.apply_h(leaf);
    std::vector<PauliProduct> cat;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        PauliProduct zz(n);
        zz.set_letter(i, 'Z');
        zz.set_letter(i + 1, 'Z');
        cat.push_back(zz);
    }
    PauliProduct all_x(n);
    for (std::size_t i = 0; i < n; ++i) all_x.set_letter(i, 'X');
    cat.push_back(all_x);
    CHECK(t.same_group(StabilizerTableau::from_generators(n, cat)));
}

TEST_CASE("measurement rules hold on 1D chains up to length 8") {
    const GraphRuleStats st = run_graph_rule_suite(8);
    CHECK(st.failed == 0);
    CHECK(st.checked > 0);
}
