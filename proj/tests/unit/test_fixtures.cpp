#include "doctest.h"

#include "topoqec/fixtures.hpp"
#include "topoqec/gf2.hpp"
#include "topoqec/tableau.hpp"

using namespace topoqec;

namespace {

// Independent GF(2) rank oracle over the symplectic rows (x|z).
std::size_t symplectic_rank(const std::vector<PauliProduct>& ops) {
    if (ops.empty()) return 0;
    const std::size_t n = ops.front().num_qubits();
    std::vector<std::vector<int>> rows;
    for (const auto& p : ops) {
        std::vector<int> r(2 * n, 0);
        for (std::size_t q = 0; q < n; ++q) {
            r[q] = p.x_bit(q);
            r[n + q] = p.z_bit(q);
        }
        rows.push_back(r);
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < 2 * n && rank < rows.size(); ++col) {
        std::size_t pivot = rows.size();
        for (std::size_t i = rank; i < rows.size(); ++i)
            if (rows[i][col]) { pivot = i; break; }
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != rank && rows[i][col])
                for (std::size_t c2 = 0; c2 < 2 * n; ++c2) rows[i][c2] ^= rows[rank][c2];
        ++rank;
    }
    return rank;
}

void check_fixture_wellformed(const CodeFixture& f) {
    for (std::size_t i = 0; i < f.generators.size(); ++i)
        for (std::size_t j = i + 1; j < f.generators.size(); ++j)
            CHECK(f.generators[i].commutes_with(f.generators[j]));
    for (std::size_t i = 0; i < f.logical_x.size(); ++i) {
        for (const auto& g : f.generators) {
            CHECK(f.logical_x[i].commutes_with(g));
            CHECK(f.logical_z[i].commutes_with(g));
        }
        for (std::size_t j = 0; j < f.logical_z.size(); ++j)
            CHECK(f.logical_x[i].commutes_with(f.logical_z[j]) == (i != j));
    }
}

} // namespace

TEST_CASE("five-qubit code matches the published table") {
    const CodeFixture f = code_fixture("five_qubit");
    CHECK(f.n == 5);
    CHECK(f.generators[0] == PauliProduct::parse("+XZZXI"));
    CHECK(f.generators[1] == PauliProduct::parse("+IXZZX"));
    CHECK(f.generators[2] == PauliProduct::parse("+XIXZZ"));
    CHECK(f.generators[3] == PauliProduct::parse("+ZXIXZ"));
    CHECK(f.logical_x[0] == PauliProduct::parse("+XXXXX"));
    CHECK(f.logical_z[0] == PauliProduct::parse("+ZZZZZ"));
    check_fixture_wellformed(f);
}

TEST_CASE("bit-flip code generators") {
    const CodeFixture f = code_fixture("bitflip3");
    CHECK(f.generators[0] == PauliProduct::parse("+ZZI"));
    CHECK(f.generators[1] == PauliProduct::parse("+IZZ"));
    CHECK(f.logical_x[0] == PauliProduct::parse("+XXX"));
    check_fixture_wellformed(f);
    check_fixture_wellformed(code_fixture("phaseflip3"));
    check_fixture_wellformed(code_fixture("shor9"));
    check_fixture_wellformed(code_fixture("reed_muller15"));
}

TEST_CASE("steane generators commute and have rank 6") {
    const CodeFixture f = code_fixture("steane7");
    check_fixture_wellformed(f);
    CHECK(symplectic_rank(f.generators) == 6);
}

TEST_CASE("unknown fixture name rejected") {
    CHECK_THROWS_AS(code_fixture("no_such_code"), std::invalid_argument);
}

TEST_CASE("every weight-1 error has a distinct syndrome on distance-3 fixtures") {
    for (const char* name : {"five_qubit", "steane7"}) {
        const CodeFixture f = code_fixture(name);
        std::vector<std::vector<int>> seen;
        for (std::size_t q = 0; q < f.n; ++q) {
            for (char letter : {'X', 'Y', 'Z'}) {
                const PauliProduct err = PauliProduct::single(f.n, q, letter);
                std::vector<int> syn;
                for (const auto& g : f.generators) syn.push_back(err.commutes_with(g) ? 0 : 1);
                bool nonzero = false;
                for (int b : syn) nonzero |= b;
                CHECK(nonzero);
                for (const auto& other : seen) CHECK(other != syn);
                seen.push_back(syn);
            }
        }
    }
}

TEST_CASE("shor9 weight-1 syndromes distinct up to stabilizer-equivalent errors") {
    const CodeFixture f = code_fixture("shor9");
    StabilizerTableau group = StabilizerTableau::from_generators(f.n, f.generators);
    std::vector<std::pair<PauliProduct, std::vector<int>>> seen;
    for (std::size_t q = 0; q < f.n; ++q) {
        for (char letter : {'X', 'Y', 'Z'}) {
            const PauliProduct err = PauliProduct::single(f.n, q, letter);
            std::vector<int> syn;
            for (const auto& g : f.generators) syn.push_back(err.commutes_with(g) ? 0 : 1);
            for (const auto& [prev, prev_syn] : seen) {
                if (prev_syn != syn) continue;
                // Same syndrome is only allowed for errors equal up to a
                // stabilizer (their product acts trivially on the code space).
                PauliProduct ratio = prev * err;
                ratio.set_phase(Phase::PlusOne);
                int sign = 0;
                CHECK(group.contains_up_to_sign(ratio, sign));
            }
            seen.emplace_back(err, syn);
        }
    }
}

TEST_CASE("fixture tableaus satisfy the invariants") {
    for (const auto& name : code_fixture_names()) {
        const CodeFixture f = code_fixture(name);
        StabilizerTableau t = StabilizerTableau::from_generators(f.n, f.generators);
        t.check_invariants();
        CHECK(t.num_generators() == f.generators.size());
    }
}
