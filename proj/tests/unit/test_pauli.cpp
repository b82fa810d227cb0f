#include "doctest.h"

#include "topoqec/pauli.hpp"
#include "topoqec/rng.hpp"

#include "../support/dense_sim.hpp"

using namespace topoqec;
using namespace topoqec::testing;

namespace {

PauliProduct random_pauli(std::size_t n, RngStream& rng, bool with_phase = true) {
    PauliProduct p(n);
    const char letters[4] = {'I', 'X', 'Y', 'Z'};
    for (std::size_t q = 0; q < n; ++q) p.set_letter(q, letters[rng.below(4)]);
    if (with_phase) p.set_phase(static_cast<Phase>(rng.below(4)));
    return p;
}

} // namespace

TEST_CASE("pauli product of XX and ZZ is -YY") {
    const auto xx = PauliProduct::parse("+XX");
    const auto zz = PauliProduct::parse("+ZZ");
    const auto prod = xx * zz;
    CHECK(prod == PauliProduct::parse("-YY"));
    CHECK(prod.str() == "-YY");
}

TEST_CASE("product with identity") {
    const auto p = PauliProduct::parse("-iXIZZY");
    CHECK(p * PauliProduct::identity(5) == p);
    CHECK(PauliProduct::identity(5) * p == p);
}

TEST_CASE("string round trip and rendering") {
    for (const char* s : {"+XIZZY", "-YY", "+iZ", "-iXYZ", "+IIII"}) {
        CHECK(PauliProduct::parse(s).str() == s);
    }
    CHECK(PauliProduct::parse("XZ") == PauliProduct::parse("+XZ"));
}

TEST_CASE("weight counts non-identity letters") {
    CHECK(PauliProduct::parse("+XIZZY").weight() == 4);
    CHECK(PauliProduct::identity(7).weight() == 0);
    CHECK(PauliProduct::parse("+Y").weight() == 1);
}

TEST_CASE("size mismatch raises") {
    CHECK_THROWS_AS((void)(PauliProduct::identity(2) * PauliProduct::identity(3)),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)PauliProduct::identity(2).commutes_with(PauliProduct::identity(3)),
                    std::invalid_argument);
}

TEST_CASE("XX and ZZ commute, X and Z anticommute") {
    CHECK(PauliProduct::parse("+XX").commutes_with(PauliProduct::parse("+ZZ")));
    CHECK_FALSE(PauliProduct::parse("+X").commutes_with(PauliProduct::parse("+Z")));
}

TEST_CASE("every element squares to plus or minus identity") {
    RngStream rng(0xA11CE);
    for (int it = 0; it < 200; ++it) {
        const auto p = random_pauli(4, rng);
        const auto sq = p * p;
        CHECK(sq.same_letters(PauliProduct::identity(4)));
        const Phase ph = sq.phase();
        CHECK((ph == Phase::PlusOne || ph == Phase::MinusOne));
    }
}

TEST_CASE("1000 random products against the dense tensor oracle") {
    RngStream rng(0xBEEF);
    for (int it = 0; it < 1000; ++it) {
        const std::size_t n = 1 + rng.below(4);
        const auto a = random_pauli(n, rng);
        const auto b = random_pauli(n, rng);
        const auto prod = a * b;
        CHECK(mat_close(dense_pauli(prod), matmul(dense_pauli(a), dense_pauli(b))));
    }
}

TEST_CASE("random commutation against the dense oracle") {
    RngStream rng(0xC0FFEE);
    for (int it = 0; it < 400; ++it) {
        const std::size_t n = 1 + rng.below(4);
        const auto a = random_pauli(n, rng, false);
        const auto b = random_pauli(n, rng, false);
        const Mat ab = matmul(dense_pauli(a), dense_pauli(b));
        const Mat ba = matmul(dense_pauli(b), dense_pauli(a));
        CHECK(a.commutes_with(b) == mat_close(ab, ba));
    }
}

TEST_CASE("commutes agrees with equality of PQ and QP") {
    RngStream rng(0xFEED);
    for (int it = 0; it < 500; ++it) {
        const std::size_t n = 1 + rng.below(5);
        const auto p = random_pauli(n, rng);
        const auto q = random_pauli(n, rng);
        CHECK(p.commutes_with(q) == (p * q == q * p));
    }
}

TEST_CASE("associativity on random triples") {
    RngStream rng(0x5EED);
    for (int it = 0; it < 300; ++it) {
        const std::size_t n = 1 + rng.below(4);
        const auto a = random_pauli(n, rng);
        const auto b = random_pauli(n, rng);
        const auto c = random_pauli(n, rng);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("hermitian detection matches dense conjugate transpose") {
    RngStream rng(0xD06);
    for (int it = 0; it < 200; ++it) {
        const auto p = random_pauli(3, rng);
        const Mat m = dense_pauli(p);
        Mat mh(m.size(), std::vector<cplx>(m.size()));
        for (std::size_t i = 0; i < m.size(); ++i)
            for (std::size_t j = 0; j < m.size(); ++j) mh[i][j] = std::conj(m[j][i]);
        CHECK(p.hermitian() == mat_close(m, mh));
    }
}
