#include "topoqec/tableau.hpp"

#include <algorithm>

#include "topoqec/gf2.hpp"

namespace topoqec {

StabilizerTableau StabilizerTableau::zero_state(std::size_t n) {
    StabilizerTableau t;
    t.n_ = n;
    t.gens_.reserve(n);
    t.destabs_.reserve(n);
    for (std::size_t q = 0; q < n; ++q) {
        t.gens_.push_back(PauliProduct::single(n, q, 'Z'));
        t.destabs_.push_back(PauliProduct::single(n, q, 'X'));
    }
    return t;
}

StabilizerTableau StabilizerTableau::plus_state(std::size_t n) {
    StabilizerTableau t;
    t.n_ = n;
    for (std::size_t q = 0; q < n; ++q) {
        t.gens_.push_back(PauliProduct::single(n, q, 'X'));
        t.destabs_.push_back(PauliProduct::single(n, q, 'Z'));
    }
    return t;
}

StabilizerTableau StabilizerTableau::graph_state(const Graph& g) {
    const std::size_t n = g.num_vertices();
    StabilizerTableau t;
    t.n_ = n;
    for (std::size_t i = 0; i < n; ++i) {
        PauliProduct k = PauliProduct::single(n, i, 'X');
        for (auto j : g.neighbors(i)) k *= PauliProduct::single(n, j, 'Z');
        t.gens_.push_back(std::move(k));
        t.destabs_.push_back(PauliProduct::single(n, i, 'Z'));
    }
    return t;
}

namespace {

// Symplectic inner product row for solving: <u, s> as a linear form over the
// 2n coordinates (x | z) of u is (z_s | x_s).
BitVec symplectic_form_row(const PauliProduct& s) {
    const std::size_t n = s.num_qubits();
    BitVec row(2 * n);
    for (std::size_t q = 0; q < n; ++q) {
        if (s.z_bit(q)) row.set(q);
        if (s.x_bit(q)) row.set(n + q);
    }
    return row;
}

PauliProduct pauli_from_symplectic(std::size_t n, const BitVec& u) {
    PauliProduct p(n);
    for (std::size_t q = 0; q < n; ++q) {
        const bool x = u.test(q), z = u.test(n + q);
        if (x && z) p.set_letter(q, 'Y');
        else if (x) p.set_letter(q, 'X');
        else if (z) p.set_letter(q, 'Z');
    }
    p.set_phase(Phase::PlusOne);
    return p;
}

} // namespace

PauliProduct StabilizerTableau::solve_destabilizer(
    const std::vector<PauliProduct>& against_anti,
    const std::vector<PauliProduct>& against_comm) const {
    // Find u with <u, a> = 1 for every a in against_anti and <u, c> = 0 for
    // every c in against_comm.
    std::vector<BitVec> rows;
    BitVec rhs(against_anti.size() + against_comm.size());
    std::size_t r = 0;
    for (const auto& a : against_anti) {
        rows.push_back(symplectic_form_row(a));
        rhs.set(r++);
    }
    for (const auto& c : against_comm) {
        rows.push_back(symplectic_form_row(c));
        ++r;
    }
    // Columns of the constraint matrix indexed by the 2n coordinates.
    const std::size_t ncoord = 2 * n_;
    std::vector<BitVec> cols(ncoord, BitVec(rows.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t c = 0; c < ncoord; ++c)
            if (rows[i].test(c)) cols[c].set(i);
    auto sol = gf2_solve_columns(cols, rows.size(), rhs);
    if (!sol) throw std::logic_error("destabilizer system inconsistent");
    return pauli_from_symplectic(n_, *sol);
}

StabilizerTableau StabilizerTableau::from_generators(std::size_t n,
                                                     std::vector<PauliProduct> gens) {
    StabilizerTableau t;
    t.n_ = n;
    std::vector<BitVec> symp_rows;
    for (const auto& g : gens) {
        if (g.num_qubits() != n) throw std::invalid_argument("generator qubit count mismatch");
        if (!g.hermitian()) throw std::invalid_argument("generator must be Hermitian");
        symp_rows.push_back(symplectic_form_row(g));
    }
    if (gf2_rank(symp_rows, 2 * n) != gens.size())
        throw std::invalid_argument("generators are not independent");
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j)
            if (!gens[i].commutes_with(gens[j]))
                throw std::invalid_argument("generators do not commute");

    t.gens_ = std::move(gens);
    // Destabilizer partners: anticommute with exactly one generator, then fix
    // mutual commutation by multiplying with earlier generators.
    for (std::size_t i = 0; i < t.gens_.size(); ++i) {
        std::vector<PauliProduct> anti = {t.gens_[i]};
        std::vector<PauliProduct> comm;
        for (std::size_t j = 0; j < t.gens_.size(); ++j)
            if (j != i) comm.push_back(t.gens_[j]);
        PauliProduct d = t.solve_destabilizer(anti, comm);
        for (std::size_t j = 0; j < t.destabs_.size(); ++j)
            if (!d.commutes_with(t.destabs_[j])) d *= t.gens_[j];
        d.set_phase(Phase::PlusOne);
        t.destabs_.push_back(std::move(d));
    }
    return t;
}

void StabilizerTableau::apply_h(std::size_t q) {
    if (q >= n_) throw std::out_of_range("qubit index out of range");
    for (auto& g : gens_) g.conj_h(q);
    for (auto& d : destabs_) d.conj_h(q);
}
void StabilizerTableau::apply_s(std::size_t q) {
    if (q >= n_) throw std::out_of_range("qubit index out of range");
    for (auto& g : gens_) g.conj_s(q);
    for (auto& d : destabs_) d.conj_s(q);
}
void StabilizerTableau::apply_sdg(std::size_t q) {
    if (q >= n_) throw std::out_of_range("qubit index out of range");
    for (auto& g : gens_) g.conj_sdg(q);
    for (auto& d : destabs_) d.conj_sdg(q);
}
void StabilizerTableau::apply_x(std::size_t q) {
    if (q >= n_) throw std::out_of_range("qubit index out of range");
    for (auto& g : gens_) g.conj_x(q);
    for (auto& d : destabs_) d.conj_x(q);
}
void StabilizerTableau::apply_y(std::size_t q) {
    if (q >= n_) throw std::out_of_range("qubit index out of range");
    for (auto& g : gens_) g.conj_y(q);
    for (auto& d : destabs_) d.conj_y(q);
}
void StabilizerTableau::apply_z(std::size_t q) {
    if (q >= n_) throw std::out_of_range("qubit index out of range");
    for (auto& g : gens_) g.conj_z(q);
    for (auto& d : destabs_) d.conj_z(q);
}
void StabilizerTableau::apply_cnot(std::size_t c, std::size_t t) {
    if (c >= n_ || t >= n_) throw std::out_of_range("qubit index out of range");
    if (c == t) throw std::invalid_argument("CNOT control equals target");
    for (auto& g : gens_) g.conj_cnot(c, t);
    for (auto& d : destabs_) d.conj_cnot(c, t);
}
void StabilizerTableau::apply_cz(std::size_t a, std::size_t b) {
    if (a >= n_ || b >= n_) throw std::out_of_range("qubit index out of range");
    if (a == b) throw std::invalid_argument("CZ targets must be distinct");
    for (auto& g : gens_) g.conj_cz(a, b);
    for (auto& d : destabs_) d.conj_cz(a, b);
}

MeasureOutcome StabilizerTableau::measure(const PauliProduct& p, RngStream& rng,
                                          PauliProduct* kicked) {
    return measure_impl(p, nullptr, &rng, kicked);
}

MeasureOutcome StabilizerTableau::measure_forced(const PauliProduct& p, int forced,
                                                 PauliProduct* kicked) {
    return measure_impl(p, &forced, nullptr, kicked);
}

MeasureOutcome StabilizerTableau::measure_impl(const PauliProduct& p, int* forced,
                                               RngStream* rng, PauliProduct* kicked) {
    if (p.num_qubits() != n_) throw std::invalid_argument("measurement size mismatch");
    if (!p.hermitian()) throw std::invalid_argument("measured Pauli product must be Hermitian");

    std::size_t q = gens_.size();
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (!gens_[i].commutes_with(p)) { q = i; break; }
    }
    if (q < gens_.size()) {
        // Case (ii): replace the anticommuting generator.
        const int m = forced ? (*forced & 1) : static_cast<int>(rng->next_u64() & 1);
        const PauliProduct s = gens_[q];
        if (kicked) *kicked = s;
        for (std::size_t i = 0; i < gens_.size(); ++i)
            if (i != q && !gens_[i].commutes_with(p)) gens_[i] *= s;
        for (auto& d : destabs_)
            if (!d.commutes_with(p)) d *= s;
        destabs_[q] = s;
        destabs_[q].set_phase(Phase::PlusOne);
        gens_[q] = p;
        if (m) gens_[q].negate();
        return {m, false};
    }

    // p commutes with every generator: decompose via destabilizer pairings.
    PauliProduct acc = PauliProduct::identity(n_);
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (!destabs_[i].commutes_with(p)) acc *= gens_[i];
    if (acc.same_letters(p)) {
        // Case (i): +p or -p is a stabilizer; outcome fixed, state unchanged.
        const int m = (acc.phase() == p.phase()) ? 0 : 1;
        return {m, true};
    }

    // Undetermined direction of a subspace tableau: the group is extended.
    const int m = forced ? (*forced & 1) : static_cast<int>(rng->next_u64() & 1);
    std::vector<PauliProduct> anti = {p};
    std::vector<PauliProduct> comm = gens_;
    comm.insert(comm.end(), destabs_.begin(), destabs_.end());
    PauliProduct d = solve_destabilizer(anti, comm);
    PauliProduct g = p;
    if (m) g.negate();
    gens_.push_back(std::move(g));
    destabs_.push_back(std::move(d));
    return {m, false};
}

std::vector<PauliProduct> StabilizerTableau::canonical() const {
    std::vector<PauliProduct> rows = gens_;
    std::size_t r = 0;
    for (std::size_t col = 0; col < 2 * n_ && r < rows.size(); ++col) {
        const bool xblock = col < n_;
        const std::size_t q = xblock ? col : col - n_;
        std::size_t pivot = rows.size();
        for (std::size_t i = r; i < rows.size(); ++i) {
            const bool bit = xblock ? rows[i].x_bit(q) : rows[i].z_bit(q);
            if (bit) { pivot = i; break; }
        }
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r) continue;
            const bool bit = xblock ? rows[i].x_bit(q) : rows[i].z_bit(q);
            if (bit) rows[i] *= rows[r];
        }
        ++r;
    }
    return rows;
}

bool StabilizerTableau::contains_up_to_sign(const PauliProduct& p, int& sign_out) const {
    if (p.num_qubits() != n_) throw std::invalid_argument("membership size mismatch");
    PauliProduct acc = PauliProduct::identity(n_);
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (!destabs_[i].commutes_with(p)) acc *= gens_[i];
    if (!acc.same_letters(p)) return false;
    sign_out = (acc.phase() == p.phase()) ? 0 : 1;
    return true;
}

bool StabilizerTableau::contains(const PauliProduct& p) const {
    int sign = 0;
    return contains_up_to_sign(p, sign) && sign == 0;
}

bool StabilizerTableau::same_group(const StabilizerTableau& other) const {
    if (n_ != other.n_ || gens_.size() != other.gens_.size()) return false;
    const auto a = canonical();
    const auto b = other.canonical();
    return a == b;
}

void StabilizerTableau::check_invariants() const {
    std::vector<BitVec> rows;
    for (const auto& g : gens_) {
        if (!g.hermitian()) throw std::logic_error("tableau generator not Hermitian");
        rows.push_back(symplectic_form_row(g));
    }
    if (gf2_rank(rows, 2 * n_) != gens_.size())
        throw std::logic_error("tableau generators dependent");
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        for (std::size_t j = i + 1; j < gens_.size(); ++j)
            if (!gens_[i].commutes_with(gens_[j]))
                throw std::logic_error("tableau generators do not commute");
        for (std::size_t j = 0; j < gens_.size(); ++j) {
            const bool anti = !destabs_[i].commutes_with(gens_[j]);
            if (anti != (i == j)) throw std::logic_error("destabilizer pairing broken");
        }
        for (std::size_t j = i + 1; j < destabs_.size(); ++j)
            if (!destabs_[i].commutes_with(destabs_[j]))
                throw std::logic_error("destabilizers do not commute");
    }
}

} // namespace topoqec
