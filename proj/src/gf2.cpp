#include "topoqec/gf2.hpp"

namespace topoqec {

std::optional<BitVec> gf2_solve_columns(const std::vector<BitVec>& columns,
                                        std::size_t nrows, const BitVec& b) {
    const std::size_t ncols = columns.size();
    // Augmented rows: [column | unit coefficient vector], eliminated on the
    // row-index part so the coefficient part records the combination.
    std::vector<BitVec> basis;      // reduced column part
    std::vector<BitVec> combo;      // which original columns were combined
    std::vector<std::size_t> piv;

    BitVec rhs = b;
    BitVec rhs_combo(ncols);
    for (std::size_t c = 0; c < ncols; ++c) {
        BitVec col = columns[c];
        BitVec cc(ncols);
        cc.set(c);
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (col.test(piv[i])) {
                col ^= basis[i];
                cc ^= combo[i];
            }
        }
        const std::size_t p = col.lowest_set();
        if (p == nrows || !col.any()) continue;
        basis.push_back(std::move(col));
        combo.push_back(std::move(cc));
        piv.push_back(p);
    }
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (rhs.test(piv[i])) {
            rhs ^= basis[i];
            rhs_combo ^= combo[i];
        }
    }
    if (rhs.any()) return std::nullopt;
    return rhs_combo;
}

std::size_t gf2_rank(const std::vector<BitVec>& rows, std::size_t width) {
    Gf2Solver solver(rows, width);
    return solver.rank();
}

} // namespace topoqec
