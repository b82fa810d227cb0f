#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "topoqec/bits.hpp"

namespace topoqec {

/// Row-echelon solver over GF(2). Rows are bit vectors of a fixed width.
/// Built once, then answers rank / membership / solve queries in
/// O(rank * width / 64) each.
class Gf2Solver {
public:
    Gf2Solver() = default;

    /// Reduces the given rows to row echelon form (lowest pivot column first).
    explicit Gf2Solver(std::vector<BitVec> rows, std::size_t width) : width_(width) {
        for (auto& r : rows) insert_row(std::move(r));
    }

    std::size_t width() const { return width_; }
    std::size_t rank() const { return rows_.size(); }

    /// Adds one row to the echelon basis; returns true if it increased the rank.
    bool insert_row(BitVec r) {
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (r.test(pivots_[i])) r ^= rows_[i];
        const std::size_t p = r.lowest_set();
        if (p == width_ || !r.any()) return false;
        // keep rows ordered by pivot column
        std::size_t at = 0;
        while (at < pivots_.size() && pivots_[at] < p) ++at;
        rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(at), std::move(r));
        pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(at), p);
        return true;
    }

    /// True iff b lies in the row space.
    bool in_span(BitVec b) const {
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (b.test(pivots_[i])) b ^= rows_[i];
        return !b.any();
    }

    /// Reduces b against the basis and returns the remainder.
    BitVec reduce(BitVec b) const {
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (b.test(pivots_[i])) b ^= rows_[i];
        return b;
    }

    const std::vector<BitVec>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

private:
    std::size_t width_ = 0;
    std::vector<BitVec> rows_;
    std::vector<std::size_t> pivots_;
};

/// Solves A x = b over GF(2) where A is given by columns. Returns a solution
/// as a set bit per used column, or nullopt if inconsistent.
std::optional<BitVec> gf2_solve_columns(const std::vector<BitVec>& columns,
                                        std::size_t nrows, const BitVec& b);

/// Rank of a list of rows of the given width.
std::size_t gf2_rank(const std::vector<BitVec>& rows, std::size_t width);

} // namespace topoqec
