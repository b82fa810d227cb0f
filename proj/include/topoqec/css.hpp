#pragma once

#include <cstdint>
#include <vector>

#include "topoqec/bits.hpp"
#include "topoqec/pauli.hpp"

namespace topoqec {

/// CSS code built from two GF(2) parity-check matrices with Hx Hz^T = 0.
struct CssCode {
    std::size_t n = 0;
    std::vector<BitVec> hx; // rows define X-type generators
    std::vector<BitVec> hz; // rows define Z-type generators
    std::size_t rank_hx = 0;
    std::size_t rank_hz = 0;

    std::size_t num_logical() const { return n - rank_hx - rank_hz; }

    std::vector<PauliProduct> x_generators() const;
    std::vector<PauliProduct> z_generators() const;
};

/// Validates Hx Hz^T = 0 and assembles the code. Throws std::invalid_argument
/// naming the first offending row pair on an orthogonality violation.
CssCode build_css(std::vector<BitVec> hx, std::vector<BitVec> hz, std::size_t n);

/// W_V(x, y) = sum over codewords of x^(n-wt) y^wt, stored as the coefficient
/// a_w of x^(n-w) y^w for w = 0..n. Coefficients are exact integers.
struct WeightEnumerator {
    std::size_t n = 0;
    std::vector<std::int64_t> a;

    std::int64_t total() const {
        std::int64_t s = 0;
        for (auto v : a) s += v;
        return s;
    }
    double eval(double x, double y) const;
};

/// Exact enumeration of the span of the given generator rows (dim <= 24).
WeightEnumerator weight_enumerator(const std::vector<BitVec>& generators, std::size_t n);

/// MacWilliams transform: W_perp(x, y) = W(x+y, x-y) / |V|, expanded to
/// integer coefficients. Throws if a coefficient fails to divide evenly.
WeightEnumerator macwilliams(const WeightEnumerator& w, std::int64_t v_size);

// --- 15-qubit Reed-Muller distillation analytics ---

/// Parity-check matrices of the [[15,1,3]] punctured Reed-Muller code.
const std::vector<BitVec>& reed_muller15_hx();
const std::vector<BitVec>& reed_muller15_hz();

struct DistillPoint {
    double p_pass;
    double p_out;
};

/// Closed-form pass probability and conditional output error of one
/// distillation round at input Z-error rate p.
DistillPoint distill_curve(double p);

struct DistillThreshold {
    double fixed_point;        // p with p_out(p) = p, bisected to 1e-9
    double octahedron_bound;   // (1 - sqrt(2)/2) / 2
};

DistillThreshold distill_threshold();

struct DistillCost {
    unsigned rounds;             // minimal l with (sqrt(35) p)^(3^l)/sqrt(35) <= eps
    std::uint64_t states;        // 15^l
    double closed_form_estimate; // [log(sqrt(35) eps)/log(sqrt(35) p)]^(log15/log3)
};

/// Throws std::domain_error if p is at or above the fixed point.
DistillCost distill_cost(double p, double eps);

} // namespace topoqec
