#include "topoqec/css.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "topoqec/gf2.hpp"

namespace topoqec {

namespace {

PauliProduct row_to_pauli(const BitVec& row, std::size_t n, char letter) {
    PauliProduct p(n);
    for (auto j : row.set_bits()) p.set_letter(j, letter);
    return p;
}

std::vector<BitVec> rows_from_bits(const std::vector<std::vector<int>>& bits, std::size_t n) {
    std::vector<BitVec> rows;
    rows.reserve(bits.size());
    for (const auto& r : bits) {
        BitVec v(n);
        for (std::size_t j = 0; j < n; ++j)
            if (r[j]) v.set(j);
        rows.push_back(std::move(v));
    }
    return rows;
}

} // namespace

std::vector<PauliProduct> CssCode::x_generators() const {
    std::vector<PauliProduct> out;
    for (const auto& r : hx) out.push_back(row_to_pauli(r, n, 'X'));
    return out;
}

std::vector<PauliProduct> CssCode::z_generators() const {
    std::vector<PauliProduct> out;
    for (const auto& r : hz) out.push_back(row_to_pauli(r, n, 'Z'));
    return out;
}

CssCode build_css(std::vector<BitVec> hx, std::vector<BitVec> hz, std::size_t n) {
    for (std::size_t i = 0; i < hx.size(); ++i)
        for (std::size_t j = 0; j < hz.size(); ++j)
            if (BitVec::dot(hx[i], hz[j]))
                throw std::invalid_argument("Hx row " + std::to_string(i) + " and Hz row " +
                                            std::to_string(j) + " are not orthogonal");
    CssCode code;
    code.n = n;
    code.rank_hx = gf2_rank(hx, n);
    code.rank_hz = gf2_rank(hz, n);
    code.hx = std::move(hx);
    code.hz = std::move(hz);
    return code;
}

double WeightEnumerator::eval(double x, double y) const {
    double s = 0;
    for (std::size_t w = 0; w <= n; ++w)
        s += static_cast<double>(a[w]) * std::pow(x, static_cast<double>(n - w)) *
             std::pow(y, static_cast<double>(w));
    return s;
}

WeightEnumerator weight_enumerator(const std::vector<BitVec>& generators, std::size_t n) {
    Gf2Solver basis(generators, n);
    const std::size_t dim = basis.rank();
    if (dim > 24) throw std::invalid_argument("weight enumerator dimension above the 2^24 bound");
    WeightEnumerator w;
    w.n = n;
    w.a.assign(n + 1, 0);
    // Gray-code walk over the span.
    BitVec cur(n);
    w.a[0] += 1;
    std::uint32_t gray = 0;
    const std::uint32_t count = dim >= 32 ? 0 : (std::uint32_t(1) << dim);
    for (std::uint32_t i = 1; i < count; ++i) {
        const std::uint32_t g = i ^ (i >> 1);
        const std::uint32_t flip = g ^ gray;
        gray = g;
        cur ^= basis.rows()[static_cast<std::size_t>(__builtin_ctz(flip))];
        w.a[cur.popcount()] += 1;
    }
    return w;
}

WeightEnumerator macwilliams(const WeightEnumerator& w, std::int64_t v_size) {
    const std::size_t n = w.n;
    // Expand sum_w a_w (x+y)^(n-w) (x-y)^w and collect x^(n-k) y^k terms.
    std::vector<std::int64_t> out(n + 1, 0);
    // Binomial table.
    std::vector<std::vector<std::int64_t>> binom(n + 1, std::vector<std::int64_t>(n + 1, 0));
    for (std::size_t i = 0; i <= n; ++i) {
        binom[i][0] = 1;
        for (std::size_t j = 1; j <= i; ++j)
            binom[i][j] = binom[i - 1][j - 1] + (j <= i - 1 ? binom[i - 1][j] : 0);
    }
    for (std::size_t wt = 0; wt <= n; ++wt) {
        if (w.a[wt] == 0) continue;
        // (x+y)^(n-wt) contributes binom(n-wt, s) y^s; (x-y)^wt contributes
        // binom(wt, t) (-1)^t y^t.
        for (std::size_t s = 0; s <= n - wt; ++s) {
            for (std::size_t t = 0; t <= wt; ++t) {
                const std::size_t k = s + t;
                const std::int64_t sign = (t % 2 == 0) ? 1 : -1;
                out[k] += w.a[wt] * binom[n - wt][s] * binom[wt][t] * sign;
            }
        }
    }
    WeightEnumerator dual;
    dual.n = n;
    dual.a.assign(n + 1, 0);
    for (std::size_t k = 0; k <= n; ++k) {
        if (out[k] % v_size != 0)
            throw std::runtime_error("MacWilliams transform produced a non-integer coefficient");
        dual.a[k] = out[k] / v_size;
    }
    return dual;
}

const std::vector<BitVec>& reed_muller15_hx() {
    static const std::vector<BitVec> hx = rows_from_bits(
        {
            {1, 0, 0, 0, 0, 1, 1, 0, 0, 1, 1, 1, 1, 0, 1},
            {0, 1, 0, 0, 1, 0, 1, 0, 1, 0, 1, 1, 0, 1, 1},
            {0, 0, 1, 1, 0, 0, 1, 0, 1, 1, 0, 0, 1, 1, 1},
            {0, 0, 1, 0, 1, 1, 0, 1, 0, 0, 1, 0, 1, 1, 1},
        },
        15);
    return hx;
}

const std::vector<BitVec>& reed_muller15_hz() {
    // The Z-generator row space is pinned by the code structure: it is the
    // 10-dimensional space of even-weight vectors orthogonal to every Hx row
    // (the kernel of Hx extended by the all-ones row). A reduced-echelon
    // basis of that kernel is used; see the build notes for why the matrix
    // is derived rather than copied.
    static const std::vector<BitVec> hz = [] {
        const auto& hx = reed_muller15_hx();
        std::vector<BitVec> checks = hx;
        BitVec ones(15);
        for (std::size_t j = 0; j < 15; ++j) ones.set(j);
        checks.push_back(ones);
        // Kernel by elimination: columns of the check matrix.
        const std::size_t nc = checks.size();
        std::vector<BitVec> cols(15, BitVec(nc));
        for (std::size_t j = 0; j < 15; ++j)
            for (std::size_t i = 0; i < nc; ++i)
                if (checks[i].test(j)) cols[j].set(i);
        // Track combinations: reduce [col | e_j] rows.
        std::vector<BitVec> basis, combo;
        std::vector<std::size_t> piv;
        std::vector<BitVec> kernel;
        for (std::size_t j = 0; j < 15; ++j) {
            BitVec col = cols[j];
            BitVec cc(15);
            cc.set(j);
            for (std::size_t i = 0; i < basis.size(); ++i)
                if (col.test(piv[i])) {
                    col ^= basis[i];
                    cc ^= combo[i];
                }
            if (col.any()) {
                piv.push_back(col.lowest_set());
                basis.push_back(std::move(col));
                combo.push_back(std::move(cc));
            } else {
                kernel.push_back(std::move(cc));
            }
        }
        return kernel;
    }();
    return hz;
}

DistillPoint distill_curve(double p) {
    if (p < 0.0 || p > 0.5) throw std::domain_error("distillation input error rate out of [0, 1/2]");
    const double q = 1.0 - 2.0 * p;   // (1-2p)
    const double r = -q;              // (2p-1)
    const double pass = (1.0 + 15.0 * std::pow(q, 8)) / 16.0;
    const double joint = (1.0 + 15.0 * std::pow(r, 8) + 15.0 * std::pow(r, 7) + std::pow(r, 15)) / 32.0;
    return {pass, joint / pass};
}

DistillThreshold distill_threshold() {
    double lo = 1e-12, hi = 0.3;
    // p_out(p) - p changes sign on (0, 0.3).
    auto f = [](double p) { return distill_curve(p).p_out - p; };
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (f(mid) < 0)
            lo = mid;
        else
            hi = mid;
        if (hi - lo < 1e-9) break;
    }
    return {0.5 * (lo + hi), (1.0 - std::sqrt(2.0) / 2.0) / 2.0};
}

DistillCost distill_cost(double p, double eps) {
    if (eps <= 0) throw std::domain_error("target accuracy must be positive");
    const double pstar = distill_threshold().fixed_point;
    if (p >= pstar) throw std::domain_error("input error rate at or above the distillation fixed point");
    const double s = std::sqrt(35.0);
    // log of the error after l rounds: 3^l * log(s p) - log s.
    const double base = std::log(s * p);
    unsigned l = 0;
    double pow3 = 1.0;
    while (pow3 * base - std::log(s) > std::log(eps)) {
        ++l;
        pow3 *= 3.0;
        if (l > 60) throw std::runtime_error("distillation cost recursion failed to converge");
    }
    std::uint64_t states = 1;
    for (unsigned i = 0; i < l; ++i) states *= 15;
    const double estimate =
        std::pow(std::log(s * eps) / std::log(s * p), std::log(15.0) / std::log(3.0));
    return {l, states, estimate};
}

} // namespace topoqec
