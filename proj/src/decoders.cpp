#include "topoqec/decoders.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "topoqec/gf2.hpp"

namespace topoqec {

namespace {

struct SiteGeom {
    long long row = 0, col = 0;
};

// Coordinates of a defect site: vertices for the Z basis (and the bit-flip
// code), faces for the X basis on toric/planar codes.
SiteGeom site_coords(const SurfaceCodeLayout& code, char basis, std::size_t site) {
    const std::size_t n = code.n;
    SiteGeom g;
    switch (code.kind) {
        case CodeKind::Toric:
            g.row = static_cast<long long>(site / n);
            g.col = static_cast<long long>(site % n);
            break;
        case CodeKind::Planar:
            if (basis == 'Z') {
                g.row = static_cast<long long>(site / (n - 1));
                g.col = static_cast<long long>(site % (n - 1));
            } else {
                g.row = static_cast<long long>(site / n);
                g.col = static_cast<long long>(site % n);
            }
            break;
        case CodeKind::Bitflip:
            g.row = 0;
            g.col = static_cast<long long>(site);
            break;
    }
    return g;
}

long long wrap_dist(long long a, long long b, long long n) {
    long long d = std::llabs(a - b);
    return std::min(d, n - d);
}

long long site_distance(const SurfaceCodeLayout& code, char basis, std::size_t a, std::size_t b) {
    const auto ga = site_coords(code, basis, a);
    const auto gb = site_coords(code, basis, b);
    const long long n = static_cast<long long>(code.n);
    switch (code.kind) {
        case CodeKind::Toric:
            return wrap_dist(ga.row, gb.row, n) + wrap_dist(ga.col, gb.col, n);
        case CodeKind::Planar:
            return std::llabs(ga.row - gb.row) + std::llabs(ga.col - gb.col);
        case CodeKind::Bitflip:
            return wrap_dist(ga.col, gb.col, n);
    }
    return 0;
}

// Distance from a defect to its nearest admissible boundary (planar only).
long long boundary_distance(const SurfaceCodeLayout& code, char basis, std::size_t site) {
    const long long n = static_cast<long long>(code.n);
    const auto g = site_coords(code, basis, site);
    if (basis == 'Z') return std::min(g.col + 1, n - 1 - g.col); // rough left/right
    return std::min(g.row + 1, n - 1 - g.row);                   // smooth top/bottom
}

// Deterministic row-then-column path between two sites, XORed into `bits`.
// Ties in the wrap direction go toward increasing index.
void xor_path(const SurfaceCodeLayout& code, char basis, std::size_t a, std::size_t b,
              BitVec& bits) {
    const long long n = static_cast<long long>(code.n);
    auto ga = site_coords(code, basis, a);
    const auto gb = site_coords(code, basis, b);
    const bool toric = code.kind == CodeKind::Toric;

    if (code.kind == CodeKind::Bitflip) {
        long long fwd = ((gb.col - ga.col) % n + n) % n;
        long long bwd = n - fwd;
        if (fwd == 0) return;
        if (fwd <= bwd) {
            for (long long c = ga.col; c != gb.col; c = (c + 1) % n) bits.flip(static_cast<std::size_t>(c));
        } else {
            for (long long c = ga.col; c != gb.col; c = (c + n - 1) % n)
                bits.flip(static_cast<std::size_t>((c + n - 1) % n));
        }
        return;
    }

    auto step_row = [&](long long r, long long c, bool down) -> std::size_t {
        // Edge crossed when moving between row r and row r+1 (down) or r-1 (up).
        if (code.kind == CodeKind::Toric) {
            if (basis == 'Z') return torus_vedge(code.n, static_cast<std::size_t>(down ? r : r - 1 + n), static_cast<std::size_t>(c));
            return torus_hedge(code.n, static_cast<std::size_t>(down ? r + 1 : r), static_cast<std::size_t>(c));
        }
        if (basis == 'Z') { // vertical edge w(r, i), between v(r, i) and v(r+1, i)
            const std::size_t rr = static_cast<std::size_t>(down ? r : r - 1);
            return code.n * code.n + rr * (code.n - 1) + static_cast<std::size_t>(c);
        }
        // dual: crossing h(r+1, j) down or h(r, j) up
        const std::size_t rr = static_cast<std::size_t>(down ? r + 1 : r);
        return rr * code.n + static_cast<std::size_t>(c);
    };
    auto step_col = [&](long long r, long long c, bool right) -> std::size_t {
        if (code.kind == CodeKind::Toric) {
            if (basis == 'Z') return torus_hedge(code.n, static_cast<std::size_t>(r), static_cast<std::size_t>(right ? c : c - 1 + n));
            return torus_vedge(code.n, static_cast<std::size_t>(r), static_cast<std::size_t>(right ? c + 1 : c));
        }
        if (basis == 'Z') { // horizontal edge h(r, c+1) right of v(r, c)
            const std::size_t cc = static_cast<std::size_t>(right ? c + 1 : c);
            return static_cast<std::size_t>(r) * code.n + cc;
        }
        // dual: crossing w(r, j) right or w(r, j-1) left
        const std::size_t cc = static_cast<std::size_t>(right ? c : c - 1);
        return code.n * code.n + static_cast<std::size_t>(r) * (code.n - 1) + cc;
    };

    // rows first
    long long dr = gb.row - ga.row;
    bool down = dr > 0;
    long long steps = std::llabs(dr);
    if (toric) {
        const long long fwd = ((dr % n) + n) % n;
        if (fwd <= n - fwd) {
            down = true;
            steps = fwd;
        } else {
            down = false;
            steps = n - fwd;
        }
    }
    long long r = ga.row, c = ga.col;
    for (long long i = 0; i < steps; ++i) {
        bits.flip(step_row(r, c, down));
        r += down ? 1 : -1;
        if (toric) r = ((r % n) + n) % n;
    }
    long long dc = gb.col - c;
    bool right = dc > 0;
    steps = std::llabs(dc);
    if (toric) {
        const long long fwd = ((dc % n) + n) % n;
        if (fwd <= n - fwd) {
            right = true;
            steps = fwd;
        } else {
            right = false;
            steps = n - fwd;
        }
    }
    for (long long i = 0; i < steps; ++i) {
        bits.flip(step_col(r, c, right));
        c += right ? 1 : -1;
        if (toric) c = ((c % n) + n) % n;
    }
}

// Path from a defect to its nearest boundary (planar). Ties go to the
// low-index side.
void xor_boundary_path(const SurfaceCodeLayout& code, char basis, std::size_t site, BitVec& bits) {
    const long long n = static_cast<long long>(code.n);
    const auto g = site_coords(code, basis, site);
    if (basis == 'Z') {
        const long long left = g.col + 1, right = n - 1 - g.col;
        if (left <= right) {
            for (long long c = 0; c <= g.col; ++c)
                bits.flip(static_cast<std::size_t>(g.row) * code.n + static_cast<std::size_t>(c));
        } else {
            for (long long c = g.col + 1; c < n; ++c)
                bits.flip(static_cast<std::size_t>(g.row) * code.n + static_cast<std::size_t>(c));
        }
    } else {
        const long long up = g.row + 1, down = n - 1 - g.row;
        if (up <= down) {
            for (long long r = 0; r <= g.row; ++r)
                bits.flip(static_cast<std::size_t>(r) * code.n + static_cast<std::size_t>(g.col));
        } else {
            for (long long r = g.row + 1; r < n; ++r)
                bits.flip(static_cast<std::size_t>(r) * code.n + static_cast<std::size_t>(g.col));
        }
    }
}

std::vector<std::size_t> defect_sites(const SurfaceCodeLayout& code, const Syndrome& syndrome,
                                      char basis) {
    if (code.kind == CodeKind::Bitflip || basis == 'Z') return syndrome.vertex_flags.set_bits();
    return syndrome.face_flags.set_bits();
}

} // namespace

void DecodeResult::classify(const SurfaceCodeLayout& code, const Chain& true_error, char basis) {
    Chain net = true_error;
    net ^= recovery;
    residual = residual_class(code, net, basis);
    success = residual->trivial();
}

MatchingGraph build_matching_graph(const SurfaceCodeLayout& code, const Syndrome& syndrome,
                                   char basis) {
    const auto sites = defect_sites(code, syndrome, basis);
    const bool planar = code.kind == CodeKind::Planar;
    const std::size_t nd = sites.size();
    if (!planar && nd % 2 != 0)
        throw std::invalid_argument("syndrome has odd parity on a closed surface");
    MatchingGraph g = MatchingGraph::complete(planar ? 2 * nd : nd);
    for (std::size_t i = 0; i < nd; ++i) {
        const auto gc = site_coords(code, basis, sites[i]);
        g.nodes[i] = {gc.col, gc.row, 0, false, sites[i]};
        if (planar) g.nodes[nd + i] = {gc.col, gc.row, 0, true, sites[i]};
    }
    for (std::size_t i = 0; i < nd; ++i)
        for (std::size_t j = i + 1; j < nd; ++j)
            g.set_weight(i, j, site_distance(code, basis, sites[i], sites[j]));
    if (planar) {
        std::vector<long long> bdist(nd);
        for (std::size_t i = 0; i < nd; ++i) bdist[i] = boundary_distance(code, basis, sites[i]);
        for (std::size_t i = 0; i < nd; ++i) {
            for (std::size_t j = 0; j < nd; ++j) {
                if (i == j) {
                    g.set_weight(i, nd + j, bdist[j]);
                } else {
                    g.set_weight(i, nd + j,
                                 bdist[j] + site_distance(code, basis, sites[i], sites[j]));
                }
            }
        }
        // virtual-virtual edges are free
        for (std::size_t i = 0; i < nd; ++i)
            for (std::size_t j = i + 1; j < nd; ++j) g.set_weight(nd + i, nd + j, 0);
    }
    return g;
}

DecodeResult decode_2d(const SurfaceCodeLayout& code, const Syndrome& syndrome, char basis) {
    DecodeResult out;
    const auto sites = defect_sites(code, syndrome, basis);
    const std::size_t nd = sites.size();
    out.graph = build_matching_graph(code, syndrome, basis);
    out.matching = mwpm(out.graph);
    out.recovery = code.zero_error(basis);
    for (auto [i, j] : out.matching) {
        const bool iv = i >= nd, jv = j >= nd;
        if (iv && jv) continue;
        if (!iv && !jv) {
            xor_path(code, basis, sites[i], sites[j], out.recovery.bits);
        } else {
            const std::size_t real = iv ? j : i;
            const std::size_t virt = (iv ? i : j) - nd;
            if (real != virt) xor_path(code, basis, sites[real], sites[virt], out.recovery.bits);
            xor_boundary_path(code, basis, sites[virt], out.recovery.bits);
        }
    }
    return out;
}

DecodeResult decode_3d(const SurfaceCodeLayout& code, const std::vector<BitVec>& s,
                       const NoiseModel& model) {
    if (code.kind != CodeKind::Toric)
        throw std::invalid_argument("space-time decoding is implemented for the toric code");
    if (model.kind != NoiseKind::Phenomenological)
        throw std::invalid_argument("space-time decoding expects the phenomenological model");
    if (s.empty()) throw std::invalid_argument("no syndrome rounds");
    struct Node {
        std::size_t site, t;
    };
    std::vector<Node> nodes;
    for (std::size_t t = 0; t < s.size(); ++t)
        for (auto v : s[t].set_bits()) nodes.push_back({v, t});
    DecodeResult out;
    out.recovery = code.zero_error('Z');
    const std::size_t nd = nodes.size();
    if (nd % 2 != 0) throw std::invalid_argument("space-time syndrome has odd parity");

    const bool uniform = model.p_data == model.p_meas && model.p_data > 0;
    const long long kForbid = 1LL << 40;
    const long long kScale = 512;
    double jd = 0, jm = 0;
    if (!uniform && model.p_data > 0 && model.p_meas > 0) {
        jd = coupling_from_p(model.p_data);
        jm = coupling_from_p(model.p_meas);
    }
    MatchingGraph g = MatchingGraph::complete(nd);
    for (std::size_t i = 0; i < nd; ++i) {
        const auto gc = site_coords(code, 'Z', nodes[i].site);
        g.nodes[i] = {gc.col, gc.row, static_cast<long long>(nodes[i].t), false, nodes[i].site};
    }
    for (std::size_t i = 0; i < nd; ++i) {
        for (std::size_t j = i + 1; j < nd; ++j) {
            const long long ds = site_distance(code, 'Z', nodes[i].site, nodes[j].site);
            const long long dt =
                std::llabs(static_cast<long long>(nodes[i].t) - static_cast<long long>(nodes[j].t));
            long long w;
            if (uniform) {
                w = ds + dt;
            } else if (model.p_meas == 0) {
                w = dt == 0 ? ds : kForbid + ds + dt;
            } else if (model.p_data == 0) {
                w = ds == 0 ? dt : kForbid + ds + dt;
            } else {
                w = std::llround(static_cast<double>(kScale) * (jd * static_cast<double>(ds) +
                                                                jm * static_cast<double>(dt)));
            }
            g.set_weight(i, j, w);
        }
    }
    out.graph = g;
    out.matching = mwpm(out.graph);
    for (auto [i, j] : out.matching)
        xor_path(code, 'Z', nodes[i].site, nodes[j].site, out.recovery.bits);
    return out;
}

// --- maximum-likelihood decoding ---

MlDecoder::MlDecoder(const SurfaceCodeLayout& code) : code_(code) {
    if (code.num_qubits > 32)
        throw std::invalid_argument("ML decoding limited to 32 qubits");
    if (code.z_span.rank() > 20)
        throw std::invalid_argument("ML decoding limited to 20 independent generators");
    auto to_mask = [](const BitVec& b) {
        std::uint32_t m = 0;
        for (auto i : b.set_bits()) m |= std::uint32_t(1) << i;
        return m;
    };
    // Full Z-stabilizer group by Gray-code walk over the independent chains.
    const auto& rows = code.z_span.rows();
    group_.resize(std::size_t(1) << rows.size());
    std::uint32_t cur = 0, gray = 0;
    group_[0] = 0;
    for (std::uint32_t i = 1; i < group_.size(); ++i) {
        const std::uint32_t gnew = i ^ (i >> 1);
        cur ^= to_mask(rows[static_cast<std::size_t>(__builtin_ctz(gnew ^ gray))]);
        gray = gnew;
        group_[i] = cur;
    }
    const unsigned ncls = 1u << code.z_logicals.size();
    logicals_.resize(ncls, 0);
    for (unsigned cls = 0; cls < ncls; ++cls)
        for (std::size_t i = 0; i < code.z_logicals.size(); ++i)
            if (cls & (1u << i)) logicals_[cls] ^= to_mask(code.z_logicals[i]);
}

Chain MlDecoder::reference_recovery(const Syndrome& syndrome) const {
    const auto sites = syndrome.vertex_flags.set_bits();
    Chain r = code_.zero_error('Z');
    std::size_t i = 0;
    for (; i + 1 < sites.size(); i += 2) xor_path(code_, 'Z', sites[i], sites[i + 1], r.bits);
    if (i < sites.size()) {
        if (code_.kind != CodeKind::Planar)
            throw std::invalid_argument("odd syndrome parity on a closed surface");
        xor_boundary_path(code_, 'Z', sites[i], r.bits);
    }
    return r;
}

MlDecoder::Result MlDecoder::decode(const Syndrome& syndrome, double p) const {
    const Chain ref = reference_recovery(syndrome);
    std::uint32_t ref_mask = 0;
    for (auto e : ref.bits.set_bits()) ref_mask |= std::uint32_t(1) << e;

    const std::size_t nq = code_.num_qubits;
    std::vector<double> pw(nq + 1);
    for (std::size_t w = 0; w <= nq; ++w)
        pw[w] = std::pow(p, static_cast<double>(w)) * std::pow(1 - p, static_cast<double>(nq - w));

    Result res;
    res.posteriors.assign(logicals_.size(), 0.0);
    for (std::size_t cls = 0; cls < logicals_.size(); ++cls) {
        const std::uint32_t base = ref_mask ^ logicals_[cls];
        double acc = 0;
        for (const std::uint32_t gmask : group_)
            acc += pw[static_cast<std::size_t>(__builtin_popcount(base ^ gmask))];
        res.posteriors[cls] = acc;
    }
    double total = 0;
    for (double v : res.posteriors) total += v;
    for (double& v : res.posteriors) v /= total;
    // Argmax with the lowest class index on ties; the tolerance keeps exact
    // symmetry ties stable against summation order.
    res.cls = 0;
    for (unsigned cls = 1; cls < res.posteriors.size(); ++cls)
        if (res.posteriors[cls] > res.posteriors[res.cls] * (1.0 + 1e-12)) res.cls = cls;
    res.recovery = ref;
    if (res.cls) {
        for (std::size_t i = 0; i < code_.z_logicals.size(); ++i)
            if (res.cls & (1u << i)) res.recovery.bits ^= code_.z_logicals[i];
    }
    return res;
}

// --- concatenated codes ---

BlockCode BlockCode::from_fixture(const CodeFixture& f) {
    BlockCode b;
    b.n = f.n;
    for (const auto& g : f.generators) {
        if (!g.x_bits().any() && g.z_bits().any()) b.checks.push_back(g.z_bits());
        if (g.x_bits().any() && !g.z_bits().any()) b.stabilizers.push_back(g.x_bits());
        if (g.x_bits().any() && g.z_bits().any())
            throw std::invalid_argument("concatenation requires CSS-type generators");
    }
    if (f.logical_x.size() != 1)
        throw std::invalid_argument("concatenation requires exactly one logical qubit");
    b.logical = f.logical_x[0].x_bits();
    return b;
}

ConcatenatedCode make_concatenated(const CodeFixture& fixture, unsigned levels) {
    if (levels < 1) throw std::invalid_argument("at least one concatenation level required");
    return ConcatenatedCode{BlockCode::from_fixture(fixture), levels};
}

std::size_t ConcatenatedCode::blocks_at_level(unsigned k) const {
    std::size_t b = 1;
    for (unsigned i = k; i < levels; ++i) b *= inner.n;
    return b;
}

std::size_t ConcatenatedCode::physical_qubits() const { return blocks_at_level(0); }

namespace {

// Pure error for check i: a pattern flipping exactly syndrome bit i.
std::vector<BitVec> pure_errors(const BlockCode& b) {
    std::vector<BitVec> out;
    const std::size_t nc = b.checks.size();
    std::vector<BitVec> cols(b.n, BitVec(nc));
    for (std::size_t j = 0; j < b.n; ++j)
        for (std::size_t i = 0; i < nc; ++i)
            if (b.checks[i].test(j)) cols[j].set(i);
    for (std::size_t i = 0; i < nc; ++i) {
        BitVec target(nc);
        target.set(i);
        auto sol = gf2_solve_columns(cols, nc, target);
        if (!sol) throw std::logic_error("block checks are not independent");
        out.push_back(*sol);
    }
    return out;
}

// Witness w with <w, logical> = 1 and <w, stab> = 0 for every X stabilizer:
// extracts the logical coset bit of a pattern relative to R(S).
BitVec logical_witness(const BlockCode& b) {
    std::vector<BitVec> cols(b.n, BitVec(1 + b.stabilizers.size()));
    for (std::size_t j = 0; j < b.n; ++j) {
        if (b.logical.test(j)) cols[j].set(0);
        for (std::size_t i = 0; i < b.stabilizers.size(); ++i)
            if (b.stabilizers[i].test(j)) cols[j].set(1 + i);
    }
    BitVec target(1 + b.stabilizers.size());
    target.set(0);
    auto sol = gf2_solve_columns(cols, 1 + b.stabilizers.size(), target);
    if (!sol) throw std::logic_error("logical operator lies in the stabilizer span");
    return *sol;
}

} // namespace

ConcatenatedSyndromes concatenated_syndromes(const ConcatenatedCode& cc, const BitVec& error) {
    if (error.size() != cc.physical_qubits())
        throw std::invalid_argument("error pattern size mismatch");
    const BlockCode& b = cc.inner;
    const auto pe = pure_errors(b);
    const BitVec witness = logical_witness(b);
    ConcatenatedSyndromes out;
    std::vector<int> level_bits(error.size());
    for (std::size_t i = 0; i < error.size(); ++i) level_bits[i] = error.test(i);
    for (unsigned k = 1; k <= cc.levels; ++k) {
        const std::size_t blocks = cc.blocks_at_level(k);
        std::vector<int> syn;
        std::vector<int> next(blocks);
        for (std::size_t blk = 0; blk < blocks; ++blk) {
            BitVec pattern(b.n);
            for (std::size_t j = 0; j < b.n; ++j)
                if (level_bits[blk * b.n + j]) pattern.set(j);
            BitVec r(b.n);
            for (std::size_t i = 0; i < b.checks.size(); ++i) {
                const int bit = BitVec::dot(b.checks[i], pattern);
                syn.push_back(bit);
                if (bit) r ^= pe[i];
            }
            next[blk] = BitVec::dot(pattern ^ r, witness);
        }
        out.levels.push_back(std::move(syn));
        level_bits = std::move(next);
    }
    out.top_logical = level_bits[0];
    return out;
}

BpResult bp_decode(const ConcatenatedCode& cc, const std::vector<std::vector<int>>& syndromes,
                   double p) {
    if (syndromes.size() != cc.levels)
        throw std::invalid_argument("one syndrome vector per level required");
    const BlockCode& b = cc.inner;
    const auto pe = pure_errors(b);
    const std::size_t nstab = b.stabilizers.size();
    if (nstab > 20) throw std::invalid_argument("stabilizer enumeration too large");

    // Leaf messages: independent physical error probabilities.
    std::vector<std::array<double, 2>> msg(cc.physical_qubits(), {1.0 - p, p});
    for (unsigned k = 1; k <= cc.levels; ++k) {
        const std::size_t blocks = cc.blocks_at_level(k);
        if (syndromes[k - 1].size() != blocks * b.checks.size())
            throw std::invalid_argument("syndrome vector length mismatch");
        std::vector<std::array<double, 2>> next(blocks);
        for (std::size_t blk = 0; blk < blocks; ++blk) {
            BitVec r(b.n);
            for (std::size_t i = 0; i < b.checks.size(); ++i)
                if (syndromes[k - 1][blk * b.checks.size() + i]) r ^= pe[i];
            double prob[2] = {0, 0};
            const std::size_t combos = std::size_t(1) << nstab;
            for (std::size_t sc = 0; sc < combos; ++sc) {
                BitVec base = r;
                for (std::size_t i = 0; i < nstab; ++i)
                    if (sc & (std::size_t(1) << i)) base ^= b.stabilizers[i];
                for (int l = 0; l < 2; ++l) {
                    BitVec pattern = base;
                    if (l) pattern ^= b.logical;
                    double w = 1.0;
                    for (std::size_t j = 0; j < b.n; ++j)
                        w *= msg[blk * b.n + j][pattern.test(j) ? 1 : 0];
                    prob[l] += w;
                }
            }
            const double tot = prob[0] + prob[1];
            next[blk] = {prob[0] / tot, prob[1] / tot};
        }
        msg = std::move(next);
    }
    BpResult res;
    res.posterior[0] = msg[0][0];
    res.posterior[1] = msg[0][1];
    res.logical = msg[0][1] > msg[0][0] ? 1 : 0;
    return res;
}

ConcatAnalytics concat_analytics(double C, double N, double p, double M, unsigned max_levels) {
    if (C < 1 || N < 1) throw std::invalid_argument("C and N must be at least 1");
    if (!(p >= 0 && p < 1)) throw std::invalid_argument("p must lie in [0, 1)");
    ConcatAnalytics out;
    out.threshold = 1.0 / C;
    double q = C * p; // q_l = C p^(l), squared each level
    out.level_error.push_back(p);
    for (unsigned l = 1; l <= max_levels; ++l) {
        q = q * q;
        out.level_error.push_back(q / C);
    }
    for (unsigned l = 0; l <= max_levels; ++l) {
        if (out.level_error[l] * M < 1.0) {
            out.levels_needed = l;
            break;
        }
    }
    if (out.levels_needed) {
        out.total_resources = std::pow(N, static_cast<double>(*out.levels_needed)) * M;
    }
    return out;
}

} // namespace topoqec
