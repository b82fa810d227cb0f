#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace topoqec {

struct MatchingNode {
    long long x = 0, y = 0, t = 0;
    bool is_boundary = false;       // virtual boundary partner (planar codes)
    std::size_t site = 0;           // vertex/face id of the defect it represents
};

/// Complete weighted graph over defect nodes. Weights are non-negative
/// integers (lattice distances times a fixed scale).
struct MatchingGraph {
    std::vector<MatchingNode> nodes;
    std::vector<std::vector<std::int64_t>> weight;

    std::size_t size() const { return nodes.size(); }

    static MatchingGraph complete(std::size_t n) {
        MatchingGraph g;
        g.nodes.resize(n);
        g.weight.assign(n, std::vector<std::int64_t>(n, 0));
        return g;
    }

    void set_weight(std::size_t i, std::size_t j, std::int64_t w) {
        weight[i][j] = w;
        weight[j][i] = w;
    }

    /// Line-based text dump: `node i x y [t]`, then `edge i j w`.
    std::string dump(bool with_time = false) const;
};

/// Exact minimum-weight perfect matching (blossom algorithm, primal-dual with
/// blossom shrinking). Throws std::invalid_argument on an odd node count.
/// Returns n/2 pairs (i, j) with i < j, sorted by i.
std::vector<std::pair<std::size_t, std::size_t>> mwpm(const MatchingGraph& g);

std::int64_t matching_weight(const MatchingGraph& g,
                             const std::vector<std::pair<std::size_t, std::size_t>>& m);

} // namespace topoqec
