#include "topoqec/matching.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace topoqec {

namespace {

// Maximum-weight matching on a dense graph by the primal-dual blossom
// algorithm, O(V^3). Nodes are 1-indexed; 0 is a sentinel. Indices above n
// are blossom pseudo-nodes. Edge weights must be positive; they are doubled
// internally so dual variables stay integral.
class Blossom {
public:
    explicit Blossom(const std::vector<std::vector<std::int64_t>>& w) : n_(w.size()) {
        const std::size_t m = 2 * n_ + 1;
        g_.assign(m, std::vector<E>(m));
        lab_.assign(m, 0);
        match_.assign(m, 0);
        slack_.assign(m, 0);
        st_.assign(m, 0);
        pa_.assign(m, 0);
        s_.assign(m, -1);
        vis_.assign(m, 0);
        flower_.assign(m, {});
        flower_from_.assign(m, std::vector<int>(n_ + 1, 0));
        for (int u = 1; u <= n_; ++u)
            for (int v = 1; v <= n_; ++v)
                g_[u][v] = E{u, v, u == v ? 0 : 2 * w[u - 1][v - 1]};
        std::int64_t wmax = 0;
        for (int u = 1; u <= n_; ++u)
            for (int v = 1; v <= n_; ++v) wmax = std::max(wmax, g_[u][v].w);
        n_x_ = n_;
        for (int u = 1; u <= n_; ++u) {
            st_[u] = u;
            lab_[u] = wmax / 2;
            flower_from_[u][u] = u;
        }
        for (int b = n_ + 1; b < static_cast<int>(m); ++b) st_[b] = 0;
    }

    /// Runs augmentations to exhaustion; returns match[] over base vertices.
    std::vector<int> solve() {
        while (matching()) {}
        std::vector<int> out(n_ + 1, 0);
        for (int u = 1; u <= n_; ++u) out[u] = match_[u];
        return out;
    }

private:
    struct E {
        int u = 0, v = 0;
        std::int64_t w = 0;
    };

    std::int64_t e_delta(const E& e) const { return lab_[e.u] + lab_[e.v] - g_[e.u][e.v].w; }

    void update_slack(int u, int x) {
        if (!slack_[x] || e_delta(g_[u][x]) < e_delta(g_[slack_[x]][x])) slack_[x] = u;
    }

    void set_slack(int x) {
        slack_[x] = 0;
        for (int u = 1; u <= n_; ++u)
            if (g_[u][x].w > 0 && st_[u] != x && s_[st_[u]] == 0) update_slack(u, x);
    }

    void q_push(int x) {
        if (x <= n_) {
            q_.push_back(x);
        } else {
            for (int i : flower_[x]) q_push(i);
        }
    }

    void set_st(int x, int b) {
        st_[x] = b;
        if (x > n_)
            for (int i : flower_[x]) set_st(i, b);
    }

    int get_pr(int b, int xr) {
        auto it = std::find(flower_[b].begin(), flower_[b].end(), xr);
        int pr = static_cast<int>(it - flower_[b].begin());
        if (pr % 2 == 1) {
            std::reverse(flower_[b].begin() + 1, flower_[b].end());
            return static_cast<int>(flower_[b].size()) - pr;
        }
        return pr;
    }

    void set_match(int u, int v) {
        match_[u] = g_[u][v].v;
        if (u > n_) {
            const E e = g_[u][v];
            const int xr = flower_from_[u][e.u];
            const int pr = get_pr(u, xr);
            for (int i = 0; i < pr; ++i) set_match(flower_[u][i], flower_[u][i ^ 1]);
            set_match(xr, v);
            std::rotate(flower_[u].begin(), flower_[u].begin() + pr, flower_[u].end());
        }
    }

    void augment(int u, int v) {
        for (;;) {
            const int xnv = st_[match_[u]];
            set_match(u, v);
            if (!xnv) return;
            set_match(xnv, st_[pa_[xnv]]);
            u = st_[pa_[xnv]];
            v = xnv;
        }
    }

    int get_lca(int u, int v) {
        for (++timer_; u || v; std::swap(u, v)) {
            if (!u) continue;
            if (vis_[u] == timer_) return u;
            vis_[u] = timer_;
            u = st_[match_[u]];
            if (u) u = st_[pa_[u]];
        }
        return 0;
    }

    void add_blossom(int u, int lca, int v) {
        int b = n_ + 1;
        while (b <= n_x_ && st_[b]) ++b;
        if (b > n_x_) ++n_x_;
        lab_[b] = 0;
        s_[b] = 0;
        match_[b] = match_[lca];
        flower_[b].clear();
        flower_[b].push_back(lca);
        for (int x = u, y; x != lca; x = st_[pa_[y]]) {
            flower_[b].push_back(x);
            flower_[b].push_back(y = st_[match_[x]]);
            q_push(y);
        }
        std::reverse(flower_[b].begin() + 1, flower_[b].end());
        for (int x = v, y; x != lca; x = st_[pa_[y]]) {
            flower_[b].push_back(x);
            flower_[b].push_back(y = st_[match_[x]]);
            q_push(y);
        }
        set_st(b, b);
        for (int x = 1; x <= n_x_; ++x) g_[b][x].w = g_[x][b].w = 0;
        for (int x = 1; x <= n_; ++x) flower_from_[b][x] = 0;
        for (int xs : flower_[b]) {
            for (int x = 1; x <= n_x_; ++x)
                if (g_[b][x].w == 0 || e_delta(g_[xs][x]) < e_delta(g_[b][x])) {
                    g_[b][x] = g_[xs][x];
                    g_[x][b] = g_[x][xs];
                }
            for (int x = 1; x <= n_; ++x)
                if (flower_from_[xs][x]) flower_from_[b][x] = xs;
        }
        set_slack(b);
    }

    void expand_blossom(int b) {
        for (int i : flower_[b]) set_st(i, i);
        const int xr = flower_from_[b][g_[b][pa_[b]].u];
        const int pr = get_pr(b, xr);
        for (int i = 0; i < pr; i += 2) {
            const int xs = flower_[b][i];
            const int xns = flower_[b][i + 1];
            pa_[xs] = g_[xns][xs].u;
            s_[xs] = 1;
            s_[xns] = 0;
            slack_[xs] = 0;
            set_slack(xns);
            q_push(xns);
        }
        s_[xr] = 1;
        pa_[xr] = pa_[b];
        for (int i = pr + 1; i < static_cast<int>(flower_[b].size()); ++i) {
            const int xs = flower_[b][i];
            s_[xs] = -1;
            set_slack(xs);
        }
        st_[b] = 0;
    }

    bool on_found_edge(const E& e) {
        const int u = st_[e.u], v = st_[e.v];
        if (s_[v] == -1) {
            pa_[v] = e.u;
            s_[v] = 1;
            const int nu = st_[match_[v]];
            slack_[v] = slack_[nu] = 0;
            s_[nu] = 0;
            q_push(nu);
        } else if (s_[v] == 0) {
            const int lca = get_lca(u, v);
            if (!lca) {
                augment(u, v);
                augment(v, u);
                return true;
            }
            add_blossom(u, lca, v);
        }
        return false;
    }

    bool matching() {
        std::fill(s_.begin() + 1, s_.begin() + n_x_ + 1, -1);
        std::fill(slack_.begin() + 1, slack_.begin() + n_x_ + 1, 0);
        q_.clear();
        for (int x = 1; x <= n_x_; ++x)
            if (st_[x] == x && !match_[x]) {
                pa_[x] = 0;
                s_[x] = 0;
                q_push(x);
            }
        if (q_.empty()) return false;
        for (;;) {
            while (!q_.empty()) {
                const int u = q_.front();
                q_.pop_front();
                if (s_[st_[u]] == 1) continue;
                for (int v = 1; v <= n_; ++v)
                    if (g_[u][v].w > 0 && st_[u] != st_[v]) {
                        if (e_delta(g_[u][v]) == 0) {
                            if (on_found_edge(g_[u][v])) return true;
                        } else {
                            update_slack(u, st_[v]);
                        }
                    }
            }
            std::int64_t d = std::numeric_limits<std::int64_t>::max();
            for (int b = n_ + 1; b <= n_x_; ++b)
                if (st_[b] == b && s_[b] == 1) d = std::min(d, lab_[b] / 2);
            for (int x = 1; x <= n_x_; ++x)
                if (st_[x] == x && slack_[x]) {
                    if (s_[x] == -1)
                        d = std::min(d, e_delta(g_[slack_[x]][x]));
                    else if (s_[x] == 0)
                        d = std::min(d, e_delta(g_[slack_[x]][x]) / 2);
                }
            for (int u = 1; u <= n_; ++u)
                if (s_[st_[u]] == 0) d = std::min(d, lab_[u]);
            if (d == std::numeric_limits<std::int64_t>::max())
                throw std::logic_error("matching dual adjustment stuck");
            for (int u = 1; u <= n_; ++u) {
                if (s_[st_[u]] == 0)
                    lab_[u] -= d;
                else if (s_[st_[u]] == 1)
                    lab_[u] += d;
            }
            for (int b = n_ + 1; b <= n_x_; ++b)
                if (st_[b] == b) {
                    if (s_[b] == 0)
                        lab_[b] += 2 * d;
                    else if (s_[b] == 1)
                        lab_[b] -= 2 * d;
                }
            for (int x = 1; x <= n_; ++x)
                if (s_[st_[x]] == 0 && !lab_[x]) return false; // no heavier matching exists
            for (int x = 1; x <= n_x_; ++x)
                if (st_[x] == x && slack_[x] && st_[slack_[x]] != x &&
                    e_delta(g_[slack_[x]][x]) == 0) {
                    if (on_found_edge(g_[slack_[x]][x])) return true;
                }
            for (int b = n_ + 1; b <= n_x_; ++b)
                if (st_[b] == b && s_[b] == 1 && !lab_[b]) expand_blossom(b);
        }
    }

    int n_;
    int n_x_;
    int timer_ = 0;
    std::vector<std::vector<E>> g_;
    std::vector<std::int64_t> lab_;
    std::vector<int> match_, slack_, st_, pa_, s_, vis_;
    std::vector<std::vector<int>> flower_;
    std::vector<std::vector<int>> flower_from_;
    std::deque<int> q_;
};

} // namespace

std::string MatchingGraph::dump(bool with_time) const {
    std::ostringstream out;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        out << "node " << i << ' ' << nodes[i].x << ' ' << nodes[i].y;
        if (with_time) out << ' ' << nodes[i].t;
        out << '\n';
    }
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = i + 1; j < nodes.size(); ++j)
            out << "edge " << i << ' ' << j << ' ' << weight[i][j] << '\n';
    return out.str();
}

std::vector<std::pair<std::size_t, std::size_t>> mwpm(const MatchingGraph& g) {
    const std::size_t n = g.size();
    if (n % 2 != 0) throw std::invalid_argument("perfect matching requires an even node count");
    if (n == 0) return {};
    // Transform to a maximum-weight problem with strictly positive weights:
    // every perfect matching has n/2 edges, so argmax of (wmax - w + 1) is
    // argmin of w.
    std::int64_t wmax = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (g.weight[i][j] < 0) throw std::invalid_argument("matching weights must be non-negative");
            wmax = std::max(wmax, g.weight[i][j]);
        }
    std::vector<std::vector<std::int64_t>> t(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) t[i][j] = wmax - g.weight[i][j] + 1;
    Blossom solver(t);
    const std::vector<int> match = solver.solve();
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t u = 1; u <= n; ++u) {
        const std::size_t v = static_cast<std::size_t>(match[u]);
        if (v == 0) throw std::logic_error("matching is not perfect");
        if (u < v) out.emplace_back(u - 1, v - 1);
    }
    if (out.size() != n / 2) throw std::logic_error("matching is not perfect");
    return out;
}

std::int64_t matching_weight(const MatchingGraph& g,
                             const std::vector<std::pair<std::size_t, std::size_t>>& m) {
    std::int64_t w = 0;
    for (auto [i, j] : m) w += g.weight[i][j];
    return w;
}

} // namespace topoqec
