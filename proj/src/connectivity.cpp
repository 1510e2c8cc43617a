#include <algorithm>

#include "cayring/invariants.hpp"

namespace cayring {

namespace {

struct Dinic {
    struct Arc {
        uint32_t to;
        uint32_t rev;
        int32_t cap;
    };

    std::vector<std::vector<Arc>> g;
    std::vector<int32_t> level;
    std::vector<uint32_t> it;
    std::vector<uint32_t> queue;

    explicit Dinic(uint32_t n) : g(n), level(n), it(n), queue(n) {}

    void add_arc(uint32_t u, uint32_t v, int32_t cap_uv, int32_t cap_vu) {
        g[u].push_back({v, static_cast<uint32_t>(g[v].size()), cap_uv});
        g[v].push_back({u, static_cast<uint32_t>(g[u].size()) - 1, cap_vu});
    }

    std::vector<int32_t> snapshot() const {
        std::vector<int32_t> caps;
        for (const auto& row : g)
            for (const auto& a : row) caps.push_back(a.cap);
        return caps;
    }

    void restore(const std::vector<int32_t>& caps) {
        size_t i = 0;
        for (auto& row : g)
            for (auto& a : row) a.cap = caps[i++];
    }

    bool bfs(uint32_t s, uint32_t t) {
        std::fill(level.begin(), level.end(), -1);
        uint32_t head = 0, tail = 0;
        queue[tail++] = s;
        level[s] = 0;
        while (head < tail) {
            uint32_t v = queue[head++];
            for (const auto& a : g[v]) {
                if (a.cap > 0 && level[a.to] < 0) {
                    level[a.to] = level[v] + 1;
                    queue[tail++] = a.to;
                }
            }
        }
        return level[t] >= 0;
    }

    int32_t dfs(uint32_t v, uint32_t t, int32_t pushed) {
        if (v == t) return pushed;
        for (uint32_t& i = it[v]; i < g[v].size(); ++i) {
            Arc& a = g[v][i];
            if (a.cap > 0 && level[a.to] == level[v] + 1) {
                int32_t got = dfs(a.to, t, std::min(pushed, a.cap));
                if (got > 0) {
                    a.cap -= got;
                    g[a.to][a.rev].cap += got;
                    return got;
                }
            }
        }
        return 0;
    }

    // Max flow from s to t, stopping early once `limit` is reached.
    int32_t max_flow(uint32_t s, uint32_t t, int32_t limit) {
        int32_t flow = 0;
        while (flow < limit && bfs(s, t)) {
            std::fill(it.begin(), it.end(), 0);
            while (flow < limit) {
                int32_t pushed = dfs(s, t, limit - flow);
                if (pushed == 0) break;
                flow += pushed;
            }
        }
        return flow;
    }
};

bool is_connected(const Graph& G) { return components(G).size() == 1; }

// Vertex-split network: node 2v is the in-copy, 2v+1 the out-copy; every
// vertex carries an internal unit arc, every edge a unit arc each way between
// out- and in-copies. Flow from 2s+1 to 2t equals the maximum number of
// internally disjoint s-t paths.
Dinic build_split_network(const Graph& G) {
    Dinic net(2 * G.n());
    for (uint32_t v = 0; v < G.n(); ++v) net.add_arc(2 * v, 2 * v + 1, 1, 0);
    for (uint32_t u = 0; u < G.n(); ++u)
        for (uint32_t v = u + 1; v < G.n(); ++v)
            if (G.adjacent(u, v)) {
                net.add_arc(2 * u + 1, 2 * v, 1, 0);
                net.add_arc(2 * v + 1, 2 * u, 1, 0);
            }
    return net;
}

}  // namespace

uint32_t edge_connectivity(const Graph& G) {
    const uint32_t n = G.n();
    if (n < 2 || !is_connected(G)) return 0;
    if (G.is_complete()) return n - 1;

    Dinic net(n);
    for (uint32_t u = 0; u < n; ++u)
        for (uint32_t v = u + 1; v < n; ++v)
            if (G.adjacent(u, v)) net.add_arc(u, v, 1, 1);
    const std::vector<int32_t> base = net.snapshot();

    // A minimum edge cut separates vertex 0 from some other vertex.
    int32_t best = static_cast<int32_t>(G.min_degree());
    for (uint32_t t = 1; t < n; ++t) {
        net.restore(base);
        best = std::min(best, net.max_flow(0, t, best));
    }
    return static_cast<uint32_t>(best);
}

uint32_t vertex_connectivity(const Graph& G) {
    const uint32_t n = G.n();
    if (n < 2 || !is_connected(G)) return 0;
    if (G.is_complete()) return n - 1;

    Dinic net = build_split_network(G);
    const std::vector<int32_t> base = net.snapshot();
    auto flow = [&](uint32_t a, uint32_t b, int32_t limit) {
        net.restore(base);
        return net.max_flow(2 * a + 1, 2 * b, limit);
    };

    uint32_t s = 0;
    for (uint32_t v = 1; v < n; ++v)
        if (G.degree(v) < G.degree(s)) s = v;

    // Menger reduction: flows from s to each non-neighbor find every minimum
    // cut avoiding s; if s lies in every minimum cut, it has neighbors on both
    // sides, so flows between non-adjacent neighbor pairs find the cut.
    int32_t best = static_cast<int32_t>(G.degree(s));
    for (uint32_t t = 0; t < n; ++t) {
        if (t == s || G.adjacent(s, t)) continue;
        best = std::min(best, flow(s, t, best));
    }
    std::vector<uint32_t> nbrs = G.neighbors(s);
    for (size_t i = 0; i < nbrs.size(); ++i)
        for (size_t j = i + 1; j < nbrs.size(); ++j) {
            if (G.adjacent(nbrs[i], nbrs[j])) continue;
            best = std::min(best, flow(nbrs[i], nbrs[j], best));
        }
    return static_cast<uint32_t>(best);
}

PathFamily disjoint_paths_flow(const Graph& G, uint32_t s, uint32_t t) {
    if (s >= G.n() || t >= G.n()) throw IndexOutOfRange("path endpoint out of range");
    if (s == t) throw Error("path family endpoints must differ");

    Dinic net = build_split_network(G);
    const int32_t value = net.max_flow(2 * s + 1, 2 * t, static_cast<int32_t>(G.n()));

    // An edge arc is used iff its unit capacity is exhausted. Each vertex
    // passes at most one unit (internal arc), so walks from s trace the flow
    // decomposition into internally disjoint paths.
    PathFamily family;
    family.source = s;
    family.target = t;
    std::vector<std::vector<uint32_t>> used_to(G.n());  // per out-copy: targets with used arcs
    for (uint32_t v = 0; v < G.n(); ++v)
        for (const auto& a : net.g[2 * v + 1])
            if (a.cap == 0 && a.to % 2 == 0 && a.to != 2 * v)  // spent edge arc out_v -> in_w
                used_to[v].push_back(a.to / 2);
    for (auto& list : used_to) std::sort(list.begin(), list.end());

    for (int32_t p = 0; p < value; ++p) {
        std::vector<uint32_t> path{s};
        uint32_t cur = s;
        while (cur != t) {
            if (used_to[cur].empty()) throw Error("flow decomposition ran out of arcs");
            uint32_t nxt = used_to[cur].front();
            used_to[cur].erase(used_to[cur].begin());
            path.push_back(nxt);
            cur = nxt;
        }
        family.paths.push_back(std::move(path));
    }

    std::string why;
    if (!path_family_valid(G, family, &why)) throw Error("flow paths invalid: " + why);
    if (family.paths.size() != static_cast<size_t>(value))
        throw Error("flow decomposition lost paths");
    return family;
}

}  // namespace cayring
