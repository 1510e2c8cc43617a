#include "cayring/invariants.hpp"

namespace cayring {

namespace {

// Backtracking Hamiltonian cycle search on at most 64 vertices: single-word
// masks, connectivity and degree-availability pruning, candidates ordered by
// fewest onward moves.
struct HamiltonSearch {
    uint32_t n;
    uint64_t full;
    std::vector<uint64_t> nbr;
    std::vector<uint32_t> path;

    explicit HamiltonSearch(const Graph& G) : n(G.n()), nbr(G.n(), 0) {
        full = n == 64 ? ~uint64_t(0) : (uint64_t(1) << n) - 1;
        for (uint32_t u = 0; u < n; ++u)
            for (uint32_t v = 0; v < n; ++v)
                if (G.adjacent(u, v)) nbr[u] |= uint64_t(1) << v;
    }

    bool prune(uint32_t cur, uint64_t visited) {
        uint64_t open = full & ~visited;
        if (!open) return false;

        // The vertex that completes the cycle must be open and adjacent to
        // the start.
        if ((nbr[0] & open) == 0) return true;

        // Every remaining vertex needs two usable connections among the open
        // vertices and the two endpoints (current vertex and start 0).
        uint64_t endpoints = (uint64_t(1) << cur) | 1;
        uint64_t scan = open;
        while (scan) {
            uint32_t v = static_cast<uint32_t>(__builtin_ctzll(scan));
            scan &= scan - 1;
            if (__builtin_popcountll(nbr[v] & (open | endpoints)) < 2) return true;
        }

        // The open region plus the current vertex must be connected.
        uint64_t region = open | (uint64_t(1) << cur);
        uint64_t reached = uint64_t(1) << cur;
        uint64_t frontier = reached;
        while (frontier) {
            uint64_t next = 0;
            uint64_t f = frontier;
            while (f) {
                uint32_t v = static_cast<uint32_t>(__builtin_ctzll(f));
                f &= f - 1;
                next |= nbr[v];
            }
            next &= region & ~reached;
            reached |= next;
            frontier = next;
        }
        return reached != region;
    }

    bool dfs(uint32_t cur, uint64_t visited) {
        if (visited == full) return (nbr[cur] >> 0) & 1;
        if (prune(cur, visited)) return false;

        uint64_t cand = nbr[cur] & ~visited;
        // When exactly one open vertex can still close the cycle, it has to
        // come last; consuming it while others remain strands them.
        uint64_t open = full & ~visited;
        uint64_t closers = nbr[0] & open;
        if ((open & (open - 1)) != 0 && (closers & (closers - 1)) == 0) cand &= ~closers;
        std::vector<std::pair<uint32_t, uint32_t>> ordered;  // (onward degree, vertex)
        uint64_t scan = cand;
        while (scan) {
            uint32_t v = static_cast<uint32_t>(__builtin_ctzll(scan));
            scan &= scan - 1;
            uint32_t onward = static_cast<uint32_t>(__builtin_popcountll(nbr[v] & ~visited));
            ordered.push_back({onward, v});
        }
        std::sort(ordered.begin(), ordered.end());
        for (auto [onward, v] : ordered) {
            path.push_back(v);
            if (dfs(v, visited | (uint64_t(1) << v))) return true;
            path.pop_back();
        }
        return false;
    }
};

}  // namespace

HamiltonResult is_hamiltonian(const Graph& G, uint32_t cap) {
    if (G.n() > cap || G.n() > 64)
        throw SizeCapExceeded("hamiltonicity test capped at " +
                              std::to_string(std::min<uint32_t>(cap, 64)) + " vertices");
    HamiltonResult result;
    if (G.n() < 3) return result;
    if (G.min_degree() < 2) return result;
    if (components(G).size() != 1) return result;

    HamiltonSearch search(G);
    search.path.push_back(0);
    if (!search.dfs(0, 1)) return result;

    result.hamiltonian = true;
    result.cycle = search.path;
    if (result.cycle.size() != G.n()) throw Error("hamiltonian witness has wrong length");
    std::vector<bool> seen(G.n(), false);
    for (uint32_t v : result.cycle) {
        if (seen[v]) throw Error("hamiltonian witness repeats a vertex");
        seen[v] = true;
    }
    for (size_t i = 0; i + 1 < result.cycle.size(); ++i)
        if (!G.adjacent(result.cycle[i], result.cycle[i + 1]))
            throw Error("hamiltonian witness uses a non-edge");
    if (!G.adjacent(result.cycle.back(), result.cycle.front()))
        throw Error("hamiltonian witness does not close");
    return result;
}

}  // namespace cayring
