#include "cayring/invariants.hpp"

#include <algorithm>

namespace cayring {

namespace {

// One BFS over bit-rows; fills dist with hop counts (UINT32_MAX = unreachable)
// and returns the eccentricity of the start among reached vertices.
uint32_t bfs_levels(const Graph& G, uint32_t start, std::vector<uint32_t>& dist) {
    const size_t words = G.row_words();
    const uint32_t wc = static_cast<uint32_t>(words);
    dist.assign(G.n(), UINT32_MAX);
    std::vector<uint64_t> visited(words, 0), frontier(words, 0), next(words, 0);
    bits::set(visited.data(), start);
    bits::set(frontier.data(), start);
    dist[start] = 0;
    uint32_t level = 0;
    while (true) {
        std::fill(next.begin(), next.end(), 0);
        for (uint64_t v = bits::next_set(frontier.data(), wc, 0); v != bits::npos;
             v = bits::next_set(frontier.data(), wc, v + 1)) {
            const uint64_t* r = G.row(static_cast<uint32_t>(v));
            for (size_t w = 0; w < words; ++w) next[w] |= r[w];
        }
        bool any = false;
        for (size_t w = 0; w < words; ++w) {
            next[w] &= ~visited[w];
            if (next[w]) any = true;
        }
        if (!any) break;
        ++level;
        for (size_t w = 0; w < words; ++w) visited[w] |= next[w];
        for (uint64_t v = bits::next_set(next.data(), wc, 0); v != bits::npos;
             v = bits::next_set(next.data(), wc, v + 1))
            dist[v] = level;
        frontier.swap(next);
    }
    return level;
}

}  // namespace

std::vector<std::vector<uint32_t>> components(const Graph& G) {
    std::vector<std::vector<uint32_t>> result;
    std::vector<bool> seen(G.n(), false);
    std::vector<uint32_t> dist;
    for (uint32_t v = 0; v < G.n(); ++v) {
        if (seen[v]) continue;
        bfs_levels(G, v, dist);
        std::vector<uint32_t> comp;
        for (uint32_t u = 0; u < G.n(); ++u)
            if (dist[u] != UINT32_MAX) {
                comp.push_back(u);
                seen[u] = true;
            }
        result.push_back(std::move(comp));
    }
    return result;
}

std::optional<uint32_t> diameter(const Graph& G) {
    if (G.n() == 0) return 0;
    std::vector<uint32_t> dist;
    uint32_t diam = 0;
    for (uint32_t v = 0; v < G.n(); ++v) {
        uint32_t ecc = bfs_levels(G, v, dist);
        for (uint32_t u = 0; u < G.n(); ++u)
            if (dist[u] == UINT32_MAX) return std::nullopt;
        diam = std::max(diam, ecc);
    }
    return diam;
}

bool path_family_valid(const Graph& G, const PathFamily& family, std::string* reason) {
    auto fail = [&](const std::string& why) {
        if (reason) *reason = why;
        return false;
    };
    if (family.source == family.target) return fail("source equals target");
    std::vector<uint32_t> internal_seen(G.n(), 0);
    for (size_t p = 0; p < family.paths.size(); ++p) {
        const auto& path = family.paths[p];
        if (path.size() < 2) return fail("path " + std::to_string(p) + " has fewer than 2 vertices");
        if (path.front() != family.source) return fail("path " + std::to_string(p) + " does not start at source");
        if (path.back() != family.target) return fail("path " + std::to_string(p) + " does not end at target");
        std::vector<bool> on_path(G.n(), false);
        for (size_t i = 0; i < path.size(); ++i) {
            if (path[i] >= G.n()) return fail("path vertex out of range");
            if (on_path[path[i]]) return fail("path " + std::to_string(p) + " repeats a vertex");
            on_path[path[i]] = true;
            if (i && !G.adjacent(path[i - 1], path[i]))
                return fail("path " + std::to_string(p) + " uses a non-edge");
        }
        for (size_t i = 1; i + 1 < path.size(); ++i) {
            if (internal_seen[path[i]])
                return fail("paths share internal vertex " + std::to_string(path[i]));
            internal_seen[path[i]] = 1;
        }
        for (size_t q = 0; q < p; ++q)
            if (family.paths[q] == path) return fail("duplicate path in family");
    }
    return true;
}

bool coloring_proper(const Graph& G, const Coloring& coloring, std::string* reason) {
    auto fail = [&](const std::string& why) {
        if (reason) *reason = why;
        return false;
    };
    if (coloring.colors.size() != G.n()) return fail("color vector size mismatch");
    for (uint32_t v = 0; v < G.n(); ++v)
        if (coloring.colors[v] >= coloring.palette) return fail("color out of palette range");
    for (uint32_t u = 0; u < G.n(); ++u)
        for (uint32_t v = u + 1; v < G.n(); ++v)
            if (G.adjacent(u, v) && coloring.colors[u] == coloring.colors[v])
                return fail("adjacent vertices " + std::to_string(u) + "," + std::to_string(v) +
                            " share color " + std::to_string(coloring.colors[u]));
    return true;
}

}  // namespace cayring
