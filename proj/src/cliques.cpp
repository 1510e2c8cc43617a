#include <algorithm>

#include "cayring/invariants.hpp"

namespace cayring {

namespace {

// Branch-and-bound maximum clique with greedy-coloring bounds, working in a
// reordered vertex space (descending degree, then index) for determinism.
struct CliqueSolver {
    uint32_t n;
    size_t words;
    std::vector<uint64_t> adj;       // rank-space bit rows
    std::vector<uint32_t> rank_of;   // original vertex -> rank
    std::vector<uint32_t> vertex_of; // rank -> original vertex
    std::vector<uint32_t> best, cur;

    explicit CliqueSolver(const Graph& G) : n(G.n()), words(bits::word_count(G.n())) {
        vertex_of.resize(n);
        for (uint32_t v = 0; v < n; ++v) vertex_of[v] = v;
        std::stable_sort(vertex_of.begin(), vertex_of.end(), [&](uint32_t a, uint32_t b) {
            if (G.degree(a) != G.degree(b)) return G.degree(a) > G.degree(b);
            return a < b;
        });
        rank_of.resize(n);
        for (uint32_t r = 0; r < n; ++r) rank_of[vertex_of[r]] = r;
        adj.assign(size_t(n) * words, 0);
        for (uint32_t u = 0; u < n; ++u)
            for (uint32_t v = 0; v < n; ++v)
                if (G.adjacent(vertex_of[u], vertex_of[v])) bits::set(adj.data() + size_t(u) * words, v);
    }

    const uint64_t* row(uint32_t r) const { return adj.data() + size_t(r) * words; }

    void expand(std::vector<uint64_t>& P) {
        // Greedy coloring of P in rank order; color numbers bound the clique
        // extension size, so candidates are tried in descending color order.
        std::vector<uint32_t> order_out, color_out;
        std::vector<uint64_t> remaining = P;
        uint32_t color = 0;
        while (bits::popcount(remaining.data(), words) > 0) {
            ++color;
            std::vector<uint64_t> avail = remaining;
            const uint32_t wc = static_cast<uint32_t>(words);
            for (uint64_t bit = bits::next_set(avail.data(), wc, 0); bit != bits::npos;
                 bit = bits::next_set(avail.data(), wc, bit + 1)) {
                const uint32_t v = static_cast<uint32_t>(bit);
                order_out.push_back(v);
                color_out.push_back(color);
                bits::clear(remaining.data(), v);
                const uint64_t* r = row(v);
                for (size_t w = 0; w < words; ++w) avail[w] &= ~r[w];
                bits::clear(avail.data(), v);
            }
        }
        for (size_t i = order_out.size(); i-- > 0;) {
            if (cur.size() + color_out[i] <= best.size()) return;
            uint32_t v = order_out[i];
            cur.push_back(v);
            std::vector<uint64_t> next(words);
            const uint64_t* r = row(v);
            for (size_t w = 0; w < words; ++w) next[w] = P[w] & r[w];
            if (bits::popcount(next.data(), words) == 0) {
                if (cur.size() > best.size()) best = cur;
            } else {
                expand(next);
            }
            cur.pop_back();
            bits::clear(P.data(), v);
        }
    }
};

// Exact chromatic number: DSATUR branch and bound seeded by the greedy DSATUR
// coloring, with the clique number as lower bound.
struct ChromaticSolver {
    const Graph& G;
    uint32_t n;
    uint32_t lower;
    uint32_t best_count;
    std::vector<uint32_t> colors, best_colors;
    std::vector<std::vector<uint16_t>> nbr_color_count;  // vertex x color -> colored neighbors
    std::vector<uint32_t> saturation;

    ChromaticSolver(const Graph& g, uint32_t lb, uint32_t ub_guess)
        : G(g), n(g.n()), lower(lb), best_count(ub_guess + 1) {
        colors.assign(n, UINT32_MAX);
        nbr_color_count.assign(n, std::vector<uint16_t>(n + 1, 0));
        saturation.assign(n, 0);
    }

    uint32_t pick_vertex() const {
        uint32_t pick = UINT32_MAX;
        for (uint32_t v = 0; v < n; ++v) {
            if (colors[v] != UINT32_MAX) continue;
            if (pick == UINT32_MAX) {
                pick = v;
                continue;
            }
            if (saturation[v] != saturation[pick]) {
                if (saturation[v] > saturation[pick]) pick = v;
            } else if (G.degree(v) != G.degree(pick)) {
                if (G.degree(v) > G.degree(pick)) pick = v;
            }
        }
        return pick;
    }

    void assign(uint32_t v, uint32_t c) {
        colors[v] = c;
        for (uint32_t u : G.neighbors(v)) {
            if (colors[u] != UINT32_MAX) continue;
            if (nbr_color_count[u][c]++ == 0) ++saturation[u];
        }
    }

    void unassign(uint32_t v, uint32_t c) {
        colors[v] = UINT32_MAX;
        for (uint32_t u : G.neighbors(v)) {
            if (colors[u] != UINT32_MAX) continue;
            if (--nbr_color_count[u][c] == 0) --saturation[u];
        }
    }

    void solve(uint32_t colored, uint32_t used) {
        if (used >= best_count) return;
        if (colored == n) {
            best_count = used;
            best_colors = colors;
            return;
        }
        uint32_t v = pick_vertex();
        uint32_t limit = std::min(used + 1, best_count - 1);
        for (uint32_t c = 0; c < limit; ++c) {
            if (nbr_color_count[v][c] > 0) continue;
            assign(v, c);
            solve(colored + 1, std::max(used, c + 1));
            unassign(v, c);
            if (best_count == lower) return;
        }
    }
};

uint32_t greedy_dsatur(const Graph& G, std::vector<uint32_t>& out) {
    const uint32_t n = G.n();
    out.assign(n, UINT32_MAX);
    std::vector<std::vector<uint16_t>> cnt(n, std::vector<uint16_t>(n + 1, 0));
    std::vector<uint32_t> sat(n, 0);
    uint32_t used = 0;
    for (uint32_t step = 0; step < n; ++step) {
        uint32_t pick = UINT32_MAX;
        for (uint32_t v = 0; v < n; ++v) {
            if (out[v] != UINT32_MAX) continue;
            if (pick == UINT32_MAX) {
                pick = v;
                continue;
            }
            if (sat[v] != sat[pick]) {
                if (sat[v] > sat[pick]) pick = v;
            } else if (G.degree(v) != G.degree(pick)) {
                if (G.degree(v) > G.degree(pick)) pick = v;
            }
        }
        uint32_t c = 0;
        while (cnt[pick][c] > 0) ++c;
        out[pick] = c;
        used = std::max(used, c + 1);
        for (uint32_t u : G.neighbors(pick)) {
            if (out[u] != UINT32_MAX) continue;
            if (cnt[u][c]++ == 0) ++sat[u];
        }
    }
    return used;
}

}  // namespace

CliqueResult max_clique(const Graph& G, uint32_t cap) {
    if (G.n() > cap)
        throw SizeCapExceeded("exact clique capped at " + std::to_string(cap) + " vertices");
    CliqueResult result;
    if (G.n() == 0) return result;

    CliqueSolver solver(G);
    std::vector<uint64_t> P = bits::make(G.n());
    for (uint32_t r = 0; r < G.n(); ++r) bits::set(P.data(), r);
    solver.expand(P);

    result.size = static_cast<uint32_t>(solver.best.size());
    for (uint32_t r : solver.best) result.members.push_back(solver.vertex_of[r]);
    std::sort(result.members.begin(), result.members.end());

    for (size_t i = 0; i < result.members.size(); ++i)
        for (size_t j = i + 1; j < result.members.size(); ++j)
            if (!G.adjacent(result.members[i], result.members[j]))
                throw Error("clique witness has a non-edge");
    return result;
}

ChromaticResult chromatic_number(const Graph& G, uint32_t cap) {
    if (G.n() > cap)
        throw SizeCapExceeded("exact coloring capped at " + std::to_string(cap) + " vertices");
    ChromaticResult result;
    if (G.n() == 0) return result;

    const uint32_t omega = max_clique(G, cap).size;
    std::vector<uint32_t> greedy;
    const uint32_t ub = greedy_dsatur(G, greedy);

    if (ub == omega) {
        result.chi = ub;
        result.coloring.colors = std::move(greedy);
        result.coloring.palette = ub;
    } else {
        ChromaticSolver solver(G, omega, ub);
        solver.best_count = ub;
        solver.best_colors = greedy;
        solver.solve(0, 0);
        result.chi = solver.best_count;
        result.coloring.colors = std::move(solver.best_colors);
        result.coloring.palette = solver.best_count;
    }

    std::string why;
    if (!coloring_proper(G, result.coloring, &why)) throw Error("chromatic witness invalid: " + why);
    return result;
}

}  // namespace cayring
