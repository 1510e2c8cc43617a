#include <algorithm>
#include <map>

#include "cayring/graph.hpp"

namespace cayring {

namespace {

constexpr uint32_t kUnmapped = UINT32_MAX;

// Joint 1-dimensional Weisfeiler-Leman refinement. Color ids are assigned from
// the sorted signature dictionary of both graphs together, so equal ids mean
// equal refinement history across G and H.
struct WLColors {
    std::vector<uint32_t> g, h;
    bool compatible = false;
};

WLColors wl_refine(const Graph& G, const Graph& H) {
    const uint32_t n = G.n();
    WLColors out;
    out.g.assign(n, 0);
    out.h.assign(n, 0);
    for (uint32_t v = 0; v < n; ++v) out.g[v] = G.degree(v);
    for (uint32_t v = 0; v < n; ++v) out.h[v] = H.degree(v);

    size_t color_count = 0;
    for (uint32_t round = 0; round <= n; ++round) {
        using Signature = std::pair<uint32_t, std::vector<uint32_t>>;
        auto signature = [](const Graph& X, const std::vector<uint32_t>& col, uint32_t v) {
            std::vector<uint32_t> nb;
            nb.reserve(X.degree(v));
            for (uint32_t u : X.neighbors(v)) nb.push_back(col[u]);
            std::sort(nb.begin(), nb.end());
            return Signature{col[v], std::move(nb)};
        };
        std::map<Signature, uint32_t> dict;
        std::vector<Signature> gs, hs;
        gs.reserve(n);
        hs.reserve(n);
        for (uint32_t v = 0; v < n; ++v) gs.push_back(signature(G, out.g, v));
        for (uint32_t v = 0; v < n; ++v) hs.push_back(signature(H, out.h, v));
        for (const auto& s : gs) dict.emplace(s, 0);
        for (const auto& s : hs) dict.emplace(s, 0);
        uint32_t next = 0;
        for (auto& [sig, id] : dict) id = next++;
        for (uint32_t v = 0; v < n; ++v) out.g[v] = dict[gs[v]];
        for (uint32_t v = 0; v < n; ++v) out.h[v] = dict[hs[v]];
        if (dict.size() == color_count) break;
        color_count = dict.size();
    }

    // Color class sizes must agree for an isomorphism to exist.
    std::vector<uint32_t> gsort = out.g, hsort = out.h;
    std::sort(gsort.begin(), gsort.end());
    std::sort(hsort.begin(), hsort.end());
    out.compatible = (gsort == hsort);
    return out;
}

struct IsoSolver {
    const Graph& G;
    const Graph& H;
    uint32_t n;
    size_t words;
    std::vector<uint32_t> mapping;
    std::vector<uint64_t> cand;  // n rows: candidate targets per source vertex

    IsoSolver(const Graph& g, const Graph& h) : G(g), H(h), n(g.n()), words(g.row_words()) {
        mapping.assign(n, kUnmapped);
        cand.assign(size_t(n) * words, 0);
    }

    uint64_t* row(uint32_t v) { return cand.data() + size_t(v) * words; }

    bool solve(uint32_t depth) {
        if (depth == n) return true;

        uint32_t pick = kUnmapped;
        uint64_t best = UINT64_MAX;
        for (uint32_t v = 0; v < n; ++v) {
            if (mapping[v] != kUnmapped) continue;
            uint64_t c = bits::popcount(row(v), words);
            if (c < best) {
                best = c;
                pick = v;
            }
        }
        if (best == 0) return false;

        std::vector<uint64_t> saved = cand;
        const uint32_t wc = static_cast<uint32_t>(words);
        for (uint64_t bit = bits::next_set(row(pick), wc, 0); bit != bits::npos;
             bit = bits::next_set(row(pick), wc, bit + 1)) {
            const uint32_t h = static_cast<uint32_t>(bit);
            mapping[pick] = h;
            bool viable = true;
            for (uint32_t v = 0; v < n && viable; ++v) {
                if (mapping[v] != kUnmapped) continue;
                uint64_t* rv = row(v);
                const uint64_t* hr = H.row(h);
                if (G.adjacent(v, pick))
                    for (size_t w = 0; w < words; ++w) rv[w] &= hr[w];
                else
                    for (size_t w = 0; w < words; ++w) rv[w] &= ~hr[w];
                bits::clear(rv, h);
                if (bits::popcount(rv, words) == 0) viable = false;
            }
            if (viable && solve(depth + 1)) return true;
            mapping[pick] = kUnmapped;
            cand = saved;
        }
        return false;
    }
};

}  // namespace

IsoResult are_isomorphic(const Graph& G, const Graph& H, uint32_t cap) {
    if (G.n() > cap || H.n() > cap)
        throw SizeCapExceeded("isomorphism test capped at " + std::to_string(cap) + " vertices");

    IsoResult result;
    if (G.n() != H.n()) return result;
    const uint32_t n = G.n();
    if (n == 0) {
        result.isomorphic = true;
        return result;
    }
    if (G == H) {
        result.isomorphic = true;
        result.mapping.resize(n);
        for (uint32_t v = 0; v < n; ++v) result.mapping[v] = v;
        return result;
    }
    if (G.edge_count() != H.edge_count()) return result;

    WLColors colors = wl_refine(G, H);
    if (!colors.compatible) return result;

    IsoSolver solver(G, H);
    for (uint32_t v = 0; v < n; ++v)
        for (uint32_t h = 0; h < n; ++h)
            if (colors.g[v] == colors.h[h]) bits::set(solver.row(v), h);

    if (!solver.solve(0)) return result;

    result.isomorphic = true;
    result.mapping = solver.mapping;

    // The witness must be a genuine edge-preserving bijection.
    std::vector<bool> seen(n, false);
    for (uint32_t v = 0; v < n; ++v) {
        if (result.mapping[v] >= n || seen[result.mapping[v]])
            throw Error("isomorphism witness is not a bijection");
        seen[result.mapping[v]] = true;
    }
    for (uint32_t u = 0; u < n; ++u)
        for (uint32_t v = u + 1; v < n; ++v)
            if (G.adjacent(u, v) != H.adjacent(result.mapping[u], result.mapping[v]))
                throw Error("isomorphism witness does not preserve adjacency");
    return result;
}

}  // namespace cayring
