#include "cayring/invariants.hpp"

namespace cayring {

namespace {

uint64_t mask_above(uint32_t v) {
    return v >= 63 ? 0 : ~((uint64_t(1) << (v + 1)) - 1);
}

// Chordless-cycle search on at most 64 vertices, masks in single words.
// Holes are anchored at their minimum vertex; reflections are killed by
// requiring the closing vertex to exceed the second one.
struct HoleFinder {
    uint32_t n;
    std::vector<uint64_t> nbr;  // open neighborhoods
    uint32_t target_len = 0;
    std::vector<uint32_t> path;
    std::vector<uint32_t> found;

    explicit HoleFinder(const Graph& G) : n(G.n()), nbr(G.n(), 0) {
        for (uint32_t u = 0; u < n; ++u)
            for (uint32_t v = 0; v < n; ++v)
                if (G.adjacent(u, v)) nbr[u] |= uint64_t(1) << v;
    }

    // banned_mid: closed neighborhoods of path[1..k-2]; the anchor's
    // neighborhood is excluded separately so the cycle can close on it.
    bool extend(uint64_t banned_mid, uint64_t above) {
        const uint32_t anchor = path[0];
        const uint32_t last = path.back();
        if (path.size() == target_len - 1) {
            uint64_t close = nbr[last] & nbr[anchor] & ~banned_mid & above & mask_above(path[1]);
            if (close) {
                found = path;
                found.push_back(static_cast<uint32_t>(__builtin_ctzll(close)));
                return true;
            }
            return false;
        }
        uint64_t cand = nbr[last] & ~banned_mid & ~nbr[anchor] & above;
        uint64_t next_banned = banned_mid | nbr[last] | (uint64_t(1) << last);
        while (cand) {
            uint32_t v = static_cast<uint32_t>(__builtin_ctzll(cand));
            cand &= cand - 1;
            path.push_back(v);
            if (extend(next_banned, above)) return true;
            path.pop_back();
        }
        return false;
    }

    // Shortest odd hole of length >= 5, or empty.
    std::vector<uint32_t> search() {
        for (uint32_t len = 5; len <= n; len += 2) {
            target_len = len;
            for (uint32_t anchor = 0; anchor < n; ++anchor) {
                uint64_t above = mask_above(anchor);
                uint64_t seconds = nbr[anchor] & above;
                while (seconds) {
                    uint32_t u = static_cast<uint32_t>(__builtin_ctzll(seconds));
                    seconds &= seconds - 1;
                    path = {anchor, u};
                    if (extend(0, above)) return found;
                }
            }
        }
        return {};
    }
};

void check_hole(const Graph& G, const std::vector<uint32_t>& hole) {
    const size_t len = hole.size();
    if (len < 5 || len % 2 == 0) throw Error("hole witness has bad length");
    for (size_t i = 0; i < len; ++i)
        for (size_t j = i + 1; j < len; ++j) {
            bool consecutive = (j == i + 1) || (i == 0 && j == len - 1);
            if (G.adjacent(hole[i], hole[j]) != consecutive)
                throw Error("hole witness is not an induced odd cycle");
        }
}

}  // namespace

PerfectionResult is_perfect_small(const Graph& G, uint32_t cap) {
    if (G.n() > cap || G.n() > 64)
        throw SizeCapExceeded("perfection test capped at " +
                              std::to_string(std::min<uint32_t>(cap, 64)) + " vertices");
    PerfectionResult result;

    std::vector<uint32_t> hole = HoleFinder(G).search();
    if (!hole.empty()) {
        check_hole(G, hole);
        result.perfect = false;
        result.hole = std::move(hole);
        result.hole_in_complement = false;
        return result;
    }
    Graph co = complement(G);
    hole = HoleFinder(co).search();
    if (!hole.empty()) {
        check_hole(co, hole);
        result.perfect = false;
        result.hole = std::move(hole);
        result.hole_in_complement = true;
        return result;
    }
    result.perfect = true;
    return result;
}

}  // namespace cayring
