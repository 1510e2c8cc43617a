#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "cayring/invariants.hpp"
#include "cayring/ring_spec.hpp"

using namespace cayring;

namespace {

Graph petersen() {
    Graph G(10);
    for (uint32_t i = 0; i < 5; ++i) {
        G.add_edge(i, (i + 1) % 5);
        G.add_edge(5 + i, 5 + (i + 2) % 5);
        G.add_edge(i, 5 + i);
    }
    return G;
}

Graph path_graph(uint32_t n) {
    Graph G(n);
    for (uint32_t i = 0; i + 1 < n; ++i) G.add_edge(i, i + 1);
    return G;
}

Graph two_triangles_sharing_a_vertex() {
    Graph G(5);
    G.add_edge(0, 1);
    G.add_edge(1, 2);
    G.add_edge(2, 0);
    G.add_edge(0, 3);
    G.add_edge(3, 4);
    G.add_edge(4, 0);
    return G;
}

bool connected_excluding(const Graph& G, uint32_t removed) {
    const uint32_t n = G.n();
    uint32_t start = n;
    for (uint32_t v = 0; v < n; ++v)
        if (!((removed >> v) & 1)) {
            start = v;
            break;
        }
    if (start == n) return true;
    std::vector<bool> seen(n, false);
    std::vector<uint32_t> stack{start};
    seen[start] = true;
    uint32_t reached = 0;
    while (!stack.empty()) {
        uint32_t v = stack.back();
        stack.pop_back();
        ++reached;
        for (uint32_t w : G.neighbors(v))
            if (!seen[w] && !((removed >> w) & 1)) {
                seen[w] = true;
                stack.push_back(w);
            }
    }
    uint32_t total = 0;
    for (uint32_t v = 0; v < n; ++v)
        if (!((removed >> v) & 1)) ++total;
    return reached == total;
}

uint32_t brute_vertex_connectivity(const Graph& G) {
    const uint32_t n = G.n();
    REQUIRE(n <= 12);
    if (!connected_excluding(G, 0)) return 0;
    if (G.is_complete()) return n - 1;
    for (uint32_t k = 1; k + 2 <= n; ++k)
        for (uint32_t mask = 0; mask < (1u << n); ++mask) {
            if (static_cast<uint32_t>(__builtin_popcount(mask)) != k) continue;
            if (!connected_excluding(G, mask)) return k;
        }
    return n - 1;
}

uint32_t brute_edge_connectivity(const Graph& G) {
    const uint32_t n = G.n();
    REQUIRE(n <= 12);
    if (n < 2 || !connected_excluding(G, 0)) return 0;
    uint32_t best = UINT32_MAX;
    // Every bipartition with vertex 0 on the left; crossing edges disconnect.
    // The all-ones mask would leave the right side empty, so it is excluded.
    for (uint32_t mask = 0; mask + 1 < (1u << (n - 1)); ++mask) {
        uint32_t side = (mask << 1) | 1;
        uint32_t crossing = 0;
        for (uint32_t u = 0; u < n; ++u)
            for (uint32_t v = u + 1; v < n; ++v)
                if (G.adjacent(u, v) && (((side >> u) ^ (side >> v)) & 1)) ++crossing;
        best = std::min(best, crossing);
    }
    return best;
}

uint32_t brute_max_clique(const Graph& G) {
    const uint32_t n = G.n();
    REQUIRE(n <= 16);
    uint32_t best = 0;
    for (uint32_t mask = 1; mask < (1u << n); ++mask) {
        bool clique = true;
        for (uint32_t u = 0; u < n && clique; ++u) {
            if (!((mask >> u) & 1)) continue;
            for (uint32_t v = u + 1; v < n && clique; ++v)
                if (((mask >> v) & 1) && !G.adjacent(u, v)) clique = false;
        }
        if (clique) best = std::max(best, static_cast<uint32_t>(__builtin_popcount(mask)));
    }
    return best;
}

bool k_colorable(const Graph& G, uint32_t k, std::vector<uint32_t>& col, uint32_t v) {
    if (v == G.n()) return true;
    uint32_t used = 0;
    for (uint32_t i = 0; i < v; ++i) used = std::max(used, col[i] + 1);
    const uint32_t limit = std::min(k, used + 1);
    for (uint32_t c = 0; c < limit; ++c) {
        bool ok = true;
        for (uint32_t u = 0; u < v && ok; ++u)
            if (col[u] == c && G.adjacent(u, v)) ok = false;
        if (!ok) continue;
        col[v] = c;
        if (k_colorable(G, k, col, v + 1)) return true;
    }
    return false;
}

uint32_t brute_chromatic(const Graph& G) {
    REQUIRE(G.n() <= 12);
    if (G.n() == 0) return 0;
    for (uint32_t k = 1;; ++k) {
        std::vector<uint32_t> col(G.n(), 0);
        if (k_colorable(G, k, col, 0)) return k;
    }
}

void check_cycle(const Graph& G, const std::vector<uint32_t>& cycle) {
    REQUIRE(cycle.size() == G.n());
    std::set<uint32_t> distinct(cycle.begin(), cycle.end());
    CHECK(distinct.size() == G.n());
    for (size_t i = 0; i < cycle.size(); ++i)
        CHECK(G.adjacent(cycle[i], cycle[(i + 1) % cycle.size()]));
}

}  // namespace

TEST_CASE("components and diameter") {
    Graph U = disjoint_union(complete_graph(3), cycle_graph(4));
    auto comps = components(U);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == std::vector<uint32_t>{0, 1, 2});
    CHECK(comps[1].size() == 4);
    CHECK_FALSE(diameter(U).has_value());

    CHECK(diameter(cycle_graph(6)) == 3);
    CHECK(diameter(complete_graph(4)) == 1);
    CHECK(diameter(path_graph(4)) == 3);
    CHECK(diameter(build_cay(ring_from_spec("Z6"))) == 2);
}

TEST_CASE("connectivities match brute force") {
    auto check = [](const Graph& G) {
        CHECK(vertex_connectivity(G) == brute_vertex_connectivity(G));
        CHECK(edge_connectivity(G) == brute_edge_connectivity(G));
    };
    check(cycle_graph(5));
    check(cycle_graph(6));
    check(complete_graph(5));
    check(petersen());
    check(path_graph(5));
    check(two_triangles_sharing_a_vertex());
    check(build_cay(ring_from_spec("Z6")));
    check(build_cay(ring_from_spec("Z8")));   // disconnected: both zero
    check(build_cay(ring_from_spec("Z12")));
    check(build_total_graph(ring_from_spec("Z6")));

    CHECK(vertex_connectivity(build_cay(ring_from_spec("Z12"))) == 6);
    CHECK(edge_connectivity(build_cay(ring_from_spec("Z12"))) == 7);
}

TEST_CASE("disjoint path families from flow") {
    Graph P = petersen();
    PathFamily fam = disjoint_paths_flow(P, 0, 7);  // non-adjacent pair
    CHECK(fam.paths.size() == 3);
    std::string why;
    CHECK(path_family_valid(P, fam, &why));

    Graph C = build_cay(ring_from_spec("Z6"));
    for (uint32_t t = 1; t < 6; ++t) {
        PathFamily f = disjoint_paths_flow(C, 0, t);
        CHECK(path_family_valid(C, f, &why));
        CHECK(f.paths.size() >= 3);
    }
    CHECK_THROWS_AS(disjoint_paths_flow(P, 3, 3), Error);
}

TEST_CASE("maximum clique matches brute force") {
    auto check = [](const Graph& G, uint32_t expect) {
        CliqueResult r = max_clique(G);
        CHECK(r.size == expect);
        CHECK(r.size == brute_max_clique(G));
        CHECK(r.members.size() == r.size);
        for (size_t i = 0; i < r.members.size(); ++i)
            for (size_t j = i + 1; j < r.members.size(); ++j)
                CHECK(G.adjacent(r.members[i], r.members[j]));
    };
    check(build_cay(ring_from_spec("Z6")), 3);
    check(cycle_graph(5), 2);
    check(petersen(), 2);
    check(complete_graph(6), 6);
    check(complement(cycle_graph(7)), 3);
    check(build_cay(ring_from_spec("Z2 x Z2 x Z2")), 4);
    check(build_gcd_graph(12, {2, 3, 4, 6}), brute_max_clique(build_gcd_graph(12, {2, 3, 4, 6})));
}

TEST_CASE("chromatic number matches brute force") {
    auto check = [](const Graph& G) {
        ChromaticResult r = chromatic_number(G);
        CHECK(r.chi == brute_chromatic(G));
        std::string why;
        CHECK(coloring_proper(G, r.coloring, &why));
        CHECK(r.coloring.palette == r.chi);
    };
    check(cycle_graph(5));
    check(cycle_graph(6));
    check(complete_graph(4));
    check(petersen());
    check(build_cay(ring_from_spec("Z6")));
    check(complement(cycle_graph(7)));
    check(build_gcd_graph(12, {2, 3, 4, 6}));

    Coloring bad;
    bad.palette = 2;
    bad.colors.assign(5, 0);
    std::string why;
    CHECK_FALSE(coloring_proper(cycle_graph(5), bad, &why));
    CHECK_FALSE(why.empty());
}

TEST_CASE("perfection and odd holes") {
    PerfectionResult c5 = is_perfect_small(cycle_graph(5));
    REQUIRE_FALSE(c5.perfect);
    CHECK(c5.hole.size() == 5);
    CHECK_FALSE(c5.hole_in_complement);

    PerfectionResult c7 = is_perfect_small(cycle_graph(7));
    REQUIRE_FALSE(c7.perfect);
    CHECK(c7.hole.size() == 7);  // C7 has no shorter induced cycle

    PerfectionResult cc7 = is_perfect_small(complement(cycle_graph(7)));
    REQUIRE_FALSE(cc7.perfect);
    CHECK(cc7.hole_in_complement);

    CHECK(is_perfect_small(cycle_graph(6)).perfect);
    CHECK(is_perfect_small(complete_graph(6)).perfect);
    CHECK(is_perfect_small(build_cay(ring_from_spec("Z6"))).perfect);

    PerfectionResult pet = is_perfect_small(petersen());  // girth 5: the outer C5 is induced
    REQUIRE_FALSE(pet.perfect);
    CHECK(pet.hole.size() == 5);
    CHECK_FALSE(pet.hole_in_complement);
}

TEST_CASE("hamiltonicity") {
    HamiltonResult c6 = is_hamiltonian(cycle_graph(6));
    REQUIRE(c6.hamiltonian);
    check_cycle(cycle_graph(6), c6.cycle);

    CHECK_FALSE(is_hamiltonian(petersen()).hamiltonian);
    CHECK(is_hamiltonian(complete_graph(4)).hamiltonian);
    CHECK_FALSE(is_hamiltonian(path_graph(4)).hamiltonian);

    HamiltonResult z8 = is_hamiltonian(build_cay(ring_from_spec("Z2 x Z4")));
    REQUIRE(z8.hamiltonian);
    check_cycle(build_cay(ring_from_spec("Z2 x Z4")), z8.cycle);
}

TEST_CASE("constructive path families for field products") {
    struct Case {
        std::vector<uint32_t> orders;
        uint32_t X, Y;
        uint32_t at_least;
    };
    const Case cases[] = {
        {{2, 2}, 3, 0, 2},   // |Z| - 1 = 2
        {{2, 3}, 0, 1, 3},   // |Z| - 1 = 3, adjacent pair
        {{3, 3}, 4, 8, 4},   // |Z| - 1 = 4, unit difference
        {{2, 2, 2}, 0, 7, 6},
        {{4, 5}, 1, 13, 7},  // |Z| = 20 - 12 = 8
    };
    for (const Case& c : cases) {
        CAPTURE(c.X);
        CAPTURE(c.Y);
        std::string spec;
        for (size_t i = 0; i < c.orders.size(); ++i)
            spec += (i ? " x GF(" : "GF(") + std::to_string(c.orders[i]) + ")";
        Graph G = build_cay(ring_from_spec(spec));
        PathFamily fam = lemma27_path_family(c.orders, c.X, c.Y);
        std::string why;
        CHECK_MESSAGE(path_family_valid(G, fam, &why), why);
        CHECK(fam.paths.size() >= c.at_least);
        CHECK(fam.paths.size() <= disjoint_paths_flow(G, c.X, c.Y).paths.size());
    }
    // The adjacent pair (0,0)-(0,1) in Z2 x Z3 keeps the direct edge as a path.
    PathFamily direct = lemma27_path_family({2, 3}, 0, 1);
    bool has_edge = false;
    for (const auto& p : direct.paths)
        if (p.size() == 2) has_edge = true;
    CHECK(has_edge);

    CHECK_THROWS_AS(lemma27_path_family({6, 2}, 0, 1), BadFieldOrder);
}

TEST_CASE("latin rectangles") {
    LatinRectangle L = build_latin_rectangle(2, 3, {0, 1, 2});
    CHECK(L.entries == std::vector<std::vector<uint32_t>>{{0, 1, 2}, {1, 2, 0}});
    CHECK_THROWS_AS(build_latin_rectangle(3, 2, {0, 1}), SizeMismatch);
    CHECK_THROWS_AS(build_latin_rectangle(2, 3, {0, 1}), SizeMismatch);
    CHECK_THROWS_AS(build_latin_rectangle(2, 3, {0, 0, 1}), SizeMismatch);
}

TEST_CASE("regular-element coloring from latin rectangles") {
    struct Case {
        const char* spec;
        uint32_t palette;
    };
    const Case cases[] = {
        {"Z2 x Z3", 2},
        {"Z4 x Z3", 4},
        {"Z2 x Z2", 1},
        {"Z2 x GF(4)", 3},
    };
    for (const Case& c : cases) {
        CAPTURE(c.spec);
        FiniteRing R = ring_from_spec(c.spec);
        RingStrata S = compute_strata(R);
        Graph reg = induced_subgraph(build_cay(R, S), S.regular_list());
        Coloring col = color_regular_product(R);
        CHECK(col.palette == c.palette);
        std::string why;
        CHECK_MESSAGE(coloring_proper(reg, col, &why), why);
        CHECK(max_clique(reg).size == c.palette);  // the theorem: omega = chi = palette
    }
    CHECK_THROWS_AS(color_regular_product(ring_from_spec("GF(4) x Z2")), FactorsNotOrdered);
}
