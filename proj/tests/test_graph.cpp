#include <doctest.h>

#include <json.hpp>
#include <numeric>
#include <vector>

#include "cayring/graph.hpp"
#include "cayring/ring_spec.hpp"

using namespace cayring;

namespace {

Graph petersen() {
    Graph G(10);
    for (uint32_t i = 0; i < 5; ++i) {
        G.add_edge(i, (i + 1) % 5);          // outer cycle
        G.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        G.add_edge(i, 5 + i);                // spokes
    }
    return G;
}

Graph kneser_5_2() {
    std::vector<std::pair<uint32_t, uint32_t>> pairs;
    for (uint32_t a = 0; a < 5; ++a)
        for (uint32_t b = a + 1; b < 5; ++b) pairs.push_back({a, b});
    Graph G(static_cast<uint32_t>(pairs.size()));
    for (uint32_t i = 0; i < pairs.size(); ++i)
        for (uint32_t j = i + 1; j < pairs.size(); ++j) {
            auto [a, b] = pairs[i];
            auto [c, d] = pairs[j];
            if (a != c && a != d && b != c && b != d) G.add_edge(i, j);
        }
    return G;
}

}  // namespace

TEST_CASE("graph basics") {
    Graph G(4);
    G.add_edge(0, 1);
    G.add_edge(1, 2);
    CHECK(G.adjacent(0, 1));
    CHECK(G.adjacent(1, 0));
    CHECK_FALSE(G.adjacent(0, 2));
    CHECK(G.degree(1) == 2);
    CHECK(G.edge_count() == 2);
    CHECK(G.neighbors(1) == std::vector<uint32_t>{0, 2});
    CHECK(G.min_degree() == 0);
    CHECK_FALSE(G.regular_degree().has_value());
    CHECK(G.label(3) == "3");

    CHECK(complete_graph(4).is_complete());
    CHECK(complete_graph(4).edge_count() == 6);
    CHECK(cycle_graph(5).regular_degree() == 2);
    CHECK(cycle_graph(5).edge_count() == 5);
}

TEST_CASE("CAY(Z6) equals the gcd graph X_6({2,3}) up to the CRT relabeling") {
    CrtDecomposition crt = crt_decompose(6);
    RingStrata S = compute_strata(crt.ring);
    Graph C = build_cay(crt.ring, S);
    Graph X = build_gcd_graph(6, {2, 3});
    REQUIRE(C.n() == 6);
    CHECK(C.regular_degree() == 3);
    for (uint32_t a = 0; a < 6; ++a)
        for (uint32_t b = 0; b < 6; ++b)
            CHECK(X.adjacent(a, b) == C.adjacent(crt.to_ring[a], crt.to_ring[b]));

    Graph U = build_unitary_cayley(crt.ring, S);
    Graph X1 = build_gcd_graph(6, {1});
    for (uint32_t a = 0; a < 6; ++a)
        for (uint32_t b = 0; b < 6; ++b)
            CHECK(X1.adjacent(a, b) == U.adjacent(crt.to_ring[a], crt.to_ring[b]));
}

TEST_CASE("total graph of Z6 matches the sum-of-zero-divisors definition") {
    CrtDecomposition crt = crt_decompose(6);
    Graph T = build_total_graph(crt.ring);
    CHECK(T.edge_count() == 9);
    for (uint32_t a = 0; a < 6; ++a)
        for (uint32_t b = 0; b < 6; ++b) {
            uint32_t s = (a + b) % 6;
            bool zd_sum = s == 0 || s == 2 || s == 3 || s == 4;
            CHECK(T.adjacent(crt.to_ring[a], crt.to_ring[b]) == (a != b && zd_sum));
        }
}

TEST_CASE("unitary Cayley graph is the complement of CAY") {
    for (const char* spec : {"Z6", "Z12", "Z8", "Z2 x Z2 x Z2", "GF(9)"}) {
        CAPTURE(spec);
        FiniteRing R = ring_from_spec(spec);
        RingStrata S = compute_strata(R);
        CHECK(complement(build_cay(R, S)) == build_unitary_cayley(R, S));
    }
}

TEST_CASE("CAY of the boolean cube complements a perfect matching") {
    FiniteRing R = ring_from_spec("Z2 x Z2 x Z2");
    Graph G = build_cay(R);
    REQUIRE(G.n() == 8);
    CHECK(G.regular_degree() == 6);
    CHECK(G.edge_count() == 24);
    Graph M = complement(G);
    CHECK(M.regular_degree() == 1);
    for (uint32_t x = 0; x < 8; ++x) CHECK(M.adjacent(x, 7 - x));  // partner flips every bit
}

TEST_CASE("quotient by closed neighborhoods collapses Nil cosets") {
    FiniteRing R = ring_from_spec("Z4");
    auto [Q, cert] = quotient_graph(build_cay(R));
    CHECK(Q.n() == 2);
    CHECK(Q.edge_count() == 0);
    CHECK(cert.classes == std::vector<std::vector<uint32_t>>{{0, 2}, {1, 3}});
    CHECK(cert.class_map == std::vector<uint32_t>{0, 1, 0, 1});
}

TEST_CASE("induced subgraphs keep labels and reject empty sets") {
    FiniteRing R = ring_from_spec("Z6");
    RingStrata S = compute_strata(R);
    Graph C = build_cay(R, S);
    Graph I = induced_subgraph(C, S.regular_list());
    REQUIRE(I.n() == 2);
    CHECK(I.edge_count() == 1);  // 1 - 5 = -4, a zero divisor in Z6
    CHECK(I.label(0) == C.label(S.regular_list()[0]));
    CHECK_THROWS_AS(induced_subgraph(C, {}), EmptyVertexSet);
}

TEST_CASE("gcd graph rejects bad divisor sets") {
    CHECK_THROWS_AS(build_gcd_graph(6, {4}), BadDivisor);
    CHECK_THROWS_AS(build_gcd_graph(6, {6}), BadDivisor);
    CHECK_THROWS_AS(build_gcd_graph(6, {0}), BadDivisor);
}

TEST_CASE("products and unions") {
    Graph K2K3 = cartesian_product(complete_graph(2), complete_graph(3));
    CHECK(K2K3.n() == 6);
    CHECK(K2K3.regular_degree() == 3);
    CHECK(are_isomorphic(build_cay(ring_from_spec("Z6")), K2K3).isomorphic);

    Graph D = direct_product(complete_graph(2), complete_graph(2));
    CHECK(D.n() == 4);
    CHECK(D.edge_count() == 2);

    Graph U = disjoint_union(complete_graph(3), complete_graph(3));
    CHECK(U.n() == 6);
    CHECK(U.edge_count() == 6);
}

TEST_CASE("isomorphism testing") {
    IsoResult r = are_isomorphic(cycle_graph(5), cycle_graph(5));
    REQUIRE(r.isomorphic);
    REQUIRE(r.mapping.size() == 5);
    for (uint32_t u = 0; u < 5; ++u)
        for (uint32_t v = 0; v < 5; ++v)
            CHECK(cycle_graph(5).adjacent(u, v) ==
                  cycle_graph(5).adjacent(r.mapping[u], r.mapping[v]));

    CHECK_FALSE(are_isomorphic(cycle_graph(6),
                               disjoint_union(complete_graph(3), complete_graph(3)))
                    .isomorphic);
    CHECK(are_isomorphic(petersen(), kneser_5_2()).isomorphic);

    // Relabeling CAY(Z8) by a fixed permutation preserves isomorphism.
    Graph G = build_cay(ring_from_spec("Z8"));
    std::vector<uint32_t> perm = {3, 6, 0, 7, 1, 4, 2, 5};
    Graph H(G.n());
    for (uint32_t u = 0; u < G.n(); ++u)
        for (uint32_t v = u + 1; v < G.n(); ++v)
            if (G.adjacent(u, v)) H.add_edge(perm[u], perm[v]);
    CHECK(are_isomorphic(G, H).isomorphic);

    CHECK_THROWS_AS(are_isomorphic(cycle_graph(9), cycle_graph(9), 8), SizeCapExceeded);
}

TEST_CASE("DOT output is deterministic and frozen for K2") {
    CHECK(to_dot(complete_graph(2)) ==
          "graph G {\n"
          "  v0 [label=\"0\"];\n"
          "  v1 [label=\"1\"];\n"
          "  v0 -- v1;\n"
          "}\n");
    Graph C = build_cay(ring_from_spec("Z6"));
    CHECK(to_dot(C) == to_dot(C));
}

TEST_CASE("JSON graph serialization") {
    auto doc = nlohmann::json::parse(graph_to_json(complete_graph(3)));
    CHECK(doc.at("n") == 3);
    CHECK(doc.at("edges") == nlohmann::json({{0, 1}, {0, 2}, {1, 2}}));
    REQUIRE(doc.at("labels").size() == 3);
    CHECK(doc.at("labels")[2] == "2");

    Graph C = build_cay(ring_from_spec("Z12"));
    CHECK(graph_to_json(C) == graph_to_json(C));
    auto parsed = nlohmann::json::parse(graph_to_json(C));
    CHECK(parsed.at("labels")[7] == "(2,1)");
}
