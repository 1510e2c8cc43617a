#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cayring/bits.hpp"
#include "cayring/errors.hpp"
#include "cayring/ring.hpp"

namespace cayring {

// Simple undirected graph over vertices 0..n-1, adjacency stored as dense
// bit-rows (row u has bit v set iff u ~ v). Symmetric, zero diagonal.
class Graph {
public:
    Graph() = default;
    explicit Graph(uint32_t n, std::vector<std::string> labels = {});

    uint32_t n() const { return n_; }
    size_t row_words() const { return words_; }
    const uint64_t* row(uint32_t u) const { return adj_.data() + size_t(u) * words_; }

    void add_edge(uint32_t u, uint32_t v);
    bool adjacent(uint32_t u, uint32_t v) const { return bits::test(row(u), v); }
    uint32_t degree(uint32_t u) const { return static_cast<uint32_t>(bits::popcount(row(u), words_)); }
    uint64_t edge_count() const;
    std::vector<uint32_t> neighbors(uint32_t u) const;

    const std::string& label(uint32_t u) const { return labels_[u]; }
    const std::vector<std::string>& labels() const { return labels_; }

    bool is_complete() const;
    uint32_t min_degree() const;
    // Degree if every vertex has the same one.
    std::optional<uint32_t> regular_degree() const;

    bool operator==(const Graph& other) const { return n_ == other.n_ && adj_ == other.adj_; }

private:
    uint32_t n_ = 0;
    size_t words_ = 0;
    std::vector<uint64_t> adj_;
    std::vector<std::string> labels_;
};

struct QuotientCertificate {
    std::vector<std::vector<uint32_t>> classes;  // sorted internally, ordered by least member
    std::vector<uint32_t> class_map;             // vertex -> class index
};

// x ~ y iff x != y and x - y is a zero divisor. Asserts |Z|-1 regularity.
Graph build_cay(const FiniteRing& R, const RingStrata& strata);
Graph build_cay(const FiniteRing& R);

// x ~ y iff x != y and x + y is a zero divisor.
Graph build_total_graph(const FiniteRing& R, const RingStrata& strata);
Graph build_total_graph(const FiniteRing& R);

// x ~ y iff x - y is a unit. Asserts it is the complement of build_cay.
Graph build_unitary_cayley(const FiniteRing& R, const RingStrata& strata);
Graph build_unitary_cayley(const FiniteRing& R);

// Vertices 0..n-1, x ~ y iff gcd(x - y, n) is in divisors. Every divisor must
// divide n and lie in [1, n-1].
Graph build_gcd_graph(uint32_t n, const std::vector<uint32_t>& divisors);

Graph complement(const Graph& G);
Graph induced_subgraph(const Graph& G, const std::vector<uint32_t>& verts);
Graph cartesian_product(const Graph& G, const Graph& H);
Graph direct_product(const Graph& G, const Graph& H);
Graph disjoint_union(const Graph& G, const Graph& H);

// Collapses classes of equal closed neighborhoods; [x] ~ [y] iff x ~ y.
std::pair<Graph, QuotientCertificate> quotient_graph(const Graph& G);

Graph complete_graph(uint32_t n);
Graph cycle_graph(uint32_t n);

// Deterministic DOT: vertices ascending, edges u < v in lexicographic order.
std::string to_dot(const Graph& G, const std::string& name = "G");
// {"n": ..., "edges": [[u,v], ...] sorted, "labels": [...]}
std::string graph_to_json(const Graph& G);

struct IsoResult {
    bool isomorphic = false;
    std::vector<uint32_t> mapping;  // vertex of G -> vertex of H when isomorphic
};

// Exact isomorphism test for graphs of at most `cap` vertices (default 512).
IsoResult are_isomorphic(const Graph& G, const Graph& H, uint32_t cap = 512);

}  // namespace cayring
