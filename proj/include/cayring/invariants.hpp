#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cayring/graph.hpp"
#include "cayring/ring.hpp"

namespace cayring {

// Connected components, each sorted ascending, ordered by least vertex.
std::vector<std::vector<uint32_t>> components(const Graph& G);

// Maximum eccentricity; nullopt when the graph is disconnected.
std::optional<uint32_t> diameter(const Graph& G);

// Exact connectivities via unit-capacity max-flow. Disconnected graphs give 0,
// complete graphs n-1.
uint32_t vertex_connectivity(const Graph& G);
uint32_t edge_connectivity(const Graph& G);

struct PathFamily {
    uint32_t source = 0;
    uint32_t target = 0;
    std::vector<std::vector<uint32_t>> paths;
};

// Maximum family of pairwise internally disjoint s-t paths, from a
// vertex-split max-flow; the family size equals the flow value.
PathFamily disjoint_paths_flow(const Graph& G, uint32_t s, uint32_t t);

// Checks the PathFamily invariants against G; on failure optionally reports why.
bool path_family_valid(const Graph& G, const PathFamily& family, std::string* reason = nullptr);

struct CliqueResult {
    uint32_t size = 0;
    std::vector<uint32_t> members;
};

CliqueResult max_clique(const Graph& G, uint32_t cap = 512);

struct Coloring {
    std::vector<uint32_t> colors;  // vertex -> color in [0, palette)
    uint32_t palette = 0;
};

struct ChromaticResult {
    uint32_t chi = 0;
    Coloring coloring;
};

ChromaticResult chromatic_number(const Graph& G, uint32_t cap = 512);

bool coloring_proper(const Graph& G, const Coloring& coloring, std::string* reason = nullptr);

struct PerfectionResult {
    bool perfect = false;
    std::vector<uint32_t> hole;  // induced odd cycle of length >= 5 when not perfect
    bool hole_in_complement = false;
};

PerfectionResult is_perfect_small(const Graph& G, uint32_t cap = 64);

struct HamiltonResult {
    bool hamiltonian = false;
    std::vector<uint32_t> cycle;
};

HamiltonResult is_hamiltonian(const Graph& G, uint32_t cap = 64);

// The constructive internally disjoint path family between X and Y in
// CAY(F_1 x ... x F_n) for finite fields of the given orders. X and Y are
// vertex indices in the product's mixed-radix encoding (first factor most
// significant). Produces at least |Z(R)| - 1 paths.
PathFamily lemma27_path_family(const std::vector<uint32_t>& field_orders, uint32_t X, uint32_t Y);

struct LatinRectangle {
    uint32_t rows = 0;
    uint32_t cols = 0;
    std::vector<std::vector<uint32_t>> entries;
};

// Row i is the cyclic shift by i of the symbol list; needs rows <= cols and
// exactly cols symbols.
LatinRectangle build_latin_rectangle(uint32_t x_size, uint32_t y_size,
                                     const std::vector<uint32_t>& symbols);

// Proper coloring of the regular induced subgraph of CAY(R) with palette
// |m_1| * prod_{i>=2} (|R_i| - |m_i|), built from Latin rectangles over the
// residue fields. Factors must be ordered by non-decreasing residue field
// size. Colors are indexed by position in the ascending list of regular
// elements (the vertex order of induced_subgraph on that list).
Coloring color_regular_product(const FiniteRing& R);

}  // namespace cayring
