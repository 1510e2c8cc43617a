#include "cayring/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace cayring {

Graph::Graph(uint32_t n, std::vector<std::string> labels)
    : n_(n), words_(bits::word_count(n)), adj_(size_t(n) * bits::word_count(n), 0) {
    if (labels.empty()) {
        labels_.reserve(n);
        for (uint32_t v = 0; v < n; ++v) labels_.push_back(std::to_string(v));
    } else {
        if (labels.size() != n) throw Error("label count does not match vertex count");
        labels_ = std::move(labels);
    }
}

void Graph::add_edge(uint32_t u, uint32_t v) {
    if (u >= n_ || v >= n_) throw IndexOutOfRange("edge endpoint out of range");
    if (u == v) throw Error("self loops are not allowed");
    bits::set(adj_.data() + size_t(u) * words_, v);
    bits::set(adj_.data() + size_t(v) * words_, u);
}

uint64_t Graph::edge_count() const {
    uint64_t total = 0;
    for (uint32_t u = 0; u < n_; ++u) total += degree(u);
    return total / 2;
}

std::vector<uint32_t> Graph::neighbors(uint32_t u) const {
    std::vector<elem> list = bits::to_list(std::vector<uint64_t>(row(u), row(u) + words_), n_);
    return std::vector<uint32_t>(list.begin(), list.end());
}

bool Graph::is_complete() const {
    for (uint32_t u = 0; u < n_; ++u)
        if (degree(u) != n_ - 1) return false;
    return true;
}

uint32_t Graph::min_degree() const {
    uint32_t best = n_ ? degree(0) : 0;
    for (uint32_t u = 1; u < n_; ++u) best = std::min(best, degree(u));
    return best;
}

std::optional<uint32_t> Graph::regular_degree() const {
    if (n_ == 0) return 0;
    uint32_t d = degree(0);
    for (uint32_t u = 1; u < n_; ++u)
        if (degree(u) != d) return std::nullopt;
    return d;
}

namespace {

std::vector<std::string> ring_labels(const FiniteRing& R) {
    std::vector<std::string> labels;
    labels.reserve(R.order());
    for (elem x = 0; x < R.order(); ++x) labels.push_back(R.label(x));
    return labels;
}

}  // namespace

Graph build_cay(const FiniteRing& R, const RingStrata& strata) {
    const uint32_t n = static_cast<uint32_t>(R.order());
    Graph G(n, ring_labels(R));
    for (elem x = 0; x < n; ++x)
        for (elem y = x + 1; y < n; ++y)
            if (strata.is_zero_divisor(R.sub(x, y))) G.add_edge(x, y);
    const uint64_t expected = strata.zero_divisor_count() - 1;
    if (G.regular_degree() != std::optional<uint32_t>(static_cast<uint32_t>(expected)))
        throw Error("cay graph is not |Z(R)|-1 regular");
    return G;
}

Graph build_cay(const FiniteRing& R) { return build_cay(R, compute_strata(R)); }

Graph build_total_graph(const FiniteRing& R, const RingStrata& strata) {
    const uint32_t n = static_cast<uint32_t>(R.order());
    Graph G(n, ring_labels(R));
    for (elem x = 0; x < n; ++x)
        for (elem y = x + 1; y < n; ++y)
            if (strata.is_zero_divisor(R.add(x, y))) G.add_edge(x, y);
    return G;
}

Graph build_total_graph(const FiniteRing& R) { return build_total_graph(R, compute_strata(R)); }

Graph build_unitary_cayley(const FiniteRing& R, const RingStrata& strata) {
    const uint32_t n = static_cast<uint32_t>(R.order());
    Graph G(n, ring_labels(R));
    for (elem x = 0; x < n; ++x)
        for (elem y = x + 1; y < n; ++y)
            if (strata.is_unit(R.sub(x, y))) G.add_edge(x, y);
    if (!(complement(build_cay(R, strata)) == G))
        throw Error("unitary Cayley graph is not the complement of the cay graph");
    return G;
}

Graph build_unitary_cayley(const FiniteRing& R) { return build_unitary_cayley(R, compute_strata(R)); }

Graph build_gcd_graph(uint32_t n, const std::vector<uint32_t>& divisors) {
    if (n < 1) throw BadDivisor("modulus must be positive");
    for (uint32_t d : divisors) {
        if (d < 1 || d > n - 1 || n % d != 0)
            throw BadDivisor("divisor " + std::to_string(d) + " is not a proper divisor of " +
                             std::to_string(n));
    }
    std::vector<bool> in_set(n, false);
    for (uint32_t d : divisors) in_set[d] = true;
    Graph G(n);
    for (uint32_t x = 0; x < n; ++x)
        for (uint32_t y = x + 1; y < n; ++y) {
            uint32_t g = std::gcd(y - x, n);
            if (g < n && in_set[g]) G.add_edge(x, y);
        }
    return G;
}

Graph complement(const Graph& G) {
    const uint32_t n = G.n();
    Graph H(n, G.labels());
    for (uint32_t u = 0; u < n; ++u)
        for (uint32_t v = u + 1; v < n; ++v)
            if (!G.adjacent(u, v)) H.add_edge(u, v);
    return H;
}

Graph induced_subgraph(const Graph& G, const std::vector<uint32_t>& verts) {
    if (verts.empty()) throw EmptyVertexSet("induced subgraph needs at least one vertex");
    std::vector<std::string> labels;
    labels.reserve(verts.size());
    for (uint32_t v : verts) {
        if (v >= G.n()) throw IndexOutOfRange("vertex out of range");
        labels.push_back(G.label(v));
    }
    Graph H(static_cast<uint32_t>(verts.size()), std::move(labels));
    for (uint32_t i = 0; i < verts.size(); ++i)
        for (uint32_t j = i + 1; j < verts.size(); ++j)
            if (G.adjacent(verts[i], verts[j])) H.add_edge(i, j);
    return H;
}

Graph cartesian_product(const Graph& G, const Graph& H) {
    const uint32_t n = G.n() * H.n();
    std::vector<std::string> labels;
    labels.reserve(n);
    for (uint32_t g = 0; g < G.n(); ++g)
        for (uint32_t h = 0; h < H.n(); ++h) labels.push_back("(" + G.label(g) + "," + H.label(h) + ")");
    Graph P(n, std::move(labels));
    auto id = [&](uint32_t g, uint32_t h) { return g * H.n() + h; };
    for (uint32_t g = 0; g < G.n(); ++g)
        for (uint32_t h = 0; h < H.n(); ++h) {
            for (uint32_t h2 = h + 1; h2 < H.n(); ++h2)
                if (H.adjacent(h, h2)) P.add_edge(id(g, h), id(g, h2));
            for (uint32_t g2 = g + 1; g2 < G.n(); ++g2)
                if (G.adjacent(g, g2)) P.add_edge(id(g, h), id(g2, h));
        }
    return P;
}

Graph direct_product(const Graph& G, const Graph& H) {
    const uint32_t n = G.n() * H.n();
    std::vector<std::string> labels;
    labels.reserve(n);
    for (uint32_t g = 0; g < G.n(); ++g)
        for (uint32_t h = 0; h < H.n(); ++h) labels.push_back("(" + G.label(g) + "," + H.label(h) + ")");
    Graph P(n, std::move(labels));
    auto id = [&](uint32_t g, uint32_t h) { return g * H.n() + h; };
    for (uint32_t g = 0; g < G.n(); ++g)
        for (uint32_t g2 = 0; g2 < G.n(); ++g2) {
            if (!G.adjacent(g, g2)) continue;
            for (uint32_t h = 0; h < H.n(); ++h)
                for (uint32_t h2 = 0; h2 < H.n(); ++h2)
                    if (H.adjacent(h, h2) && id(g, h) < id(g2, h2)) P.add_edge(id(g, h), id(g2, h2));
        }
    return P;
}

Graph disjoint_union(const Graph& G, const Graph& H) {
    std::vector<std::string> labels = G.labels();
    labels.insert(labels.end(), H.labels().begin(), H.labels().end());
    Graph U(G.n() + H.n(), std::move(labels));
    for (uint32_t u = 0; u < G.n(); ++u)
        for (uint32_t v = u + 1; v < G.n(); ++v)
            if (G.adjacent(u, v)) U.add_edge(u, v);
    for (uint32_t u = 0; u < H.n(); ++u)
        for (uint32_t v = u + 1; v < H.n(); ++v)
            if (H.adjacent(u, v)) U.add_edge(G.n() + u, G.n() + v);
    return U;
}

std::pair<Graph, QuotientCertificate> quotient_graph(const Graph& G) {
    const uint32_t n = G.n();
    const size_t words = G.row_words();

    // Group vertices by closed neighborhood N[v] = row(v) | {v}.
    std::map<std::vector<uint64_t>, std::vector<uint32_t>> groups;
    for (uint32_t v = 0; v < n; ++v) {
        std::vector<uint64_t> closed(G.row(v), G.row(v) + words);
        bits::set(closed.data(), v);
        groups[closed].push_back(v);
    }

    QuotientCertificate cert;
    cert.classes.reserve(groups.size());
    for (auto& [key, members] : groups) cert.classes.push_back(members);
    std::sort(cert.classes.begin(), cert.classes.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    cert.class_map.assign(n, 0);
    for (uint32_t c = 0; c < cert.classes.size(); ++c)
        for (uint32_t v : cert.classes[c]) cert.class_map[v] = c;

    // Adjacency must be class-constant for the quotient to be well defined.
    for (uint32_t u = 0; u < n; ++u)
        for (uint32_t v = u + 1; v < n; ++v) {
            if (cert.class_map[u] == cert.class_map[v]) continue;
            uint32_t ru = cert.classes[cert.class_map[u]].front();
            uint32_t rv = cert.classes[cert.class_map[v]].front();
            if (G.adjacent(u, v) != G.adjacent(ru, rv))
                throw Error("quotient adjacency is not class-constant");
        }

    std::vector<std::string> labels;
    labels.reserve(cert.classes.size());
    for (const auto& cls : cert.classes) labels.push_back(G.label(cls.front()));
    Graph Q(static_cast<uint32_t>(cert.classes.size()), std::move(labels));
    for (uint32_t a = 0; a < cert.classes.size(); ++a)
        for (uint32_t b = a + 1; b < cert.classes.size(); ++b)
            if (G.adjacent(cert.classes[a].front(), cert.classes[b].front())) Q.add_edge(a, b);
    return {std::move(Q), std::move(cert)};
}

Graph complete_graph(uint32_t n) {
    Graph G(n);
    for (uint32_t u = 0; u < n; ++u)
        for (uint32_t v = u + 1; v < n; ++v) G.add_edge(u, v);
    return G;
}

Graph cycle_graph(uint32_t n) {
    if (n < 3) throw Error("cycle graph needs at least 3 vertices");
    Graph G(n);
    for (uint32_t u = 0; u < n; ++u) G.add_edge(u, (u + 1) % n);
    return G;
}

std::string to_dot(const Graph& G, const std::string& name) {
    std::ostringstream out;
    out << "graph " << name << " {\n";
    for (uint32_t v = 0; v < G.n(); ++v)
        out << "  v" << v << " [label=\"" << G.label(v) << "\"];\n";
    for (uint32_t u = 0; u < G.n(); ++u)
        for (uint32_t v = u + 1; v < G.n(); ++v)
            if (G.adjacent(u, v)) out << "  v" << u << " -- v" << v << ";\n";
    out << "}\n";
    return out.str();
}

std::string graph_to_json(const Graph& G) {
    nlohmann::json j;
    j["n"] = G.n();
    auto edges = nlohmann::json::array();
    for (uint32_t u = 0; u < G.n(); ++u)
        for (uint32_t v = u + 1; v < G.n(); ++v)
            if (G.adjacent(u, v)) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    j["labels"] = G.labels();
    return j.dump(2) + "\n";
}

}  // namespace cayring
