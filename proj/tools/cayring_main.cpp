#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cayring/graph.hpp"
#include "cayring/invariants.hpp"
#include "cayring/ring_spec.hpp"
#include "cayring/verifier.hpp"

namespace {

using namespace cayring;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

// Flow-based connectivity and exact coloring have no flag of their own; these
// bounds keep a single CLI call from running unbounded searches.
constexpr uint32_t kConnectivityCap = 1024;
constexpr uint32_t kColorCap = 512;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open output file: " + path);
    out << content;
    if (!out) throw Error("cannot write output file: " + path);
}

struct GraphRequest {
    std::string ring;
    std::string kind = "cay";
    uint32_t gcd_n = 0;
    std::vector<uint32_t> gcd_t;
    uint64_t cap_order = kDefaultOrderCap;
};

Graph build_requested_graph(const GraphRequest& req, std::string* title) {
    if (req.kind == "gcd") {
        if (!req.ring.empty()) throw UsageError("--ring does not apply to gcd graphs");
        if (req.gcd_n < 2) throw UsageError("gcd graphs need --gcd-n of at least 2");
        if (req.gcd_t.empty()) throw UsageError("gcd graphs need a --gcd-t divisor set");
        *title = "gcd(" + std::to_string(req.gcd_n) + ")";
        return build_gcd_graph(req.gcd_n, req.gcd_t);
    }
    if (req.ring.empty()) throw UsageError("--ring is required for " + req.kind + " graphs");
    FiniteRing R = ring_from_spec(req.ring, req.cap_order);
    RingStrata S = compute_strata(R);
    *title = req.kind + "(" + R.render() + ")";
    if (req.kind == "cay") return build_cay(R, S);
    if (req.kind == "total") return build_total_graph(R, S);
    if (req.kind == "unitary") return build_unitary_cayley(R, S);
    if (req.kind == "reg") return induced_subgraph(build_cay(R, S), S.regular_list());
    if (req.kind == "quotient") return quotient_graph(build_cay(R, S)).first;
    throw UsageError("unknown graph kind: " + req.kind);
}

std::string graph_to_csv(const Graph& G) {
    std::string out = "source,target\n";
    for (uint32_t u = 0; u < G.n(); ++u)
        for (uint32_t v : G.neighbors(u))
            if (u < v) out += std::to_string(u) + "," + std::to_string(v) + "\n";
    return out;
}

std::string graph_to_text(const Graph& G) {
    std::ostringstream out;
    out << "vertices " << G.n() << "\n";
    out << "edges " << G.edge_count() << "\n";
    for (uint32_t u = 0; u < G.n(); ++u) {
        out << G.label(u) << ":";
        for (uint32_t v : G.neighbors(u)) out << " " << G.label(v);
        out << "\n";
    }
    return out.str();
}

int cmd_describe(const std::string& spec, const std::string& format, const std::string& out_path,
                 uint64_t cap_order) {
    FiniteRing R = ring_from_spec(spec, cap_order);
    RingStrata S = compute_strata(R);
    const bool local = is_local(R, S);
    const uint32_t maxima = maximal_ideal_count(R);
    const auto residues = residue_field_sizes(R);
    std::string content;
    if (format == "json") {
        json factors = json::array();
        for (size_t i = 0; i < R.factor_count(); ++i)
            factors.push_back({{"factor", R.factor(i).desc().render()},
                               {"order", R.factor(i).order()},
                               {"residue_field", residues[i]}});
        json doc = {{"ring", R.render()},
                    {"order", R.order()},
                    {"local", local},
                    {"units", S.unit_count()},
                    {"zero_divisors", S.zero_divisor_count()},
                    {"nilpotents", S.nilradical_count()},
                    {"jacobson", S.jacobson_count()},
                    {"maximal_ideals", maxima},
                    {"factors", factors}};
        content = doc.dump(2) + "\n";
    } else {
        std::ostringstream os;
        os << "ring " << R.render() << "\n";
        os << "order " << R.order() << "\n";
        os << "local " << (local ? "yes" : "no") << "\n";
        os << "units " << S.unit_count() << "\n";
        os << "zero_divisors " << S.zero_divisor_count() << "\n";
        os << "nilpotents " << S.nilradical_count() << "\n";
        os << "jacobson " << S.jacobson_count() << "\n";
        os << "maximal_ideals " << maxima << "\n";
        os << "factors";
        for (size_t i = 0; i < R.factor_count(); ++i)
            os << " " << R.factor(i).desc().render() << "(residue " << residues[i] << ")";
        os << "\n";
        content = os.str();
    }
    write_output(out_path, content);
    return kExitOk;
}

int cmd_graph(const GraphRequest& req, const std::string& format, const std::string& out_path) {
    std::string title;
    Graph G = build_requested_graph(req, &title);
    std::string content;
    if (format == "dot")
        content = to_dot(G);
    else if (format == "json")
        content = graph_to_json(G);
    else if (format == "csv")
        content = graph_to_csv(G);
    else
        content = graph_to_text(G);
    write_output(out_path, content);
    return kExitOk;
}

int cmd_invariants(const GraphRequest& req, const std::string& format, const std::string& out_path,
                   uint32_t cap_hole, uint32_t cap_ham) {
    std::string title;
    Graph G = build_requested_graph(req, &title);
    bool capped = false;

    const auto comps = components(G);
    const auto diam = diameter(G);
    std::optional<uint32_t> kappa, lambda;
    if (G.n() <= kConnectivityCap) {
        kappa = vertex_connectivity(G);
        lambda = edge_connectivity(G);
    } else {
        capped = true;
    }
    std::optional<uint32_t> omega, chi;
    if (G.n() <= kColorCap) {
        omega = max_clique(G, kColorCap).size;
        chi = chromatic_number(G, kColorCap).chi;
    } else {
        capped = true;
    }
    std::optional<PerfectionResult> perf;
    if (G.n() <= cap_hole)
        perf = is_perfect_small(G, cap_hole);
    else
        capped = true;
    std::optional<HamiltonResult> ham;
    if (G.n() <= cap_ham)
        ham = is_hamiltonian(G, cap_ham);
    else
        capped = true;

    std::string content;
    if (format == "json") {
        json doc;
        doc["graph"] = title;
        doc["vertices"] = G.n();
        doc["edges"] = G.edge_count();
        doc["components"] = comps.size();
        doc["diameter"] = diam ? json(*diam) : json("inf");
        doc["kappa"] = kappa ? json(*kappa) : json(nullptr);
        doc["kappa_edge"] = lambda ? json(*lambda) : json(nullptr);
        doc["omega"] = omega ? json(*omega) : json(nullptr);
        doc["chi"] = chi ? json(*chi) : json(nullptr);
        if (perf) {
            doc["perfect"] = perf->perfect;
            if (!perf->perfect) {
                doc["hole"] = perf->hole;
                doc["hole_in_complement"] = perf->hole_in_complement;
            }
        } else {
            doc["perfect"] = nullptr;
        }
        if (ham) {
            doc["hamiltonian"] = ham->hamiltonian;
            if (ham->hamiltonian) doc["cycle"] = ham->cycle;
        } else {
            doc["hamiltonian"] = nullptr;
        }
        content = doc.dump(2) + "\n";
    } else {
        std::ostringstream os;
        auto opt_line = [&os](const char* key, const std::optional<uint32_t>& v) {
            os << key << " " << (v ? std::to_string(*v) : std::string("skipped(cap)")) << "\n";
        };
        os << "graph " << title << "\n";
        os << "vertices " << G.n() << "\n";
        os << "edges " << G.edge_count() << "\n";
        os << "components " << comps.size() << "\n";
        os << "diameter " << (diam ? std::to_string(*diam) : std::string("inf")) << "\n";
        opt_line("kappa", kappa);
        opt_line("kappa_edge", lambda);
        opt_line("omega", omega);
        opt_line("chi", chi);
        if (perf) {
            os << "perfect " << (perf->perfect ? "yes" : "no") << "\n";
            if (!perf->perfect) {
                os << "hole" << (perf->hole_in_complement ? " (in complement)" : "");
                for (uint32_t v : perf->hole) os << " " << v;
                os << "\n";
            }
        } else {
            os << "perfect skipped(cap)\n";
        }
        if (ham) {
            os << "hamiltonian " << (ham->hamiltonian ? "yes" : "no") << "\n";
            if (ham->hamiltonian) {
                os << "cycle";
                for (uint32_t v : ham->cycle) os << " " << v;
                os << "\n";
            }
        } else {
            os << "hamiltonian skipped(cap)\n";
        }
        content = os.str();
    }
    write_output(out_path, content);
    return capped ? kExitCap : kExitOk;
}

std::vector<std::string> split_ids(const std::string& arg) {
    std::vector<std::string> ids;
    std::string cur;
    for (char c : arg) {
        if (c == ',') {
            if (!cur.empty()) ids.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    if (!cur.empty()) ids.push_back(cur);
    return ids;
}

int cmd_verify(const std::string& ring, uint64_t zn_max, uint32_t products, uint64_t max_order,
               const std::string& theorems_arg, bool all_flag, const std::string& format,
               const std::string& out_path, const VerifierCaps& caps) {
    RingFamily fam;
    if (!ring.empty()) {
        RingFamily one;
        one.members.push_back(parse_ring_spec(ring, caps.order));
        fam.extend(one);
    }
    if (zn_max >= 2) fam.extend(zn_range(2, zn_max));
    if (products >= 1) fam.extend(local_products(products, max_order, max_order));
    if (fam.members.empty())
        throw UsageError("verify needs at least one of --ring, --zn-max, --products");

    std::vector<std::string> ids;
    if (all_flag || theorems_arg.empty() || theorems_arg == "all") {
        ids = theorem_ids();
    } else {
        ids = split_ids(theorems_arg);
        if (ids.empty()) throw UsageError("--theorems names no theorem");
        const auto& known = theorem_ids();
        for (const auto& id : ids)
            if (std::find(known.begin(), known.end(), id) == known.end())
                throw UsageError("unknown theorem id: " + id);
    }

    SuiteSummary summary;
    const auto reports = run_suite(fam, ids, caps, &summary);
    const std::string content = format == "json" ? reports_to_json(reports) : reports_to_csv(reports);
    write_output(out_path, content);
    std::ostream& info = out_path.empty() ? std::cerr : std::cout;
    info << "checked " << fam.members.size() << " rings: " << summary.passed << " passed, "
         << summary.failed << " failed, " << summary.skipped << " skipped\n";
    return summary.failed > 0 ? kExitVerifyFail : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cayley graphs of finite commutative rings"};
    app.require_subcommand(1);

    auto* describe = app.add_subcommand("describe", "Print ring structure and strata sizes");
    std::string d_ring, d_format = "text", d_out;
    uint64_t d_cap_order = kDefaultOrderCap;
    describe->add_option("--ring", d_ring, "Ring spec, e.g. \"Z6\" or \"Z4 x GF(9)\"")->required();
    describe->add_option("--format", d_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    describe->add_option("--out", d_out, "Output file (default stdout)");
    describe->add_option("--cap-order", d_cap_order, "Largest accepted ring order");

    auto* graphc = app.add_subcommand("graph", "Emit a graph as DOT, JSON, CSV or text");
    GraphRequest g_req;
    std::string g_format = "dot", g_out;
    graphc->add_option("--ring", g_req.ring, "Ring spec, e.g. \"Z4 x GF(9)\"");
    graphc->add_option("--graph", g_req.kind, "cay, total, unitary, gcd, reg or quotient")
        ->check(CLI::IsMember({"cay", "total", "unitary", "gcd", "reg", "quotient"}));
    graphc->add_option("--gcd-n", g_req.gcd_n, "Modulus n for gcd graphs");
    graphc->add_option("--gcd-t", g_req.gcd_t, "Divisor set for gcd graphs, e.g. 2,3")
        ->delimiter(',');
    graphc->add_option("--format", g_format, "dot, json, csv or text")
        ->check(CLI::IsMember({"dot", "json", "csv", "text"}));
    graphc->add_option("--out", g_out, "Output file (default stdout)");
    graphc->add_option("--cap-order", g_req.cap_order, "Largest accepted ring order");

    auto* inv = app.add_subcommand("invariants", "Exact graph invariants, subject to caps");
    GraphRequest i_req;
    std::string i_format = "text", i_out;
    uint32_t i_cap_hole = 64, i_cap_ham = 64;
    inv->add_option("--ring", i_req.ring, "Ring spec");
    inv->add_option("--graph", i_req.kind, "cay, total, unitary, gcd, reg or quotient")
        ->check(CLI::IsMember({"cay", "total", "unitary", "gcd", "reg", "quotient"}));
    inv->add_option("--gcd-n", i_req.gcd_n, "Modulus n for gcd graphs");
    inv->add_option("--gcd-t", i_req.gcd_t, "Divisor set for gcd graphs")->delimiter(',');
    inv->add_option("--format", i_format, "text or json")->check(CLI::IsMember({"text", "json"}));
    inv->add_option("--out", i_out, "Output file (default stdout)");
    inv->add_option("--cap-order", i_req.cap_order, "Largest accepted ring order");
    inv->add_option("--cap-hole", i_cap_hole, "Largest graph searched for odd holes");
    inv->add_option("--cap-ham", i_cap_ham, "Largest graph searched for Hamiltonian cycles");

    auto* ver = app.add_subcommand("verify", "Check the paper's statements on ring families");
    std::string v_ring, v_theorems = "all", v_format = "csv", v_out;
    uint64_t v_zn_max = 0, v_max_order = 256;
    uint32_t v_products = 0;
    bool v_all = false;
    VerifierCaps v_caps;
    ver->add_option("--ring", v_ring, "Verify a single ring");
    ver->add_option("--zn-max", v_zn_max, "Verify Z_n for every n up to this bound");
    ver->add_option("--products", v_products, "Verify products of this many local factors");
    ver->add_option("--max-order", v_max_order, "Order cap for --products families (default 256)");
    ver->add_option("--theorems", v_theorems, "Comma-separated theorem ids, or all");
    ver->add_flag("--all", v_all, "Check every theorem");
    ver->add_option("--format", v_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    ver->add_option("--out", v_out, "Report file (default stdout)");
    ver->add_option("--cap-order", v_caps.order, "Largest verified ring order");
    ver->add_option("--cap-hole", v_caps.hole, "Perfection certificate cap");
    ver->add_option("--cap-ham", v_caps.hamilton, "Hamiltonian search cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*describe) return cmd_describe(d_ring, d_format, d_out, d_cap_order);
        if (*graphc) return cmd_graph(g_req, g_format, g_out);
        if (*inv) return cmd_invariants(i_req, i_format, i_out, i_cap_hole, i_cap_ham);
        if (*ver)
            return cmd_verify(v_ring, v_zn_max, v_products, v_max_order, v_theorems, v_all,
                              v_format, v_out, v_caps);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const SyntaxError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const NotPrimePower& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const BadDivisor& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const OrderCapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const SizeCapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFail;
    }
    return kExitUsage;
}
