#include <algorithm>
#include <functional>
#include <set>

#include "cayring/invariants.hpp"
#include "cayring/local_ring.hpp"

namespace cayring {

namespace {

using Tuple = std::vector<uint32_t>;

// In CAY of a product of fields, two tuples are adjacent iff they differ yet
// agree in some coordinate.
bool tuples_adjacent(const Tuple& a, const Tuple& b) {
    bool equal = true, shared = false;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == b[i])
            shared = true;
        else
            equal = false;
    }
    return !equal && shared;
}

uint64_t zero_divisor_count(const std::vector<uint32_t>& q) {
    uint64_t total = 1, units = 1;
    for (uint32_t qi : q) {
        total *= qi;
        units *= qi - 1;
    }
    return total - units;
}

uint64_t encode_tuple(const std::vector<uint32_t>& q, const Tuple& t) {
    uint64_t id = 0;
    for (size_t i = 0; i < q.size(); ++i) id = id * q[i] + t[i];
    return id;
}

Tuple with_coord(const Tuple& base, size_t pos, uint32_t value, const Tuple& rest) {
    Tuple out(base.size());
    size_t r = 0;
    for (size_t i = 0; i < base.size(); ++i) out[i] = (i == pos) ? value : rest[r++];
    return out;
}

Tuple drop_coord(const Tuple& t, size_t pos) {
    Tuple out;
    out.reserve(t.size() - 1);
    for (size_t i = 0; i < t.size(); ++i)
        if (i != pos) out.push_back(t[i]);
    return out;
}

void enumerate_tuples(const std::vector<uint32_t>& q, const std::function<void(const Tuple&)>& fn) {
    Tuple t(q.size(), 0);
    while (true) {
        fn(t);
        size_t i = q.size();
        while (i > 0) {
            --i;
            if (++t[i] < q[i]) break;
            t[i] = 0;
            if (i == 0) return;
        }
    }
}

void validate_family(const std::vector<uint32_t>& q, const Tuple& X, const Tuple& Y,
                     const std::vector<std::vector<Tuple>>& family) {
    if (family.size() != zero_divisor_count(q) - 1)
        throw Error("path family has wrong size at " + std::to_string(q.size()) + " fields");
    std::set<uint64_t> internals;
    for (const auto& path : family) {
        if (path.front() != X || path.back() != Y) throw Error("path family endpoints wrong");
        for (size_t i = 0; i + 1 < path.size(); ++i)
            if (!tuples_adjacent(path[i], path[i + 1])) throw Error("path family uses a non-edge");
        for (size_t i = 1; i + 1 < path.size(); ++i) {
            uint64_t id = encode_tuple(q, path[i]);
            if (!internals.insert(id).second) throw Error("path family shares an internal vertex");
        }
    }
}

// Base case: CAY(F_1 x F_2) is the rook's graph K_{q1} [] K_{q2}.
std::vector<std::vector<Tuple>> rook_family(const std::vector<uint32_t>& q, const Tuple& X,
                                            const Tuple& Y) {
    const uint32_t q1 = q[0], q2 = q[1];
    const uint32_t x1 = X[0], x2 = X[1], y1 = Y[0], y2 = Y[1];
    std::vector<std::vector<Tuple>> out;
    auto T = [](uint32_t a, uint32_t b) { return Tuple{a, b}; };
    if (x1 == y1) {
        out.push_back({X, Y});
        for (uint32_t c = 0; c < q2; ++c)
            if (c != x2 && c != y2) out.push_back({X, T(x1, c), Y});
        for (uint32_t b = 0; b < q1; ++b)
            if (b != x1) out.push_back({X, T(b, x2), T(b, y2), Y});
    } else if (x2 == y2) {
        out.push_back({X, Y});
        for (uint32_t b = 0; b < q1; ++b)
            if (b != x1 && b != y1) out.push_back({X, T(b, x2), Y});
        for (uint32_t c = 0; c < q2; ++c)
            if (c != x2) out.push_back({X, T(x1, c), T(y1, c), Y});
    } else {
        out.push_back({X, T(x1, y2), Y});
        out.push_back({X, T(y1, x2), Y});
        for (uint32_t b = 0; b < q1; ++b)
            if (b != x1 && b != y1) out.push_back({X, T(b, x2), T(b, y2), Y});
        for (uint32_t c = 0; c < q2; ++c)
            if (c != x2 && c != y2) out.push_back({X, T(x1, c), T(y1, c), Y});
    }
    return out;
}

// The recursive construction from the connectivity lemma for field products.
// Produces exactly |Z| - 1 pairwise internally disjoint X-Y paths.
std::vector<std::vector<Tuple>> build_family(const std::vector<uint32_t>& q, const Tuple& X,
                                             const Tuple& Y) {
    const size_t m = q.size();
    std::vector<std::vector<Tuple>> out;

    // Endgame: every field is Z_2 and every coordinate differs, so Y is the
    // complement of X and every other vertex is a common neighbor.
    bool all_two = std::all_of(q.begin(), q.end(), [](uint32_t v) { return v == 2; });
    bool all_differ = true;
    for (size_t i = 0; i < m; ++i)
        if (X[i] == Y[i]) all_differ = false;
    if (all_two && all_differ) {
        enumerate_tuples(q, [&](const Tuple& z) {
            if (z != X && z != Y) out.push_back({X, z, Y});
        });
        validate_family(q, X, Y, out);
        return out;
    }

    if (m == 2) {
        out = rook_family(q, X, Y);
        validate_family(q, X, Y, out);
        return out;
    }

    // First internal vertex / last internal vertex of a recursive path: the
    // midsection is discarded, the lifted slabs connect them directly.
    auto ends = [](const std::vector<Tuple>& path) {
        return std::pair<const Tuple&, const Tuple&>(path[1], path[path.size() - 2]);
    };

    size_t shared = m;
    for (size_t i = 0; i < m; ++i)
        if (X[i] == Y[i]) {
            shared = i;
            break;
        }

    if (shared < m) {
        // Case 1: a shared coordinate. Lift the recursive family on the other
        // coordinates through every other value of the shared one.
        const size_t j = shared;
        const uint32_t a = X[j];
        std::vector<uint32_t> qr = drop_coord(q, j);
        Tuple Xh = drop_coord(X, j), Yh = drop_coord(Y, j);
        auto rest = build_family(qr, Xh, Yh);
        bool hat_adjacent = tuples_adjacent(Xh, Yh);

        out.push_back({X, Y});
        enumerate_tuples(qr, [&](const Tuple& A) {
            if (A != Xh && A != Yh) out.push_back({X, with_coord(X, j, a, A), Y});
        });
        for (uint32_t b = 0; b < q[j]; ++b) {
            if (b == a) continue;
            for (const auto& p : rest) {
                if (p.size() == 2) {
                    // Direct edge in the recursive family: its slot pairs with
                    // the (b,Xh)-(b,Yh) path below as two one-internal paths.
                    out.push_back({X, with_coord(X, j, b, Yh), Y});
                } else if (p.size() == 3) {
                    out.push_back({X, with_coord(X, j, b, p[1]), Y});
                } else {
                    auto [u, t] = ends(p);
                    out.push_back({X, with_coord(X, j, b, u), with_coord(X, j, b, t), Y});
                }
            }
            if (hat_adjacent)
                out.push_back({X, with_coord(X, j, b, Xh), Y});
            else
                out.push_back({X, with_coord(X, j, b, Xh), with_coord(X, j, b, Yh), Y});
        }
        validate_family(q, X, Y, out);
        return out;
    }

    // Case 2: every coordinate differs. Reduce some field of order >= 3 to
    // Z_2: its other values carry lifted slabs, the two used values carry the
    // recursive two-valued family.
    size_t big = m;
    for (size_t i = 0; i < m; ++i)
        if (q[i] >= 3) {
            big = i;
            break;
        }
    if (big == m) throw Error("path construction reached an impossible state");
    const size_t j = big;
    const uint32_t x1 = X[j], y1 = Y[j];
    std::vector<uint32_t> qr = drop_coord(q, j);
    Tuple Xh = drop_coord(X, j), Yh = drop_coord(Y, j);
    auto rest = build_family(qr, Xh, Yh);

    for (uint32_t b = 0; b < q[j]; ++b) {
        if (b == x1 || b == y1) continue;
        for (const auto& p : rest) {
            if (p.size() == 3) {
                out.push_back({X, with_coord(X, j, b, p[1]), Y});
            } else {
                auto [u, t] = ends(p);
                out.push_back({X, with_coord(X, j, b, u), with_coord(X, j, b, t), Y});
            }
        }
        out.push_back({X, with_coord(X, j, b, Xh), with_coord(X, j, b, Yh), Y});
    }

    std::vector<uint32_t> q2 = q;
    q2[j] = 2;
    Tuple X2 = X, Y2 = Y;
    X2[j] = 1;
    Y2[j] = 0;
    auto slab = build_family(q2, X2, Y2);
    for (const auto& p : slab) {
        std::vector<Tuple> mapped;
        mapped.reserve(p.size());
        for (const Tuple& v : p) {
            Tuple w = v;
            w[j] = v[j] == 1 ? x1 : y1;
            mapped.push_back(std::move(w));
        }
        out.push_back(std::move(mapped));
    }
    validate_family(q, X, Y, out);
    return out;
}

}  // namespace

PathFamily lemma27_path_family(const std::vector<uint32_t>& field_orders, uint32_t X, uint32_t Y) {
    if (field_orders.size() < 2) throw Error("the construction needs at least two fields");
    uint64_t product = 1;
    for (uint32_t qi : field_orders) {
        uint32_t p = 0, k = 0;
        if (qi < 2 || !prime_power(qi, &p, &k))
            throw BadFieldOrder(std::to_string(qi) + " is not a prime power");
        product *= qi;
        if (product > (uint64_t(1) << 31)) throw Error("field product too large");
    }
    if (X >= product || Y >= product) throw IndexOutOfRange("vertex out of range");
    if (X == Y) throw Error("endpoints must differ");

    auto decode = [&](uint64_t id) {
        Tuple t(field_orders.size());
        for (size_t i = field_orders.size(); i-- > 0;) {
            t[i] = static_cast<uint32_t>(id % field_orders[i]);
            id /= field_orders[i];
        }
        return t;
    };

    auto family = build_family(field_orders, decode(X), decode(Y));

    PathFamily result;
    result.source = X;
    result.target = Y;
    for (const auto& p : family) {
        std::vector<uint32_t> path;
        path.reserve(p.size());
        for (const Tuple& t : p) path.push_back(static_cast<uint32_t>(encode_tuple(field_orders, t)));
        result.paths.push_back(std::move(path));
    }
    return result;
}

LatinRectangle build_latin_rectangle(uint32_t x_size, uint32_t y_size,
                                     const std::vector<uint32_t>& symbols) {
    if (x_size > y_size)
        throw SizeMismatch("rectangle needs at most as many rows as columns");
    if (symbols.size() != y_size)
        throw SizeMismatch("need exactly " + std::to_string(y_size) + " symbols");

    LatinRectangle L;
    L.rows = x_size;
    L.cols = y_size;
    L.entries.resize(x_size);
    for (uint32_t i = 0; i < x_size; ++i) {
        L.entries[i].resize(y_size);
        for (uint32_t j = 0; j < y_size; ++j) L.entries[i][j] = symbols[(i + j) % y_size];
    }

    for (uint32_t i = 0; i < x_size; ++i) {
        std::set<uint32_t> row(L.entries[i].begin(), L.entries[i].end());
        if (row.size() != y_size) throw SizeMismatch("symbols must be pairwise distinct");
    }
    for (uint32_t j = 0; j < y_size; ++j) {
        std::set<uint32_t> col;
        for (uint32_t i = 0; i < x_size; ++i) col.insert(L.entries[i][j]);
        if (col.size() != x_size) throw Error("latin rectangle column check failed");
    }
    return L;
}

Coloring color_regular_product(const FiniteRing& R) {
    if (!R.factors_all_local()) throw Error("coloring needs a product of local rings");
    const size_t k = R.factor_count();

    struct FactorInfo {
        uint32_t order = 0;
        uint32_t ideal_size = 0;
        uint32_t residue = 0;
        std::vector<uint32_t> coset_offset;   // unit -> rank within its coset
        std::vector<uint32_t> residue_index;  // unit -> rank of its coset
    };
    std::vector<FactorInfo> info(k);
    for (size_t i = 0; i < k; ++i) {
        const LocalFactor& F = R.factor(i);
        FactorInfo& fi = info[i];
        fi.order = F.order();
        std::vector<elem> ideal = F.nonunits();
        fi.ideal_size = static_cast<uint32_t>(ideal.size());
        fi.residue = fi.order / fi.ideal_size;
        fi.coset_offset.assign(fi.order, UINT32_MAX);
        fi.residue_index.assign(fi.order, UINT32_MAX);

        std::vector<bool> is_nonunit(fi.order, false);
        for (elem t : ideal) is_nonunit[t] = true;
        std::vector<bool> assigned(fi.order, false);
        uint32_t next_class = 0;
        for (elem e = 0; e < fi.order; ++e) {
            if (is_nonunit[e] || assigned[e]) continue;
            // e is the least element of a fresh unit coset e + m.
            std::vector<elem> coset;
            for (elem t : ideal) coset.push_back(F.add(e, t));
            std::sort(coset.begin(), coset.end());
            for (uint32_t r = 0; r < coset.size(); ++r) {
                fi.coset_offset[coset[r]] = r;
                fi.residue_index[coset[r]] = next_class;
                assigned[coset[r]] = true;
            }
            ++next_class;
        }
        if (next_class != fi.residue - 1)
            throw Error("unit coset count does not match the residue field");
    }

    for (size_t i = 0; i + 1 < k; ++i)
        if (info[i].residue > info[i + 1].residue)
            throw FactorsNotOrdered("factors must have non-decreasing residue field sizes");

    RingStrata strata = compute_strata(R);
    std::vector<elem> reg = strata.regular_list();

    Coloring result;
    result.colors.resize(reg.size());

    if (k == 1) {
        result.palette = info[0].ideal_size;
        for (size_t v = 0; v < reg.size(); ++v) result.colors[v] = info[0].coset_offset[reg[v]];
    } else {
        std::vector<LatinRectangle> latin(k);
        std::vector<uint32_t> symbols;
        for (size_t i = 1; i < k; ++i) {
            symbols.resize(info[i].residue - 1);
            for (uint32_t s = 0; s < symbols.size(); ++s) symbols[s] = s;
            latin[i] = build_latin_rectangle(info[0].residue - 1, info[i].residue - 1, symbols);
        }

        uint64_t palette = 1;
        for (size_t i = 0; i < k; ++i) palette *= info[i].ideal_size;
        for (size_t i = 1; i < k; ++i) palette *= info[i].residue - 1;
        result.palette = static_cast<uint32_t>(palette);

        for (size_t v = 0; v < reg.size(); ++v) {
            std::vector<elem> coords = R.decode(reg[v]);
            uint64_t color = 0;
            for (size_t i = 0; i < k; ++i) color = color * info[i].ideal_size + info[i].coset_offset[coords[i]];
            const uint32_t row = info[0].residue_index[coords[0]];
            for (size_t i = 1; i < k; ++i) {
                uint32_t g = latin[i].entries[row][info[i].residue_index[coords[i]]];
                color = color * (info[i].residue - 1) + g;
            }
            result.colors[v] = static_cast<uint32_t>(color);
        }
    }

    // The coloring must be proper on the regular induced subgraph.
    for (size_t a = 0; a < reg.size(); ++a)
        for (size_t b = a + 1; b < reg.size(); ++b)
            if (result.colors[a] == result.colors[b] && strata.is_zero_divisor(R.sub(reg[a], reg[b])))
                throw Error("regular coloring is not proper");
    return result;
}

}  // namespace cayring
