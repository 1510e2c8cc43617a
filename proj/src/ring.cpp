#include "cayring/ring.hpp"

#include <algorithm>

namespace cayring {

FiniteRing::FiniteRing(std::vector<LocalRingDesc> factors, uint64_t order_cap, bool require_local_factors) {
    if (factors.empty()) throw Error("a ring needs at least one factor");
    uint64_t order = 1;
    for (const auto& d : factors) {
        factors_.emplace_back(d, require_local_factors);
        order *= factors_.back().order();
        if (order > order_cap) throw OrderCapExceeded(order, order_cap);
    }
    n_ = static_cast<uint32_t>(order);
    weight_.assign(factors_.size(), 1);
    for (size_t i = factors_.size() - 1; i-- > 0;) weight_[i] = weight_[i + 1] * factors_[i + 1].order();
    all_local_ = std::all_of(factors_.begin(), factors_.end(),
                             [](const LocalFactor& f) { return f.is_local(); });
    std::vector<elem> zs, os;
    for (const auto& f : factors_) {
        zs.push_back(f.zero());
        os.push_back(f.one());
    }
    zero_ = encode(zs);
    one_ = encode(os);
}

FiniteRing make_ring(std::vector<LocalRingDesc> factors, uint64_t order_cap) {
    return FiniteRing(std::move(factors), order_cap, true);
}

void FiniteRing::check_range(elem x) const {
    if (x >= n_) throw IndexOutOfRange("element " + std::to_string(x) + " outside ring of order " + std::to_string(n_));
}

elem FiniteRing::add(elem x, elem y) const {
    check_range(x);
    check_range(y);
    elem out = 0;
    for (size_t i = factors_.size(); i-- > 0;) {
        const LocalFactor& f = factors_[i];
        const uint32_t ni = f.order();
        out += f.add(x % ni, y % ni) * weight_[i];
        x /= ni;
        y /= ni;
    }
    return out;
}

elem FiniteRing::neg(elem x) const {
    check_range(x);
    elem out = 0;
    for (size_t i = factors_.size(); i-- > 0;) {
        const LocalFactor& f = factors_[i];
        const uint32_t ni = f.order();
        out += f.neg(x % ni) * weight_[i];
        x /= ni;
    }
    return out;
}

elem FiniteRing::mul(elem x, elem y) const {
    check_range(x);
    check_range(y);
    elem out = 0;
    for (size_t i = factors_.size(); i-- > 0;) {
        const LocalFactor& f = factors_[i];
        const uint32_t ni = f.order();
        out += f.mul(x % ni, y % ni) * weight_[i];
        x /= ni;
        y /= ni;
    }
    return out;
}

elem FiniteRing::pow(elem x, uint64_t e) const {
    check_range(x);
    elem acc = one_, base = x;
    while (e) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

std::vector<elem> FiniteRing::decode(elem x) const {
    check_range(x);
    std::vector<elem> coords(factors_.size());
    for (size_t i = factors_.size(); i-- > 0;) {
        const uint32_t ni = factors_[i].order();
        coords[i] = x % ni;
        x /= ni;
    }
    return coords;
}

elem FiniteRing::encode(const std::vector<elem>& coords) const {
    if (coords.size() != factors_.size()) throw IndexOutOfRange("coordinate count mismatch");
    elem out = 0;
    for (size_t i = 0; i < factors_.size(); ++i) {
        if (coords[i] >= factors_[i].order()) throw IndexOutOfRange("coordinate out of range");
        out += coords[i] * weight_[i];
    }
    return out;
}

std::string FiniteRing::label(elem x) const {
    if (factors_.size() == 1) return std::to_string(x);
    auto coords = decode(x);
    std::string s = "(";
    for (size_t i = 0; i < coords.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(coords[i]);
    }
    return s + ")";
}

std::string FiniteRing::render() const {
    std::string s;
    for (size_t i = 0; i < factors_.size(); ++i) {
        if (i) s += " x ";
        s += factors_[i].desc().render();
    }
    return s;
}

RingStrata compute_strata(const FiniteRing& R) {
    const uint32_t n = R.order();
    const elem zero = R.zero(), one = R.one();
    RingStrata s;
    s.n = n;
    s.units = bits::make(n);
    s.zero_divisors = bits::make(n);
    s.nilradical = bits::make(n);
    s.jacobson = bits::make(n);
    s.regular = bits::make(n);

    for (elem x = 0; x < n; ++x) {
        // In a finite commutative ring every element is a unit or a zero-divisor
        // (multiplication by a non-zero-divisor is injective, hence surjective),
        // so the pair scan may stop at the first witness of either kind.
        bool decided = false;
        for (elem y = 0; y < n; ++y) {
            elem xy = R.mul(x, y);
            if (xy == zero && y != zero) {
                bits::set(s.zero_divisors.data(), x);
                decided = true;
                break;
            }
            if (xy == one) {
                bits::set(s.units.data(), x);
                decided = true;
                break;
            }
        }
        if (!decided) throw Error("internal: element neither unit nor zero-divisor");
    }

    for (elem x = 0; x < n; ++x)
        if (R.pow(x, n) == zero) bits::set(s.nilradical.data(), x);

    for (elem x = 0; x < n; ++x) {
        bool in = true;
        for (elem y = 0; y < n; ++y) {
            elem t = R.sub(one, R.mul(x, y));
            if (!bits::test(s.units.data(), t)) {
                in = false;
                break;
            }
        }
        if (in) bits::set(s.jacobson.data(), x);
    }

    const uint32_t words = bits::word_count(n);
    for (uint32_t w = 0; w < words; ++w) s.regular[w] = ~s.zero_divisors[w];
    if (n % 64) s.regular[words - 1] &= (uint64_t(1) << (n % 64)) - 1;

    // Post-conditions: units and zero-divisors partition R; Nil inside J inside Z.
    for (uint32_t w = 0; w < words; ++w) {
        uint64_t full = (w + 1 < words || n % 64 == 0) ? ~uint64_t(0) : (uint64_t(1) << (n % 64)) - 1;
        if ((s.units[w] & s.zero_divisors[w]) != 0) throw Error("internal: unit and zero-divisor overlap");
        if ((s.units[w] | s.zero_divisors[w]) != full) throw Error("internal: element missing from both strata");
        if ((s.nilradical[w] & ~s.jacobson[w]) != 0) throw Error("internal: nilradical outside Jacobson radical");
        if ((s.jacobson[w] & ~s.zero_divisors[w]) != 0) throw Error("internal: Jacobson radical outside zero-divisors");
    }
    return s;
}

bool is_local(const FiniteRing& R, const RingStrata& strata) {
    std::vector<elem> nonunits;
    for (elem x = 0; x < R.order(); ++x)
        if (!strata.is_unit(x)) nonunits.push_back(x);
    for (elem a : nonunits)
        for (elem b : nonunits)
            if (strata.is_unit(R.add(a, b))) return false;
    return true;
}

CrtDecomposition crt_decompose(uint64_t n, uint64_t order_cap) {
    if (n < 2) throw Error("crt_decompose requires n >= 2");
    if (n > order_cap) throw OrderCapExceeded(n, order_cap);
    std::vector<LocalRingDesc> descs;
    std::vector<uint32_t> moduli;
    uint64_t m = n;
    for (uint64_t p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        uint32_t k = 0;
        uint64_t pk = 1;
        while (m % p == 0) {
            m /= p;
            ++k;
            pk *= p;
        }
        descs.push_back(LocalRingDesc::zpk_desc(static_cast<uint32_t>(p), k));
        moduli.push_back(static_cast<uint32_t>(pk));
    }
    if (m > 1) {
        descs.push_back(LocalRingDesc::zpk_desc(static_cast<uint32_t>(m), 1));
        moduli.push_back(static_cast<uint32_t>(m));
    }
    FiniteRing ring(std::move(descs), order_cap, true);
    std::vector<elem> to_ring(n);
    std::vector<elem> coords(moduli.size());
    for (uint64_t v = 0; v < n; ++v) {
        for (size_t i = 0; i < moduli.size(); ++i) coords[i] = static_cast<elem>(v % moduli[i]);
        to_ring[v] = ring.encode(coords);
    }
    return {std::move(ring), std::move(to_ring)};
}

QuotientRing quotient_by_ideal(const FiniteRing& R, std::vector<elem> ideal) {
    const uint32_t n = R.order();
    std::sort(ideal.begin(), ideal.end());
    ideal.erase(std::unique(ideal.begin(), ideal.end()), ideal.end());
    if (ideal.empty()) throw NotAnIdeal("empty set");
    for (elem a : ideal)
        if (a >= n) throw IndexOutOfRange("ideal element out of range");
    std::vector<bool> in_ideal(n, false);
    for (elem a : ideal) in_ideal[a] = true;
    if (!in_ideal[R.zero()]) throw NotAnIdeal("0 is not in the set");
    for (elem a : ideal)
        for (elem b : ideal) {
            elem c = R.add(a, b);
            if (!in_ideal[c])
                throw NotAnIdeal(std::to_string(a) + " + " + std::to_string(b) + " = " + std::to_string(c) +
                                 " is not in the set");
        }
    for (elem r = 0; r < n; ++r)
        for (elem a : ideal) {
            elem c = R.mul(r, a);
            if (!in_ideal[c])
                throw NotAnIdeal(std::to_string(r) + " * " + std::to_string(a) + " = " + std::to_string(c) +
                                 " is not in the set");
        }

    // Cosets in ascending order of their minimal representative.
    constexpr elem unassigned = ~elem(0);
    std::vector<elem> coset_of(n, unassigned);
    std::vector<elem> reps;
    for (elem x = 0; x < n; ++x) {
        if (coset_of[x] != unassigned) continue;
        elem id = static_cast<elem>(reps.size());
        reps.push_back(x);
        for (elem a : ideal) {
            elem y = R.add(x, a);
            if (coset_of[y] != unassigned) throw Error("internal: coset overlap in quotient");
            coset_of[y] = id;
        }
    }
    const uint32_t nq = static_cast<uint32_t>(reps.size());
    if (uint64_t(nq) * ideal.size() != n) throw Error("internal: cosets do not tile the ring");

    std::vector<uint16_t> add(uint64_t(nq) * nq), mul(uint64_t(nq) * nq);
    for (uint32_t i = 0; i < nq; ++i)
        for (uint32_t j = 0; j < nq; ++j) {
            add[uint64_t(i) * nq + j] = static_cast<uint16_t>(coset_of[R.add(reps[i], reps[j])]);
            mul[uint64_t(i) * nq + j] = static_cast<uint16_t>(coset_of[R.mul(reps[i], reps[j])]);
        }
    auto desc = LocalRingDesc::table_desc(nq, std::move(add), std::move(mul), coset_of[R.zero()],
                                          coset_of[R.one()]);
    FiniteRing ring({std::move(desc)}, kDefaultOrderCap, /*require_local_factors=*/false);
    return {std::move(ring), std::move(coset_of)};
}

std::optional<uint32_t> min_unit_sum_length(const FiniteRing& R, const RingStrata& strata) {
    const uint32_t n = R.order();
    std::vector<elem> steps;
    for (elem z = 0; z < n; ++z)
        if (strata.is_zero_divisor(z) && z != R.zero()) steps.push_back(z);
    std::vector<uint32_t> dist(n, ~uint32_t(0));
    std::vector<elem> frontier{R.zero()}, next;
    dist[R.zero()] = 0;
    while (!frontier.empty()) {
        next.clear();
        for (elem x : frontier)
            for (elem z : steps) {
                elem y = R.add(x, z);
                if (dist[y] == ~uint32_t(0)) {
                    dist[y] = dist[x] + 1;
                    if (y == R.one()) return dist[y];
                    next.push_back(y);
                }
            }
        frontier.swap(next);
    }
    if (dist[R.one()] != ~uint32_t(0)) return dist[R.one()];
    return std::nullopt;
}

bool zero_divisors_generate_ring(const FiniteRing& R, const RingStrata& strata) {
    const uint32_t n = R.order();
    std::vector<bool> in_set(n, false);
    std::vector<elem> members;
    auto insert = [&](elem x) {
        if (!in_set[x]) {
            in_set[x] = true;
            members.push_back(x);
        }
    };
    insert(R.zero());
    for (elem z = 0; z < n; ++z)
        if (strata.is_zero_divisor(z)) insert(z);
    // Closure under addition and ring multiples; the result is the ideal (Z(R)).
    for (size_t head = 0; head < members.size(); ++head) {
        elem a = members[head];
        for (size_t i = 0; i <= head; ++i) insert(R.add(a, members[i]));
        for (elem r = 0; r < n; ++r) insert(R.mul(r, a));
        if (members.size() == n) return true;
    }
    return members.size() == n;
}

PredictedStrata predicted_strata_counts(const FiniteRing& R) {
    if (!R.factors_all_local()) throw Error("predicted_strata_counts requires local factors");
    PredictedStrata p;
    uint64_t units = 1, nil = 1;
    for (size_t i = 0; i < R.factor_count(); ++i) {
        const auto& f = R.factor(i);
        units *= f.order() - f.nonunits().size();
        nil *= f.nonunits().size();
    }
    p.units = units;
    p.regular = units;
    p.zero_divisors = R.order() - units;
    p.nilradical = nil;
    p.jacobson = nil;
    return p;
}

uint32_t maximal_ideal_count(const FiniteRing& R) {
    uint64_t idem = 0;
    for (elem x = 0; x < R.order(); ++x)
        if (R.mul(x, x) == x) ++idem;
    uint32_t count = 0;
    while (idem > 1) {
        if (idem & 1) throw Error("internal: idempotent count not a power of two");
        idem >>= 1;
        ++count;
    }
    if (idem != 1) throw Error("internal: no idempotents");
    return count;
}

std::vector<uint32_t> residue_field_sizes(const FiniteRing& R) {
    if (R.factors_all_local()) {
        std::vector<uint32_t> sizes;
        for (size_t i = 0; i < R.factor_count(); ++i) sizes.push_back(R.factor(i).residue_field_size());
        return sizes;
    }
    // General path: decompose R/J by its primitive idempotents.
    RingStrata strata = compute_strata(R);
    QuotientRing q = quotient_by_ideal(R, strata.jacobson_list());
    const FiniteRing& S = q.ring;
    std::vector<elem> idem;
    for (elem x = 0; x < S.order(); ++x)
        if (S.mul(x, x) == x) idem.push_back(x);
    std::vector<uint32_t> sizes;
    for (elem e : idem) {
        if (e == S.zero()) continue;
        bool primitive = true;
        for (elem f : idem)
            if (f != S.zero() && f != e && S.mul(f, e) == f) {
                primitive = false;
                break;
            }
        if (!primitive) continue;
        std::vector<bool> seen(S.order(), false);
        uint32_t size = 0;
        for (elem x = 0; x < S.order(); ++x) {
            elem y = S.mul(x, e);
            if (!seen[y]) {
                seen[y] = true;
                ++size;
            }
        }
        sizes.push_back(size);
    }
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

}  // namespace cayring
