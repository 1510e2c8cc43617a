#include "cayring/local_ring.hpp"

#include <algorithm>
#include <random>

namespace cayring {

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool prime_power(uint64_t n, uint32_t* p, uint32_t* k) {
    if (n < 2) return false;
    uint64_t base = n;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            base = d;
            break;
        }
    uint32_t exp = 0;
    uint64_t m = n;
    while (m % base == 0) {
        m /= base;
        ++exp;
    }
    if (m != 1) return false;
    if (p) *p = static_cast<uint32_t>(base);
    if (k) *k = exp;
    return true;
}

namespace {

constexpr uint32_t kFactorOrderCap = 65535;  // table entries are uint16_t
constexpr uint32_t kTabulateLimit = 1024;    // precompute op tables up to this order

uint64_t checked_pow(uint64_t base, uint32_t exp) {
    uint64_t r = 1;
    for (uint32_t i = 0; i < exp; ++i) {
        if (r > kFactorOrderCap) return r;  // caller rejects anyway
        r *= base;
    }
    return r;
}

uint32_t mod_inverse(uint32_t a, uint32_t p) {
    // Fermat; p prime, a != 0 mod p.
    uint64_t r = 1, b = a % p;
    uint32_t e = p - 2;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<uint32_t>(r);
}

}  // namespace

namespace gfpoly {

std::vector<uint32_t> mul_mod(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                              const std::vector<uint32_t>& modulus, uint32_t p) {
    const size_t k = modulus.size() - 1;
    std::vector<uint32_t> buf(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j) buf[i + j] = (buf[i + j] + a[i] * b[j]) % p;
    }
    for (size_t d = buf.size(); d-- > k;) {
        uint32_t c = buf[d];
        if (!c) continue;
        // modulus is monic: subtract c * t^(d-k) * modulus
        for (size_t i = 0; i <= k; ++i) {
            uint32_t sub = static_cast<uint32_t>(uint64_t(c) * modulus[i] % p);
            buf[d - k + i] = (buf[d - k + i] + p - sub) % p;
        }
    }
    buf.resize(k);
    return buf;
}

bool divides(const std::vector<uint32_t>& d, const std::vector<uint32_t>& a, uint32_t p) {
    std::vector<uint32_t> r = a;
    const size_t dd = d.size() - 1;
    const uint32_t lead_inv = mod_inverse(d.back(), p);
    while (r.size() > dd) {
        uint32_t c = static_cast<uint32_t>(uint64_t(r.back()) * lead_inv % p);
        if (c) {
            size_t shift = r.size() - 1 - dd;
            for (size_t i = 0; i <= dd; ++i) {
                uint32_t sub = static_cast<uint32_t>(uint64_t(c) * d[i] % p);
                r[shift + i] = (r[shift + i] + p - sub) % p;
            }
        }
        r.pop_back();
    }
    return std::all_of(r.begin(), r.end(), [](uint32_t x) { return x == 0; });
}

bool irreducible(const std::vector<uint32_t>& poly, uint32_t p) {
    const size_t k = poly.size() - 1;
    if (k == 0 || poly.back() == 0) return false;
    if (k == 1) return true;
    // Trial division by every monic polynomial of degree 1..k/2.
    for (size_t deg = 1; deg <= k / 2; ++deg) {
        uint64_t combos = 1;
        for (size_t i = 0; i < deg; ++i) combos *= p;
        std::vector<uint32_t> cand(deg + 1, 0);
        cand[deg] = 1;
        for (uint64_t c = 0; c < combos; ++c) {
            uint64_t v = c;
            for (size_t i = 0; i < deg; ++i) {
                cand[i] = static_cast<uint32_t>(v % p);
                v /= p;
            }
            if (divides(cand, poly, p)) return false;
        }
    }
    return true;
}

std::vector<uint32_t> canonical_modulus(uint32_t p, uint32_t k) {
    uint64_t combos = 1;
    for (uint32_t i = 0; i < k; ++i) combos *= p;
    std::vector<uint32_t> poly(k + 1, 0);
    poly[k] = 1;
    for (uint64_t c = 0; c < combos; ++c) {
        uint64_t v = c;
        for (uint32_t i = 0; i < k; ++i) {
            poly[i] = static_cast<uint32_t>(v % p);
            v /= p;
        }
        if (irreducible(poly, p)) return poly;
    }
    throw BadModulus("no irreducible polynomial of degree " + std::to_string(k) + " over Z_" +
                     std::to_string(p));  // unreachable for prime p
}

}  // namespace gfpoly

LocalRingDesc LocalRingDesc::zpk_desc(uint32_t p, uint32_t k) {
    if (!is_prime(p)) throw NotPrimePower(p);
    if (k < 1) throw Error("Z_{p^k} requires k >= 1");
    LocalRingDesc d;
    d.kind = LocalKind::zpk;
    d.p = p;
    d.k = k;
    return d;
}

LocalRingDesc LocalRingDesc::gf_desc(uint32_t p, uint32_t k, std::vector<uint32_t> modulus) {
    if (!is_prime(p)) throw NotPrimePower(p);
    if (k < 1) throw Error("GF(p^k) requires k >= 1");
    LocalRingDesc d;
    d.kind = LocalKind::gf;
    d.p = p;
    d.k = k;
    d.modulus = std::move(modulus);
    return d;
}

LocalRingDesc LocalRingDesc::trunc_desc(uint32_t q, uint32_t m) {
    uint32_t p = 0, j = 0;
    if (!prime_power(q, &p, &j)) throw NotPrimePower(q);
    if (m < 1) throw Error("GF(q)[t]/(t^m) requires m >= 1");
    LocalRingDesc d;
    d.kind = LocalKind::trunc;
    d.q = q;
    d.m = m;
    return d;
}

LocalRingDesc LocalRingDesc::table_desc(uint32_t n, std::vector<uint16_t> add, std::vector<uint16_t> mul,
                                        uint32_t zero, uint32_t one) {
    LocalRingDesc d;
    d.kind = LocalKind::table;
    d.n = n;
    d.add = std::move(add);
    d.mul = std::move(mul);
    d.zero = zero;
    d.one = one;
    return d;
}

uint64_t LocalRingDesc::order() const {
    switch (kind) {
        case LocalKind::zpk:
        case LocalKind::gf:
            return checked_pow(p, k);
        case LocalKind::trunc:
            return checked_pow(q, m);
        case LocalKind::table:
            return n;
    }
    return 0;
}

std::string LocalRingDesc::render() const {
    switch (kind) {
        case LocalKind::zpk:
            return "Z" + std::to_string(order());
        case LocalKind::gf:
            return "GF(" + std::to_string(order()) + ")";
        case LocalKind::trunc:
            return "GF(" + std::to_string(q) + ")[t]/(t^" + std::to_string(m) + ")";
        case LocalKind::table:
            return "TABLE(" + std::to_string(n) + ")";
    }
    return "?";
}

LocalFactor::LocalFactor(LocalRingDesc desc, bool require_local) : desc_(std::move(desc)) {
    switch (desc_.kind) {
        case LocalKind::zpk:
            build_zpk();
            break;
        case LocalKind::gf:
            build_gf();
            break;
        case LocalKind::trunc:
            build_trunc();
            break;
        case LocalKind::table:
            build_table();
            break;
    }
    compute_nonunits();
    check_locality(require_local);
    tabulate();
}

void LocalFactor::build_zpk() {
    if (!is_prime(desc_.p)) throw NotPrimePower(desc_.p);
    uint64_t n = desc_.order();
    if (n > kFactorOrderCap) throw OrderCapExceeded(n, kFactorOrderCap);
    n_ = static_cast<uint32_t>(n);
    zero_ = 0;
    one_ = 1;
}

void LocalFactor::build_gf() {
    if (!is_prime(desc_.p)) throw NotPrimePower(desc_.p);
    uint64_t n = desc_.order();
    if (n > kFactorOrderCap) throw OrderCapExceeded(n, kFactorOrderCap);
    n_ = static_cast<uint32_t>(n);
    if (desc_.modulus.empty()) {
        desc_.modulus = gfpoly::canonical_modulus(desc_.p, desc_.k);
    } else {
        const auto& mod = desc_.modulus;
        if (mod.size() != desc_.k + 1)
            throw BadModulus("modulus must have degree " + std::to_string(desc_.k));
        if (mod.back() != 1) throw BadModulus("modulus must be monic");
        for (uint32_t c : mod)
            if (c >= desc_.p) throw BadModulus("modulus coefficient out of range");
        if (!gfpoly::irreducible(mod, desc_.p)) throw BadModulus("modulus is reducible");
    }
    zero_ = 0;
    one_ = 1;
}

void LocalFactor::build_trunc() {
    uint32_t p = 0, j = 0;
    if (!prime_power(desc_.q, &p, &j)) throw NotPrimePower(desc_.q);
    if (desc_.m < 1) throw Error("GF(q)[t]/(t^m) requires m >= 1");
    uint64_t n = desc_.order();
    if (n > kFactorOrderCap) throw OrderCapExceeded(n, kFactorOrderCap);
    n_ = static_cast<uint32_t>(n);
    base_ = std::make_shared<const LocalFactor>(LocalRingDesc::gf_desc(p, j));
    zero_ = 0;
    one_ = 1;
}

void LocalFactor::build_table() {
    const uint32_t n = desc_.n;
    if (n < 2) throw NotARing("table ring needs at least 2 elements");
    if (n > kFactorOrderCap) throw OrderCapExceeded(n, kFactorOrderCap);
    if (desc_.add.size() != uint64_t(n) * n || desc_.mul.size() != uint64_t(n) * n)
        throw NotARing("operation tables must be " + std::to_string(n) + "x" + std::to_string(n));
    for (uint16_t v : desc_.add)
        if (v >= n) throw NotARing("add table entry out of range");
    for (uint16_t v : desc_.mul)
        if (v >= n) throw NotARing("mul table entry out of range");
    if (desc_.zero >= n || desc_.one >= n) throw NotARing("zero/one index out of range");
    if (desc_.zero == desc_.one) throw NotARing("zero and one coincide");
    n_ = n;
    zero_ = desc_.zero;
    one_ = desc_.one;

    auto at = [n](const std::vector<uint16_t>& t, uint32_t a, uint32_t b) -> uint32_t {
        return t[uint64_t(a) * n + b];
    };
    const auto& A = desc_.add;
    const auto& M = desc_.mul;

    auto triple = [](const char* law, uint32_t a, uint32_t b, uint32_t c) {
        return NotARing(std::string(law) + " fails at (" + std::to_string(a) + "," + std::to_string(b) +
                        "," + std::to_string(c) + ")");
    };

    for (uint32_t a = 0; a < n; ++a) {
        if (at(A, zero_, a) != a) throw NotARing("0 + " + std::to_string(a) + " != " + std::to_string(a));
        if (at(M, one_, a) != a) throw NotARing("1 * " + std::to_string(a) + " != " + std::to_string(a));
        for (uint32_t b = a + 1; b < n; ++b) {
            if (at(A, a, b) != at(A, b, a)) throw triple("add commutativity", a, b, 0);
            if (at(M, a, b) != at(M, b, a)) throw triple("mul commutativity", a, b, 0);
        }
    }

    neg_tab_.assign(n, 0);
    for (uint32_t a = 0; a < n; ++a) {
        bool found = false;
        for (uint32_t b = 0; b < n; ++b)
            if (at(A, a, b) == zero_) {
                neg_tab_[a] = static_cast<uint16_t>(b);
                found = true;
                break;
            }
        if (!found) throw NotARing("no additive inverse for " + std::to_string(a));
    }

    auto check_triple = [&](uint32_t a, uint32_t b, uint32_t c) {
        if (at(A, at(A, a, b), c) != at(A, a, at(A, b, c))) throw triple("add associativity", a, b, c);
        if (at(M, at(M, a, b), c) != at(M, a, at(M, b, c))) throw triple("mul associativity", a, b, c);
        if (at(M, a, at(A, b, c)) != at(A, at(M, a, b), at(M, a, c)))
            throw triple("distributivity", a, b, c);
    };
    if (n <= 256) {
        for (uint32_t a = 0; a < n; ++a)
            for (uint32_t b = 0; b < n; ++b)
                for (uint32_t c = 0; c < n; ++c) check_triple(a, b, c);
    } else {
        std::mt19937_64 rng(0x5eedcafe);
        for (int i = 0; i < 10000; ++i)
            check_triple(static_cast<uint32_t>(rng() % n), static_cast<uint32_t>(rng() % n),
                         static_cast<uint32_t>(rng() % n));
    }
}

void LocalFactor::compute_nonunits() {
    nonunit_mask_.assign(n_, false);
    switch (desc_.kind) {
        case LocalKind::zpk:
            for (uint32_t x = 0; x < n_; x += desc_.p) nonunit_mask_[x] = true;
            break;
        case LocalKind::gf:
            nonunit_mask_[0] = true;
            break;
        case LocalKind::trunc:
            // f is invertible in GF(q)[t]/(t^m) iff its constant coefficient is nonzero
            for (uint32_t x = 0; x < n_; x += desc_.q) nonunit_mask_[x] = true;
            break;
        case LocalKind::table:
            for (uint32_t x = 0; x < n_; ++x) {
                bool unit = false;
                for (uint32_t y = 0; y < n_; ++y)
                    if (raw_mul(x, y) == one_) {
                        unit = true;
                        break;
                    }
                nonunit_mask_[x] = !unit;
            }
            break;
    }
    nonunits_.clear();
    for (uint32_t x = 0; x < n_; ++x)
        if (nonunit_mask_[x]) nonunits_.push_back(x);
}

void LocalFactor::check_locality(bool require_local) {
    local_ = true;
    for (elem a : nonunits_) {
        for (elem b : nonunits_) {
            elem c = raw_add(a, b);
            if (!nonunit_mask_[c]) {
                local_ = false;
                if (require_local)
                    throw NotLocal(desc_.render() + ": non-units not closed under addition (" +
                                   std::to_string(a) + " + " + std::to_string(b) + " = " +
                                   std::to_string(c) + " is a unit)");
                return;
            }
        }
    }
}

void LocalFactor::tabulate() {
    if (desc_.kind == LocalKind::table) {
        add_tab_ = desc_.add;
        mul_tab_ = desc_.mul;
        tabulated_ = true;  // neg_tab_ filled during validation
        return;
    }
    if (n_ > kTabulateLimit) return;
    add_tab_.resize(uint64_t(n_) * n_);
    mul_tab_.resize(uint64_t(n_) * n_);
    neg_tab_.resize(n_);
    for (uint32_t a = 0; a < n_; ++a) {
        neg_tab_[a] = static_cast<uint16_t>(raw_neg(a));
        for (uint32_t b = 0; b < n_; ++b) {
            add_tab_[uint64_t(a) * n_ + b] = static_cast<uint16_t>(raw_add(a, b));
            mul_tab_[uint64_t(a) * n_ + b] = static_cast<uint16_t>(raw_mul(a, b));
        }
    }
    tabulated_ = true;
}

elem LocalFactor::add(elem a, elem b) const {
    if (a >= n_ || b >= n_) throw IndexOutOfRange("element index out of range");
    if (tabulated_) return add_tab_[uint64_t(a) * n_ + b];
    return raw_add(a, b);
}

elem LocalFactor::neg(elem a) const {
    if (a >= n_) throw IndexOutOfRange("element index out of range");
    if (tabulated_) return neg_tab_[a];
    return raw_neg(a);
}

elem LocalFactor::mul(elem a, elem b) const {
    if (a >= n_ || b >= n_) throw IndexOutOfRange("element index out of range");
    if (tabulated_) return mul_tab_[uint64_t(a) * n_ + b];
    return raw_mul(a, b);
}

elem LocalFactor::raw_add(elem a, elem b) const {
    switch (desc_.kind) {
        case LocalKind::zpk:
            return (a + b) % n_;
        case LocalKind::gf: {
            const uint32_t p = desc_.p;
            elem out = 0, w = 1;
            for (uint32_t i = 0; i < desc_.k; ++i) {
                out += (a % p + b % p) % p * w;
                a /= p;
                b /= p;
                w *= p;
            }
            return out;
        }
        case LocalKind::trunc: {
            const uint32_t q = desc_.q;
            elem out = 0, w = 1;
            for (uint32_t i = 0; i < desc_.m; ++i) {
                out += base_->add(a % q, b % q) * w;
                a /= q;
                b /= q;
                w *= q;
            }
            return out;
        }
        case LocalKind::table:
            return desc_.add[uint64_t(a) * n_ + b];
    }
    return 0;
}

elem LocalFactor::raw_neg(elem a) const {
    switch (desc_.kind) {
        case LocalKind::zpk:
            return a == 0 ? 0 : n_ - a;
        case LocalKind::gf: {
            const uint32_t p = desc_.p;
            elem out = 0, w = 1;
            for (uint32_t i = 0; i < desc_.k; ++i) {
                uint32_t d = a % p;
                out += (d == 0 ? 0 : p - d) * w;
                a /= p;
                w *= p;
            }
            return out;
        }
        case LocalKind::trunc: {
            const uint32_t q = desc_.q;
            elem out = 0, w = 1;
            for (uint32_t i = 0; i < desc_.m; ++i) {
                out += base_->neg(a % q) * w;
                a /= q;
                w *= q;
            }
            return out;
        }
        case LocalKind::table:
            return neg_tab_[a];
    }
    return 0;
}

elem LocalFactor::raw_mul(elem a, elem b) const {
    switch (desc_.kind) {
        case LocalKind::zpk:
            return static_cast<elem>(uint64_t(a) * b % n_);
        case LocalKind::gf: {
            const uint32_t p = desc_.p;
            const uint32_t k = desc_.k;
            uint32_t da[16], db[16], buf[31] = {0};
            for (uint32_t i = 0; i < k; ++i) {
                da[i] = a % p;
                a /= p;
                db[i] = b % p;
                b /= p;
            }
            for (uint32_t i = 0; i < k; ++i) {
                if (!da[i]) continue;
                for (uint32_t j = 0; j < k; ++j) buf[i + j] = (buf[i + j] + da[i] * db[j]) % p;
            }
            const auto& mod = desc_.modulus;
            for (uint32_t d = 2 * k - 2; d + 1 > k; --d) {
                uint32_t c = buf[d];
                if (!c) continue;
                for (uint32_t i = 0; i <= k; ++i) {
                    uint32_t sub = static_cast<uint32_t>(uint64_t(c) * mod[i] % p);
                    buf[d - k + i] = (buf[d - k + i] + p - sub) % p;
                }
            }
            elem out = 0, w = 1;
            for (uint32_t i = 0; i < k; ++i) {
                out += buf[i] * w;
                w *= p;
            }
            return out;
        }
        case LocalKind::trunc: {
            const uint32_t q = desc_.q;
            const uint32_t m = desc_.m;
            uint32_t da[16], db[16], buf[16] = {0};
            for (uint32_t i = 0; i < m; ++i) {
                da[i] = a % q;
                a /= q;
                db[i] = b % q;
                b /= q;
            }
            for (uint32_t i = 0; i < m; ++i) {
                if (da[i] == 0) continue;
                for (uint32_t j = 0; i + j < m; ++j)
                    buf[i + j] = base_->add(buf[i + j], base_->mul(da[i], db[j]));
            }
            elem out = 0, w = 1;
            for (uint32_t i = 0; i < m; ++i) {
                out += buf[i] * w;
                w *= q;
            }
            return out;
        }
        case LocalKind::table:
            return desc_.mul[uint64_t(a) * n_ + b];
    }
    return 0;
}

}  // namespace cayring
