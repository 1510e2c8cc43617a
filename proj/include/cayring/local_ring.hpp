#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "cayring/errors.hpp"

namespace cayring {

// Ring element: an index into [0, order). Factor orders are capped at 65535 so
// operation tables fit in uint16_t.
using elem = uint32_t;

enum class LocalKind { zpk, gf, trunc, table };

// Descriptor of one local factor:
//   zpk:   the ring Z_{p^k}
//   gf:    the field GF(p^k), elements encoded base p by ascending-degree
//          coefficients; `modulus` is the monic degree-k modulus (ascending
//          coefficients, k+1 entries). Empty modulus = pick the canonical one
//          (smallest integer encoding of the non-leading coefficients).
//   trunc: GF(q)[t]/(t^m), elements encoded base q; q must be a prime power
//   table: explicit order-n tables, row-major add[a*n+b], mul[a*n+b]
struct LocalRingDesc {
    LocalKind kind = LocalKind::zpk;
    uint32_t p = 0, k = 1;
    std::vector<uint32_t> modulus;
    uint32_t q = 0, m = 0;
    uint32_t n = 0;
    std::vector<uint16_t> add, mul;
    uint32_t zero = 0, one = 1;

    static LocalRingDesc zpk_desc(uint32_t p, uint32_t k);
    static LocalRingDesc gf_desc(uint32_t p, uint32_t k, std::vector<uint32_t> modulus = {});
    static LocalRingDesc trunc_desc(uint32_t q, uint32_t m);
    static LocalRingDesc table_desc(uint32_t n, std::vector<uint16_t> add, std::vector<uint16_t> mul,
                                    uint32_t zero, uint32_t one);

    uint64_t order() const;
    // "Z8", "GF(9)", "GF(4)[t]/(t^2)", "TABLE(6)"
    std::string render() const;
};

bool is_prime(uint64_t n);
// Writes p and k such that n = p^k; false if n is not a prime power (or n < 2).
bool prime_power(uint64_t n, uint32_t* p, uint32_t* k);

// A validated local factor with working arithmetic. Construction checks the
// descriptor invariants: table axioms (exhaustive for n <= 256, sampled above),
// modulus irreducibility, and (when require_local) closure of the non-units
// under addition. Immutable afterwards; safe to share across threads.
class LocalFactor {
public:
    explicit LocalFactor(LocalRingDesc desc, bool require_local = true);

    const LocalRingDesc& desc() const { return desc_; }
    uint32_t order() const { return n_; }
    elem zero() const { return zero_; }
    elem one() const { return one_; }

    elem add(elem a, elem b) const;
    elem neg(elem a) const;
    elem mul(elem a, elem b) const;

    bool is_local() const { return local_; }
    bool is_field() const { return local_ && nonunits_.size() == 1; }
    // Ascending list of non-units; the maximal ideal when the factor is local.
    const std::vector<elem>& nonunits() const { return nonunits_; }
    // |R/m| for a local factor.
    uint32_t residue_field_size() const { return n_ / static_cast<uint32_t>(nonunits_.size()); }

private:
    void build_zpk();
    void build_gf();
    void build_trunc();
    void build_table();
    void compute_nonunits();
    void check_locality(bool require_local);
    void tabulate();

    elem raw_add(elem a, elem b) const;
    elem raw_mul(elem a, elem b) const;
    elem raw_neg(elem a) const;

    LocalRingDesc desc_;
    uint32_t n_ = 0;
    elem zero_ = 0, one_ = 0;
    bool local_ = false;
    std::vector<elem> nonunits_;
    std::vector<bool> nonunit_mask_;

    std::vector<uint16_t> add_tab_, mul_tab_, neg_tab_;
    bool tabulated_ = false;

    std::shared_ptr<const LocalFactor> base_;  // trunc: the coefficient field GF(q)
};

namespace gfpoly {
// Polynomials over Z_p, ascending coefficient vectors. Used by the GF factor
// implementation and exposed for the unit-test oracles.
std::vector<uint32_t> mul_mod(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                              const std::vector<uint32_t>& modulus, uint32_t p);
bool divides(const std::vector<uint32_t>& d, const std::vector<uint32_t>& a, uint32_t p);
bool irreducible(const std::vector<uint32_t>& poly, uint32_t p);
// The canonical modulus for GF(p^k): t^k + c where c has the smallest integer
// encoding sum c_i p^i among all monic irreducibles of degree k.
std::vector<uint32_t> canonical_modulus(uint32_t p, uint32_t k);
}  // namespace gfpoly

}  // namespace cayring
