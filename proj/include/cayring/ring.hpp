#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cayring/bits.hpp"
#include "cayring/local_ring.hpp"

namespace cayring {

inline constexpr uint64_t kDefaultOrderCap = 4096;

// A finite commutative ring presented as a product of local factors, elements
// encoded mixed-radix with the FIRST factor most significant:
//   encode(x_1,...,x_k) = ((x_1 * n_2 + x_2) * n_3 + ...) ... + x_k
// Single-factor rings encode each element as its own factor index.
// Immutable after construction; safe for concurrent reads.
class FiniteRing {
public:
    explicit FiniteRing(std::vector<LocalRingDesc> factors, uint64_t order_cap = kDefaultOrderCap,
                        bool require_local_factors = true);

    uint32_t order() const { return n_; }
    size_t factor_count() const { return factors_.size(); }
    const LocalFactor& factor(size_t i) const { return factors_[i]; }
    // False only for internally-built quotient rings with a non-local TABLE factor.
    bool factors_all_local() const { return all_local_; }

    elem zero() const { return zero_; }
    elem one() const { return one_; }
    elem add(elem x, elem y) const;
    elem neg(elem x) const;
    elem sub(elem x, elem y) const { return add(x, neg(y)); }
    elem mul(elem x, elem y) const;
    elem pow(elem x, uint64_t e) const;

    std::vector<elem> decode(elem x) const;
    elem encode(const std::vector<elem>& coords) const;
    // "(1,2)" for products, "3" for a single factor.
    std::string label(elem x) const;
    // "Z4 x GF(9)"
    std::string render() const;

private:
    void check_range(elem x) const;

    std::vector<LocalFactor> factors_;
    std::vector<uint32_t> weight_;  // mixed-radix weight of each factor
    uint32_t n_ = 0;
    elem zero_ = 0, one_ = 0;
    bool all_local_ = true;
};

FiniteRing make_ring(std::vector<LocalRingDesc> factors, uint64_t order_cap = kDefaultOrderCap);

// The paper's element strata, each as a bitset over element indices. Computed
// by brute-force definition scans; this is the oracle side of every check.
struct RingStrata {
    uint32_t n = 0;
    std::vector<uint64_t> units;          // x with xy = 1 for some y
    std::vector<uint64_t> zero_divisors;  // x with xy = 0 for some y != 0 (includes 0)
    std::vector<uint64_t> nilradical;     // x with x^order = 0
    std::vector<uint64_t> jacobson;       // x with 1 - xy a unit for all y
    std::vector<uint64_t> regular;        // complement of zero_divisors

    bool is_unit(elem x) const { return bits::test(units.data(), x); }
    bool is_zero_divisor(elem x) const { return bits::test(zero_divisors.data(), x); }
    bool is_nilpotent(elem x) const { return bits::test(nilradical.data(), x); }
    bool in_jacobson(elem x) const { return bits::test(jacobson.data(), x); }
    uint64_t unit_count() const { return bits::popcount(units.data(), bits::word_count(n)); }
    uint64_t zero_divisor_count() const { return bits::popcount(zero_divisors.data(), bits::word_count(n)); }
    uint64_t nilradical_count() const { return bits::popcount(nilradical.data(), bits::word_count(n)); }
    uint64_t jacobson_count() const { return bits::popcount(jacobson.data(), bits::word_count(n)); }
    std::vector<elem> unit_list() const { return bits::to_list(units, n); }
    std::vector<elem> zero_divisor_list() const { return bits::to_list(zero_divisors, n); }
    std::vector<elem> nilradical_list() const { return bits::to_list(nilradical, n); }
    std::vector<elem> jacobson_list() const { return bits::to_list(jacobson, n); }
    std::vector<elem> regular_list() const { return bits::to_list(regular, n); }
};

RingStrata compute_strata(const FiniteRing& R);

// True iff the non-units are closed under addition (checked exhaustively on the
// brute-force strata, i.e. iff the ring has a unique maximal ideal).
bool is_local(const FiniteRing& R, const RingStrata& strata);

struct CrtDecomposition {
    FiniteRing ring;                // product of Z_{p^k} over the factorization of n
    std::vector<elem> to_ring;      // Z_n value -> ring element (the CRT bijection)
};
CrtDecomposition crt_decompose(uint64_t n, uint64_t order_cap = kDefaultOrderCap);

struct QuotientRing {
    FiniteRing ring;                // TABLE form on cosets, indexed by ascending minimal representative
    std::vector<elem> projection;   // R element -> coset index
};
QuotientRing quotient_by_ideal(const FiniteRing& R, std::vector<elem> ideal);

// Least number of nonzero zero-divisors summing to 1 (BFS over partial sums);
// nullopt = unreachable (the paper's infinity).
std::optional<uint32_t> min_unit_sum_length(const FiniteRing& R, const RingStrata& strata);

// Independent connectivity oracle: does the ideal generated by Z(R) equal R?
bool zero_divisors_generate_ring(const FiniteRing& R, const RingStrata& strata);

// Formula side, computed from factor structure alone (never from the brute
// scans above): |U| = prod |U_i|, |Nil| = |J| = prod |m_i|, |Z| = n - |U|.
// Requires every factor local.
struct PredictedStrata {
    uint64_t units = 0, zero_divisors = 0, nilradical = 0, jacobson = 0, regular = 0;
};
PredictedStrata predicted_strata_counts(const FiniteRing& R);

// Number of maximal ideals, via the idempotent count (a finite commutative
// ring with 2^k idempotents is a product of k local rings). Works for any
// presentation, including TABLE quotients.
uint32_t maximal_ideal_count(const FiniteRing& R);

// Residue-field sizes |R_i/m_i| in factor order; falls back to the primitive
// idempotent decomposition of R/J when a non-local TABLE factor is present.
std::vector<uint32_t> residue_field_sizes(const FiniteRing& R);

// JSON document: factor descriptors, order, optional strata bitmaps (hex,
// little-endian bit order by element index: element 8j+k is bit k of byte j).
std::string ring_to_json(const FiniteRing& R, const RingStrata* strata = nullptr);
FiniteRing ring_from_json(const std::string& text, uint64_t order_cap = kDefaultOrderCap);
std::string bitset_to_hex(const std::vector<uint64_t>& bits, uint32_t n);
std::vector<uint64_t> hex_to_bitset(const std::string& hex, uint32_t n);

}  // namespace cayring
