#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cayring/ring.hpp"
#include "cayring/ring_spec.hpp"

namespace cayring {

// Caps for the search-based oracles. A check whose oracle would blow past its
// cap is reported as a skipped entry, never silently dropped.
struct VerifierCaps {
    uint64_t order = kDefaultOrderCap;  // largest ring order verified at all
    uint32_t iso = 512;                 // isomorphism searches
    uint32_t color = 512;               // exact clique and chromatic number
    uint32_t hole = 64;                 // odd-hole perfection certificates
    uint32_t hamilton = 64;             // Hamiltonian cycle search
    uint32_t translation = 64;          // full translation sweep; sampled above
};

// One theorem checked on one ring. `predicted` comes from the ring-structure
// formulas, `oracle` from independent graph searches; pass means the two sides
// agreed on every compared quantity. A theorem whose hypothesis the ring does
// not satisfy passes vacuously with a note. `skipped` marks a cap exceedance
// (pass is false then and the suite summary counts it separately).
// `witness_json` carries the failing witness, or the object the statement is
// about (odd hole, Hamiltonian cycle, isomorphism map) when one was found.
struct VerificationReport {
    std::string theorem;
    std::string ring;  // DSL spec, parseable by parse_ring_spec
    std::string predicted;
    std::string oracle;
    bool pass = false;
    bool skipped = false;
    std::string note;
    std::string witness_json;
    uint64_t millis = 0;
};

// Checkable statements in paper order: lemma_1_1, thm_2_2, cor_2_3, lemma_2_4,
// thm_2_5, lemma_2_6, lemma_2_7, thm_2_8, cor_2_9, thm_2_10, thm_3_1, cor_3_2,
// thm_3_4, thm_4_1, thm_4_2.
const std::vector<std::string>& theorem_ids();

VerificationReport verify(const std::string& theorem_id, const FiniteRing& R,
                          const VerifierCaps& caps = {});

// A deterministic list of ring specs, duplicate-free up to factor reordering.
struct RingFamily {
    std::vector<RingSpecAst> members;

    // Appends the members of `other` not already present up to reordering.
    void extend(const RingFamily& other);
};

// Z_n for every n in [max(lo,2), hi].
RingFamily zn_range(uint64_t lo, uint64_t hi);

// Every product of `num_factors` local rings drawn from the pool of Z_{p^k},
// GF(p^k) with k >= 2, and GF(q)[t]/(t^m) with m >= 2, keeping factor orders
// at most factor_cap and the product order at most product_cap. Factors appear
// in pool order (ascending order, then kind), so no two members differ only by
// a reordering.
RingFamily local_products(uint32_t num_factors, uint64_t factor_cap, uint64_t product_cap);

struct SuiteSummary {
    uint32_t passed = 0;
    uint32_t failed = 0;
    uint32_t skipped = 0;
};

// Runs every requested theorem on every family member. Reports come back
// ordered by (member index, theorem order) regardless of CAYRING_THREADS.
std::vector<VerificationReport> run_suite(const RingFamily& family,
                                          const std::vector<std::string>& ids,
                                          const VerifierCaps& caps = {},
                                          SuiteSummary* summary = nullptr);

// "theorem,ring,predicted,oracle,pass,millis"; the pass column prints
// true, false or skip.
std::string reports_to_csv(const std::vector<VerificationReport>& reports);
// {"reports": [...], "summary": {...}} with witnesses embedded as objects.
std::string reports_to_json(const std::vector<VerificationReport>& reports);

}  // namespace cayring
