#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cayring {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A TABLE descriptor violates the ring axioms; the message names the failing triple.
struct NotARing : Error {
    explicit NotARing(const std::string& what) : Error(what) {}
};

// Non-units of a factor descriptor are not closed under addition.
struct NotLocal : Error {
    explicit NotLocal(const std::string& what) : Error(what) {}
};

// GF modulus is reducible, non-monic, or of the wrong degree.
struct BadModulus : Error {
    explicit BadModulus(const std::string& what) : Error(what) {}
};

struct IndexOutOfRange : Error {
    explicit IndexOutOfRange(const std::string& what) : Error(what) {}
};

// The element set handed to quotient_by_ideal is not an ideal; message carries a witness.
struct NotAnIdeal : Error {
    explicit NotAnIdeal(const std::string& what) : Error(what) {}
};

// Ring-spec parse failure. `offset` is a 1-based byte position; end-of-input
// reports length+1.
struct SyntaxError : Error {
    std::size_t offset;
    std::string expected;
    SyntaxError(std::size_t offset, std::string expected_token)
        : Error("syntax error at offset " + std::to_string(offset) + ": expected " + expected_token),
          offset(offset),
          expected(std::move(expected_token)) {}
};

struct NotPrimePower : Error {
    uint64_t value;
    explicit NotPrimePower(uint64_t v) : Error(std::to_string(v) + " is not a prime power"), value(v) {}
};

struct OrderCapExceeded : Error {
    uint64_t order, cap;
    OrderCapExceeded(uint64_t order, uint64_t cap)
        : Error("ring order " + std::to_string(order) + " exceeds cap " + std::to_string(cap)),
          order(order),
          cap(cap) {}
};

// gcd-graph divisor outside 1..n-1 or not dividing n.
struct BadDivisor : Error {
    explicit BadDivisor(const std::string& what) : Error(what) {}
};

struct EmptyVertexSet : Error {
    explicit EmptyVertexSet(const std::string& what) : Error(what) {}
};

// A graph is too large for an exact search (isomorphism, clique, coloring, ...).
struct SizeCapExceeded : Error {
    explicit SizeCapExceeded(const std::string& what) : Error(what) {}
};

// Field order that is not a prime power (lemma27_path_family).
struct BadFieldOrder : Error {
    explicit BadFieldOrder(const std::string& what) : Error(what) {}
};

// Latin-rectangle shape violation (|X| > |Y| or symbol list of the wrong size).
struct SizeMismatch : Error {
    explicit SizeMismatch(const std::string& what) : Error(what) {}
};

// color_regular_product requires residue-field sizes in non-decreasing factor order.
struct FactorsNotOrdered : Error {
    explicit FactorsNotOrdered(const std::string& what) : Error(what) {}
};

// Verifier-level signal: the ring exceeds the cap of a requested exact check.
// Reported as a skipped entry, never silently dropped.
struct CapExceeded : Error {
    explicit CapExceeded(const std::string& what) : Error(what) {}
};

}  // namespace cayring
