#pragma once

#include <bit>
#include <cstdint>
#include <vector>

// Helpers for the dense bit-row representation used throughout: a set over
// [0, n) is a vector of 64-bit words, bit i of word i/64 marking element i.

namespace cayring::bits {

inline constexpr uint64_t npos = ~uint64_t(0);

inline constexpr uint32_t word_count(uint64_t n) { return static_cast<uint32_t>((n + 63) / 64); }

inline bool test(const uint64_t* w, uint64_t i) { return (w[i >> 6] >> (i & 63)) & 1; }

inline void set(uint64_t* w, uint64_t i) { w[i >> 6] |= uint64_t(1) << (i & 63); }

inline void clear(uint64_t* w, uint64_t i) { w[i >> 6] &= ~(uint64_t(1) << (i & 63)); }

inline uint64_t popcount(const uint64_t* w, uint32_t words) {
    uint64_t c = 0;
    for (uint32_t j = 0; j < words; ++j) c += std::popcount(w[j]);
    return c;
}

// First set bit at position >= from, or npos.
inline uint64_t next_set(const uint64_t* w, uint32_t words, uint64_t from) {
    uint32_t j = static_cast<uint32_t>(from >> 6);
    if (j >= words) return npos;
    uint64_t word = w[j] & (~uint64_t(0) << (from & 63));
    while (true) {
        if (word) return (uint64_t(j) << 6) + std::countr_zero(word);
        if (++j >= words) return npos;
        word = w[j];
    }
}

inline std::vector<uint64_t> make(uint64_t n) { return std::vector<uint64_t>(word_count(n), 0); }

inline std::vector<uint32_t> to_list(const std::vector<uint64_t>& w, uint64_t n) {
    std::vector<uint32_t> out;
    for (uint64_t i = next_set(w.data(), word_count(n), 0); i != npos; i = next_set(w.data(), word_count(n), i + 1))
        out.push_back(static_cast<uint32_t>(i));
    return out;
}

}  // namespace cayring::bits
