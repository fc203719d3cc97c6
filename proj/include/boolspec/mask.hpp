#pragma once

#include <cstdint>
#include <string>

namespace boolspec {

// Parity masks over up to 128 coordinates; bit i-1 encodes coordinate i.
using Mask = unsigned __int128;

constexpr int kMaxMaskBits = 128;

inline constexpr Mask bit(int i) { return Mask(1) << i; }

inline constexpr bool test_bit(Mask m, int i) { return ((m >> i) & 1) != 0; }

inline constexpr Mask low_bits(int n) {
    return n >= 128 ? ~Mask(0) : (Mask(1) << n) - 1;
}

inline int popcount(Mask m) {
    return __builtin_popcountll(static_cast<std::uint64_t>(m)) +
           __builtin_popcountll(static_cast<std::uint64_t>(m >> 64));
}

inline int parity(Mask m) { return popcount(m) & 1; }

// Index of the lowest set bit; -1 for zero.
inline int lowest_bit(Mask m) {
    auto lo = static_cast<std::uint64_t>(m);
    if (lo) return __builtin_ctzll(lo);
    auto hi = static_cast<std::uint64_t>(m >> 64);
    if (hi) return 64 + __builtin_ctzll(hi);
    return -1;
}

// Index of the highest set bit; -1 for zero.
inline int highest_bit(Mask m) {
    auto hi = static_cast<std::uint64_t>(m >> 64);
    if (hi) return 127 - __builtin_clzll(hi);
    auto lo = static_cast<std::uint64_t>(m);
    if (lo) return 63 - __builtin_clzll(lo);
    return -1;
}

// Gather the bits of x selected by sel into the low bits (software pext).
inline std::uint64_t gather_bits(Mask x, Mask sel) {
    std::uint64_t out = 0;
    int k = 0;
    while (sel) {
        int i = lowest_bit(sel);
        if (test_bit(x, i)) out |= std::uint64_t(1) << k;
        ++k;
        sel &= sel - 1;
    }
    return out;
}

// Inverse of gather_bits: place low bits of z at the positions of sel.
inline Mask scatter_bits(std::uint64_t z, Mask sel) {
    Mask out = 0;
    int k = 0;
    while (sel) {
        int i = lowest_bit(sel);
        if ((z >> k) & 1) out |= bit(i);
        ++k;
        sel &= sel - 1;
    }
    return out;
}

std::string to_hex(Mask m);
Mask parse_hex(const std::string& s);

}  // namespace boolspec
