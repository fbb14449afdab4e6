#pragma once

#include <cstdint>
#include <random>

namespace evscan {

/// splitmix64 finalizer; used to derive independent seed material.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

/// Seedable, portable generator. mt19937_64's output sequence is fixed by the
/// standard, and bounded draws below avoid std::uniform_int_distribution,
/// whose mapping is implementation-defined.
using Rng = std::mt19937_64;

/// Stream-splitting rule: the stream for layer l of a pipeline seeded with s
/// is seeded with splitmix64(s ^ splitmix64(l + 1)), so per-layer offset
/// sequences are independent and reproducible.
inline Rng make_layer_rng(std::uint64_t seed, std::uint64_t layer = 0) {
    return Rng(splitmix64(seed ^ splitmix64(layer + 1)));
}

/// Uniform draw from [0, n) by rejection; identical results on every platform.
inline std::uint64_t draw_below(Rng& rng, std::uint64_t n) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t v = rng();
    while (v >= limit) v = rng();
    return v % n;
}

}  // namespace evscan
