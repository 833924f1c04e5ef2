#pragma once

// Deterministic seeded sampling. All "general point" choices in the library
// flow through this; identical (seed, salt) streams are bit-identical across
// platforms, so certificates are reproducible.

#include "jck/rational.hpp"

#include <cstdint>
#include <vector>

namespace jck {

class Sampler {
    std::uint64_t state_;

    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

public:
    explicit Sampler(std::uint64_t seed, std::uint64_t salt = 0)
        : state_(mix(seed ^ (salt * 0x9e3779b97f4a7c15ULL + 0x632be59bd9b4e019ULL))) {}

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Integer in [-bound, bound].
    long next_int(long bound) {
        const std::uint64_t span = 2 * static_cast<std::uint64_t>(bound) + 1;
        return static_cast<long>(next_u64() % span) - bound;
    }

    long next_nonzero(long bound) {
        long v = 0;
        while (v == 0) v = next_int(bound);
        return v;
    }

    Rational next_scalar(long bound) { return Rational(next_int(bound)); }

    std::vector<Rational> next_vector(std::size_t n, long bound) {
        std::vector<Rational> v;
        v.reserve(n);
        for (std::size_t i = 0; i < n; ++i) v.push_back(next_scalar(bound));
        return v;
    }

    std::vector<Rational> next_nonzero_vector(std::size_t n, long bound) {
        for (;;) {
            auto v = next_vector(n, bound);
            for (const auto& c : v)
                if (!c.is_zero()) return v;
        }
    }
};

// Fixed stream salts, one per sampling site.
namespace salt {
inline constexpr std::uint64_t rank = 1;
inline constexpr std::uint64_t minpoly = 2;
inline constexpr std::uint64_t jordan_check = 3;
inline constexpr std::uint64_t gcd_lines = 4;
inline constexpr std::uint64_t structural = 5;
inline constexpr std::uint64_t conformal = 6;
inline constexpr std::uint64_t curve = 7;
inline constexpr std::uint64_t variety = 8;
inline constexpr std::uint64_t oadp = 9;
inline constexpr std::uint64_t iso = 10;
inline constexpr std::uint64_t base_locus = 11;
inline constexpr std::uint64_t property = 12;
} // namespace salt

} // namespace jck
