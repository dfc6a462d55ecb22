#pragma once

// Seeded generators for property tests. Every test constructs its own Gen
// with a fixed seed so failures reproduce exactly.

#include <cstdint>
#include <random>
#include <vector>

#include <skewdna/skewdna.hpp>

namespace skewdna::testing {

inline constexpr std::uint64_t kSeed = 0x5eedDA7Au;

class Gen {
   public:
    explicit Gen(std::uint64_t seed = kSeed) : rng_(seed) {}

    unsigned below(unsigned bound) { return std::uniform_int_distribution<unsigned>(0, bound - 1)(rng_); }

    GF4 field() { return GF4::from_bits(below(4)); }
    RElem elem() { return RElem::from_index(below(16)); }

    RElem unit() {
        for (;;) {
            const RElem x = elem();
            if (is_unit(x)) return x;
        }
    }

    /// Uniform coefficients up to max_degree; may come out shorter or zero.
    SkewPoly poly(std::size_t max_degree) {
        std::vector<RElem> c(max_degree + 1);
        for (auto& x : c) x = elem();
        return SkewPoly(std::move(c));
    }

    /// Exactly the given degree, with a unit leading coefficient.
    SkewPoly unit_leading_poly(std::size_t degree) {
        std::vector<RElem> c(degree + 1);
        for (auto& x : c) x = elem();
        c[degree] = unit();
        return SkewPoly(std::move(c));
    }

    Codeword word(std::size_t n) {
        Codeword c(n);
        for (auto& x : c) x = elem();
        return c;
    }

   private:
    std::mt19937_64 rng_;
};

/// Every word of length n, n small.
inline std::vector<Codeword> all_words(std::size_t n) {
    std::vector<Codeword> out;
    const std::size_t total = std::size_t{1} << (4 * n);
    out.reserve(total);
    for (std::size_t i = 0; i < total; ++i) out.push_back(unpack(i, n));
    return out;
}

}  // namespace skewdna::testing
