#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace skewdna {

/// Element of F4 = F2[w] / (w^2 + w + 1).
///
/// The value is the coefficient bit pattern of the residue: bit 0 is the
/// constant term and bit 1 the coefficient of w, so 0, 1, w and w2 = w + 1
/// are stored as 0, 1, 2 and 3. Addition is XOR of the patterns.
class GF4 {
   public:
    constexpr GF4() noexcept = default;

    static constexpr GF4 from_bits(unsigned bits) {
        if (bits > 3) throw std::out_of_range("GF4 bit pattern out of range");
        return GF4(bits);
    }

    static constexpr GF4 zero() noexcept { return GF4(0); }
    static constexpr GF4 one() noexcept { return GF4(1); }
    static constexpr GF4 w() noexcept { return GF4(2); }
    static constexpr GF4 w2() noexcept { return GF4(3); }

    constexpr unsigned bits() const noexcept { return value_; }
    constexpr bool is_zero() const noexcept { return value_ == 0; }

    friend constexpr GF4 operator+(GF4 x, GF4 y) noexcept { return GF4(static_cast<unsigned>(x.value_ ^ y.value_)); }
    friend constexpr GF4 operator-(GF4 x, GF4 y) noexcept { return x + y; }
    friend constexpr GF4 operator*(GF4 x, GF4 y) noexcept { return GF4(unsigned{kMul[x.value_][y.value_]}); }
    constexpr GF4& operator+=(GF4 y) noexcept { return *this = *this + y; }
    constexpr GF4& operator*=(GF4 y) noexcept { return *this = *this * y; }

    friend constexpr bool operator==(GF4, GF4) noexcept = default;
    friend constexpr auto operator<=>(GF4 x, GF4 y) noexcept { return x.value_ <=> y.value_; }

    /// Multiplicative inverse; zero has none.
    constexpr GF4 inverse() const {
        if (value_ == 0) throw std::domain_error("GF4: zero has no inverse");
        return GF4(unsigned{kInv[value_]});
    }

    /// Frobenius x -> x^2, the only nontrivial automorphism of F4.
    constexpr GF4 square() const noexcept { return *this * *this; }

    /// Reference multiplication: carry-less product of the bit patterns,
    /// reduced with w^2 = w + 1. The table above is checked against it.
    static constexpr unsigned reference_mul(unsigned x, unsigned y) noexcept {
        unsigned p = 0;
        for (unsigned i = 0; i < 2; ++i)
            if ((y >> i) & 1u) p ^= x << i;
        if (p & 4u) p ^= 4u ^ 3u;
        return p;
    }

    /// True when the lookup tables agree with reference_mul.
    static constexpr bool tables_match_reference() noexcept {
        for (unsigned x = 0; x < 4; ++x) {
            for (unsigned y = 0; y < 4; ++y)
                if (kMul[x][y] != reference_mul(x, y)) return false;
            if (x != 0 && reference_mul(x, kInv[x]) != 1) return false;
        }
        return true;
    }

   private:
    explicit constexpr GF4(unsigned v) noexcept : value_(static_cast<std::uint8_t>(v)) {}

    // rows/cols: 0, 1, w, w2
    static constexpr std::uint8_t kMul[4][4] = {
        {0, 0, 0, 0},
        {0, 1, 2, 3},
        {0, 2, 3, 1},
        {0, 3, 1, 2},
    };
    static constexpr std::uint8_t kInv[4] = {0, 1, 3, 2};

    std::uint8_t value_ = 0;
};

static_assert(GF4::tables_match_reference(), "GF4 tables disagree with w^2 = w + 1");

/// All four elements in storage order 0, 1, w, w2.
inline constexpr std::array<GF4, 4> kGF4Elements = {GF4::zero(), GF4::one(), GF4::w(), GF4::w2()};

inline std::string_view to_token(GF4 x) noexcept {
    constexpr std::string_view names[4] = {"0", "1", "w", "w2"};
    return names[x.bits()];
}

/// Accepts the canonical tokens `0`, `1`, `w`, `w2` and the spelling `w^2`.
inline GF4 parse_gf4(std::string_view s) {
    if (s == "0") return GF4::zero();
    if (s == "1") return GF4::one();
    if (s == "w") return GF4::w();
    if (s == "w2" || s == "w^2") return GF4::w2();
    throw std::invalid_argument("not an F4 element: '" + std::string(s) + "'");
}

inline std::ostream& operator<<(std::ostream& os, GF4 x) { return os << to_token(x); }

}  // namespace skewdna
