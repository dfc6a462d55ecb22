#pragma once

#include <array>
#include <cctype>
#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "gf4.hpp"

namespace skewdna {

/// Element a + b*v of R = F4 + v*F4 with v^2 = v.
///
/// Stored in (a, b) coordinates; `index()` packs them as a + 4*b so that
/// ring addition is XOR of indices.
class RElem {
   public:
    constexpr RElem() noexcept = default;
    constexpr RElem(GF4 a, GF4 b = GF4::zero()) noexcept : a_(a), b_(b) {}

    static constexpr RElem from_index(unsigned idx) {
        if (idx > 15) throw std::out_of_range("R element index out of range");
        return RElem(GF4::from_bits(idx & 3u), GF4::from_bits(idx >> 2));
    }

    static constexpr RElem zero() noexcept { return {}; }
    static constexpr RElem one() noexcept { return RElem(GF4::one()); }
    static constexpr RElem v() noexcept { return RElem(GF4::zero(), GF4::one()); }

    constexpr GF4 a() const noexcept { return a_; }
    constexpr GF4 b() const noexcept { return b_; }
    constexpr unsigned index() const noexcept { return a_.bits() | (b_.bits() << 2); }
    constexpr bool is_zero() const noexcept { return a_.is_zero() && b_.is_zero(); }
    /// True when b = 0, i.e. the element lies in the subfield F4.
    constexpr bool in_f4() const noexcept { return b_.is_zero(); }

    friend constexpr RElem operator+(RElem x, RElem y) noexcept { return {x.a_ + y.a_, x.b_ + y.b_}; }
    friend constexpr RElem operator-(RElem x, RElem y) noexcept { return x + y; }
    // (a + bv)(c + dv) = ac + (ad + bc + bd)v
    friend constexpr RElem operator*(RElem x, RElem y) noexcept {
        return {x.a_ * y.a_, x.a_ * y.b_ + x.b_ * y.a_ + x.b_ * y.b_};
    }
    constexpr RElem& operator+=(RElem y) noexcept { return *this = *this + y; }
    constexpr RElem& operator*=(RElem y) noexcept { return *this = *this * y; }

    friend constexpr bool operator==(RElem, RElem) noexcept = default;
    friend constexpr auto operator<=>(RElem x, RElem y) noexcept { return x.index() <=> y.index(); }

   private:
    GF4 a_;
    GF4 b_;
};

inline constexpr std::array<RElem, 16> all_elements() noexcept {
    std::array<RElem, 16> out{};
    for (unsigned i = 0; i < 16; ++i) out[i] = RElem(GF4::from_bits(i & 3u), GF4::from_bits(i >> 2));
    return out;
}

/// theta(a + bv) = a + b(1 + v) = (a + b) + bv. Fixes F4, order 2.
inline constexpr RElem theta(RElem x) noexcept { return {x.a() + x.b(), x.b()}; }

/// theta^k, using theta^2 = id.
inline constexpr RElem theta_pow(RElem x, std::size_t k) noexcept { return (k & 1u) ? theta(x) : x; }

inline constexpr bool is_unit(RElem x) noexcept { return !x.a().is_zero() && !(x.a() + x.b()).is_zero(); }

/// Inverse of a unit a + bv, computed as a^-1 + b^2 v.
inline constexpr RElem inverse(RElem x) {
    if (!is_unit(x)) throw std::domain_error("R: element is not a unit");
    return {x.a().inverse(), x.b().square()};
}

/// Watson-Crick complement lifted to R: x + 1.
inline constexpr RElem complement(RElem x) noexcept { return x + RElem::one(); }

/// Gray map a + bv -> (a + b, a).
inline constexpr std::pair<GF4, GF4> gray(RElem x) noexcept { return {x.a() + x.b(), x.a()}; }

inline constexpr RElem gray_inverse(std::pair<GF4, GF4> p) noexcept { return {p.second, p.first + p.second}; }

/// Images in R/<v+1> and R/<v>: a + bv = (a + b)v + a(v + 1) -> (a + b, a).
/// Both projections are ring homomorphisms onto F4.
inline constexpr std::pair<GF4, GF4> crt_split(RElem x) noexcept { return {x.a() + x.b(), x.a()}; }

inline constexpr RElem crt_join(std::pair<GF4, GF4> p) noexcept { return {p.second, p.first + p.second}; }

inline std::string to_token(RElem x) {
    std::string out;
    if (!x.a().is_zero()) out += to_token(x.a());
    if (!x.b().is_zero()) {
        if (!out.empty()) out += '+';
        if (x.b() != GF4::one()) {
            out += to_token(x.b());
            out += '*';
        }
        out += 'v';
    }
    return out.empty() ? std::string("0") : out;
}

/// Parses `a+b*v` style tokens. Terms are F4 tokens, `v`, `c*v` or `v*c`
/// and are summed, so `w2+v`, `w*v`, `1 + v` and `0` are all accepted.
inline RElem parse_relem(std::string_view s) {
    auto trim = [](std::string_view t) {
        while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.remove_prefix(1);
        while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.remove_suffix(1);
        return t;
    };
    s = trim(s);
    if (s.empty()) throw std::invalid_argument("empty ring element token");
    RElem acc;
    while (true) {
        auto plus = s.find('+');
        auto term = trim(s.substr(0, plus));
        if (term.empty()) throw std::invalid_argument("malformed ring element: '" + std::string(s) + "'");
        if (term == "v") {
            acc += RElem::v();
        } else if (auto star = term.find('*'); star != std::string_view::npos) {
            auto lhs = trim(term.substr(0, star));
            auto rhs = trim(term.substr(star + 1));
            if (rhs == "v")
                acc += RElem(GF4::zero(), parse_gf4(lhs));
            else if (lhs == "v")
                acc += RElem(GF4::zero(), parse_gf4(rhs));
            else
                throw std::invalid_argument("malformed ring element term: '" + std::string(term) + "'");
        } else {
            acc += RElem(parse_gf4(term));
        }
        if (plus == std::string_view::npos) break;
        s = s.substr(plus + 1);
    }
    return acc;
}

inline std::ostream& operator<<(std::ostream& os, RElem x) { return os << to_token(x); }

}  // namespace skewdna
