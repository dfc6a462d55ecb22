#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ring.hpp"
#include "skew_poly.hpp"

namespace skewdna {

/// Raised when a search or closure would exceed its configured budget.
class resource_error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

using Codeword = std::vector<RElem>;

inline SkewPoly word_to_poly(std::span<const RElem> c) { return SkewPoly(std::vector<RElem>(c.begin(), c.end())); }

inline Codeword poly_to_word(const SkewPoly& f, std::size_t n) {
    if (!f.is_zero() && f.deg() >= n)
        throw std::domain_error("polynomial of degree " + std::to_string(f.deg()) + " does not fit length " +
                                std::to_string(n));
    Codeword c(n);
    std::copy(f.coeffs().begin(), f.coeffs().end(), c.begin());
    return c;
}

/// (c_0, ..., c_(n-1)) -> (theta(c_(n-1)), theta(c_0), ..., theta(c_(n-2)))
inline Codeword sigma_theta(std::span<const RElem> c) {
    Codeword out(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) out[(i + 1) % c.size()] = theta(c[i]);
    return out;
}

inline Codeword cyclic_shift(std::span<const RElem> c) {
    Codeword out(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) out[(i + 1) % c.size()] = c[i];
    return out;
}

inline Codeword add_words(std::span<const RElem> u, std::span<const RElem> w) {
    if (u.size() != w.size()) throw std::domain_error("word length mismatch");
    Codeword out(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) out[i] = u[i] + w[i];
    return out;
}

inline Codeword scale_word(RElem lambda, std::span<const RElem> c) {
    Codeword out(c.begin(), c.end());
    for (auto& a : out) a = lambda * a;
    return out;
}

inline std::string word_to_string(std::span<const RElem> c) {
    std::string out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out += ',';
        out += to_token(c[i]);
    }
    return out;
}

inline Codeword parse_word(std::string_view s) {
    Codeword out;
    while (true) {
        auto comma = s.find(',');
        out.push_back(parse_relem(s.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        s = s.substr(comma + 1);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Packed words: 4 bits per entry (the element index), entry i at bits 4i.
// Addition of words is XOR of the packed values.

using PackedWord = std::uint64_t;
inline constexpr std::size_t kMaxPackedLength = 16;

inline PackedWord pack(std::span<const RElem> c) {
    if (c.size() > kMaxPackedLength) throw std::domain_error("word too long to pack (max 16 entries)");
    PackedWord p = 0;
    for (std::size_t i = 0; i < c.size(); ++i) p |= PackedWord{c[i].index()} << (4 * i);
    return p;
}

inline Codeword unpack(PackedWord p, std::size_t n) {
    Codeword c;
    c.reserve(n);
    for (std::size_t i = 0; i < n; ++i) c.push_back(RElem::from_index(static_cast<unsigned>((p >> (4 * i)) & 0xFu)));
    return c;
}

namespace detail {

struct PackedTables {
    std::uint8_t mul[16][16];
    std::uint8_t theta[16];
};

inline const PackedTables& packed_tables() {
    static const PackedTables t = [] {
        PackedTables out{};
        for (unsigned x = 0; x < 16; ++x) {
            out.theta[x] = static_cast<std::uint8_t>(skewdna::theta(RElem::from_index(x)).index());
            for (unsigned y = 0; y < 16; ++y)
                out.mul[x][y] = static_cast<std::uint8_t>((RElem::from_index(x) * RElem::from_index(y)).index());
        }
        return out;
    }();
    return t;
}

inline PackedWord packed_scale(unsigned lambda, PackedWord p, std::size_t n) {
    const auto& t = packed_tables();
    PackedWord out = 0;
    for (std::size_t i = 0; i < n; ++i) out |= PackedWord{t.mul[lambda][(p >> (4 * i)) & 0xFu]} << (4 * i);
    return out;
}

inline PackedWord packed_sigma_theta(PackedWord p, std::size_t n) {
    const auto& t = packed_tables();
    PackedWord out = 0;
    for (std::size_t i = 0; i < n; ++i) out |= PackedWord{t.theta[(p >> (4 * i)) & 0xFu]} << (4 * ((i + 1) % n));
    return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Commutative polynomials over F4, ascending, no trailing zeros.

using F4Poly = std::vector<GF4>;

inline void trim(F4Poly& f) {
    while (!f.empty() && f.back().is_zero()) f.pop_back();
}

/// Remainder of f modulo a nonzero d in F4[x].
inline F4Poly f4_rem(F4Poly f, F4Poly d) {
    trim(f);
    trim(d);
    if (d.empty()) throw std::domain_error("F4[x] division by zero");
    const GF4 inv = d.back().inverse();
    const std::size_t m = d.size() - 1;
    while (f.size() > m) {
        const GF4 s = f.back() * inv;
        const std::size_t shift = f.size() - 1 - m;
        for (std::size_t j = 0; j <= m; ++j) f[shift + j] += s * d[j];
        trim(f);
    }
    return f;
}

inline bool f4_divides(const F4Poly& d, const F4Poly& f) { return f4_rem(f, d).empty(); }

inline F4Poly f4_x_n_minus_1(std::size_t n) {
    F4Poly f(n + 1);
    f[0] = GF4::one();
    f[n] += GF4::one();
    return f;
}

// ---------------------------------------------------------------------------

enum class GeneratorForm {
    unit_divisor,  ///< unit leading coefficient, right-divides x^n - 1
    v_type,        ///< v*g1 with g1 in F4[x] dividing x^n - 1
    v1_type,       ///< (v+1)*g1 with g1 in F4[x] dividing x^n - 1
    generic,
};

inline std::string_view to_string(GeneratorForm f) noexcept {
    switch (f) {
        case GeneratorForm::unit_divisor: return "unit-divisor";
        case GeneratorForm::v_type: return "v-type";
        case GeneratorForm::v1_type: return "v1-type";
        case GeneratorForm::generic: return "generic";
    }
    return "generic";
}

/// If every coefficient of f is v*c (resp. (v+1)*c) with c in F4, returns the
/// F4 polynomial of the c's.
inline std::optional<F4Poly> extract_v_factor(const SkewPoly& f, bool v_plus_one) {
    F4Poly g1;
    for (RElem a : f.coeffs()) {
        // v*c = 0 + c v ; (v+1)*c = c + c v
        if (v_plus_one ? a.a() != a.b() : !a.a().is_zero()) return std::nullopt;
        g1.push_back(a.b());
    }
    return g1;
}

struct GeneratorInfo {
    SkewPoly poly;
    GeneratorForm form = GeneratorForm::generic;
    F4Poly g1;  ///< set for v_type / v1_type
};

inline GeneratorInfo classify_generator(const SkewPoly& g, std::size_t n) {
    if (g.is_zero()) throw std::domain_error("zero generator");
    GeneratorInfo info{g, GeneratorForm::generic, {}};
    if (is_unit(g.lead())) {
        if (right_divides(g, SkewPoly::x_n_minus_1(n))) info.form = GeneratorForm::unit_divisor;
        return info;
    }
    for (bool v1 : {false, true}) {
        if (auto g1 = extract_v_factor(g, v1); g1 && f4_divides(*g1, f4_x_n_minus_1(n))) {
            info.form = v1 ? GeneratorForm::v1_type : GeneratorForm::v_type;
            info.g1 = std::move(*g1);
            return info;
        }
    }
    return info;
}

/// Left R[x,theta]-submodule of R[x,theta]/<x^n - 1> spanned by generators.
class SkewCyclicCode {
   public:
    SkewCyclicCode(std::size_t n, std::vector<SkewPoly> generators) : n_(n) {
        if (n == 0) throw std::domain_error("code length must be positive");
        if (generators.empty()) throw std::domain_error("a code needs at least one generator");
        const SkewPoly modulus = SkewPoly::x_n_minus_1(n);
        for (auto& g : generators) {
            if (g.is_zero()) throw std::domain_error("zero generator");
            SkewPoly reduced = right_rem(g, modulus);
            if (reduced.is_zero()) throw std::domain_error("generator is zero modulo x^n - 1");
            info_.push_back(classify_generator(reduced, n));
        }
    }

    std::size_t length() const noexcept { return n_; }
    const std::vector<GeneratorInfo>& generators() const noexcept { return info_; }
    bool single_generator() const noexcept { return info_.size() == 1; }
    const SkewPoly& generator() const { return info_.front().poly; }
    GeneratorForm form() const { return info_.front().form; }

    /// Membership without materializing: valid for a single unit-divisor
    /// generator g, where c is a codeword iff g right-divides c.
    bool has_remainder_test() const noexcept {
        return single_generator() && info_.front().form == GeneratorForm::unit_divisor;
    }
    bool contains_by_remainder(std::span<const RElem> c) const {
        if (!has_remainder_test()) throw std::logic_error("remainder membership needs a single unit-divisor generator");
        if (c.size() != n_) throw std::domain_error("word length mismatch");
        return right_rem(word_to_poly(c), generator()).is_zero();
    }

   private:
    std::size_t n_;
    std::vector<GeneratorInfo> info_;
};

inline SkewCyclicCode code_from_generator(std::size_t n, const SkewPoly& g) { return SkewCyclicCode(n, {g}); }

/// Materialized code: every word, stored packed and sorted.
class CodeSet {
   public:
    /// Any finite set of words of length n; duplicates are dropped.
    CodeSet(std::size_t n, std::vector<PackedWord> words) : n_(n), words_(std::move(words)) {
        std::sort(words_.begin(), words_.end());
        words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
    }

    std::size_t length() const noexcept { return n_; }
    std::size_t size() const noexcept { return words_.size(); }
    /// Words in increasing packed order; the zero word, when present, is first.
    const std::vector<PackedWord>& packed() const noexcept { return words_; }
    bool contains_packed(PackedWord p) const { return std::binary_search(words_.begin(), words_.end(), p); }
    bool contains(std::span<const RElem> c) const {
        if (c.size() != n_) throw std::domain_error("word length mismatch");
        return contains_packed(pack(c));
    }
    Codeword word(std::size_t i) const { return unpack(words_.at(i), n_); }

    /// All words, sorted entrywise by element index.
    std::vector<Codeword> sorted_words() const {
        std::vector<Codeword> out;
        out.reserve(words_.size());
        for (PackedWord p : words_) out.push_back(unpack(p, n_));
        std::sort(out.begin(), out.end());
        return out;
    }

   private:
    std::size_t n_;
    std::vector<PackedWord> words_;
};

namespace detail {

// Echelon basis of an F2-subspace of 64-bit vectors, one row per pivot bit.
class F2Basis {
   public:
    /// Adds w to the span; false if it was already there.
    bool insert(PackedWord w) {
        for (int bit = 63; bit >= 0 && w; --bit) {
            if (!((w >> bit) & 1u)) continue;
            if (!rows_[bit]) {
                rows_[bit] = w;
                ++rank_;
                return true;
            }
            w ^= rows_[bit];
        }
        return false;
    }
    std::size_t rank() const noexcept { return rank_; }

    /// Every element of the span, in Gray-code order.
    std::vector<PackedWord> span() const {
        std::vector<PackedWord> basis;
        for (PackedWord r : rows_)
            if (r) basis.push_back(r);
        std::vector<PackedWord> out(std::size_t{1} << basis.size());
        PackedWord cur = 0;
        out[0] = 0;
        for (std::size_t i = 1; i < out.size(); ++i) {
            cur ^= basis[static_cast<std::size_t>(std::countr_zero(i))];
            out[i] = cur;
        }
        return out;
    }

   private:
    PackedWord rows_[64] = {};
    std::size_t rank_ = 0;
};

}  // namespace detail

inline constexpr std::size_t kDefaultSizeCap = std::size_t{1} << 24;

/// Closure of the generator words under addition, left multiplication by
/// the 16 scalars and sigma_theta. The queue holds candidate words; a word
/// already in the additive span is dropped, otherwise its images under the
/// scalars and sigma_theta are queued.
inline CodeSet materialize(const SkewCyclicCode& code, std::size_t cap = kDefaultSizeCap) {
    const std::size_t n = code.length();
    if (n > kMaxPackedLength) throw std::domain_error("materialization supports lengths up to 16");
    detail::F2Basis basis;
    std::deque<PackedWord> pending;
    for (const auto& g : code.generators()) pending.push_back(pack(poly_to_word(g.poly, n)));

    while (!pending.empty()) {
        const PackedWord w = pending.front();
        pending.pop_front();
        if (!basis.insert(w)) continue;
        if (basis.rank() >= 63 || (std::size_t{1} << basis.rank()) > cap)
            throw resource_error("code exceeds size cap of " + std::to_string(cap) + " words");
        for (unsigned lambda = 2; lambda < 16; ++lambda) pending.push_back(detail::packed_scale(lambda, w, n));
        pending.push_back(detail::packed_sigma_theta(w, n));
    }
    return CodeSet(n, basis.span());
}

/// Membership that prefers the remainder test when the code admits it.
inline bool is_member(const SkewCyclicCode& code, const CodeSet& set, std::span<const RElem> c) {
    if (c.size() != code.length()) throw std::domain_error("word length mismatch");
    if (code.has_remainder_test()) return code.contains_by_remainder(c);
    return set.contains(c);
}

inline bool all_ones_in(const CodeSet& set) {
    return set.contains(Codeword(set.length(), RElem::one()));
}

inline bool is_sigma_closed(const CodeSet& set) {
    return std::all_of(set.packed().begin(), set.packed().end(), [&](PackedWord p) {
        return set.contains_packed(detail::packed_sigma_theta(p, set.length()));
    });
}

inline bool is_cyclic_shift_closed(const CodeSet& set) {
    const std::size_t n = set.length();
    return std::all_of(set.packed().begin(), set.packed().end(), [&](PackedWord p) {
        const PackedWord top = (p >> (4 * (n - 1))) & 0xFu;
        const PackedWord mask = n == 16 ? ~PackedWord{0} : (PackedWord{1} << (4 * n)) - 1;
        return set.contains_packed(((p << 4) & mask) | top);
    });
}

// ---------------------------------------------------------------------------

enum class LeadingMode { unit, v, v1 };

inline std::string_view to_string(LeadingMode m) noexcept {
    switch (m) {
        case LeadingMode::unit: return "unit";
        case LeadingMode::v: return "v";
        case LeadingMode::v1: return "v1";
    }
    return "unit";
}

inline constexpr std::uint64_t kDefaultSearchBudget = std::uint64_t{1} << 24;

/// Monic F4 polynomials of degree t dividing x^n - 1.
inline std::vector<F4Poly> f4_monic_divisors(std::size_t n, std::size_t t) {
    if (t > n) return {};
    std::vector<F4Poly> out;
    const F4Poly target = f4_x_n_minus_1(n);
    std::uint64_t total = std::uint64_t{1} << (2 * t);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        F4Poly g(t + 1);
        for (std::size_t i = 0; i < t; ++i) g[i] = GF4::from_bits((idx >> (2 * i)) & 3u);
        g[t] = GF4::one();
        if (f4_divides(g, target)) out.push_back(std::move(g));
    }
    return out;
}

inline SkewPoly lift_v_type(const F4Poly& g1, bool v_plus_one) {
    const RElem scale = v_plus_one ? RElem(GF4::one(), GF4::one()) : RElem::v();
    std::vector<RElem> c;
    for (GF4 a : g1) c.push_back(scale * RElem(a));
    return SkewPoly(std::move(c));
}

/// Degree-t generators of the requested kind. `unit`: every monic f of
/// degree t right-dividing x^n - 1. `v` / `v1`: v*g1 resp. (v+1)*g1 for every
/// monic g1 in F4[x] of degree t dividing x^n - 1. Sorted by coefficient
/// tuple (lowest power first, element index order).
inline std::vector<SkewPoly> enumerate_right_divisors(std::size_t n, std::size_t t, LeadingMode mode,
                                                      std::uint64_t budget = kDefaultSearchBudget) {
    if (n == 0 || t >= n) throw std::domain_error("need 0 <= t < n");
    const unsigned bits_per_coeff = mode == LeadingMode::unit ? 4 : 2;
    if (bits_per_coeff * t >= 63 || (std::uint64_t{1} << (bits_per_coeff * t)) > budget)
        throw resource_error("divisor search of degree " + std::to_string(t) + " exceeds budget");

    std::vector<SkewPoly> out;
    if (mode == LeadingMode::unit) {
        const SkewPoly target = SkewPoly::x_n_minus_1(n);
        const std::uint64_t total = std::uint64_t{1} << (4 * t);
        std::vector<RElem> c(t + 1);
        c[t] = RElem::one();
        for (std::uint64_t idx = 0; idx < total; ++idx) {
            for (std::size_t i = 0; i < t; ++i) c[i] = RElem::from_index((idx >> (4 * i)) & 0xFu);
            SkewPoly g(c);
            if (right_divides(g, target)) out.push_back(std::move(g));
        }
    } else {
        for (const auto& g1 : f4_monic_divisors(n, t)) out.push_back(lift_v_type(g1, mode == LeadingMode::v1));
    }
    std::sort(out.begin(), out.end());
    return out;
}

struct MinimalDegreeReport {
    std::optional<std::size_t> degree;  ///< empty when no word has a non-unit leading coefficient
    std::vector<SkewPoly> polys;        ///< every nonzero word of that degree with non-unit lead
    bool all_v_form = true;             ///< each is v*g1 or (v+1)*g1 with g1 over F4
};

/// Words of minimal degree among those whose leading coefficient is a non-unit.
inline MinimalDegreeReport minimal_degree_scan(const CodeSet& set) {
    MinimalDegreeReport rep;
    const std::size_t n = set.length();
    for (PackedWord p : set.packed()) {
        if (p == 0) continue;
        std::size_t d = n;
        while (d-- > 0 && ((p >> (4 * d)) & 0xFu) == 0) {
        }
        const RElem lead = RElem::from_index((p >> (4 * d)) & 0xFu);
        if (is_unit(lead)) continue;
        if (!rep.degree || d < *rep.degree) {
            rep.degree = d;
            rep.polys.clear();
        }
        if (d == *rep.degree) rep.polys.push_back(word_to_poly(unpack(p, n)));
    }
    std::sort(rep.polys.begin(), rep.polys.end());
    for (const auto& f : rep.polys)
        if (!extract_v_factor(f, false) && !extract_v_factor(f, true)) rep.all_v_form = false;
    return rep;
}

/// A nonzero word of least degree whose leading coefficient is a unit.
inline std::optional<SkewPoly> min_unit_leading_word(const CodeSet& set) {
    std::optional<SkewPoly> best;
    for (PackedWord p : set.packed()) {
        if (p == 0) continue;
        SkewPoly f = word_to_poly(unpack(p, set.length()));
        if (!is_unit(f.lead())) continue;
        if (!best || f.deg() < best->deg() || (f.deg() == best->deg() && f < *best)) best = std::move(f);
    }
    return best;
}

}  // namespace skewdna
