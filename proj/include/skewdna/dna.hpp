#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "codes.hpp"
#include "ring.hpp"

namespace skewdna {

enum class Base : char { A = 'A', C = 'C', G = 'G', T = 'T' };

/// 0 -> A, 1 -> T, w -> C, w2 -> G.
inline constexpr Base base_of(GF4 x) noexcept {
    constexpr Base table[4] = {Base::A, Base::T, Base::C, Base::G};
    return table[x.bits()];
}

inline constexpr GF4 gf4_of(Base b) noexcept {
    switch (b) {
        case Base::A: return GF4::zero();
        case Base::T: return GF4::one();
        case Base::C: return GF4::w();
        case Base::G: return GF4::w2();
    }
    return GF4::zero();
}

inline Base base_from_char(char c) {
    switch (c) {
        case 'A': return Base::A;
        case 'C': return Base::C;
        case 'G': return Base::G;
        case 'T': return Base::T;
        default: throw std::invalid_argument(std::string("not a DNA base: '") + c + "'");
    }
}

/// Watson-Crick pairing A-T, C-G.
inline constexpr Base wcc(Base b) noexcept {
    switch (b) {
        case Base::A: return Base::T;
        case Base::T: return Base::A;
        case Base::C: return Base::G;
        case Base::G: return Base::C;
    }
    return b;
}

/// DNA strings are written 5' to 3', left to right, uppercase ACGT.
using DnaWord = std::string;

/// Two bases per ring element: the Gray image (a+b, a) mapped basewise.
inline DnaWord encode_element(RElem x) {
    auto [p, q] = gray(x);
    return {static_cast<char>(base_of(p)), static_cast<char>(base_of(q))};
}

inline DnaWord encode_word(std::span<const RElem> c) {
    DnaWord out;
    out.reserve(2 * c.size());
    for (RElem x : c) out += encode_element(x);
    return out;
}

inline Codeword decode_dna(std::string_view w) {
    if (w.size() % 2 != 0) throw std::domain_error("DNA word must have even length");
    Codeword out;
    out.reserve(w.size() / 2);
    for (std::size_t i = 0; i < w.size(); i += 2)
        out.push_back(gray_inverse({gf4_of(base_from_char(w[i])), gf4_of(base_from_char(w[i + 1]))}));
    return out;
}

inline DnaWord dna_reverse(std::string_view w) { return DnaWord(w.rbegin(), w.rend()); }

inline DnaWord dna_complement(std::string_view w) {
    DnaWord out;
    out.reserve(w.size());
    for (char c : w) out += static_cast<char>(wcc(base_from_char(c)));
    return out;
}

inline DnaWord dna_reverse_complement(std::string_view w) { return dna_complement(dna_reverse(w)); }

/// Ring-level image of DNA reversal: theta entrywise, then reversed order.
inline Codeword r_level_reverse(std::span<const RElem> c) {
    Codeword out(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) out[c.size() - 1 - i] = theta(c[i]);
    return out;
}

/// Ring-level image of DNA complementation: add the all-ones word.
inline Codeword r_level_complement(std::span<const RElem> c) {
    Codeword out(c.begin(), c.end());
    for (auto& a : out) a = complement(a);
    return out;
}

namespace detail {

inline PackedWord packed_r_reverse(PackedWord p, std::size_t n) {
    const auto& t = packed_tables();
    PackedWord out = 0;
    for (std::size_t i = 0; i < n; ++i) out |= PackedWord{t.theta[(p >> (4 * i)) & 0xFu]} << (4 * (n - 1 - i));
    return out;
}

inline PackedWord packed_all_ones(std::size_t n) {
    PackedWord out = 0;
    for (std::size_t i = 0; i < n; ++i) out |= PackedWord{1} << (4 * i);
    return out;
}

}  // namespace detail

/// Every codeword's DNA reverse is again the image of a codeword.
inline bool is_reversible_dna(const CodeSet& set) {
    const std::size_t n = set.length();
    return std::all_of(set.packed().begin(), set.packed().end(), [&](PackedWord p) {
        return set.contains_packed(detail::packed_r_reverse(p, n));
    });
}

inline bool is_complement_closed(const CodeSet& set) {
    const PackedWord ones = detail::packed_all_ones(set.length());
    return std::all_of(set.packed().begin(), set.packed().end(),
                       [&](PackedWord p) { return set.contains_packed(p ^ ones); });
}

inline bool is_reverse_complement_dna(const CodeSet& set) {
    const std::size_t n = set.length();
    const PackedWord ones = detail::packed_all_ones(n);
    return std::all_of(set.packed().begin(), set.packed().end(), [&](PackedWord p) {
        return set.contains_packed(detail::packed_r_reverse(p, n) ^ ones);
    });
}

/// F2-spanning set of <g> for a single unit-divisor generator of degree t:
/// lambda * x^i * g for lambda in {1, w, v, w*v} and 0 <= i < n - t.
inline std::vector<Codeword> additive_span(const SkewCyclicCode& code) {
    if (!code.has_remainder_test()) throw std::logic_error("additive span needs a single unit-divisor generator");
    const std::size_t n = code.length();
    const SkewPoly& g = code.generator();
    const RElem basis[4] = {RElem::one(), RElem(GF4::w()), RElem::v(), RElem(GF4::zero(), GF4::w())};
    std::vector<Codeword> out;
    for (std::size_t i = 0; i + g.deg() < n; ++i) {
        const SkewPoly shifted = SkewPoly::monomial(RElem::one(), i) * g;
        for (RElem lambda : basis) out.push_back(poly_to_word(lambda * shifted, n));
    }
    return out;
}

/// Reversibility without materializing. The map c -> theta(c)^r is additive,
/// so it suffices that it sends an additive spanning set into the code;
/// membership uses the remainder test.
inline bool is_reversible_by_span(const SkewCyclicCode& code) {
    for (const auto& c : additive_span(code))
        if (!code.contains_by_remainder(r_level_reverse(c))) return false;
    return true;
}

// ---------------------------------------------------------------------------

enum class Prediction { yes, no, unknown };

inline std::string_view to_string(Prediction p) noexcept {
    switch (p) {
        case Prediction::yes: return "yes";
        case Prediction::no: return "no";
        case Prediction::unknown: return "unknown";
    }
    return "unknown";
}

struct DnaClassification {
    std::size_t length = 0;
    GeneratorForm generator_form = GeneratorForm::generic;
    std::size_t degree = 0;
    bool palindromic = false;
    bool theta_palindromic = false;
    /// Some unit multiple of the generator is theta-palindromic.
    bool theta_palindromic_generator = false;
    Prediction reversible = Prediction::unknown;
    Prediction reverse_complement = Prediction::unknown;
    std::string rule;  ///< which characterization produced the prediction

    bool length_even() const noexcept { return length % 2 == 0; }
    bool degree_even() const noexcept { return degree % 2 == 0; }
};

inline bool has_theta_palindromic_unit_multiple(const SkewPoly& g) {
    for (RElem u : all_elements())
        if (is_unit(u) && is_theta_palindromic(u * g)) return true;
    return false;
}

namespace detail {

inline Prediction from_bool(bool b) noexcept { return b ? Prediction::yes : Prediction::no; }

// Codes <g> with g a right divisor of x^n - 1 with unit leading coefficient.
inline void classify_unit_generator(std::size_t n, const SkewPoly& g, DnaClassification& out) {
    const SkewPoly monic = inverse(g.lead()) * g;
    const std::size_t t = g.deg();
    const bool pal = is_palindromic(g);
    const bool thp = has_theta_palindromic_unit_multiple(g);
    if (n % 2 == 0 && t % 2 == 0) {
        out.reversible = from_bool(pal);
        out.rule += "even length, even degree: reversible iff palindromic";
    } else if (n % 2 == 0) {
        out.reversible = from_bool(thp);
        out.rule += "even length, odd degree: reversible iff generated by a theta-palindromic polynomial";
    } else {
        // sufficient: palindromic or theta-palindromic generator;
        // necessary: a palindromic generator over F4
        const bool sufficient = pal || thp;
        const bool necessary = monic.in_f4() && is_palindromic(monic);
        if (sufficient && necessary)
            out.reversible = Prediction::yes;
        else if (!sufficient && !necessary)
            out.reversible = Prediction::no;
        out.rule += "odd length: palindromic generator over F4";
    }
    if (out.reversible == Prediction::yes) {
        const SkewCyclicCode code = code_from_generator(n, g);
        out.reverse_complement = from_bool(code.contains_by_remainder(Codeword(n, RElem::one())));
    } else if (out.reversible == Prediction::no) {
        out.reverse_complement = Prediction::no;
    }
}

}  // namespace detail

/// Predicts reversibility and reverse-complement closure from the generator
/// alone, emitting yes/no only where a characterization applies exactly.
///
/// v-type and (v+1)-type generators are covered only when the code contains
/// no word with a unit leading coefficient; otherwise the code is reduced to
/// an equivalent unit-leading generator when one exists. That check needs
/// the materialized code, bounded by `cap`.
inline DnaClassification classify(const SkewCyclicCode& code, std::size_t cap = kDefaultSizeCap) {
    DnaClassification out;
    out.length = code.length();
    const std::size_t n = code.length();
    if (!code.single_generator()) {
        out.rule = "several generators: no characterization";
        return out;
    }
    const SkewPoly& g = code.generator();
    out.generator_form = code.form();
    out.degree = g.deg();
    out.palindromic = is_palindromic(g);
    out.theta_palindromic = is_theta_palindromic(g);
    out.theta_palindromic_generator = is_unit(g.lead()) && has_theta_palindromic_unit_multiple(g);

    switch (code.form()) {
        case GeneratorForm::unit_divisor:
            detail::classify_unit_generator(n, g, out);
            return out;
        case GeneratorForm::generic:
            out.rule = "generic generator: no characterization";
            return out;
        case GeneratorForm::v_type:
        case GeneratorForm::v1_type: break;
    }

    std::optional<CodeSet> set;
    try {
        set.emplace(materialize(code, cap));
    } catch (const resource_error&) {
        out.rule = "v-type generator: code too large to decide its case";
        return out;
    } catch (const std::domain_error&) {
        out.rule = "v-type generator: code too long to decide its case";
        return out;
    }

    if (auto u = min_unit_leading_word(*set)) {
        const std::size_t d = u->deg();
        const bool single = right_divides(*u, SkewPoly::x_n_minus_1(n)) && 4 * (n - d) < 64 &&
                            set->size() == (std::size_t{1} << (4 * (n - d)));
        if (!single) {
            out.rule = "v-type generator spanning a two-generator code: no characterization";
            return out;
        }
        out.rule = "v-type generator equivalent to unit generator " + to_list_string(*u) + "; ";
        detail::classify_unit_generator(n, *u, out);
        return out;
    }

    // no word with a unit leading coefficient
    out.reverse_complement = Prediction::no;
    if (n % 2 == 1 || g.deg() % 2 == 1) {
        out.reversible = Prediction::no;
        out.rule = "v-type generator, odd length or odd degree: never reversible";
    } else {
        out.reversible = detail::from_bool(out.palindromic);
        out.rule = "v-type generator, even length and degree: reversible iff palindromic";
    }
    return out;
}

}  // namespace skewdna
