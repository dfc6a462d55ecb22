#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <unordered_set>
#include <utility>
#include <vector>

#include "codes.hpp"
#include "ring.hpp"

namespace skewdna {

template <class T>
std::size_t hamming_weight(std::span<const T> w) {
    return static_cast<std::size_t>(std::count_if(w.begin(), w.end(), [](const T& x) { return !x.is_zero(); }));
}

template <class T>
std::size_t hamming_distance(std::span<const T> u, std::span<const T> w) {
    if (u.size() != w.size()) throw std::domain_error("hamming distance: length mismatch");
    std::size_t d = 0;
    for (std::size_t i = 0; i < u.size(); ++i) d += u[i] != w[i];
    return d;
}

inline std::size_t hamming_weight(const std::vector<RElem>& w) { return hamming_weight(std::span<const RElem>(w)); }
inline std::size_t hamming_weight(const std::vector<GF4>& w) { return hamming_weight(std::span<const GF4>(w)); }

/// Hamming weight of the Gray image: 0, 1 or 2.
inline constexpr std::size_t lee_weight(RElem x) noexcept {
    auto [p, q] = gray(x);
    return std::size_t{!p.is_zero()} + std::size_t{!q.is_zero()};
}

inline std::size_t lee_weight(std::span<const RElem> c) noexcept {
    std::size_t w = 0;
    for (RElem x : c) w += lee_weight(x);
    return w;
}

inline std::size_t lee_distance(std::span<const RElem> u, std::span<const RElem> w) {
    if (u.size() != w.size()) throw std::domain_error("lee distance: length mismatch");
    std::size_t d = 0;
    for (std::size_t i = 0; i < u.size(); ++i) d += lee_weight(u[i] - w[i]);
    return d;
}

enum class Metric { hamming, lee };

namespace detail {

inline std::size_t packed_weight(PackedWord p, std::size_t n, Metric m) {
    std::size_t w = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const unsigned idx = static_cast<unsigned>((p >> (4 * i)) & 0xFu);
        w += m == Metric::hamming ? (idx != 0) : lee_weight(RElem::from_index(idx));
    }
    return w;
}

}  // namespace detail

/// Minimum weight over nonzero words; equals the minimum distance because
/// the code is an additive group.
inline std::size_t min_distance(const CodeSet& set, Metric metric) {
    if (set.size() < 2) throw std::domain_error("minimum distance of a code with fewer than two words");
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (PackedWord p : set.packed())
        if (p != 0) best = std::min(best, detail::packed_weight(p, set.length(), metric));
    return best;
}

// ---------------------------------------------------------------------------
// Gray images over F4, length 2n: (a_0 + b_0, a_0, a_1 + b_1, a_1, ...)

using GrayWord = std::vector<GF4>;

inline GrayWord gray_image(std::span<const RElem> c) {
    GrayWord out;
    out.reserve(2 * c.size());
    for (RElem x : c) {
        auto [p, q] = gray(x);
        out.push_back(p);
        out.push_back(q);
    }
    return out;
}

inline Codeword gray_preimage(std::span<const GF4> g) {
    if (g.size() % 2 != 0) throw std::domain_error("Gray word must have even length");
    Codeword out;
    for (std::size_t i = 0; i < g.size(); i += 2) out.push_back(gray_inverse({g[i], g[i + 1]}));
    return out;
}

/// 2 bits per F4 entry; fits lengths up to 32.
inline std::uint64_t pack_gray(std::span<const GF4> g) {
    if (g.size() > 32) throw std::domain_error("Gray word too long to pack");
    std::uint64_t p = 0;
    for (std::size_t i = 0; i < g.size(); ++i) p |= std::uint64_t{g[i].bits()} << (2 * i);
    return p;
}

inline std::unordered_set<std::uint64_t> gray_image_set(const CodeSet& set) {
    std::unordered_set<std::uint64_t> out;
    out.reserve(set.size() * 2);
    for (PackedWord p : set.packed()) out.insert(pack_gray(gray_image(unpack(p, set.length()))));
    return out;
}

/// Rotation right by two positions: the 2-quasi-cyclic shift.
inline GrayWord tau2(std::span<const GF4> g) {
    if (g.size() % 2 != 0) throw std::domain_error("tau2 needs an even length");
    GrayWord out(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) out[(i + 2) % g.size()] = g[i];
    return out;
}

/// Swaps positions 2i and 2i+1 for every i.
inline GrayWord pair_swap(std::span<const GF4> g) {
    if (g.size() % 2 != 0) throw std::domain_error("pair_swap needs an even length");
    GrayWord out(g.begin(), g.end());
    for (std::size_t i = 0; i < g.size(); i += 2) std::swap(out[i], out[i + 1]);
    return out;
}

/// pair_swap(tau2(gray(c))) == gray(sigma_theta(c)) for the single word c.
inline bool quasi_cyclic_identity_holds(std::span<const RElem> c) {
    return pair_swap(tau2(gray_image(c))) == gray_image(sigma_theta(c));
}

/// For every word c of the code, pair_swap(tau2(gray(c))) equals
/// gray(sigma_theta(c)) and lies in the Gray image; so the Gray image under
/// the fixed permutation pair_swap is invariant under tau2.
inline bool verify_quasi_cyclic_equivalence(const CodeSet& set) {
    const auto image = gray_image_set(set);
    for (PackedWord p : set.packed()) {
        const Codeword c = unpack(p, set.length());
        const GrayWord lhs = pair_swap(tau2(gray_image(c)));
        if (lhs != gray_image(sigma_theta(c))) return false;
        if (!image.count(pack_gray(lhs))) return false;
    }
    return true;
}

/// Closure of a set of Gray words under pair_swap after tau2.
inline bool is_closed_under_swapped_tau2(const std::unordered_set<std::uint64_t>& image, std::size_t gray_length) {
    for (std::uint64_t p : image) {
        GrayWord g(gray_length);
        for (std::size_t i = 0; i < gray_length; ++i) g[i] = GF4::from_bits((p >> (2 * i)) & 3u);
        if (!image.count(pack_gray(pair_swap(tau2(g))))) return false;
    }
    return true;
}

using WordPair = std::pair<Codeword, Codeword>;

/// Lee distance of each pair equals the Hamming distance of the Gray images.
inline bool verify_distance_preservation(std::span<const WordPair> sample) {
    for (const auto& [u, w] : sample) {
        const GrayWord gu = gray_image(u), gw = gray_image(w);
        if (lee_distance(u, w) != hamming_distance<GF4>(gu, gw)) return false;
    }
    return true;
}

}  // namespace skewdna
