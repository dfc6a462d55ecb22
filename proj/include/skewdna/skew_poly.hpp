#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ring.hpp"

namespace skewdna {

/// Polynomial in R[x, theta], where x*a = theta(a)*x.
///
/// Coefficients are stored in ascending powers with no trailing zeros; the
/// zero polynomial has no coefficients and no degree.
class SkewPoly {
   public:
    SkewPoly() = default;
    explicit SkewPoly(std::vector<RElem> coeffs) : c_(std::move(coeffs)) { normalize(); }
    SkewPoly(std::initializer_list<RElem> coeffs) : c_(coeffs) { normalize(); }

    static SkewPoly constant(RElem a) { return SkewPoly({a}); }
    static SkewPoly monomial(RElem a, std::size_t k) {
        std::vector<RElem> c(k + 1);
        c[k] = a;
        return SkewPoly(std::move(c));
    }
    /// x^n - 1, which equals x^n + 1 in characteristic 2.
    static SkewPoly x_n_minus_1(std::size_t n) {
        std::vector<RElem> c(n + 1);
        c[0] = RElem::one();
        c[n] += RElem::one();
        return SkewPoly(std::move(c));
    }
    /// 1 + x + ... + x^(n-1)
    static SkewPoly all_ones(std::size_t n) { return SkewPoly(std::vector<RElem>(n, RElem::one())); }

    bool is_zero() const noexcept { return c_.empty(); }
    std::optional<std::size_t> degree() const noexcept {
        if (c_.empty()) return std::nullopt;
        return c_.size() - 1;
    }
    /// Degree of a polynomial known to be nonzero.
    std::size_t deg() const {
        if (c_.empty()) throw std::domain_error("degree of the zero polynomial");
        return c_.size() - 1;
    }
    RElem lead() const {
        if (c_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
        return c_.back();
    }
    RElem coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : RElem{}; }
    const std::vector<RElem>& coeffs() const noexcept { return c_; }

    bool in_f4() const noexcept {
        return std::all_of(c_.begin(), c_.end(), [](RElem a) { return a.in_f4(); });
    }

    friend bool operator==(const SkewPoly&, const SkewPoly&) = default;
    /// Orders by coefficient tuple, lowest power first, then by length.
    friend bool operator<(const SkewPoly& f, const SkewPoly& g) {
        return std::lexicographical_compare(f.c_.begin(), f.c_.end(), g.c_.begin(), g.c_.end());
    }

    friend SkewPoly operator+(const SkewPoly& f, const SkewPoly& g) {
        std::vector<RElem> out(std::max(f.c_.size(), g.c_.size()));
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.coeff(i) + g.coeff(i);
        return SkewPoly(std::move(out));
    }
    friend SkewPoly operator-(const SkewPoly& f, const SkewPoly& g) { return f + g; }

    /// (a x^i)(b x^j) = a theta^i(b) x^(i+j)
    friend SkewPoly operator*(const SkewPoly& f, const SkewPoly& g) {
        if (f.is_zero() || g.is_zero()) return {};
        std::vector<RElem> out(f.c_.size() + g.c_.size() - 1);
        for (std::size_t i = 0; i < f.c_.size(); ++i) {
            if (f.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < g.c_.size(); ++j) out[i + j] += f.c_[i] * theta_pow(g.c_[j], i);
        }
        return SkewPoly(std::move(out));
    }

    /// Left scalar multiple lambda * f.
    friend SkewPoly operator*(RElem lambda, const SkewPoly& f) {
        std::vector<RElem> out(f.c_);
        for (auto& a : out) a = lambda * a;
        return SkewPoly(std::move(out));
    }

   private:
    void normalize() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<RElem> c_;
};

/// theta applied to every coefficient.
inline SkewPoly apply_theta(const SkewPoly& f) {
    std::vector<RElem> out(f.coeffs());
    for (auto& a : out) a = theta(a);
    return SkewPoly(std::move(out));
}

/// Coefficient reversal b_i = a_(t-i) for a nonzero f of degree t.
inline SkewPoly reverse(const SkewPoly& f) {
    if (f.is_zero()) throw std::domain_error("reverse of the zero polynomial");
    std::vector<RElem> out(f.coeffs().rbegin(), f.coeffs().rend());
    return SkewPoly(std::move(out));
}

inline bool is_palindromic(const SkewPoly& f) {
    if (f.is_zero()) throw std::domain_error("palindromic test on the zero polynomial");
    const auto& c = f.coeffs();
    return std::equal(c.begin(), c.begin() + c.size() / 2, c.rbegin());
}

/// a_i = theta(a_(t-i)) for every i.
inline bool is_theta_palindromic(const SkewPoly& f) {
    if (f.is_zero()) throw std::domain_error("theta-palindromic test on the zero polynomial");
    const auto& c = f.coeffs();
    const std::size_t t = c.size() - 1;
    for (std::size_t i = 0; i <= t; ++i)
        if (c[i] != theta(c[t - i])) return false;
    return true;
}

struct DivMod {
    SkewPoly quotient;
    SkewPoly remainder;
};

/// Right division f = q*d + r with deg r < deg d. The leading coefficient of
/// d must be a unit; q and r are then unique.
inline DivMod right_divmod(const SkewPoly& f, const SkewPoly& d) {
    if (d.is_zero()) throw std::domain_error("right division by the zero polynomial");
    if (!is_unit(d.lead())) throw std::domain_error("right division needs a unit leading coefficient");
    const std::size_t m = d.deg();
    const auto& dc = d.coeffs();
    const RElem lead_inv[2] = {inverse(dc[m]), inverse(theta(dc[m]))};

    std::vector<RElem> r(f.coeffs());
    if (r.size() <= m) return {SkewPoly{}, f};
    std::vector<RElem> q(r.size() - m);
    for (std::size_t k = r.size(); k-- > m;) {
        if (r[k].is_zero()) continue;
        const std::size_t shift = k - m;
        // s x^shift * d has leading coefficient s * theta^shift(lead d)
        const RElem s = r[k] * lead_inv[shift & 1u];
        q[shift] = s;
        for (std::size_t j = 0; j <= m; ++j) r[shift + j] += s * theta_pow(dc[j], shift);
    }
    r.resize(m);
    return {SkewPoly(std::move(q)), SkewPoly(std::move(r))};
}

inline SkewPoly right_rem(const SkewPoly& f, const SkewPoly& d) { return right_divmod(f, d).remainder; }

/// True when d is a right divisor of f, i.e. f = q*d.
inline bool right_divides(const SkewPoly& d, const SkewPoly& f) { return right_rem(f, d).is_zero(); }

/// Canonical coefficient-list form, ascending: `[1, 0, w+v, 0, 1]`.
inline std::string to_list_string(const SkewPoly& f) {
    std::string out = "[";
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (i) out += ", ";
        out += to_token(f.coeffs()[i]);
    }
    if (f.is_zero()) out += "0";
    return out + "]";
}

/// Human-readable form, descending powers: `x^4 + (w+v)*x^2 + 1`.
inline std::string to_human_string(const SkewPoly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    const auto& c = f.coeffs();
    for (std::size_t k = c.size(); k-- > 0;) {
        if (c[k].is_zero()) continue;
        if (!out.empty()) out += " + ";
        std::string tok = to_token(c[k]);
        const bool compound = tok.find('+') != std::string::npos || tok.find('*') != std::string::npos;
        std::string mono = k == 0 ? "" : (k == 1 ? "x" : "x^" + std::to_string(k));
        if (mono.empty())
            out += compound ? "(" + tok + ")" : tok;
        else if (c[k] == RElem::one())
            out += mono;
        else
            out += (compound ? "(" + tok + ")" : tok) + "*" + mono;
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const SkewPoly& f) { return os << to_human_string(f); }

namespace detail {

// Recursive-descent reader for polynomial expressions. Products are skew
// products evaluated left to right, so `x*v` means (1+v)x.
//   expr   := term (('+' | '-') term)*
//   term   := power ('*'? power)*
//   power  := atom ('^' digits)?
//   atom   := '(' expr ')' | 'x' | '0' | '1' | 'w' | 'w2' | 'v'
class PolyReader {
   public:
    explicit PolyReader(std::string_view s) : s_(s) {}

    SkewPoly read() {
        SkewPoly out = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return out;
    }

   private:
    SkewPoly expr() {
        SkewPoly acc = term();
        while (true) {
            skip_ws();
            if (peek() == '+' || peek() == '-') {
                ++pos_;
                acc = acc + term();
            } else {
                return acc;
            }
        }
    }

    SkewPoly term() {
        SkewPoly acc = power();
        while (true) {
            skip_ws();
            char c = peek();
            if (c == '*') {
                ++pos_;
                acc = acc * power();
            } else if (c == '(' || std::isalnum(static_cast<unsigned char>(c))) {
                acc = acc * power();
            } else {
                return acc;
            }
        }
    }

    SkewPoly power() {
        SkewPoly base = atom();
        skip_ws();
        if (peek() != '^') return base;
        ++pos_;
        skip_ws();
        std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) fail("expected exponent");
        const std::size_t e = std::stoul(std::string(s_.substr(start, pos_ - start)));
        if (e > 4096) fail("exponent too large");
        SkewPoly out = SkewPoly::constant(RElem::one());
        for (std::size_t i = 0; i < e; ++i) out = out * base;
        return out;
    }

    SkewPoly atom() {
        skip_ws();
        if (peek() == '(') {
            ++pos_;
            SkewPoly inner = expr();
            skip_ws();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return inner;
        }
        std::size_t start = pos_;
        while (std::isalnum(static_cast<unsigned char>(peek()))) ++pos_;
        std::string_view word = s_.substr(start, pos_ - start);
        if (word.empty()) fail("expected a term");
        if (word == "x") return SkewPoly::monomial(RElem::one(), 1);
        if (word == "v") return SkewPoly::constant(RElem::v());
        if (word == "0" || word == "1" || word == "w" || word == "w2") return SkewPoly::constant(RElem(parse_gf4(word)));
        fail("unknown symbol '" + std::string(word) + "'");
    }

    char peek() const noexcept { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void skip_ws() noexcept {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses either the coefficient-list form `[1, 0, w+v, 0, 1]` (ascending)
/// or an expression such as `x^4 + (w+v)*x^2 + 1` or `v*(x^4+x^2+1)`.
inline SkewPoly parse_poly(std::string_view s) {
    auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) throw std::invalid_argument("empty polynomial");
    if (s[first] != '[') return detail::PolyReader(s).read();

    auto close = s.find(']', first);
    if (close == std::string_view::npos || s.find_first_not_of(" \t\r\n", close + 1) != std::string_view::npos)
        throw std::invalid_argument("coefficient list must be enclosed in [ ]");
    std::string_view body = s.substr(first + 1, close - first - 1);
    std::vector<RElem> coeffs;
    if (body.find_first_not_of(" \t") == std::string_view::npos) return {};
    while (true) {
        auto comma = body.find(',');
        coeffs.push_back(parse_relem(body.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        body = body.substr(comma + 1);
    }
    return SkewPoly(std::move(coeffs));
}

}  // namespace skewdna
