#pragma once

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "analysis.hpp"
#include "codes.hpp"
#include "dna.hpp"

namespace skewdna {

/// One row of the element / Gray image / DNA 2-base correspondence.
struct CorrespondenceRow {
    std::string element;
    std::string gray_first;
    std::string gray_second;
    std::string bases;
};

/// The published correspondence, in published row order.
inline std::vector<CorrespondenceRow> reference_correspondence() {
    return {
        {"0", "0", "0", "AA"},           {"1", "1", "1", "TT"},
        {"w", "w", "w", "CC"},           {"w2", "w2", "w2", "GG"},
        {"v", "1", "0", "TA"},           {"1+v", "0", "1", "AT"},
        {"w+v", "w2", "w", "GC"},        {"w2+v", "w", "w2", "CG"},
        {"w*v", "w", "0", "CA"},         {"1+w*v", "w2", "1", "GT"},
        {"w+w*v", "0", "w", "AC"},       {"w2+w*v", "1", "w2", "TG"},
        {"w2*v", "w2", "0", "GA"},       {"1+w2*v", "w", "1", "CT"},
        {"w+w2*v", "1", "w", "TC"},      {"w2+w2*v", "0", "w2", "AG"},
    };
}

/// The published DNA image of <v(x^4 + x^2 + 1)> at length 6.
inline std::vector<std::string> reference_length12_code() {
    return {"AAAAAAAAAAAA", "TAATTAATTAAT", "CAACCAACCAAC", "GAAGGAAGGAAG",
            "TAAATAAATAAA", "AAATAAATAAAT", "CAAACAAACAAA", "AAACAAACAAAC",
            "GAAAGAAAGAAA", "AAAGAAAGAAAG", "CAATCAATCAAT", "TAACTAACTAAC",
            "GAATGAATGAAT", "TAAGTAAGTAAG", "GAACGAACGAAC", "CAAGCAAGCAAG"};
}

/// Rows computed from the implementation, same shape as the reference.
inline std::vector<CorrespondenceRow> computed_correspondence() {
    std::vector<CorrespondenceRow> out;
    for (const auto& ref : reference_correspondence()) {
        const RElem x = parse_relem(ref.element);
        const auto [p, q] = gray(x);
        out.push_back({ref.element, std::string(to_token(p)), std::string(to_token(q)), encode_element(x)});
    }
    return out;
}

inline constexpr std::uint64_t kDefaultSeed = 20240617;

struct SuiteOptions {
    std::uint64_t seed = kDefaultSeed;
    std::size_t random_samples = 10000;
    /// Expectations; tests replace these to check that corruption is caught.
    std::vector<CorrespondenceRow> correspondence = reference_correspondence();
    std::vector<std::string> length12_code = reference_length12_code();
};

struct CheckResult {
    int number = 0;
    std::string key;    ///< short stable identifier, e.g. "table2"
    std::string title;  ///< what is being checked
    bool correct = false;
    double seconds = 0;
    double budget_seconds = 0;
    std::string detail;
    std::vector<std::string> notes;  ///< supplementary, informational lines

    bool within_budget() const noexcept { return seconds <= budget_seconds; }
    bool passed() const noexcept { return correct && within_budget(); }
};

/// Per-code facts collected once by brute force and shared between checks.
struct SweepRecord {
    std::size_t n = 0;
    std::size_t degree = 0;
    LeadingMode mode = LeadingMode::unit;
    SkewPoly generator;
    std::size_t size = 0;
    bool reversible = false;
    bool complement_closed = false;
    bool reverse_complement = false;
    bool all_ones = false;
    bool cyclic_closed = false;
    bool unit_leading_word = false;  ///< some nonzero word has a unit leading coefficient
    bool minimal_non_unit_exists = false;
    bool minimal_non_unit_v_form = true;
};

namespace detail {

inline bool has_unit_leading_word(const CodeSet& set) {
    for (PackedWord p : set.packed()) {
        if (p == 0) continue;
        std::size_t d = set.length();
        while (d-- > 0 && ((p >> (4 * d)) & 0xFu) == 0) {
        }
        if (is_unit(RElem::from_index(static_cast<unsigned>((p >> (4 * d)) & 0xFu)))) return true;
    }
    return false;
}

inline SweepRecord sweep_record(std::size_t n, std::size_t t, LeadingMode mode, const SkewPoly& g) {
    const CodeSet set = materialize(code_from_generator(n, g));
    SweepRecord r;
    r.n = n;
    r.degree = t;
    r.mode = mode;
    r.generator = g;
    r.size = set.size();
    r.reversible = is_reversible_dna(set);
    r.complement_closed = is_complement_closed(set);
    r.reverse_complement = is_reverse_complement_dna(set);
    r.all_ones = all_ones_in(set);
    r.cyclic_closed = is_cyclic_shift_closed(set);
    r.unit_leading_word = has_unit_leading_word(set);
    const auto scan = minimal_degree_scan(set);
    r.minimal_non_unit_exists = scan.degree.has_value();
    r.minimal_non_unit_v_form = scan.all_v_form;
    return r;
}

inline std::string describe(const SweepRecord& r) {
    std::ostringstream os;
    os << "n=" << r.n << " " << to_string(r.mode) << " g=" << to_list_string(r.generator);
    return os.str();
}

}  // namespace detail

inline constexpr int kCheckCount = 12;

/// Time budget per check, in seconds.
inline double check_budget(int number) {
    static constexpr double budgets[kCheckCount] = {1, 1, 10, 10, 5, 120, 60, 60, 60, 30, 30, 60};
    if (number < 1 || number > kCheckCount) throw std::out_of_range("no acceptance check " + std::to_string(number));
    return budgets[number - 1];
}

/// Runs the acceptance checks. Brute-force sweep results are cached per
/// (n, degree, leading mode) so each code is materialized once.
class AcceptanceSuite {
   public:
    static constexpr int kCount = kCheckCount;

    explicit AcceptanceSuite(SuiteOptions options = {}) : opt_(std::move(options)) {}

    CheckResult run(int number) {
        CheckResult r;
        r.number = number;
        r.budget_seconds = check_budget(number);
        const auto start = std::chrono::steady_clock::now();
        switch (number) {
            case 1: correspondence_table(r); break;
            case 2: unit_inverse_formula(r); break;
            case 3: length10_palindromic_divisor(r); break;
            case 4: length12_theta_palindromic_divisor(r); break;
            case 5: length12_dna_code(r); break;
            case 6: even_degree_sweep(r); break;
            case 7: odd_degree_sweep(r); break;
            case 8: odd_length_and_impossibility_sweep(r); break;
            case 9: complement_sweep(r); break;
            case 10: quasi_cyclic_identity(r); break;
            case 11: distance_preservation(r); break;
            case 12: minimal_degree_form(r); break;
            default: throw std::out_of_range("no acceptance check " + std::to_string(number));
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return r;
    }

    std::vector<CheckResult> run_all(const std::function<void(const CheckResult&)>& on_result = {}) {
        std::vector<CheckResult> out;
        for (int i = 1; i <= kCount; ++i) {
            out.push_back(run(i));
            if (on_result) on_result(out.back());
        }
        return out;
    }

    /// Brute-force records for every degree-t divisor of the given kind.
    const std::vector<SweepRecord>& sweep(std::size_t n, std::size_t t, LeadingMode mode) {
        const auto key = std::make_tuple(n, t, mode);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        std::vector<SweepRecord> recs;
        for (const auto& g : enumerate_right_divisors(n, t, mode)) recs.push_back(detail::sweep_record(n, t, mode, g));
        return cache_.emplace(key, std::move(recs)).first->second;
    }

   private:
    using Pred = std::function<bool(std::size_t n, std::size_t t, LeadingMode mode)>;

    // Families of codes covered by the sweeps.
    static bool even_degree_family(std::size_t n, std::size_t t, LeadingMode) {
        return (n == 2 || n == 4 || n == 6) && t % 2 == 0;
    }
    static bool odd_degree_family(std::size_t n, std::size_t t, LeadingMode mode) {
        return (n == 4 || n == 6) && t % 2 == 1 && mode == LeadingMode::unit;
    }
    static bool odd_length_family(std::size_t n, std::size_t, LeadingMode) { return n == 3 || n == 5; }
    static bool v_impossibility_family(std::size_t n, std::size_t t, LeadingMode mode) {
        if (mode == LeadingMode::unit) return false;
        return n == 3 || n == 5 || ((n == 4 || n == 6) && t % 2 == 1);
    }

    template <class F>
    void for_each_record(const Pred& family, F&& f) {
        for (std::size_t n = 2; n <= 6; ++n)
            for (std::size_t t = 0; t < n; ++t)
                for (LeadingMode mode : {LeadingMode::unit, LeadingMode::v, LeadingMode::v1})
                    if (family(n, t, mode))
                        for (const auto& rec : sweep(n, t, mode)) f(rec);
    }

    void correspondence_table(CheckResult& r) {
        r.key = "table1";
        r.title = "element / Gray image / DNA 2-base table, all 16 rows";
        const auto got = computed_correspondence();
        const auto& want = opt_.correspondence;
        if (want.size() != 16) {
            r.detail = "expected table has " + std::to_string(want.size()) + " rows";
            return;
        }
        std::size_t bad = 0;
        for (std::size_t i = 0; i < 16; ++i) {
            const auto& g = got[i];
            const auto& w = want[i];
            if (g.element != w.element || g.gray_first != w.gray_first || g.gray_second != w.gray_second ||
                g.bases != w.bases) {
                if (bad++ == 0)
                    r.detail = "row " + w.element + ": computed (" + g.gray_first + "," + g.gray_second + ") " +
                               g.bases + ", expected (" + w.gray_first + "," + w.gray_second + ") " + w.bases;
            }
        }
        // the 16 two-base strings must be pairwise distinct
        std::vector<std::string> bases;
        for (const auto& g : got) bases.push_back(g.bases);
        std::sort(bases.begin(), bases.end());
        const bool distinct = std::adjacent_find(bases.begin(), bases.end()) == bases.end();
        r.correct = bad == 0 && distinct;
        if (r.correct) r.detail = "16/16 rows match";
        else if (!distinct && bad == 0) r.detail = "2-base images not distinct";
        else r.detail += " (" + std::to_string(bad) + " mismatching rows)";
    }

    void unit_inverse_formula(CheckResult& r) {
        r.key = "unit-inverse";
        r.title = "inverse of a unit a+bv is a^-1 + b^2 v, all 9 units";
        std::size_t units = 0, ok = 0;
        for (RElem x : all_elements()) {
            if (!is_unit(x)) continue;
            ++units;
            const RElem formula(x.a().inverse(), x.b().square());
            if (formula * x == RElem::one() && x * formula == RElem::one()) ++ok;
            else if (r.detail.empty()) r.detail = "fails for " + to_token(x);
        }
        r.correct = units == 9 && ok == 9;
        if (r.correct) r.detail = "9/9 units";
        else if (r.detail.empty()) r.detail = std::to_string(units) + " units found";
    }

    void length10_palindromic_divisor(CheckResult& r) {
        r.key = "divisor-n10";
        r.title = "x^4+(w+v)x^2+1 right-divides x^10-1, is palindromic, code reversible";
        const SkewPoly g = parse_poly("x^4 + (w+v)*x^2 + 1");
        const bool divides = right_divides(g, SkewPoly::x_n_minus_1(10));
        const bool pal = is_palindromic(g);
        bool rev = false;
        if (divides) rev = is_reversible_by_span(code_from_generator(10, g));
        r.correct = divides && pal && rev;
        r.detail = std::string("divides=") + (divides ? "yes" : "no") + " palindromic=" + (pal ? "yes" : "no") +
                   " reversible=" + (rev ? "yes" : "no");
    }

    void length12_theta_palindromic_divisor(CheckResult& r) {
        r.key = "divisor-n12";
        r.title = "x^3+(w2+v)x^2+(w+v)x+1 right-divides x^12-1 and is theta-palindromic";
        const SkewPoly g = parse_poly("x^3 + (w2+v)*x^2 + (w+v)*x + 1");
        const bool divides = right_divides(g, SkewPoly::x_n_minus_1(12));
        const bool thp = is_theta_palindromic(g);
        r.correct = divides && thp;
        r.detail = std::string("divides=") + (divides ? "yes" : "no") + " theta-palindromic=" + (thp ? "yes" : "no");
    }

    void length12_dna_code(CheckResult& r) {
        r.key = "table2";
        r.title = "<v(x^4+x^2+1)> at n=6: 16 words, DNA set matches, reversible, min Lee distance 3";
        const SkewCyclicCode code = code_from_generator(6, parse_poly("v*(x^4 + x^2 + 1)"));
        const CodeSet set = materialize(code);
        std::vector<std::string> got;
        for (PackedWord p : set.packed()) got.push_back(encode_word(unpack(p, 6)));
        std::sort(got.begin(), got.end());
        auto want = opt_.length12_code;
        std::sort(want.begin(), want.end());
        const bool same = got == want;
        const bool rev = is_reversible_dna(set);
        const std::size_t lee = set.size() >= 2 ? min_distance(set, Metric::lee) : 0;
        r.correct = set.size() == 16 && same && rev && lee == 3;
        r.detail = "size=" + std::to_string(set.size()) + " dna-set=" + (same ? "equal" : "differs") +
                   " reversible=" + (rev ? "yes" : "no") + " min-lee=" + std::to_string(lee);
    }

    void even_degree_sweep(CheckResult& r) {
        r.key = "even-degree";
        r.title = "even n, even degree: reversible iff palindromic (n in {2,4,6}, all leading kinds)";
        std::size_t codes = 0, bad = 0;
        for_each_record(even_degree_family, [&](const SweepRecord& rec) {
            ++codes;
            if (rec.reversible != is_palindromic(rec.generator) && bad++ == 0)
                r.detail = "counterexample " + detail::describe(rec) + "; ";
        });
        r.correct = bad == 0 && codes > 0;
        r.detail += std::to_string(codes) + " codes, " + std::to_string(bad) + " mismatches";
    }

    void odd_degree_sweep(CheckResult& r) {
        r.key = "odd-degree";
        r.title = "even n, odd degree: reversible iff a0*g is theta-palindromic (n in {4,6}, unit leading)";
        std::size_t codes = 0, bad = 0;
        for_each_record(odd_degree_family, [&](const SweepRecord& rec) {
            ++codes;
            const SkewPoly& g = rec.generator;
            const bool a0_test = is_theta_palindromic(g.coeff(0) * g);
            const bool any_unit = has_theta_palindromic_unit_multiple(g);
            if ((rec.reversible != a0_test || rec.reversible != any_unit) && bad++ == 0)
                r.detail = "counterexample " + detail::describe(rec) + "; ";
        });
        r.correct = bad == 0 && codes > 0;
        r.detail += std::to_string(codes) + " codes, " + std::to_string(bad) + " mismatches";
    }

    void odd_length_and_impossibility_sweep(CheckResult& r) {
        r.key = "odd-length";
        r.title = "n in {3,5} codes are cyclic; v-type codes at odd n or odd degree are never reversible";
        std::size_t odd_codes = 0, not_cyclic = 0;
        for_each_record(odd_length_family, [&](const SweepRecord& rec) {
            ++odd_codes;
            if (!rec.cyclic_closed && not_cyclic++ == 0) r.notes.push_back("not cyclic: " + detail::describe(rec));
        });
        std::size_t v_codes = 0, reversible = 0, restricted = 0, restricted_bad = 0;
        for_each_record(v_impossibility_family, [&](const SweepRecord& rec) {
            ++v_codes;
            if (rec.reversible) {
                ++reversible;
                if (reversible <= 3)
                    r.notes.push_back("reversible v-type code: " + detail::describe(rec) + " (size " +
                                      std::to_string(rec.size) + ", contains a unit-leading word: " +
                                      (rec.unit_leading_word ? "yes" : "no") + ")");
            }
            if (!rec.unit_leading_word) {
                ++restricted;
                restricted_bad += rec.reversible;
            }
        });
        r.correct = odd_codes > 0 && not_cyclic == 0 && v_codes > 0 && reversible == 0;
        r.detail = std::to_string(odd_codes) + " odd-length codes, " + std::to_string(not_cyclic) +
                   " not cyclic; " + std::to_string(v_codes) + " v-type codes, " + std::to_string(reversible) +
                   " reversible";
        r.notes.push_back("restricted to v-type codes without a unit-leading word: " + std::to_string(restricted) +
                          " codes, " + std::to_string(restricted_bad) + " reversible");
    }

    void complement_sweep(CheckResult& r) {
        r.key = "complement";
        r.title = "reverse-complement iff reversible and all-ones present; v-type codes not complement-closed";
        std::size_t codes = 0, rc_bad = 0, v_codes = 0, v_closed = 0, restricted = 0, restricted_bad = 0;
        auto visit = [&](const SweepRecord& rec) {
            ++codes;
            if (rec.reverse_complement != (rec.reversible && rec.all_ones) && rc_bad++ == 0)
                r.notes.push_back("reverse-complement mismatch: " + detail::describe(rec));
            if (rec.mode == LeadingMode::unit) return;
            ++v_codes;
            if (rec.complement_closed && ++v_closed <= 3)
                r.notes.push_back("complement-closed v-type code: " + detail::describe(rec) +
                                  " (contains a unit-leading word: " + (rec.unit_leading_word ? "yes" : "no") + ")");
            if (!rec.unit_leading_word) {
                ++restricted;
                restricted_bad += rec.complement_closed;
            }
        };
        for_each_record(even_degree_family, visit);
        for_each_record(odd_degree_family, visit);
        r.correct = codes > 0 && rc_bad == 0 && v_closed == 0;
        r.detail = std::to_string(codes) + " codes, " + std::to_string(rc_bad) + " reverse-complement mismatches; " +
                   std::to_string(v_codes) + " v-type codes, " + std::to_string(v_closed) + " complement-closed";
        r.notes.push_back("restricted to v-type codes without a unit-leading word: " + std::to_string(restricted) +
                          " codes, " + std::to_string(restricted_bad) + " complement-closed");
    }

    void quasi_cyclic_identity(CheckResult& r) {
        r.key = "quasi-cyclic";
        r.title = "pair_swap(tau2(gray(c))) == gray(sigma_theta(c)): exhaustive n<=2, sampled n in 3..6";
        std::size_t words = 0, bad = 0;
        auto check = [&](const Codeword& c) {
            ++words;
            if (!quasi_cyclic_identity_holds(c) && bad++ == 0) r.detail = "fails for " + word_to_string(c) + "; ";
        };
        for (std::size_t n = 1; n <= 2; ++n) {
            const std::size_t total = std::size_t{1} << (4 * n);
            for (std::size_t i = 0; i < total; ++i) check(unpack(i, n));
        }
        std::mt19937_64 rng(opt_.seed);
        std::uniform_int_distribution<unsigned> elem(0, 15);
        for (std::size_t n = 3; n <= 6; ++n)
            for (std::size_t s = 0; s < opt_.random_samples; ++s) {
                Codeword c(n);
                for (auto& x : c) x = RElem::from_index(elem(rng));
                check(c);
            }
        r.correct = bad == 0 && words > 0;
        r.detail += std::to_string(words) + " words, " + std::to_string(bad) + " failures";
    }

    void distance_preservation(CheckResult& r) {
        r.key = "gray-isometry";
        r.title = "Lee distance equals Hamming distance of Gray images: 256 element pairs, sampled words n<=6";
        std::vector<WordPair> pairs;
        for (RElem x : all_elements())
            for (RElem y : all_elements()) pairs.push_back({Codeword{x}, Codeword{y}});
        std::mt19937_64 rng(opt_.seed + 1);
        std::uniform_int_distribution<unsigned> elem(0, 15);
        for (std::size_t n = 1; n <= 6; ++n)
            for (std::size_t s = 0; s < opt_.random_samples; ++s) {
                Codeword u(n), w(n);
                for (auto& x : u) x = RElem::from_index(elem(rng));
                for (auto& x : w) x = RElem::from_index(elem(rng));
                pairs.push_back({std::move(u), std::move(w)});
            }
        std::size_t bad = 0;
        for (const auto& p : pairs)
            if (!verify_distance_preservation(std::span<const WordPair>(&p, 1)) && bad++ == 0)
                r.detail = "fails for " + word_to_string(p.first) + " / " + word_to_string(p.second) + "; ";
        r.correct = bad == 0;
        r.detail += std::to_string(pairs.size()) + " pairs, " + std::to_string(bad) + " failures";
    }

    void minimal_degree_form(CheckResult& r) {
        r.key = "minimal-degree";
        r.title = "minimal-degree non-unit-leading words are v*g1 or (v+1)*g1, g1 over F4";
        std::size_t codes = 0, with_words = 0, bad = 0;
        auto any = [](std::size_t n, std::size_t t, LeadingMode mode) {
            return even_degree_family(n, t, mode) || odd_degree_family(n, t, mode) ||
                   odd_length_family(n, t, mode) || v_impossibility_family(n, t, mode);
        };
        for_each_record(any, [&](const SweepRecord& rec) {
            ++codes;
            if (!rec.minimal_non_unit_exists) return;
            ++with_words;
            if (!rec.minimal_non_unit_v_form && bad++ == 0)
                r.detail = "counterexample " + detail::describe(rec) + "; ";
        });
        r.correct = bad == 0 && with_words > 0;
        r.detail += std::to_string(codes) + " codes, " + std::to_string(with_words) +
                    " with non-unit-leading words, " + std::to_string(bad) + " violations";
    }

    SuiteOptions opt_;
    std::map<std::tuple<std::size_t, std::size_t, LeadingMode>, std::vector<SweepRecord>> cache_;
};

/// `PASS 05 table2 (0.01s/5s): <title> -- <detail>`
inline std::string format_result_line(const CheckResult& r) {
    std::ostringstream os;
    os << (r.passed() ? "PASS " : "FAIL ") << (r.number < 10 ? "0" : "") << r.number << ' ' << r.key << " ("
       << std::fixed;
    os.precision(2);
    os << r.seconds << "s/" << static_cast<int>(r.budget_seconds) << "s): " << r.title << " -- " << r.detail;
    if (r.correct && !r.within_budget()) os << " [over time budget]";
    return os.str();
}

}  // namespace skewdna
