// skewdna: command-line front end for theta-skew cyclic codes over F4 + vF4
// and the DNA codes obtained from them through the Gray map.
//
// Exit codes: 0 success, 1 verification failure, 2 input error, 3 size cap.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif
#include <nlohmann/json.hpp>

#include <skewdna/skewdna.hpp>

namespace {

using namespace skewdna;
using nlohmann::json;

enum Exit : int { kOk = 0, kVerifyFailed = 1, kInputError = 2, kCapExceeded = 3 };

struct Config {
    std::size_t n = 0;
    std::string gen;
    std::string code_file;
    std::size_t degree = 0;
    std::string leading = "unit";
    std::string metric = "lee";
    std::vector<std::string> properties;
    std::string format = "text";
    std::size_t cap = kDefaultSizeCap;
    std::uint64_t seed = kDefaultSeed;
    bool assert_props = false;
    bool fasta = false;
    bool words = false;
};

bool structured(const Config& cfg) { return cfg.format == "structured"; }

const char* yn(bool b) { return b ? "yes" : "no"; }

SkewCyclicCode load_code(const Config& cfg) {
    if (!cfg.code_file.empty()) {
        std::ifstream in(cfg.code_file);
        if (!in) throw std::invalid_argument("cannot open code description " + cfg.code_file);
        return read_code_description(in);
    }
    if (cfg.n == 0) throw std::invalid_argument("--n is required");
    if (cfg.gen.empty()) throw std::invalid_argument("--gen is required");
    return code_from_generator(cfg.n, parse_poly(cfg.gen));
}

CodeSet load_set(const SkewCyclicCode& code, const Config& cfg) {
    if (code.length() > kMaxPackedLength)
        throw resource_error("length " + std::to_string(code.length()) + " exceeds the materialization limit of " +
                             std::to_string(kMaxPackedLength));
    return materialize(code, cfg.cap);
}

int cmd_table1(const Config& cfg) {
    const auto rows = computed_correspondence();
    if (structured(cfg)) {
        json out = json::array();
        for (const auto& r : rows)
            out.push_back({{"element", r.element}, {"gray", {r.gray_first, r.gray_second}}, {"dna", r.bases}});
        std::cout << out.dump(2) << '\n';
        return kOk;
    }
    for (const auto& r : rows)
        std::cout << r.element << "\t(" << r.gray_first << ", " << r.gray_second << ")\t" << r.bases << '\n';
    return kOk;
}

int cmd_divisors(const Config& cfg) {
    if (cfg.n == 0) throw std::invalid_argument("--n is required");
    std::vector<std::pair<LeadingMode, SkewPoly>> found;
    std::vector<LeadingMode> modes;
    if (cfg.leading == "any") modes = {LeadingMode::unit, LeadingMode::v, LeadingMode::v1};
    else if (cfg.leading == "v") modes = {LeadingMode::v};
    else if (cfg.leading == "v1") modes = {LeadingMode::v1};
    else modes = {LeadingMode::unit};
    for (LeadingMode m : modes)
        for (auto& g : enumerate_right_divisors(cfg.n, cfg.degree, m, cfg.cap)) found.emplace_back(m, std::move(g));

    if (structured(cfg)) {
        json out = json::array();
        for (const auto& [m, g] : found)
            out.push_back({{"leading", std::string(to_string(m))},
                           {"coefficients", to_list_string(g)},
                           {"polynomial", to_human_string(g)},
                           {"palindromic", is_palindromic(g)},
                           {"theta_palindromic", is_theta_palindromic(g)}});
        std::cout << out.dump(2) << '\n';
        return kOk;
    }
    for (const auto& [m, g] : found)
        std::cout << to_list_string(g) << "\t" << to_human_string(g) << "\tleading=" << to_string(m)
                  << " palindromic=" << yn(is_palindromic(g)) << " theta-palindromic=" << yn(is_theta_palindromic(g))
                  << '\n';
    return kOk;
}

json classification_json(const DnaClassification& c) {
    return {{"form", std::string(to_string(c.generator_form))},
            {"degree", c.degree},
            {"palindromic", c.palindromic},
            {"theta_palindromic", c.theta_palindromic},
            {"reversible", std::string(to_string(c.reversible))},
            {"reverse_complement", std::string(to_string(c.reverse_complement))},
            {"rule", c.rule}};
}

int cmd_build(const Config& cfg) {
    const SkewCyclicCode code = load_code(cfg);
    const CodeSet set = load_set(code, cfg);
    const DnaClassification cls = classify(code, cfg.cap);
    if (structured(cfg)) {
        json out = code_description(code);
        out["size"] = set.size();
        out["prediction"] = classification_json(cls);
        if (cfg.words) {
            out["words"] = json::array();
            for (const auto& c : set.sorted_words()) out["words"].push_back(word_to_string(c));
        }
        std::cout << out.dump(2) << '\n';
        return kOk;
    }
    if (cfg.words) {
        write_codeset(std::cout, set);
        return kOk;
    }
    std::cout << "n: " << code.length() << '\n';
    for (const auto& g : code.generators())
        std::cout << "generator: " << to_list_string(g.poly) << "  (" << to_string(g.form) << ")\n";
    std::cout << "size: " << set.size() << '\n'
              << "predicted_reversible: " << to_string(cls.reversible) << '\n'
              << "predicted_reverse_complement: " << to_string(cls.reverse_complement) << '\n'
              << "rule: " << cls.rule << '\n';
    return kOk;
}

int cmd_check(const Config& cfg) {
    const SkewCyclicCode code = load_code(cfg);
    const CodeSet set = load_set(code, cfg);
    if (cfg.properties.empty()) {
        const CodeReport rep = make_report(code, set);
        if (structured(cfg)) std::cout << to_json(rep).dump(2) << '\n';
        else write_report(std::cout, rep);
        if (cfg.assert_props && !(rep.reversible && rep.reverse_complement && rep.quasi_cyclic)) return kVerifyFailed;
        return kOk;
    }
    bool all = true;
    json out = json::object();
    for (const auto& p : cfg.properties) {
        bool holds = false;
        if (p == "reversible") holds = is_reversible_dna(set);
        else if (p == "complement") holds = is_complement_closed(set);
        else if (p == "reverse-complement") holds = is_reverse_complement_dna(set);
        else holds = verify_quasi_cyclic_equivalence(set);
        all = all && holds;
        out[p] = holds;
        if (!structured(cfg)) std::cout << p << ": " << yn(holds) << '\n';
    }
    if (structured(cfg)) std::cout << out.dump(2) << '\n';
    return cfg.assert_props && !all ? kVerifyFailed : kOk;
}

int cmd_dna(const Config& cfg) {
    const SkewCyclicCode code = load_code(cfg);
    const auto lines = dna_lines(load_set(code, cfg));
    if (structured(cfg)) {
        std::cout << json(lines).dump(2) << '\n';
        return kOk;
    }
    write_dna(std::cout, lines, cfg.fasta);
    return kOk;
}

int cmd_distance(const Config& cfg) {
    const SkewCyclicCode code = load_code(cfg);
    const CodeSet set = load_set(code, cfg);
    if (set.size() < 2) throw std::invalid_argument("the code has a single word; no minimum distance");
    const Metric m = cfg.metric == "hamming" ? Metric::hamming : Metric::lee;
    const std::size_t d = min_distance(set, m);
    if (structured(cfg)) {
        json out = {{"metric", cfg.metric}, {"min_distance", d}};
        if (m == Metric::lee) out["min_dna_hamming"] = d;
        std::cout << out.dump(2) << '\n';
        return kOk;
    }
    if (m == Metric::lee) std::cout << "min_lee: " << d << "\nmin_dna_hamming: " << d << '\n';
    else std::cout << "min_hamming: " << d << '\n';
    return kOk;
}

int cmd_verify(const Config& cfg) {
    SuiteOptions opt;
    opt.seed = cfg.seed;
    AcceptanceSuite suite(opt);
    json out = json::array();
    const auto results = suite.run_all([&](const CheckResult& r) {
        if (structured(cfg)) return;
        std::cout << format_result_line(r) << '\n';
        for (const auto& note : r.notes) std::cout << "      note: " << note << '\n';
        std::cout.flush();
    });
    std::size_t passed = 0;
    std::vector<std::string> failing;
    for (const auto& r : results) {
        if (r.passed()) ++passed;
        else failing.push_back(r.key);
        out.push_back({{"number", r.number},
                       {"key", r.key},
                       {"title", r.title},
                       {"passed", r.passed()},
                       {"correct", r.correct},
                       {"seconds", r.seconds},
                       {"budget_seconds", r.budget_seconds},
                       {"detail", r.detail},
                       {"notes", r.notes}});
    }
    if (structured(cfg)) {
        std::cout << json{{"checks", out}, {"passed", passed}, {"total", results.size()}, {"failing", failing}}.dump(2)
                  << '\n';
    } else {
        std::cout << "summary: " << passed << "/" << results.size() << " checks passed";
        if (!failing.empty()) {
            std::cout << "; failing:";
            for (const auto& k : failing) std::cout << ' ' << k;
        }
        std::cout << '\n';
    }
    return failing.empty() ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact toolkit for theta-skew cyclic codes over F4 + vF4 and their DNA images"};
    app.require_subcommand(1);
    Config cfg;

    auto add_code = [&](CLI::App* sub) {
        sub->add_option("--n", cfg.n, "code length")->check(CLI::PositiveNumber);
        sub->add_option("--gen", cfg.gen, "generator: expression such as 'v*(x^4+x^2+1)' or list '[0, 0, v]'");
        sub->add_option("--code", cfg.code_file, "read the code from a description file instead");
        sub->add_option("--cap", cfg.cap, "maximum number of codewords to materialize")->check(CLI::PositiveNumber);
    };
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "structured"}));
    };

    auto* table1 = app.add_subcommand("table1", "element / Gray image / DNA 2-base table");
    add_format(table1);

    auto* divisors = app.add_subcommand("divisors", "right divisors of x^n - 1 of a given degree");
    divisors->add_option("--n", cfg.n, "length")->required()->check(CLI::PositiveNumber);
    divisors->add_option("--degree", cfg.degree, "divisor degree")->required();
    divisors->add_option("--leading", cfg.leading, "leading coefficient kind")
        ->check(CLI::IsMember({"unit", "v", "v1", "any"}));
    divisors->add_option("--cap", cfg.cap, "search budget (candidate count)")->check(CLI::PositiveNumber);
    add_format(divisors);

    auto* build = app.add_subcommand("build", "build a code and describe it");
    add_code(build);
    build->add_flag("--words", cfg.words, "list every codeword instead");
    add_format(build);

    auto* check = app.add_subcommand("check", "check DNA properties of a code");
    add_code(check);
    check->add_option("--property", cfg.properties, "property to check (repeatable); default: full report")
        ->check(CLI::IsMember({"reversible", "complement", "reverse-complement", "quasi-cyclic"}));
    check->add_flag("--assert", cfg.assert_props, "exit 1 if a checked property fails");
    add_format(check);

    auto* dna = app.add_subcommand("dna", "DNA images of all codewords, sorted");
    add_code(dna);
    dna->add_flag("--fasta", cfg.fasta, "FASTA output with >w<index> headers");
    add_format(dna);

    auto* distance = app.add_subcommand("distance", "minimum distance of a code");
    add_code(distance);
    distance->add_option("--metric", cfg.metric, "distance")->check(CLI::IsMember({"hamming", "lee"}));
    add_format(distance);

    auto* verify = app.add_subcommand("verify-paper", "run the full acceptance suite");
    verify->add_option("--seed", cfg.seed, "seed for sampled checks");
    add_format(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    try {
        if (*table1) return cmd_table1(cfg);
        if (*divisors) return cmd_divisors(cfg);
        if (*build) return cmd_build(cfg);
        if (*check) return cmd_check(cfg);
        if (*dna) return cmd_dna(cfg);
        if (*distance) return cmd_distance(cfg);
        if (*verify) return cmd_verify(cfg);
    } catch (const resource_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kCapExceeded;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}
