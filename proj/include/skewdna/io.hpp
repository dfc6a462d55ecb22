#pragma once

#include <algorithm>
#include <istream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "analysis.hpp"
#include "codes.hpp"
#include "dna.hpp"

namespace skewdna {

/// Code description document:
///   {"n": 6, "generators": ["[0, 0, v, 0, v]"], "classification": ["v-type"]}
/// Generators are ascending coefficient lists. The classification is
/// recomputed on read and is informational only.
inline nlohmann::json code_description(const SkewCyclicCode& code) {
    nlohmann::json doc;
    doc["n"] = code.length();
    doc["generators"] = nlohmann::json::array();
    doc["classification"] = nlohmann::json::array();
    for (const auto& g : code.generators()) {
        doc["generators"].push_back(to_list_string(g.poly));
        doc["classification"].push_back(std::string(to_string(g.form)));
    }
    return doc;
}

inline SkewCyclicCode code_from_description(const nlohmann::json& doc) {
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("generators"))
        throw std::invalid_argument("code description needs fields 'n' and 'generators'");
    const auto n = doc.at("n").get<long long>();
    if (n < 1) throw std::invalid_argument("code description: n must be positive");
    std::vector<SkewPoly> gens;
    for (const auto& g : doc.at("generators")) gens.push_back(parse_poly(g.get<std::string>()));
    if (gens.empty()) throw std::invalid_argument("code description: no generators");
    return SkewCyclicCode(static_cast<std::size_t>(n), std::move(gens));
}

inline void write_code_description(std::ostream& os, const SkewCyclicCode& code) {
    os << code_description(code).dump(2) << '\n';
}

inline SkewCyclicCode read_code_description(std::istream& is) {
    nlohmann::json doc;
    try {
        is >> doc;
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("code description: ") + e.what());
    }
    return code_from_description(doc);
}

/// One word per line, entries as element tokens separated by commas.
inline void write_codeset(std::ostream& os, const CodeSet& set) {
    for (const auto& c : set.sorted_words()) os << word_to_string(c) << '\n';
}

inline std::vector<Codeword> read_codeset(std::istream& is) {
    std::vector<Codeword> out;
    std::string line;
    while (std::getline(is, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        out.push_back(parse_word(line));
    }
    return out;
}

/// DNA images of all codewords, sorted, one per line.
inline std::vector<DnaWord> dna_lines(const CodeSet& set) {
    std::vector<DnaWord> out;
    out.reserve(set.size());
    for (PackedWord p : set.packed()) out.push_back(encode_word(unpack(p, set.length())));
    std::sort(out.begin(), out.end());
    return out;
}

inline void write_dna(std::ostream& os, const std::vector<DnaWord>& lines, bool fasta = false) {
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (fasta) os << ">w" << i << '\n';
        os << lines[i] << '\n';
    }
}

struct CodeReport {
    std::size_t n = 0;
    std::size_t size = 0;
    std::string generator;
    std::string form;
    std::optional<std::size_t> min_hamming;
    std::optional<std::size_t> min_lee;
    bool reversible = false;
    bool reverse_complement = false;
    bool quasi_cyclic = false;
};

inline CodeReport make_report(const SkewCyclicCode& code, const CodeSet& set) {
    CodeReport r;
    r.n = code.length();
    r.size = set.size();
    for (const auto& g : code.generators()) {
        if (!r.generator.empty()) {
            r.generator += "; ";
            r.form += "; ";
        }
        r.generator += to_list_string(g.poly);
        r.form += to_string(g.form);
    }
    if (set.size() >= 2) {
        r.min_hamming = min_distance(set, Metric::hamming);
        r.min_lee = min_distance(set, Metric::lee);
    }
    r.reversible = is_reversible_dna(set);
    r.reverse_complement = is_reverse_complement_dna(set);
    r.quasi_cyclic = verify_quasi_cyclic_equivalence(set);
    return r;
}

inline nlohmann::json to_json(const CodeReport& r) {
    nlohmann::json j;
    j["n"] = r.n;
    j["size"] = r.size;
    j["generator"] = r.generator;
    j["form"] = r.form;
    j["min_hamming"] = r.min_hamming ? nlohmann::json(*r.min_hamming) : nlohmann::json(nullptr);
    j["min_lee"] = r.min_lee ? nlohmann::json(*r.min_lee) : nlohmann::json(nullptr);
    j["reversible"] = r.reversible;
    j["reverse_complement"] = r.reverse_complement;
    j["quasi_cyclic"] = r.quasi_cyclic;
    return j;
}

/// `key: value` lines. The DNA Hamming distance equals the Lee distance.
inline void write_report(std::ostream& os, const CodeReport& r) {
    auto opt = [](const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : std::string("n/a"); };
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    os << "n: " << r.n << '\n'
       << "size: " << r.size << '\n'
       << "generator: " << r.generator << '\n'
       << "form: " << r.form << '\n'
       << "min_hamming: " << opt(r.min_hamming) << '\n'
       << "min_lee: " << opt(r.min_lee) << '\n'
       << "min_dna_hamming: " << opt(r.min_lee) << '\n'
       << "reversible: " << yn(r.reversible) << '\n'
       << "reverse_complement: " << yn(r.reverse_complement) << '\n'
       << "quasi_cyclic: " << yn(r.quasi_cyclic) << '\n';
}

}  // namespace skewdna
