// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// selected criterion fails. `--check N` runs a single criterion.

#include <iostream>
#include <vector>

#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif

#include <skewdna/reproduction.hpp>

int main(int argc, char** argv) {
    CLI::App app{"skewdna acceptance suite"};
    std::vector<int> checks;
    std::uint64_t seed = skewdna::kDefaultSeed;
    app.add_option("--check", checks, "criterion number (repeatable); default: all")
        ->check(CLI::Range(1, skewdna::kCheckCount));
    app.add_option("--seed", seed, "seed for sampled criteria");
    CLI11_PARSE(app, argc, argv);

    if (checks.empty())
        for (int i = 1; i <= skewdna::kCheckCount; ++i) checks.push_back(i);

    skewdna::SuiteOptions opt;
    opt.seed = seed;
    skewdna::AcceptanceSuite suite(opt);
    int failed = 0;
    for (int i : checks) {
        const auto r = suite.run(i);
        std::cout << skewdna::format_result_line(r) << '\n';
        for (const auto& note : r.notes) std::cout << "      note: " << note << '\n';
        std::cout.flush();
        failed += !r.passed();
    }
    std::cout << (checks.size() - failed) << "/" << checks.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
