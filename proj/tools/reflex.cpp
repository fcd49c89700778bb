// reflex: command-line front end for reflection representations and their
// exterior powers.  Exit codes: 0 all checks pass, 1 some check failed,
// 2 usage or parse error.

#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "reflex/commands.hpp"

namespace {

using namespace reflex;

struct InputFlags {
    std::vector<std::string> paths;
    std::string family;
    std::string base;
    long n = 2;
    long m = 4;
    std::string x = "2";
    std::string scalings;
};

void add_input_flags(CLI::App* cmd, InputFlags& f, const char* positional_help) {
    cmd->add_option("inputs", f.paths, positional_help);
    cmd->add_option("--family", f.family, "built-in family: affineA, symmetric, dihedral, three-cycle, conjugate");
    cmd->add_option("--base", f.base, "base family for --family conjugate");
    cmd->add_option("--n", f.n, "rank parameter (affineA, symmetric)");
    cmd->add_option("--m", f.m, "dihedral parameter m");
    cmd->add_option("--x", f.x, "affineA parameter x (rational, e.g. 2/1)");
    cmd->add_option("--scalings", f.scalings, "comma-separated reflection-vector rescalings");
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, ','))
        if (!cur.empty()) out.push_back(cur);
    return out;
}

FamilySpec family_from_flags(const InputFlags& f, std::uint64_t seed) {
    FamilySpec spec;
    spec.family = f.family;
    spec.base = f.base;
    spec.n = f.n;
    spec.m = f.m;
    spec.x = Rational::parse(f.x);
    spec.seed = seed;
    for (const auto& s : split_commas(f.scalings)) spec.scalings.push_back(Rational::parse(s));
    return spec;
}

LoadedInput first_input(const InputFlags& f, std::uint64_t seed) {
    if (!f.paths.empty()) {
        if (!f.family.empty()) throw InputError("give either an input file or --family, not both");
        return load_path(f.paths.front());
    }
    if (f.family.empty()) throw InputError("no input: give a file path or --family");
    return load_family(family_from_flags(f, seed));
}

/// Second representation for theorem2 / lift.
LoadedInput second_input(const InputFlags& f, bool conjugate, const std::string& x2, std::uint64_t seed) {
    const int sources = (f.paths.size() >= 2) + conjugate + !x2.empty();
    if (sources != 1) throw InputError("give exactly one of: a second input file, --conjugate, --x2");
    if (f.paths.size() >= 2) return load_path(f.paths[1]);
    FamilySpec spec;
    if (conjugate) {
        if (!f.paths.empty()) {
            spec.family = "conjugate";
            spec.base = "custom-file";
            spec.path = f.paths.front();
            spec.seed = seed;
        } else {
            spec = family_from_flags(f, seed);
            if (spec.family != "conjugate") {
                spec.base = spec.family;
                spec.family = "conjugate";
            }
        }
        return load_family(spec);
    }
    if (f.paths.size() == 1 || f.family != "affineA") throw InputError("--x2 needs --family affineA");
    spec = family_from_flags(f, seed);
    spec.x = Rational::parse(x2);
    return load_family(spec);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"reflex: exterior powers of reflection representations"};
    app.require_subcommand(1);
    bool json = false;
    bool timing = false;
    std::uint64_t seed = 1;
    app.add_flag("--json", json, "emit the machine-readable report");
    app.add_flag("--timing", timing, "include wall-clock time in the report");
    app.add_option("--seed", seed, "seed for every random choice");

    InputFlags in;
    auto* validate = app.add_subcommand("validate", "check that every generator is a generalized reflection");
    add_input_flags(validate, in, "representation or family file");

    AnalyzeOptions aopt;
    std::size_t exterior = 0;
    auto* analyze = app.add_subcommand("analyze", "digraph, simplicity and eigenspace dimensions");
    add_input_flags(analyze, in, "representation or family file");
    analyze->add_flag("--digraph", aopt.digraph, "associated digraph and connectivity");
    analyze->add_flag("--dot", aopt.dot, "include a Graphviz description of the digraph");
    analyze->add_flag("--simple", aopt.simple, "simplicity certificate");
    auto* ext_opt = analyze->add_option("--exterior", exterior, "eigenspace dimension table of wedge^d");

    auto* theorem1 = app.add_subcommand("theorem1", "all exterior powers simple and pairwise non-isomorphic");
    add_input_flags(theorem1, in, "representation or family file");

    std::size_t d1 = 0, d2 = 0, d = 0;
    bool conjugate = false;
    std::string x2;
    auto* theorem2 = app.add_subcommand("theorem2", "compare wedge^d1 V1 with wedge^d2 V2 and lift isomorphisms");
    add_input_flags(theorem2, in, "one or two representation or family files");
    theorem2->add_option("--d1", d1, "degree on the first side")->required();
    theorem2->add_option("--d2", d2, "degree on the second side")->required();
    theorem2->add_flag("--conjugate", conjugate, "second side: seeded random conjugated copy of the first");
    theorem2->add_option("--x2", x2, "second side: affineA with this x");

    auto* lift = app.add_subcommand("lift", "reconstruct a degree-one isomorphism from wedge^d");
    add_input_flags(lift, in, "one or two representation or family files");
    lift->add_option("--d", d, "exterior degree")->required();
    lift->add_flag("--conjugate", conjugate, "second side: seeded random conjugated copy of the first");
    lift->add_option("--x2", x2, "second side: affineA with this x");

    long cat_n = 2;
    std::string xs = "2,3,5";
    auto* catalog = app.add_subcommand("catalog", "sweep x for the affine family and compare exterior powers");
    catalog->add_option("--n", cat_n, "rank of the affine family");
    catalog->add_option("--xs", xs, "comma-separated x values (may be empty)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const auto start = std::chrono::steady_clock::now();
    Report report;
    try {
        if (validate->parsed()) {
            report = cmd_validate(first_input(in, seed), seed);
        } else if (analyze->parsed()) {
            if (ext_opt->count()) aopt.exterior = exterior;
            report = cmd_analyze(first_input(in, seed), aopt, seed);
        } else if (theorem1->parsed()) {
            report = cmd_theorem1(first_input(in, seed), seed);
        } else if (theorem2->parsed()) {
            const auto a = first_input(in, seed);
            report = cmd_theorem2(a, d1, second_input(in, conjugate, x2, seed), d2, seed);
        } else if (lift->parsed()) {
            const auto a = first_input(in, seed);
            report = cmd_lift(a, second_input(in, conjugate, x2, seed), d, seed);
        } else if (catalog->parsed()) {
            std::vector<Rational> values;
            for (const auto& s : split_commas(xs)) values.push_back(Rational::parse(s));
            report = cmd_catalog(cat_n, values, seed, &std::cerr);
        }
    } catch (const InputError& e) {
        std::cerr << "reflex: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "reflex: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "reflex: " << e.what() << "\n";
        return 1;
    }
    if (timing)
        report.timing_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (json) std::cout << to_json(report).dump(2) << "\n";
    else std::cout << render_text(report);
    return report.exit_code();
}
