#ifndef REFLEX_COMMANDS_HPP
#define REFLEX_COMMANDS_HPP

// Command implementations behind the reflex CLI. Each returns a Report;
// usage and parse problems are thrown as InputError / ParseError.

#include <chrono>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "reflex/families.hpp"
#include "reflex/report.hpp"
#include "reflex/rep_io.hpp"
#include "reflex/theorems.hpp"

namespace reflex {

// ---- inputs ------------------------------------------------------------------

using AnyRaw = std::variant<RawRep<Rational>, RawRep<QuadraticNumber>>;
using AnyRep = std::variant<std::monostate, ReflectionRep<Rational>, ReflectionRep<QuadraticNumber>>;

struct LoadedInput {
    std::string label;
    std::string canonical;  // digest source
    AnyRaw raw;
    AnyRep prebuilt;        // families come with their chosen reflection vectors
};

template <ExactField F>
RawRep<F> raw_of(const ReflectionRep<F>& rep) {
    return {rep.field(), rep.dim(), rep.names(), rep.matrices()};
}

inline LoadedInput load_family(const FamilySpec& spec) {
    LoadedInput in;
    in.label = "family " + spec.family;
    auto fill = [&](auto rep) {
        in.canonical = serialize_family_spec(spec) + serialize_rep(rep);
        in.raw = raw_of(rep);
        in.prebuilt = std::move(rep);
    };
    if (family_is_quadratic(spec)) fill(build_family<QuadraticNumber>(spec));
    else fill(build_family<Rational>(spec));
    return in;
}

/// Loads a representation file or a family file.
inline LoadedInput load_path(const std::string& path) {
    const auto text = read_text_file(path);
    const auto lines = detail::content_lines(text);
    if (!lines.empty() && lines[0].second == kFamilyHeader) {
        auto in = load_family(parse_family_spec(text));
        in.label = path;
        return in;
    }
    LoadedInput in;
    in.label = path;
    const auto field = read_field_context(text);
    if (field.is_quadratic()) {
        in.raw = parse_raw_rep<QuadraticNumber>(text);
    } else {
        in.raw = parse_raw_rep<Rational>(text);
    }
    // Canonical form: re-serialized matrices, independent of comments and spacing.
    std::visit(
        [&](const auto& raw) {
            std::ostringstream os;
            os << kRepHeader << "\nfield " << raw.field.describe() << "\ndim " << raw.dim << "\n";
            for (std::size_t g = 0; g < raw.matrices.size(); ++g) {
                os << "gen " << raw.names[g] << "\n" << format_matrix(raw.matrices[g], raw.field);
            }
            in.canonical = os.str();
        },
        in.raw);
    return in;
}

template <ExactField F>
ReflectionRep<F> validated(const LoadedInput& in) {
    if (const auto* r = std::get_if<ReflectionRep<F>>(&in.prebuilt)) return *r;
    const auto& raw = std::get<RawRep<F>>(in.raw);
    return ReflectionRep<F>::from_matrices(raw.field, raw.matrices, raw.names);
}

inline bool is_quadratic_input(const LoadedInput& in) { return in.raw.index() == 1; }

// ---- evidence helpers ----------------------------------------------------------

template <ExactField F>
Json vector_json(const Vector<F>& v, const FieldContext& ctx) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(format_scalar(x, ctx));
    return a;
}

template <ExactField F>
Json matrix_json(const Matrix<F>& m, const FieldContext& ctx) {
    Json a = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(vector_json(m.row(i), ctx));
    return a;
}

template <ExactField F>
Json subspace_json(const std::vector<Vector<F>>& basis, const FieldContext& ctx) {
    Json a = Json::array();
    for (const auto& v : basis) a.push_back(vector_json(v, ctx));
    return a;
}

inline Json subset_json(const std::vector<std::size_t>& s) {
    Json a = Json::array();
    for (auto v : s) a.push_back(v);
    return a;
}

template <ExactField F>
Json certificate_json(const SimplicityCertificate<F>& c, const FieldContext& ctx) {
    Json j{{"verdict", to_string(c.verdict)},
           {"dimension", c.dim},
           {"enveloping_dim", c.enveloping_dim},
           {"endomorphism_dim", c.endomorphism_dim},
           {"method", c.method}};
    if (c.verdict == Simplicity::NotSimple) j["invariant_subspace"] = subspace_json(c.invariant_subspace, ctx);
    return j;
}

inline Verdict simplicity_verdict(Simplicity s) {
    switch (s) {
    case Simplicity::Simple: return Verdict::Pass;
    case Simplicity::NotSimple: return Verdict::Fail;
    case Simplicity::Undetermined: return Verdict::Inconclusive;
    }
    return Verdict::Inconclusive;
}

inline Report make_report(std::string command, const std::vector<const LoadedInput*>& inputs, std::uint64_t seed) {
    Report r;
    r.command = std::move(command);
    r.seed = seed;
    std::string all;
    Json labels = Json::array();
    for (const auto* in : inputs) {
        all += in->canonical;
        all += '\x1e';
        labels.push_back(in->label);
    }
    r.input_digest = fnv1a64(all);
    r.arguments["inputs"] = std::move(labels);
    return r;
}

/// Adds a failing "reflection representation" check if validation throws.
template <ExactField F>
std::optional<ReflectionRep<F>> validated_or_report(const LoadedInput& in, Report& r) {
    try {
        return validated<F>(in);
    } catch (const ReflectionError& e) {
        r.add("reflection representation", Verdict::Fail,
              {{"input", in.label}, {"kind", to_string(e.kind())}, {"message", e.what()}});
        return std::nullopt;
    }
}

// ---- validate ----------------------------------------------------------------

template <ExactField F>
void validate_into(const RawRep<F>& raw, Report& r) {
    for (std::size_t g = 0; g < raw.matrices.size(); ++g) {
        const auto& name = raw.names[g];
        try {
            const auto gen = validate_reflection(raw.matrices[g], name);
            r.add("generator " + name, Verdict::Pass,
                  {{"alpha", vector_json(gen.alpha, raw.field)},
                   {"lambda", format_scalar(gen.lambda, raw.field)},
                   {"functional", vector_json(gen.functional, raw.field)}});
        } catch (const ReflectionError& e) {
            r.add("generator " + name, Verdict::Fail,
                  {{"kind", to_string(e.kind())}, {"message", e.what()}});
        }
    }
}

inline Report cmd_validate(const LoadedInput& in, std::uint64_t seed = 0) {
    auto r = make_report("validate", {&in}, seed);
    std::visit([&](const auto& raw) { validate_into(raw, r); }, in.raw);
    return r;
}

// ---- analyze -----------------------------------------------------------------

struct AnalyzeOptions {
    bool digraph = false;
    bool dot = false;
    bool simple = false;
    std::optional<std::size_t> exterior;
};

template <ExactField F>
void analyze_into(const ReflectionRep<F>& rep, const AnalyzeOptions& opt, Report& r) {
    const auto& ctx = rep.field();
    {
        Json gens = Json::object();
        for (const auto& g : rep.generators())
            gens[g.name] = {{"alpha", vector_json(g.alpha, ctx)}, {"lambda", format_scalar(g.lambda, ctx)}};
        r.add("reflection data", Verdict::Pass,
              {{"field", ctx.describe()}, {"dimension", rep.dim()}, {"generators", gens},
               {"reflection_vector_rank", reflection_vector_rank(rep)}});
    }
    if (opt.digraph || opt.dot) {
        const auto g = associated_digraph(rep);
        Json arrows = Json::array();
        for (const auto& [a, b] : g.arrows()) arrows.push_back(Json::array({g.label(a), g.label(b)}));
        Json ev{{"arrows", arrows},
                {"weakly_connected", is_weakly_connected(g)},
                {"strongly_connected", is_strongly_connected(g)}};
        const auto basis = connected_basis_subset(rep);
        Json sub = Json::array();
        for (auto v : basis.subset) sub.push_back(rep.generator(v).name);
        ev["connected_basis_subset"] = {{"found", basis.found}, {"subset", sub}};
        if (!basis.found) ev["connected_basis_subset"]["invariant_span"] = subspace_json(basis.invariant_subspace, ctx);
        if (opt.dot) ev["dot"] = to_dot(g);
        r.add("associated digraph", Verdict::Pass, std::move(ev));
    }
    if (opt.simple) {
        const auto c = is_simple(rep);
        r.add("simplicity", simplicity_verdict(c.verdict), certificate_json(c, ctx));
    }
    if (opt.exterior) {
        const std::size_t d = *opt.exterior;
        if (d > rep.dim()) throw InputError("exterior degree exceeds the dimension");
        const ExteriorRep<F> ext(rep, d);
        const long n = static_cast<long>(rep.dim());
        const auto want_plus = binomial(n - 1, static_cast<long>(d));
        const auto want_minus = binomial(n - 1, static_cast<long>(d) - 1);
        bool ok = true;
        Json table = Json::object();
        for (std::size_t i = 0; i < rep.size(); ++i) {
            const auto p = eigenspace_plus(ext, i).size();
            const auto m = eigenspace_minus(ext, i).size();
            ok = ok && p == want_plus && m == want_minus;
            table[rep.generator(i).name] = {{"plus", p}, {"minus", m}};
        }
        r.add("eigenspace dimensions of wedge^" + std::to_string(d), ok ? Verdict::Pass : Verdict::Fail,
              {{"degree", d}, {"expected_plus", want_plus}, {"expected_minus", want_minus}, {"generators", table}});
    }
}

inline Report cmd_analyze(const LoadedInput& in, AnalyzeOptions opt, std::uint64_t seed = 0) {
    if (!opt.digraph && !opt.dot && !opt.simple && !opt.exterior) opt.digraph = opt.simple = true;
    auto r = make_report("analyze", {&in}, seed);
    r.arguments["digraph"] = opt.digraph;
    r.arguments["dot"] = opt.dot;
    r.arguments["simple"] = opt.simple;
    if (opt.exterior) r.arguments["exterior"] = *opt.exterior;
    auto run = [&](auto tag) {
        using F = decltype(tag);
        if (auto rep = validated_or_report<F>(in, r)) analyze_into(*rep, opt, r);
    };
    if (is_quadratic_input(in)) run(QuadraticNumber{});
    else run(Rational{});
    return r;
}

// ---- exterior-power simplicity -----------------------------------------------

inline constexpr std::size_t kGroupCap = 2000;

template <ExactField F>
void theorem1_into(const ReflectionRep<F>& rep, Report& r) {
    const auto& ctx = rep.field();
    Theorem1Report<F> t;
    try {
        t = check_theorem1(rep);
    } catch (const TheoremInapplicable& e) {
        const auto c = is_simple(rep);
        Json ev = certificate_json(c, ctx);
        ev["reason"] = e.what();
        if (c.verdict == Simplicity::NotSimple) {
            try {
                const auto q = quotient_rep(rep, c.invariant_subspace);
                ev["quotient"] = {{"dimension", q.dim()}, {"simplicity", to_string(is_simple(q).verdict)}};
            } catch (const Error& qe) {
                ev["quotient"] = {{"error", qe.what()}};
            }
        }
        r.add("base simplicity", Verdict::Inapplicable, std::move(ev));
        return;
    }
    r.add("base simplicity", Verdict::Pass, certificate_json(t.base, ctx));
    for (std::size_t d = 0; d < t.powers.size(); ++d)
        r.add("wedge^" + std::to_string(d) + " simple", simplicity_verdict(t.powers[d].verdict),
              certificate_json(t.powers[d], ctx));
    for (std::size_t d = 0; d < t.powers.size(); ++d)
        for (std::size_t e = d + 1; e < t.powers.size(); ++e) {
            const bool ok = t.hom_dims[d][e] == 0 && t.hom_dims[e][d] == 0;
            r.add("hom(wedge^" + std::to_string(d) + ", wedge^" + std::to_string(e) + ") = 0",
                  ok ? Verdict::Pass : Verdict::Fail,
                  {{"forward", t.hom_dims[d][e]}, {"backward", t.hom_dims[e][d]}});
        }
    const auto oracle = finite_group_character_oracle(rep, kGroupCap);
    if (!oracle.closed) {
        r.add("character oracle", Verdict::Inconclusive,
              {{"reason", "group has more than " + std::to_string(kGroupCap) + " elements"}});
    } else {
        Json inner = Json::array();
        for (const auto& row : oracle.inner) inner.push_back(row);
        r.add("character oracle", oracle.agrees ? Verdict::Pass : Verdict::Fail,
              {{"group_order", oracle.order}, {"norms", oracle.norms}, {"inner_products", inner}});
    }
}

inline Report cmd_theorem1(const LoadedInput& in, std::uint64_t seed = 0) {
    auto r = make_report("theorem1", {&in}, seed);
    auto run = [&](auto tag) {
        using F = decltype(tag);
        if (auto rep = validated_or_report<F>(in, r)) theorem1_into(*rep, r);
    };
    if (is_quadratic_input(in)) run(QuadraticNumber{});
    else run(Rational{});
    return r;
}

// ---- isomorphism lifting --------------------------------------------------------

template <ExactField F>
Json lifting_context_json(const LiftResult<F>& lift, const ReflectionRep<F>& rep1, const FieldContext& ctx) {
    const auto& c = lift.context;
    Json j{{"short_circuit", lift.short_circuit}, {"degree", c.d}};
    if (lift.short_circuit) return j;
    Json subset = Json::array();
    for (auto v : c.subset) subset.push_back(rep1.generator(v).name);
    j["basis_subset"] = subset;
    j["base_vertex"] = rep1.generator(c.base_vertex).name;
    Json zeta = Json::object();
    for (const auto& [s, v] : c.zeta) {
        std::string key;
        for (auto i : s) key += (key.empty() ? "" : ",") + rep1.generator(i).name;
        zeta[key] = format_scalar(v, ctx);
    }
    j["zeta"] = zeta;
    Json ze = Json::object();
    for (const auto& [e, v] : c.z_edge)
        ze[rep1.generator(e.first).name + "->" + rep1.generator(e.second).name] = format_scalar(v, ctx);
    j["z_edge"] = ze;
    Json zv = Json::object();
    for (const auto& [i, v] : c.z_vertex) zv[rep1.generator(i).name] = format_scalar(v, ctx);
    j["z_vertex"] = zv;
    return j;
}

template <ExactField F>
void theorem2_into(const ReflectionRep<F>& rep1, std::size_t d1, const ReflectionRep<F>& rep2, std::size_t d2,
                   bool full_context, std::uint64_t seed, Report& r) {
    const auto& ctx = rep1.field();
    Theorem2Report<F> t;
    LiftOptions<F> opts;
    opts.seed = seed;
    try {
        t = check_theorem2(rep1, d1, rep2, d2, opts);
    } catch (const TheoremInapplicable& e) {
        r.add("base simplicity", Verdict::Inapplicable, {{"reason", e.what()}});
        return;
    } catch (const PsiNotIntertwining& e) {
        r.add("isomorphism psi", Verdict::Fail, {{"message", e.what()}});
        return;
    } catch (const StructureViolation& e) {
        r.add("lifting", Verdict::Fail, {{"structure_violation", e.what()}});
        return;
    }
    r.add("base simplicity", Verdict::Pass);
    r.add("exterior hom space", Verdict::Pass,
          {{"dimension", t.hom_dim}, {"degree_one_hom_dimension", t.base_hom_dim},
           {"binomial_rigidity", t.rigidity}, {"conclusion", t.conclusion}});
    r.add("consistent with exterior-power rigidity", t.consistent ? Verdict::Pass : Verdict::Fail,
          {{"n1", t.n1}, {"d1", t.d1}, {"n2", t.n2}, {"d2", t.d2}});
    if (!t.lift) return;
    Json ev = Json::object();
    for (std::size_t i = 0; i < rep1.size(); ++i)
        ev[rep1.generator(i).name] = format_scalar(rep1.generator(i).lambda, ctx);
    r.add("eigenvalues agree", Verdict::Pass, {{"lambda", ev}});
    for (const auto& c : t.lift->transcript)
        r.add(c.name, c.passed ? Verdict::Pass : Verdict::Fail,
              c.detail.empty() ? Json::object() : Json{{"detail", c.detail}});
    Json fev{{"f", matrix_json(t.lift->f, ctx)}, {"psi_ratio", format_scalar(t.lift->psi_ratio, ctx)}};
    if (full_context) {
        fev["psi"] = matrix_json(*t.psi, ctx);
        fev["context"] = lifting_context_json(*t.lift, rep1, ctx);
    }
    r.add("lifted isomorphism", Verdict::Pass, std::move(fev));
}

inline Report run_theorem2(const char* command, const LoadedInput& a, std::size_t d1, const LoadedInput& b,
                           std::size_t d2, bool full_context, std::uint64_t seed) {
    if (is_quadratic_input(a) != is_quadratic_input(b)) throw InputError("inputs live over different fields");
    auto r = make_report(command, {&a, &b}, seed);
    r.arguments["d1"] = d1;
    r.arguments["d2"] = d2;
    auto run = [&](auto tag) {
        using F = decltype(tag);
        auto r1 = validated_or_report<F>(a, r);
        auto r2 = validated_or_report<F>(b, r);
        if (!r1 || !r2) return;
        if (d1 < 1 || d1 + 1 > r1->dim() || d2 < 1 || d2 + 1 > r2->dim())
            throw InputError("degrees must satisfy 1 <= d <= n - 1");
        if (!(r1->field() == r2->field())) throw InputError("inputs live over different fields");
        if (r1->size() != r2->size()) throw InputError("inputs have different generator counts");
        theorem2_into(*r1, d1, *r2, d2, full_context, seed, r);
    };
    if (is_quadratic_input(a)) run(QuadraticNumber{});
    else run(Rational{});
    return r;
}

inline Report cmd_theorem2(const LoadedInput& a, std::size_t d1, const LoadedInput& b, std::size_t d2,
                           std::uint64_t seed = 0) {
    return run_theorem2("theorem2", a, d1, b, d2, false, seed);
}

inline Report cmd_lift(const LoadedInput& a, const LoadedInput& b, std::size_t d, std::uint64_t seed = 0) {
    return run_theorem2("lift", a, d, b, d, true, seed);
}

// ---- catalog -------------------------------------------------------------------

/// Sweeps x for the affine family and checks that all nontrivial exterior
/// powers of the simple members are pairwise non-isomorphic.
inline Report cmd_catalog(long n, const std::vector<Rational>& xs, std::uint64_t seed = 0,
                          std::ostream* progress = nullptr) {
    if (n < 2) throw InputError("catalog needs n >= 2");
    Report r;
    r.command = "catalog";
    r.seed = seed;
    Json xj = Json::array();
    std::string digest_src = "affineA " + std::to_string(n);
    for (const auto& x : xs) {
        if (x.is_zero()) throw InputError("x must be nonzero");
        xj.push_back(x.str());
        digest_src += " " + x.str();
    }
    r.arguments = {{"family", "affineA"}, {"n", n}, {"xs", xj}};
    r.input_digest = fnv1a64(digest_src);

    struct Entry {
        std::string x;
        std::size_t d;
        MatrixRep<Rational> module;
    };
    std::vector<Entry> inventory;
    for (std::size_t t = 0; t < xs.size(); ++t) {
        if (progress) *progress << "catalog: x = " << xs[t].str() << " (" << t + 1 << "/" << xs.size() << ")\n";
        const auto rep = affine_An_Vx<Rational>(static_cast<std::size_t>(n), xs[t]);
        const auto c = is_simple(rep);
        const auto& ctx = rep.field();
        if (c.verdict != Simplicity::Simple) {
            Json ev = certificate_json(c, ctx);
            if (c.verdict == Simplicity::NotSimple) {
                const auto q = quotient_rep(rep, c.invariant_subspace);
                const auto qc = is_simple(q);
                ev["quotient"] = {{"dimension", q.dim()}, {"simplicity", to_string(qc.verdict)}};
            }
            r.add("V_" + xs[t].str() + " reducible", Verdict::Inapplicable, std::move(ev));
            continue;
        }
        bool all_simple = true;
        for (std::size_t d = 1; d < rep.dim(); ++d) {
            auto m = as_matrix_rep(exterior_power(rep, d));
            all_simple = all_simple && is_simple(m).simple();
            inventory.push_back({xs[t].str(), d, std::move(m)});
        }
        r.add("V_" + xs[t].str() + " simple with simple exterior powers", all_simple ? Verdict::Pass : Verdict::Fail,
              {{"degrees", rep.dim() - 1}});
    }
    Json entries = Json::array();
    for (const auto& e : inventory) entries.push_back("wedge^" + std::to_string(e.d) + " V_" + e.x);
    std::size_t bad = 0;
    Json clashes = Json::array();
    for (std::size_t a = 0; a < inventory.size(); ++a)
        for (std::size_t b = a; b < inventory.size(); ++b) {
            const auto h = hom_space(inventory[a].module, inventory[b].module).dim();
            const std::size_t want = a == b ? 1 : 0;
            if (h != want) {
                ++bad;
                clashes.push_back({entries[a], entries[b], h});
            }
        }
    if (progress) *progress << "catalog: compared " << inventory.size() << " modules\n";
    r.add("pairwise non-isomorphic inventory", bad == 0 ? Verdict::Pass : Verdict::Fail,
          {{"modules", entries}, {"count", inventory.size()}, {"clashes", clashes}});
    return r;
}

}  // namespace reflex

#endif
