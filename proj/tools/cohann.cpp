#include "suites.hpp"

#include <cohann/errors.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>

namespace {

using namespace cohann;

constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitParse = 3;
constexpr int kExitUnstable = 4;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GlobalOptions {
    std::optional<unsigned> trunc;
    std::string format = "json";
    bool require_stable = false;
};

unsigned resolve_truncation(const GlobalOptions& g, int max_degree) {
    if (g.trunc) return *g.trunc;
    if (const char* env = std::getenv("COHANN_TRUNC"); env && *env) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (*end != '\0' || v < 2 || v > 1000) throw UsageError("COHANN_TRUNC must be an integer >= 2");
        return static_cast<unsigned>(v);
    }
    return default_truncation(max_degree);
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        auto b = item.find_first_not_of(" \t");
        auto e = item.find_last_not_of(" \t");
        if (b == std::string::npos) throw ParseError("empty item in list '" + text + "'");
        out.push_back(item.substr(b, e - b + 1));
    }
    return out;
}

Variables variables_for(const std::string& poly, const std::string& vars) {
    return vars.empty() ? infer_variables(poly) : Variables(split_list(vars));
}

std::string ideal_text(const std::vector<Polynomial>& gens) {
    if (gens.empty()) return "(0)";
    std::string s = "(";
    for (std::size_t i = 0; i < gens.size(); ++i) s += (i ? ", " : "") + gens[i].to_string();
    return s + ")";
}

std::string scalar_text(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
    if (v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_string(); })) {
        std::string s = "(";
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].get<std::string>();
        return s + ")";
    }
    return v.dump();
}

void print_text(const Json& j, std::ostream& out, const std::string& indent = "") {
    for (const auto& [key, value] : j.items()) {
        if (value.is_object()) {
            out << indent << key << ":\n";
            print_text(value, out, indent + "  ");
        } else {
            out << indent << key << ": " << scalar_text(value) << "\n";
        }
    }
}

void emit(const GlobalOptions& g, const Json& j) {
    if (g.format == "json")
        std::cout << dump(j);
    else
        print_text(j, std::cout);
}

int stability_exit(const GlobalOptions& g, bool stabilized) {
    return g.require_stable && !stabilized ? kExitUnstable : 0;
}

MatrixFactorization load_mf(const std::string& path) { return mf_from_json(read_json_file(path)); }

int cmd_annihilator(const GlobalOptions& g, const std::string& path, bool ext2) {
    MatrixFactorization m = load_mf(path);
    AlgebraPtr alg = hypersurface_algebra(m.f(), resolve_truncation(g, m.max_degree()));
    TruncatedIdeal ideal = ext2 ? ext2_annihilator(m, alg) : stable_annihilator(m, alg);
    Json j = ideal_to_json(ideal);
    j["label"] = m.label();
    j["f"] = m.f().to_string();
    emit(g, j);
    return stability_exit(g, ideal.stabilized);
}

struct CaArgs {
    std::optional<unsigned> an;
    std::string catalog;
    std::optional<unsigned> det;
};

int cmd_ca(const GlobalOptions& g, const CaArgs& a) {
    int sources = (a.an ? 1 : 0) + (a.catalog.empty() ? 0 : 1) + (a.det ? 1 : 0);
    if (sources != 1) throw UsageError("ca needs exactly one of --an, --catalog, --det");
    Catalog c;
    std::string source;
    if (a.an) {
        if (*a.an < 1) throw UsageError("--an needs n >= 1");
        c = a_n_catalog(*a.an);
        source = "A_" + std::to_string(*a.an);
    } else if (a.det) {
        c = determinantal_catalog(*a.det);
        source = "det" + std::to_string(*a.det);
    } else {
        c = load_catalog(a.catalog);
        source = a.catalog;
    }
    AlgebraPtr alg = hypersurface_algebra(c.f, resolve_truncation(g, c.max_degree()));
    TruncatedIdeal ideal = cohomology_annihilator(c.entries, alg);
    Json j = ideal_to_json(ideal);
    j["catalog"] = source;
    j["complete"] = c.complete;
    j["f"] = c.f.to_string();
    Json labels = Json::array();
    for (const auto& m : c.entries) labels.push_back(m.label());
    j["entries"] = labels;
    emit(g, j);
    return stability_exit(g, ideal.stabilized);
}

int cmd_knorrer(const GlobalOptions& g, const std::string& path, const std::string& var, const std::string& output) {
    MatrixFactorization m = load_mf(path);
    std::string label = m.label().empty() ? "cover" : m.label() + "+" + var + "^2";
    MatrixFactorization cover = knorrer_cover(m, var).relabeled(label);
    Json j = mf_to_json(cover);
    if (!output.empty()) {
        std::ofstream out(output, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + output);
        out << dump(j);
        emit(g, Json{{"written", output}, {"f", cover.f().to_string()}, {"size", cover.size()}});
        return 0;
    }
    std::cout << dump(j);
    return 0;
}

int cmd_cover(const GlobalOptions& g, const std::string& f_text, const std::string& vars, unsigned m,
              const std::string& y) {
    Polynomial f = parse_polynomial(f_text, variables_for(f_text, vars));
    BranchedCoverRing ring = branched_cover_ring(f, m, y);
    emit(g, Json{{"base", ring.base.to_string()},
                 {"cover", ring.cover.to_string()},
                 {"exponent", ring.exponent},
                 {"variable", ring.variable},
                 {"vars", ring.cover.vars().names()}});
    return 0;
}

int cmd_jacobian(const GlobalOptions& g, const std::string& f_text, const std::string& vars) {
    Polynomial f = parse_polynomial(f_text, variables_for(f_text, vars));
    Json gens = Json::array();
    for (const auto& d : jacobian_ideal(f)) gens.push_back(d.to_string());
    emit(g, Json{{"f", f.to_string()}, {"vars", f.vars().names()}, {"generators", gens}});
    return 0;
}

int cmd_milnor(const GlobalOptions& g, const std::string& f_text, const std::string& vars) {
    Polynomial f = parse_polynomial(f_text, variables_for(f_text, vars));
    unsigned n = resolve_truncation(g, f.degree());
    if (n < 3) throw UsageError("milnor needs truncation >= 3");
    auto mu = milnor_number(f, n);
    Json j{{"f", f.to_string()}, {"truncation", n}, {"stabilized", mu.has_value()}};
    j["mu"] = mu ? Json(*mu) : Json(nullptr);
    emit(g, j);
    return stability_exit(g, mu.has_value());
}

Json semigroup_row(unsigned a, unsigned b, const GlobalOptions& g) {
    SemigroupCurve c(a, b);
    Polynomial f = c.polynomial();
    unsigned n = resolve_truncation(g, f.degree());
    auto mu = n >= 3 ? milnor_number(f, n) : std::nullopt;
    unsigned delta = delta_invariant(c);
    Json row{{"a", a}, {"b", b}, {"gaps", semigroup_gaps(c)}, {"frobenius", frobenius_number(c)},
             {"delta", delta}, {"symmetric", is_symmetric(c)}, {"truncation", n}};
    row["mu"] = mu ? Json(*mu) : Json(nullptr);
    row["mj_holds"] = mu ? milnor_jung_check(*mu, delta, 1) : false;
    return row;
}

void print_semigroup_table(const Json& rows) {
    std::cout << std::left << std::setw(4) << "a" << std::setw(4) << "b" << std::setw(11) << "frobenius"
              << std::setw(7) << "delta" << std::setw(6) << "mu" << std::setw(4) << "mj" << "gaps\n";
    for (const auto& r : rows) {
        std::string mu = r["mu"].is_null() ? "-" : std::to_string(r["mu"].get<unsigned>());
        std::string gaps;
        for (const auto& x : r["gaps"]) gaps += (gaps.empty() ? "" : " ") + std::to_string(x.get<unsigned>());
        std::cout << std::setw(4) << r["a"].get<unsigned>() << std::setw(4) << r["b"].get<unsigned>()
                  << std::setw(11) << r["frobenius"].get<unsigned>() << std::setw(7) << r["delta"].get<unsigned>()
                  << std::setw(6) << mu << std::setw(4) << (r["mj_holds"].get<bool>() ? "yes" : "no") << gaps
                  << "\n";
    }
}

int cmd_semigroup(const GlobalOptions& g, const std::vector<unsigned>& ab, std::optional<unsigned> max_b) {
    Json rows = Json::array();
    if (max_b) {
        if (!ab.empty()) throw UsageError("semigroup takes either a b or --max");
        for (unsigned a = 2; a <= *max_b; ++a)
            for (unsigned b = a + 1; b <= *max_b; ++b)
                if (std::gcd(a, b) == 1) rows.push_back(semigroup_row(a, b, g));
    } else {
        if (ab.size() != 2) throw UsageError("semigroup needs a and b");
        rows.push_back(semigroup_row(ab[0], ab[1], g));
    }
    bool all = std::all_of(rows.begin(), rows.end(), [](const Json& r) { return !r["mu"].is_null(); });
    if (g.format == "json")
        std::cout << dump(Json{{"rows", rows}});
    else
        print_semigroup_table(rows);
    return stability_exit(g, all);
}

int cmd_mj(const GlobalOptions& g, const std::vector<unsigned>& ab, unsigned l) {
    if (ab.size() != 2) throw UsageError("mj needs a and b");
    SemigroupCurve c(ab[0], ab[1]);
    Polynomial base = c.polynomial();
    InvariantReport rep = suspension_report(c, l, resolve_truncation(g, base.degree()));
    emit(g, report_to_json(rep));
    return 0;
}

int cmd_validate(const GlobalOptions& g, const std::string& path) {
    Json j = read_json_file(path);
    Json out;
    if (j.is_object() && j.contains("entries")) {
        Catalog c = catalog_from_json(j);
        Json labels = Json::array();
        for (const auto& m : c.entries) labels.push_back(m.label());
        out = {{"valid", true}, {"kind", "catalog"}, {"f", c.f.to_string()}, {"entries", labels}};
    } else {
        MatrixFactorization m = mf_from_json(j);
        out = {{"valid", true}, {"kind", "factorization"}, {"f", m.f().to_string()}, {"label", m.label()},
               {"size", m.size()}};
    }
    emit(g, out);
    return 0;
}

struct IntersectArgs {
    std::string vars;
    std::vector<std::string> relations;
    std::vector<std::string> ideals;
    std::vector<std::string> compare;
};

int cmd_intersect(const GlobalOptions& g, const IntersectArgs& a) {
    if (a.ideals.empty()) throw UsageError("intersect needs at least one --ideal");
    Variables vars(split_list(a.vars));
    std::vector<Polynomial> rels;
    int maxdeg = 1;
    for (const auto& r : a.relations) {
        rels.push_back(parse_polynomial(r, vars));
        maxdeg = std::max(maxdeg, rels.back().degree());
    }
    auto parse_gens = [&](const std::string& text) {
        std::vector<Polynomial> gens;
        for (const auto& s : split_list(text)) {
            gens.push_back(parse_polynomial(s, vars));
            maxdeg = std::max(maxdeg, gens.back().degree());
        }
        return gens;
    };
    std::vector<std::vector<Polynomial>> ideals, compares;
    for (const auto& s : a.ideals) ideals.push_back(parse_gens(s));
    for (const auto& s : a.compare) compares.push_back(parse_gens(s));
    unsigned n = resolve_truncation(g, maxdeg);

    auto intersection_at = [&](unsigned trunc) {
        AlgebraPtr alg = TruncatedLocalAlgebra::build(vars, rels, trunc);
        TruncatedIdeal acc = make_ideal(alg, ideals.front());
        for (std::size_t i = 1; i < ideals.size(); ++i) acc = intersect(acc, make_ideal(alg, ideals[i]));
        return acc;
    };
    TruncatedIdeal result = intersection_at(n);
    TruncatedIdeal next = intersection_at(n + 2);
    result.stabilized = ideal_span(*next.algebra, result.generators) == next.space;

    Json j = ideal_to_json(result);
    Json cmp = Json::array();
    for (const auto& gens : compares) {
        Json c;
        c["ideal"] = ideal_text(gens);
        c["equal"] = same_ideal(result, make_ideal(result.algebra, gens));
        cmp.push_back(c);
    }
    if (!compares.empty()) j["comparisons"] = cmp;
    emit(g, j);
    return stability_exit(g, result.stabilized);
}

int cmd_verify(const GlobalOptions& g, const std::string& suite, std::uint64_t seed, bool skip_repeat) {
    std::vector<suites::CheckResult> results;
    if (suite == "golden")
        results = suites::run_golden({.check_determinism = !skip_repeat});
    else if (suite == "properties")
        results = suites::run_properties(seed);
    else
        throw UsageError("unknown suite '" + suite + "' (expected golden or properties)");
    if (g.format == "json") {
        std::cout << dump(suites::results_to_json(suite, results));
    } else {
        std::size_t passed = 0;
        for (const auto& r : results) {
            passed += r.passed;
            std::cout << (r.passed ? "PASS " : "FAIL ");
            if (r.criterion > 0) std::cout << std::setw(2) << r.criterion << " ";
            std::cout << r.name << ": " << r.detail << "\n";
        }
        std::cout << passed << "/" << results.size() << " passed\n";
    }
    return suites::all_passed(results) ? 0 : kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cohomology annihilators of hypersurface singularities via matrix factorizations"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions g;
    app.add_option("--trunc", g.trunc, "Truncation order N (overrides COHANN_TRUNC and the default)")
        ->check(CLI::Range(2u, 1000u));
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    app.add_flag("--require-stable", g.require_stable, "Exit 4 when the result did not stabilize");

    std::string mf_path, var = "z", output, f_text, vars_text, cover_var = "y", suite;
    unsigned cover_exp = 2, l = 1;
    std::uint64_t seed = 0;
    bool skip_repeat = false;
    std::vector<unsigned> ab;
    std::optional<unsigned> max_b;
    CaArgs ca;
    IntersectArgs ia;

    auto* sann = app.add_subcommand("sann", "Stable annihilator of coker(A) for an MF file");
    sann->add_option("file", mf_path, "Matrix factorization JSON")->required();
    auto* ext2 = app.add_subcommand("ext2", "Annihilator of stable End(M) computed from the Hom complex");
    ext2->add_option("file", mf_path, "Matrix factorization JSON")->required();

    auto* ca_cmd = app.add_subcommand("ca", "Cohomology annihilator as the intersection over a catalog");
    ca_cmd->add_option("--an", ca.an, "Use the A_n catalog");
    ca_cmd->add_option("--catalog", ca.catalog, "Catalog JSON file");
    ca_cmd->add_option("--det", ca.det, "Generic determinantal catalog, n in {2,3}");

    auto* kn = app.add_subcommand("knorrer", "Matrix factorization of f + z^2 from one of f");
    kn->add_option("file", mf_path, "Matrix factorization JSON")->required();
    kn->add_option("--var", var, "Name of the new variable");
    kn->add_option("--output,-o", output, "Write the cover to a file");

    auto* cover = app.add_subcommand("cover", "Branched cover ring f + y^m");
    cover->add_option("--f", f_text, "Polynomial f")->required();
    cover->add_option("--vars", vars_text, "Comma-separated variable list");
    cover->add_option("--m", cover_exp, "Cover degree (>= 2)");
    cover->add_option("--var", cover_var, "Name of the new variable");

    auto* jac = app.add_subcommand("jacobian", "Partial derivatives of f");
    jac->add_option("--f", f_text, "Polynomial f")->required();
    jac->add_option("--vars", vars_text, "Comma-separated variable list");

    auto* mil = app.add_subcommand("milnor", "Milnor number of an isolated singularity");
    mil->add_option("f", f_text, "Polynomial f")->required();
    mil->add_option("--vars", vars_text, "Comma-separated variable list");

    auto* semi = app.add_subcommand("semigroup", "Semigroup <a, b> invariants of x^a + y^b");
    semi->add_option("ab", ab, "a b")->expected(0, 2);
    semi->add_option("--max", max_b, "Every coprime pair 2 <= a < b <= max");

    auto* mj = app.add_subcommand("mj", "Milnor-Jung check for x^a + y^b + z_1^2 + ... + z_l^2");
    mj->add_option("ab", ab, "a b")->expected(2);
    mj->add_option("--l", l, "Number of squared suspension variables");

    auto* val = app.add_subcommand("validate-mf", "Validate an MF or catalog file");
    val->add_option("file", mf_path, "JSON file")->required();

    auto* inter = app.add_subcommand("intersect", "Intersect ideals in k[vars]/((relations) + m^N)");
    inter->add_option("--vars", ia.vars, "Comma-separated variable list")->required();
    inter->add_option("--rel", ia.relations, "Relation polynomial (repeatable)");
    inter->add_option("--ideal", ia.ideals, "Comma-separated generators (repeatable)")->required();
    inter->add_option("--compare", ia.compare, "Ideal to compare the intersection with (repeatable)");

    auto* ver = app.add_subcommand("verify", "Run a built-in check suite");
    ver->add_option("--suite", suite, "golden or properties")->required();
    ver->add_option("--seed", seed, "Seed for the properties suite");
    ver->add_flag("--no-repeat", skip_repeat, "Skip the repeated golden run (determinism check)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (sann->parsed()) return cmd_annihilator(g, mf_path, false);
        if (ext2->parsed()) return cmd_annihilator(g, mf_path, true);
        if (ca_cmd->parsed()) return cmd_ca(g, ca);
        if (kn->parsed()) return cmd_knorrer(g, mf_path, var, output);
        if (cover->parsed()) return cmd_cover(g, f_text, vars_text, cover_exp, cover_var);
        if (jac->parsed()) return cmd_jacobian(g, f_text, vars_text);
        if (mil->parsed()) return cmd_milnor(g, f_text, vars_text);
        if (semi->parsed()) return cmd_semigroup(g, ab, max_b);
        if (mj->parsed()) return cmd_mj(g, ab, l);
        if (val->parsed()) return cmd_validate(g, mf_path);
        if (inter->parsed()) return cmd_intersect(g, ia);
        if (ver->parsed()) return cmd_verify(g, suite, seed, skip_repeat);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
