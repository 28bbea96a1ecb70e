#include "suites.hpp"

#include <cohann/errors.hpp>

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>

namespace cohann::suites {

namespace {

struct CatalogCase {
    Catalog catalog;
    AlgebraPtr algebra;
};

CatalogCase with_algebra(Catalog c) {
    unsigned n = default_truncation(c.max_degree());
    AlgebraPtr alg = hypersurface_algebra(c.f, n);
    return {std::move(c), std::move(alg)};
}

// Every catalog MF the golden criteria quantify over: A_n entries for
// n <= 6 and the 2x2 determinantal factorization.
std::vector<CatalogCase> golden_catalogs() {
    std::vector<CatalogCase> out;
    for (unsigned n = 1; n <= 6; ++n) out.push_back(with_algebra(a_n_catalog(n)));
    out.push_back(with_algebra(determinantal_catalog(2)));
    return out;
}

std::vector<Polynomial> expected_an_generators(unsigned n) {
    Variables vars{"x", "y"};
    return {Polynomial::variable(vars, 0), Polynomial::variable(vars, 1, n / 2)};
}

Json generator_strings(const std::vector<Polynomial>& gens) {
    Json out = Json::array();
    for (const auto& g : gens) out.push_back(g.to_string());
    return out;
}

std::vector<Polynomial> two_by_two_minors(const PolyMatrix& x) {
    std::vector<Polynomial> out;
    std::size_t n = x.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = i + 1; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t l = j + 1; l < n; ++l)
                    out.push_back(x(i, j) * x(k, l) - x(i, l) * x(k, j));
    return out;
}

std::vector<std::pair<unsigned, unsigned>> coprime_pairs() {
    std::vector<std::pair<unsigned, unsigned>> out;
    for (unsigned a = 2; a <= 12; ++a)
        for (unsigned b = a + 1; b <= 12; ++b)
            if (std::gcd(a, b) == 1) out.emplace_back(a, b);
    return out;
}

TruncatedIdeal an_cohomology_annihilator(unsigned n) {
    CatalogCase c = with_algebra(a_n_catalog(n));
    return cohomology_annihilator(c.catalog.entries, c.algebra);
}

CheckResult result(int criterion, std::string name) {
    CheckResult r;
    r.criterion = criterion;
    r.name = std::move(name);
    r.passed = true;
    r.evidence = Json::object();
    return r;
}

void fail(CheckResult& r, const std::string& why) {
    r.passed = false;
    if (!r.detail.empty()) r.detail += "; ";
    r.detail += why;
}

}  // namespace

CheckResult check_an_cohomology_annihilator() {
    CheckResult r = result(1, "an-cohomology-annihilator");
    for (unsigned n : {2u, 4u, 6u}) {
        TruncatedIdeal ca = an_cohomology_annihilator(n);
        TruncatedIdeal expected = make_ideal(ca.algebra, expected_an_generators(n));
        bool match = same_ideal(ca, expected);
        Json e = ideal_to_json(ca);
        e["matches_expected"] = match;
        r.evidence["A_" + std::to_string(n)] = e;
        if (!match) fail(r, "A_" + std::to_string(n) + " ideal differs from (x, y^" + std::to_string(n / 2) + ")");
        if (!ca.stabilized) fail(r, "A_" + std::to_string(n) + " not stabilized");
    }
    if (r.passed) r.detail = "ca(A_n) = (x, y^(n/2)) for n = 2, 4, 6, stabilized";
    return r;
}

CheckResult check_oracle_equivalence() {
    CheckResult r = result(2, "oracle-equivalence");
    std::size_t count = 0;
    for (const auto& c : golden_catalogs()) {
        for (const auto& m : c.catalog.entries) {
            Subspace s = stable_annihilator_space(m, *c.algebra);
            Subspace e = ext2_annihilator_space(m, *c.algebra);
            bool equal = s == e;
            r.evidence[m.label()] = {{"codim", c.algebra->dim() - s.dim()}, {"equal", equal}};
            if (!equal) fail(r, m.label() + ": stable annihilator differs from Ext^2 annihilator");
            ++count;
        }
    }
    if (r.passed) r.detail = std::to_string(count) + " factorizations agree";
    return r;
}

CheckResult check_jacobian_containment() {
    CheckResult r = result(3, "jacobian-containment");
    std::size_t count = 0;
    for (const auto& c : golden_catalogs()) {
        for (const auto& m : c.catalog.entries) {
            bool ok = jacobian_containment_check(m, c.algebra);
            r.evidence[m.label()] = ok;
            if (!ok) fail(r, m.label() + ": a partial derivative fails element_test");
            ++count;
        }
    }
    if (r.passed) r.detail = "every partial derivative annihilates all " + std::to_string(count) + " factorizations";
    return r;
}

CheckResult check_syzygy_dual_invariance() {
    CheckResult r = result(4, "syzygy-dual-invariance");
    std::size_t count = 0;
    for (const auto& c : golden_catalogs()) {
        for (const auto& m : c.catalog.entries) {
            Subspace s = stable_annihilator_space(m, *c.algebra);
            bool syz = s == stable_annihilator_space(mf_syzygy(m), *c.algebra);
            bool dual = s == stable_annihilator_space(mf_dual(m), *c.algebra);
            r.evidence[m.label()] = {{"syzygy", syz}, {"dual", dual}};
            if (!syz) fail(r, m.label() + ": syzygy changes the annihilator");
            if (!dual) fail(r, m.label() + ": transpose changes the annihilator");
            ++count;
        }
    }
    if (r.passed) r.detail = std::to_string(count) + " factorizations invariant";
    return r;
}

CheckResult check_determinantal() {
    CheckResult r = result(5, "determinantal");
    {
        CatalogCase c = with_algebra(determinantal_catalog(2));
        const auto& m = c.catalog.entries.front();
        TruncatedIdeal sann = stable_annihilator(m, c.algebra);
        TruncatedIdeal entries = make_ideal(c.algebra, m.a().entries());
        bool match = same_ideal(sann, entries);
        Json e = ideal_to_json(sann);
        e["matches_entries"] = match;
        r.evidence["det2"] = e;
        if (!match) fail(r, "2x2: annihilator differs from the ideal of entries");
    }
    {
        CatalogCase c{determinantal_catalog(3), nullptr};
        c.algebra = hypersurface_algebra(c.catalog.f, 4);
        const auto& m = c.catalog.entries.front();
        TruncatedIdeal sann = stable_annihilator(m, c.algebra, {.check_stability = false});
        TruncatedIdeal minors = make_ideal(c.algebra, two_by_two_minors(m.a()));
        bool forward = sann.space.is_subspace_of(minors.space);
        bool backward = minors.space.is_subspace_of(sann.space);
        Json e = ideal_to_json(sann);
        e["contained_in_minors"] = forward;
        e["contains_minors"] = backward;
        r.evidence["det3"] = e;
        if (!forward) fail(r, "3x3: annihilator not contained in the 2x2 minors ideal");
        if (!backward) fail(r, "3x3: 2x2 minors ideal not contained in the annihilator");
    }
    if (r.passed) r.detail = "2x2 equals entries ideal; 3x3 equals 2x2 minors ideal at N=4";
    return r;
}

CheckResult check_semigroup_battery() {
    CheckResult r = result(6, "semigroup-battery");
    Json rows = Json::array();
    for (auto [a, b] : coprime_pairs()) {
        SemigroupCurve c(a, b);
        unsigned frob = frobenius_number(c);
        std::size_t gaps = semigroup_gaps(c).size();
        bool sym = is_symmetric(c);
        unsigned expected_gaps = (a - 1) * (b - 1) / 2;
        rows.push_back({{"a", a}, {"b", b}, {"frobenius", frob}, {"gaps", gaps}, {"symmetric", sym}});
        std::string tag = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
        if (frob != (a - 1) * (b - 1) - 1) fail(r, tag + " Frobenius number " + std::to_string(frob));
        if (gaps != expected_gaps) fail(r, tag + " gap count " + std::to_string(gaps));
        if (delta_invariant(c) != expected_gaps) fail(r, tag + " delta");
        if (!sym) fail(r, tag + " not symmetric");
    }
    r.evidence["pairs"] = rows;
    if (r.passed) r.detail = std::to_string(rows.size()) + " coprime pairs";
    return r;
}

CheckResult check_milnor_battery() {
    CheckResult r = result(7, "milnor-battery");
    Json rows = Json::array();
    for (auto [a, b] : coprime_pairs()) {
        SemigroupCurve c(a, b);
        Polynomial f = c.polynomial();
        unsigned n = milnor_truncation(f);
        auto mu = milnor_number(f, n);
        std::string tag = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
        Json row = {{"a", a}, {"b", b}, {"truncation", n}};
        row["mu"] = mu ? Json(*mu) : Json(nullptr);
        rows.push_back(row);
        if (!mu) {
            fail(r, tag + " Milnor number not stabilized");
            continue;
        }
        if (*mu != (a - 1) * (b - 1)) fail(r, tag + " mu = " + std::to_string(*mu));
        if (*mu != 2 * delta_invariant(c)) fail(r, tag + " mu != 2 delta");
    }
    r.evidence["pairs"] = rows;
    if (r.passed) r.detail = "mu = (a-1)(b-1) = 2 delta on " + std::to_string(rows.size()) + " pairs";
    return r;
}

CheckResult check_cross_route() {
    CheckResult r = result(8, "cross-route-consistency");
    for (unsigned n : {2u, 4u, 6u}) {
        std::size_t codim = an_cohomology_annihilator(n).dim_quotient();
        unsigned delta = delta_invariant(SemigroupCurve(2, n + 1));
        r.evidence["A_" + std::to_string(n)] = {{"dim_quotient", codim}, {"delta", delta}};
        if (codim != delta)
            fail(r, "A_" + std::to_string(n) + ": dim R/ca = " + std::to_string(codim) + " but delta = " +
                        std::to_string(delta));
    }
    if (r.passed) r.detail = "dim R/ca(R) = delta(2, n+1) for n = 2, 4, 6";
    return r;
}

CheckResult check_knorrer_lifting() {
    CheckResult r = result(9, "knorrer-lifting");
    for (unsigned n : {2u, 4u, 6u}) {
        Catalog c = a_n_catalog(n);
        std::vector<Polynomial> gens = an_cohomology_annihilator(n).generators;
        for (const auto& m : c.entries) {
            Json e;
            std::optional<MatrixFactorization> lifted_mf;
            try {
                lifted_mf = knorrer_cover(m, "z");
            } catch (const ValidationError& ex) {
                fail(r, m.label() + ": cover invalid: " + ex.what());
                continue;
            }
            const MatrixFactorization& cover = *lifted_mf;
            unsigned trunc = default_truncation(cover.max_degree());
            AlgebraPtr cover_alg = hypersurface_algebra(cover.f(), trunc);
            Polynomial z = Polynomial::variable(cover.vars(), "z");
            bool z_ok = element_test(z, cover, cover_alg).has_value();
            e["cover_f"] = cover.f().to_string();
            e["cover_size"] = cover.size();
            e["z_annihilates"] = z_ok;
            if (!z_ok) fail(r, m.label() + ": z fails element_test on the cover");
            Json lifted = Json::array();
            for (const auto& g : gens) {
                auto base = ambient_certificate(g, m, trunc);
                bool ok = false;
                if (base) {
                    HomotopyCertificate cert = lift_certificate(*base, m, "z");
                    ok = verify_certificate(cert, cover, *cover_alg);
                }
                lifted.push_back({{"r", g.to_string()}, {"lifted", ok}});
                if (!ok) fail(r, m.label() + ": generator " + g.to_string() + " does not lift");
            }
            e["generators"] = lifted;
            r.evidence[m.label()] = e;
        }
    }
    if (r.passed) r.detail = "covers valid, z annihilates, all ca generators lift with block certificates";
    return r;
}

CheckResult check_suspension_formula() {
    CheckResult r = result(10, "suspension-formula");
    const std::pair<unsigned, unsigned> pairs[] = {{2, 3}, {2, 5}, {3, 4}, {3, 5}};
    Json rows = Json::array();
    for (auto [a, b] : pairs) {
        for (unsigned l : {1u, 2u}) {
            SemigroupCurve c(a, b);
            std::string tag = "(" + std::to_string(a) + "," + std::to_string(b) + ") l=" + std::to_string(l);
            try {
                Polynomial base = c.polynomial();
                InvariantReport rep = suspension_report(c, l, milnor_truncation(base));
                rows.push_back(report_to_json(rep));
                if (!rep.mj_holds) fail(r, tag + " formula fails");
            } catch (const std::runtime_error& ex) {
                fail(r, tag + ": " + ex.what());
            }
        }
    }
    r.evidence["reports"] = rows;
    if (r.passed) r.detail = "mu = 2 delta - r + 1 on all 8 suspensions";
    return r;
}

CheckResult check_torus_ideal_identity() {
    CheckResult r = result(11, "torus-ideal-identity");
    Variables vars{"x", "y", "z", "w"};
    auto p = [&](const char* s) { return parse_polynomial(s, vars); };
    Polynomial rel = p("x*w^2-y*z");
    AlgebraPtr alg = TruncatedLocalAlgebra::build(vars, {rel}, 6);
    TruncatedIdeal left = intersect(make_ideal(alg, {p("w"), p("z"), p("y")}),
                                    make_ideal(alg, {p("x"), p("y"), p("z"), p("w^2")}));
    TruncatedIdeal middle = make_ideal(alg, {p("x*w"), p("y"), p("z"), p("w^2")});
    TruncatedIdeal jac = make_ideal(alg, jacobian_ideal(rel));
    bool a = same_ideal(left, middle);
    bool b = same_ideal(middle, jac);
    r.evidence["intersection"] = generator_strings(left.generators);
    r.evidence["jacobian"] = generator_strings(jac.generators);
    r.evidence["dim_quotient"] = left.dim_quotient();
    if (!a) fail(r, "(w,z,y) cap (x,y,z,w^2) differs from (xw,y,z,w^2)");
    if (!b) fail(r, "(xw,y,z,w^2) differs from the Jacobian ideal");
    if (r.passed) r.detail = "(w,z,y) cap (x,y,z,w^2) = (xw,y,z,w^2) = J in m^6";
    return r;
}

std::vector<CheckResult> run_golden(const GoldenOptions& options) {
    const std::function<CheckResult()> checks[] = {
        check_an_cohomology_annihilator, check_oracle_equivalence, check_jacobian_containment,
        check_syzygy_dual_invariance,    check_determinantal,      check_semigroup_battery,
        check_milnor_battery,            check_cross_route,        check_knorrer_lifting,
        check_suspension_formula,        check_torus_ideal_identity,
    };
    auto run_all = [&] {
        std::vector<CheckResult> out;
        for (const auto& check : checks) out.push_back(check());
        return out;
    };
    std::vector<CheckResult> results = run_all();
    if (options.check_determinism) {
        CheckResult r = result(12, "determinism");
        std::string first = dump(results_to_json("golden", results));
        std::string second = dump(results_to_json("golden", run_all()));
        r.passed = first == second;
        r.detail = r.passed ? "repeated run produced byte-identical JSON" : "repeated run produced different JSON";
        r.evidence["bytes"] = first.size();
        results.push_back(r);
    }
    return results;
}

namespace {

using Rng = std::mt19937_64;

Rational random_rational(Rng& rng) {
    std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
    Rational q(mpz_class(num(rng)), mpz_class(den(rng)));
    q.canonicalize();
    return q;
}

Polynomial random_polynomial(Rng& rng, const Variables& vars, unsigned max_degree, unsigned terms) {
    Polynomial p(vars);
    std::uniform_int_distribution<unsigned> exp(0, max_degree);
    for (unsigned t = 0; t < terms; ++t) {
        std::vector<std::uint32_t> e(vars.size());
        unsigned budget = max_degree;
        for (auto& x : e) {
            x = std::min(exp(rng), budget);
            budget -= x;
        }
        p.add_term(Monomial(std::move(e)), random_rational(rng));
    }
    return p;
}

SparseVector random_vector(Rng& rng, std::size_t dim, double density) {
    std::bernoulli_distribution keep(density);
    SparseVector v;
    for (std::size_t i = 0; i < dim; ++i)
        if (keep(rng)) {
            Rational q = random_rational(rng);
            if (q != 0) v.push_back(static_cast<SparseVector::Index>(i), q);
        }
    return v;
}

CheckResult property(std::string name) {
    CheckResult r = result(0, std::move(name));
    r.evidence = Json::object();
    return r;
}

CheckResult prop_parse_print(Rng& rng) {
    CheckResult r = property("parse-print-round-trip");
    Variables vars{"x", "y", "z1"};
    int cases = 0;
    for (; cases < 200; ++cases) {
        Polynomial p = random_polynomial(rng, vars, 6, 5);
        std::string s = p.to_string();
        Polynomial q = parse_polynomial(s, vars);
        if (!(p == q) || q.to_string() != s) {
            fail(r, "round trip failed for " + s);
            break;
        }
    }
    r.evidence["cases"] = cases;
    return r;
}

CheckResult prop_normal_form(Rng& rng) {
    CheckResult r = property("normal-form-ring-homomorphism");
    Variables vars{"x", "y"};
    AlgebraPtr alg = TruncatedLocalAlgebra::build(vars, {parse_polynomial("x^2+y^3", vars)}, 6);
    int cases = 0;
    for (; cases < 100; ++cases) {
        Polynomial p = random_polynomial(rng, vars, 5, 4);
        Polynomial q = random_polynomial(rng, vars, 5, 4);
        SparseVector np = alg->normal_form(p), nq = alg->normal_form(q);
        if (!(alg->normal_form(p + q) == np + nq)) {
            fail(r, "NF not additive on " + p.to_string() + ", " + q.to_string());
            break;
        }
        if (!(alg->normal_form(p * q) == alg->multiply(np, nq))) {
            fail(r, "NF not multiplicative on " + p.to_string() + ", " + q.to_string());
            break;
        }
        if (!(alg->normal_form(alg->to_polynomial(np)) == np)) {
            fail(r, "NF not idempotent on " + p.to_string());
            break;
        }
    }
    r.evidence["cases"] = cases;
    return r;
}

CheckResult prop_rank_nullity(Rng& rng) {
    CheckResult r = property("rank-nullity");
    std::uniform_int_distribution<std::size_t> size(1, 8);
    int cases = 0;
    for (; cases < 100; ++cases) {
        std::size_t rows = size(rng), cols = size(rng);
        RationalMatrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i) {
            SparseVector v = random_vector(rng, cols, 0.5);
            for (const auto& [j, q] : v.entries()) m(i, j) = q;
        }
        std::size_t rank = rref(m).rank;
        if (rank + kernel(m).dim() != cols || image(m).dim() != rank) {
            fail(r, "rank + nullity != columns");
            break;
        }
    }
    r.evidence["cases"] = cases;
    return r;
}

CheckResult prop_subspace_dimensions(Rng& rng) {
    CheckResult r = property("subspace-dimension-formula");
    std::uniform_int_distribution<std::size_t> count(0, 6);
    int cases = 0;
    for (; cases < 100; ++cases) {
        const std::size_t dim = 9;
        auto random_space = [&] {
            std::vector<SparseVector> vs;
            for (std::size_t i = count(rng); i > 0; --i) vs.push_back(random_vector(rng, dim, 0.4));
            return Subspace::span(dim, vs);
        };
        Subspace u = random_space(), v = random_space();
        Subspace s = sum(u, v), i = intersect(u, v);
        if (u.dim() + v.dim() != s.dim() + i.dim() || !i.is_subspace_of(u) || !i.is_subspace_of(v)) {
            fail(r, "dim U + dim V != dim(U+V) + dim(U cap V)");
            break;
        }
    }
    r.evidence["cases"] = cases;
    return r;
}

CheckResult prop_power_containment(Rng& rng) {
    CheckResult r = property("power-containment");
    Variables vars{"x", "y"};
    auto p = [&](const char* s) { return parse_polynomial(s, vars); };
    AlgebraPtr alg = TruncatedLocalAlgebra::build(vars, {p("x^2+y^5")}, 6);
    int cases = 0;
    for (; cases < 30; ++cases) {
        std::vector<Polynomial> gens;
        std::uniform_int_distribution<int> n(1, 3);
        for (int k = n(rng); k > 0; --k) {
            Polynomial g = random_polynomial(rng, vars, 4, 3);
            g -= Polynomial::constant(vars, g.constant_term());
            gens.push_back(g);
        }
        TruncatedIdeal i = make_ideal(alg, gens);
        if (!power_containment(i, i, 2)) {
            fail(r, "I^2 not contained in I");
            break;
        }
    }
    AlgebraPtr free_alg = TruncatedLocalAlgebra::build(vars, {}, 5);
    TruncatedIdeal m = make_ideal(free_alg, {p("x"), p("y")});
    if (!power_containment(m, make_ideal(free_alg, {p("x^2"), p("x*y"), p("y^2")}), 2))
        fail(r, "(x,y)^2 not contained in (x^2,xy,y^2)");
    if (power_containment(m, make_ideal(free_alg, {p("x^2"), p("y")}), 1))
        fail(r, "(x,y) contained in (x^2,y)");
    r.evidence["cases"] = cases;
    return r;
}

CheckResult prop_direct_sum(Rng& rng) {
    CheckResult r = property("direct-sum-intersection");
    std::uniform_int_distribution<unsigned> pick_n(2, 5);
    int cases = 0;
    for (; cases < 5; ++cases) {
        unsigned n = pick_n(rng);
        std::uniform_int_distribution<unsigned> pick_j(1, n);
        MatrixFactorization m1 = a_n_factorization(n, pick_j(rng));
        MatrixFactorization m2 = a_n_factorization(n, pick_j(rng));
        AlgebraPtr alg = hypersurface_algebra(m1.f(), default_truncation(m1.max_degree()));
        Subspace joint = stable_annihilator_space(mf_direct_sum(m1, m2), *alg);
        Subspace separate =
            intersect(stable_annihilator_space(m1, *alg), stable_annihilator_space(m2, *alg));
        if (!(joint == separate)) {
            fail(r, "sann(" + m1.label() + " + " + m2.label() + ") differs from the intersection");
            break;
        }
    }
    r.evidence["cases"] = cases;
    return r;
}

CheckResult prop_corrupt_factorization(Rng& rng) {
    CheckResult r = property("corrupted-factorization-rejected");
    std::uniform_int_distribution<unsigned> pick_n(1, 6);
    int cases = 0;
    for (; cases < 20; ++cases) {
        unsigned n = pick_n(rng);
        MatrixFactorization m = a_n_factorization(n, 1);
        PolyMatrix b = m.b();
        std::uniform_int_distribution<std::size_t> cell(0, 1);
        Polynomial bump = random_polynomial(rng, m.vars(), 3, 2);
        if (bump.is_zero()) bump = Polynomial::constant(m.vars(), 1);
        b(cell(rng), cell(rng)) += bump;
        try {
            MatrixFactorization::validate(m.a(), b, m.f(), "bad");
            fail(r, "corrupted factorization accepted");
            break;
        } catch (const ValidationError&) {
        }
    }
    r.evidence["cases"] = cases;
    return r;
}

}  // namespace

std::vector<CheckResult> run_properties(std::uint64_t seed) {
    Rng rng(seed);
    std::vector<CheckResult> out;
    out.push_back(prop_parse_print(rng));
    out.push_back(prop_normal_form(rng));
    out.push_back(prop_rank_nullity(rng));
    out.push_back(prop_subspace_dimensions(rng));
    out.push_back(prop_power_containment(rng));
    out.push_back(prop_direct_sum(rng));
    out.push_back(prop_corrupt_factorization(rng));
    for (auto& r : out)
        if (r.passed && r.detail.empty()) r.detail = std::to_string(r.evidence.value("cases", 0)) + " cases";
    return out;
}

Json results_to_json(const std::string& suite, const std::vector<CheckResult>& results) {
    Json list = Json::array();
    for (const auto& r : results) {
        Json j;
        if (r.criterion > 0) j["criterion"] = r.criterion;
        j["name"] = r.name;
        j["passed"] = r.passed;
        j["detail"] = r.detail;
        j["evidence"] = r.evidence;
        list.push_back(j);
    }
    return {{"suite", suite}, {"passed", all_passed(results)}, {"results", list}};
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
}

}  // namespace cohann::suites
