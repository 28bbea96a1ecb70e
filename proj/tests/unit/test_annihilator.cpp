#include <cohann/annihilator.hpp>
#include <cohann/catalog.hpp>
#include <cohann/errors.hpp>

#include <gtest/gtest.h>

using namespace cohann;

namespace {

AlgebraPtr algebra_for(const MatrixFactorization& m) {
    return hypersurface_algebra(m.f(), default_truncation(m.max_degree()));
}

std::vector<Polynomial> polys(const Variables& v, std::initializer_list<const char*> texts) {
    std::vector<Polynomial> out;
    for (const char* t : texts) out.push_back(parse_polynomial(t, v));
    return out;
}

MatrixFactorization trivial_cusp() {
    Variables v{"x", "y"};
    Polynomial f = parse_polynomial("x^2+y^3", v);
    return MatrixFactorization::validate(PolyMatrix::scalar(1, f), PolyMatrix::identity(1, v), f, "trivial");
}

}  // namespace

TEST(StableAnnihilator, CuspIsMaximalIdeal) {
    auto m = a_n_factorization(2, 1);
    auto alg = algebra_for(m);
    TruncatedIdeal s = stable_annihilator(m, alg);
    EXPECT_TRUE(same_ideal(s, make_ideal(alg, polys(m.vars(), {"x", "y"}))));
    EXPECT_TRUE(s.stabilized);
    EXPECT_EQ(s.dim_quotient(), 1u);
}

TEST(StableAnnihilator, TrivialIsUnitIdeal) {
    auto m = trivial_cusp();
    auto s = stable_annihilator(m, algebra_for(m));
    EXPECT_TRUE(s.is_unit());
    EXPECT_EQ(s.generators, polys(m.vars(), {"1"}));
}

TEST(StableAnnihilator, DeterminantalTwoByTwo) {
    auto m = determinantal_catalog(2).entries.front();
    auto alg = algebra_for(m);
    auto s = stable_annihilator(m, alg);
    EXPECT_TRUE(same_ideal(s, make_ideal(alg, m.a().entries())));
    EXPECT_EQ(s.generators.size(), 4u);
}

TEST(StableAnnihilator, RequiresFInRelations) {
    auto m = a_n_factorization(2, 1);
    auto free_alg = TruncatedLocalAlgebra::build(m.vars(), {}, 6);
    EXPECT_THROW(stable_annihilator(m, free_alg), std::invalid_argument);
}

TEST(ElementTest, UnitDoesNotAnnihilateCusp) {
    auto m = a_n_factorization(2, 1);
    EXPECT_FALSE(element_test(parse_polynomial("1", m.vars()), m, algebra_for(m)));
}

TEST(ElementTest, FAndPartialsAnnihilate) {
    for (unsigned n = 1; n <= 4; ++n) {
        auto m = a_n_factorization(n, 1);
        auto alg = algebra_for(m);
        EXPECT_TRUE(element_test(m.f(), m, alg));
        auto cert = element_test(partial_derivative(m.f(), "x"), m, alg);
        ASSERT_TRUE(cert);
        EXPECT_TRUE(verify_certificate(*cert, m, *alg));
        EXPECT_TRUE(jacobian_containment_check(m, alg));
    }
}

TEST(Certificates, HandBuilt) {
    auto m = a_n_factorization(2, 1);
    auto alg = algebra_for(m);
    PolyMatrix zero(2, 2, m.vars());
    // g = B, h = 0 is a homotopy for r = f.
    EXPECT_TRUE(verify_certificate({m.f(), m.b(), zero}, m, *alg));
    EXPECT_FALSE(verify_certificate({parse_polynomial("x", m.vars()), m.b(), zero}, m, *alg));
    // For ([f], [1]) every r has the certificate g = 0, h = r.
    auto t = trivial_cusp();
    Polynomial r = parse_polynomial("1+y", t.vars());
    EXPECT_TRUE(verify_certificate({r, PolyMatrix(1, 1, t.vars()), PolyMatrix::scalar(1, r)}, t, *algebra_for(t)));
}

TEST(Ext2Oracle, AgreesWithSolverOnAnEntries) {
    for (unsigned n = 1; n <= 5; ++n) {
        Catalog c = a_n_catalog(n);
        auto alg = hypersurface_algebra(c.f, default_truncation(c.max_degree()));
        for (const auto& m : c.entries)
            EXPECT_EQ(ext2_annihilator_space(m, *alg), stable_annihilator_space(m, *alg)) << m.label();
    }
}

TEST(Ext2Oracle, CuspAndTrivial) {
    auto m = a_n_factorization(2, 1);
    auto alg = algebra_for(m);
    EXPECT_TRUE(same_ideal(ext2_annihilator(m, alg), make_ideal(alg, polys(m.vars(), {"x", "y"}))));
    auto t = trivial_cusp();
    EXPECT_TRUE(ext2_annihilator(t, algebra_for(t)).is_unit());
}

TEST(Invariance, SyzygyAndDual) {
    for (unsigned n = 2; n <= 5; ++n) {
        for (unsigned j = 1; j <= n; ++j) {
            auto m = a_n_factorization(n, j);
            auto alg = algebra_for(m);
            Subspace s = stable_annihilator_space(m, *alg);
            EXPECT_EQ(stable_annihilator_space(mf_syzygy(m), *alg), s);
            EXPECT_EQ(stable_annihilator_space(mf_dual(m), *alg), s);
        }
    }
}

TEST(Invariance, DirectSumIsIntersection) {
    auto m1 = a_n_factorization(4, 1);
    auto m2 = a_n_factorization(4, 2);
    auto alg = algebra_for(m1);
    Subspace joint = stable_annihilator_space(mf_direct_sum(m1, m2), *alg);
    EXPECT_EQ(joint, intersect(stable_annihilator_space(m1, *alg), stable_annihilator_space(m2, *alg)));
}

TEST(CohomologyAnnihilator, EvenAn) {
    for (unsigned n : {2u, 4u}) {
        Catalog c = a_n_catalog(n);
        auto alg = hypersurface_algebra(c.f, default_truncation(c.max_degree()));
        auto ca = cohomology_annihilator(c.entries, alg);
        Polynomial y_power = Polynomial::variable(c.vars(), 1, n / 2);
        EXPECT_TRUE(same_ideal(ca, make_ideal(alg, {Polynomial::variable(c.vars(), 0), y_power})));
        EXPECT_TRUE(ca.stabilized);
        for (const auto& m : c.entries) EXPECT_TRUE(ca.space.is_subspace_of(stable_annihilator_space(m, *alg)));
    }
}

// Odd n: recorded observations, ca(A_n) = (x, y^((n+1)/2)).
TEST(CohomologyAnnihilator, OddAnObserved) {
    for (unsigned n : {1u, 3u, 5u}) {
        Catalog c = a_n_catalog(n);
        auto alg = hypersurface_algebra(c.f, default_truncation(c.max_degree()));
        auto ca = cohomology_annihilator(c.entries, alg);
        Polynomial y_power = Polynomial::variable(c.vars(), 1, (n + 1) / 2);
        EXPECT_TRUE(same_ideal(ca, make_ideal(alg, {Polynomial::variable(c.vars(), 0), y_power}))) << n;
        EXPECT_TRUE(ca.stabilized);
    }
}

TEST(CohomologyAnnihilator, SingleTrivialAndEmpty) {
    auto t = trivial_cusp();
    auto alg = algebra_for(t);
    EXPECT_TRUE(cohomology_annihilator({t}, alg).is_unit());
    EXPECT_THROW(cohomology_annihilator({}, alg), std::invalid_argument);
}

TEST(Knorrer, ZAnnihilatesCoverAndCertificatesLift) {
    auto m = a_n_factorization(2, 1);
    auto cover = knorrer_cover(m, "z");
    unsigned n = default_truncation(cover.max_degree());
    auto cover_alg = hypersurface_algebra(cover.f(), n);
    EXPECT_TRUE(element_test(Polynomial::variable(cover.vars(), "z"), cover, cover_alg));
    for (const char* r : {"x", "y"}) {
        auto base = ambient_certificate(parse_polynomial(r, m.vars()), m, n);
        ASSERT_TRUE(base) << r;
        auto lifted = lift_certificate(*base, m, "z");
        EXPECT_EQ(lifted.g.rows(), 4u);
        EXPECT_TRUE(verify_certificate(lifted, cover, *cover_alg)) << r;
    }
}

TEST(Knorrer, CommutesWithSyzygyAtAnnihilatorLevel) {
    auto m = a_n_factorization(2, 1);
    auto a = knorrer_cover(mf_syzygy(m), "z");
    auto b = mf_syzygy(knorrer_cover(m, "z"));
    auto alg = hypersurface_algebra(a.f(), default_truncation(a.max_degree()));
    EXPECT_EQ(stable_annihilator_space(a, *alg), stable_annihilator_space(b, *alg));
}

TEST(StableAnnihilator, NonIsolatedSingularity) {
    // coker [x] over k[x, y]/(x^2) is R/(x).
    Variables v{"x", "y"};
    Polynomial f = parse_polynomial("x^2", v);
    PolyMatrix a = PolyMatrix::scalar(1, parse_polynomial("x", v));
    auto m = MatrixFactorization::validate(a, a, f, "x");
    auto s = stable_annihilator(m, hypersurface_algebra(f, 6));
    EXPECT_TRUE(s.stabilized);
    EXPECT_TRUE(same_ideal(s, make_ideal(s.algebra, {parse_polynomial("x", v)})));
}
