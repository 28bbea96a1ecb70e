#include <cohann/errors.hpp>
#include <cohann/polynomial.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace cohann;

namespace {

Variables xy() { return Variables{"x", "y"}; }

Monomial mono(std::vector<std::uint32_t> e) { return Monomial(std::move(e)); }

}  // namespace

TEST(Parse, CuspTerms) {
    Polynomial p = parse_polynomial("x^2+y^3", xy());
    ASSERT_EQ(p.terms().size(), 2u);
    EXPECT_EQ(p.coefficient(mono({2, 0})), 1);
    EXPECT_EQ(p.coefficient(mono({0, 3})), 1);
}

TEST(Parse, ZeroIsEmpty) {
    EXPECT_TRUE(parse_polynomial("0", xy()).is_zero());
}

TEST(Parse, TorusRelation) {
    Variables v{"x", "y", "z", "w"};
    Polynomial p = parse_polynomial("x*w^2-y*z", v);
    ASSERT_EQ(p.terms().size(), 2u);
    EXPECT_EQ(p.coefficient(mono({1, 0, 0, 2})), 1);
    EXPECT_EQ(p.coefficient(mono({0, 1, 1, 0})), -1);
}

TEST(Parse, RationalCoefficientsAndImplicitProduct) {
    Polynomial p = parse_polynomial("-3/6 x y^2 + 2", xy());
    EXPECT_EQ(p.coefficient(mono({1, 2})), Rational(-1, 2));
    EXPECT_EQ(p.constant_term(), 2);
}

TEST(Parse, RepeatedFactorsMultiply) {
    Polynomial p = parse_polynomial("x*x*y", xy());
    EXPECT_EQ(p.coefficient(mono({2, 1})), 1);
}

TEST(Parse, UnknownVariableReportsPosition) {
    try {
        parse_polynomial("x+q^2", xy());
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 2u);
        EXPECT_NE(std::string(e.what()).find("q"), std::string::npos);
    }
}

TEST(Parse, MalformedInputs) {
    for (const char* bad : {"", "x^", "x+", "x**y", "1/0", "x^0", "(x)", "x y +"}) {
        EXPECT_THROW(parse_polynomial(bad, xy()), ParseError) << bad;
    }
}

TEST(Print, CanonicalForm) {
    Variables v{"x", "y", "z", "w"};
    EXPECT_EQ(parse_polynomial("x*w^2-y*z", v).to_string(), "x*w^2-y*z");
    EXPECT_EQ(parse_polynomial("-3/2*y^2", xy()).to_string(), "-3/2*y^2");
    EXPECT_EQ(parse_polynomial("1 - x", xy()).to_string(), "-x+1");
    EXPECT_EQ(Polynomial(xy()).to_string(), "0");
}

TEST(Arithmetic, DifferenceOfSquares) {
    auto v = xy();
    auto p = [&](const char* s) { return parse_polynomial(s, v); };
    EXPECT_EQ(p("x+y") * p("x-y"), p("x^2-y^2"));
    EXPECT_EQ(p("x^2+y^3") * Polynomial::constant(v, 1), p("x^2+y^3"));
    EXPECT_EQ(p("x") * Polynomial::variable(v, 1, 5), p("x*y^5"));
    EXPECT_TRUE((p("x+y") - p("y+x")).is_zero());
    EXPECT_EQ(p("x+y").pow(3), p("x^3+3x^2*y+3x*y^2+y^3"));
}

TEST(Arithmetic, DegreeAndOrder) {
    Polynomial p = parse_polynomial("x^2+y^3+x", xy());
    EXPECT_EQ(p.degree(), 3);
    EXPECT_EQ(p.order(), 1);
    EXPECT_EQ(p.truncated(3), parse_polynomial("x^2+x", xy()));
}

TEST(Arithmetic, MixedAmbientsRejected) {
    Polynomial a = parse_polynomial("x", xy());
    Polynomial b = parse_polynomial("x", Variables{"x", "z"});
    EXPECT_THROW(a + b, AmbientMismatch);
}

TEST(Arithmetic, EmbeddingIntoLargerRing) {
    Variables big{"x", "y", "z"};
    Polynomial p = parse_polynomial("x^2+y^3", xy()).embedded(big);
    EXPECT_EQ(p, parse_polynomial("x^2+y^3", big));
}

TEST(Derivative, PowerRule) {
    auto v = xy();
    EXPECT_EQ(partial_derivative(parse_polynomial("x^2+y^3", v), "x"), parse_polynomial("2x", v));
    for (unsigned n = 1; n <= 6; ++n) {
        Polynomial f = parse_polynomial("x^2", v) + Polynomial::variable(v, 1, n + 1);
        EXPECT_EQ(partial_derivative(f, "y"), Polynomial::variable(v, 1, n) * Rational(n + 1));
    }
}

TEST(Derivative, TorusJacobianEntry) {
    Variables v{"x", "y", "z", "w"};
    EXPECT_EQ(partial_derivative(parse_polynomial("x*w^2-y*z", v), "w"), parse_polynomial("2x*w", v));
    EXPECT_THROW(partial_derivative(parse_polynomial("x", v), "q"), std::invalid_argument);
}

TEST(Variables, Validation) {
    EXPECT_THROW(Variables({"x", "x"}), std::invalid_argument);
    EXPECT_THROW(Variables({"1x"}), std::invalid_argument);
    EXPECT_THROW(xy().extended({"y"}), std::invalid_argument);
    EXPECT_EQ(xy().extended({"z"}).size(), 3u);
}

TEST(Variables, InferredInOrderOfAppearance) {
    Variables v = infer_variables("y^2 + 3*x11*y - x");
    EXPECT_EQ(v.names(), (std::vector<std::string>{"y", "x11", "x"}));
}

TEST(Monomials, GrevlexOrder) {
    // Same degree: x^2 > x*y > y^2 in grevlex with x > y.
    GrevlexGreater gt;
    EXPECT_TRUE(gt(mono({2, 0}), mono({1, 1})));
    EXPECT_TRUE(gt(mono({1, 1}), mono({0, 2})));
    EXPECT_TRUE(gt(mono({0, 3}), mono({2, 0})));
    // Three variables: x*z < y^2 in grevlex.
    EXPECT_TRUE(gt(mono({0, 2, 0}), mono({1, 0, 1})));
}

TEST(RoundTrip, RandomPolynomials) {
    Variables v{"x", "y", "z1"};
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coeff(-9, 9), den(1, 5), exp(0, 4), count(0, 6);
    for (int trial = 0; trial < 300; ++trial) {
        Polynomial p(v);
        for (int t = count(rng); t > 0; --t) {
            Rational c(mpz_class(coeff(rng)), mpz_class(den(rng)));
            c.canonicalize();
            p.add_term(mono({static_cast<std::uint32_t>(exp(rng)), static_cast<std::uint32_t>(exp(rng)),
                             static_cast<std::uint32_t>(exp(rng))}),
                       c);
        }
        std::string s = p.to_string();
        Polynomial q = parse_polynomial(s, v);
        ASSERT_EQ(p, q) << s;
        ASSERT_EQ(q.to_string(), s);
    }
}
