#include "cohann/invariants.hpp"

#include "cohann/algebra.hpp"

#include <numeric>
#include <stdexcept>

namespace cohann {

SemigroupCurve::SemigroupCurve(unsigned a, unsigned b) : a_(a), b_(b) {
    if (a < 2 || b < 2) throw std::invalid_argument("semigroup generators must exceed 1");
    if (std::gcd(a, b) != 1) throw std::invalid_argument("semigroup generators must be coprime");
}

Polynomial SemigroupCurve::polynomial() const {
    Variables vars{"x", "y"};
    return Polynomial::variable(vars, 0, a_) + Polynomial::variable(vars, 1, b_);
}

namespace {

std::vector<bool> membership(const SemigroupCurve& c, unsigned limit) {
    std::vector<bool> in(limit + 1, false);
    for (unsigned i = 0; i * c.a() <= limit; ++i)
        for (unsigned j = 0; i * c.a() + j * c.b() <= limit; ++j) in[i * c.a() + j * c.b()] = true;
    return in;
}

}  // namespace

std::vector<unsigned> semigroup_gaps(const SemigroupCurve& c) {
    const unsigned limit = (c.a() - 1) * (c.b() - 1);
    auto in = membership(c, limit);
    std::vector<unsigned> gaps;
    for (unsigned s = 0; s <= limit; ++s)
        if (!in[s]) gaps.push_back(s);
    return gaps;
}

unsigned frobenius_number(const SemigroupCurve& c) {
    auto gaps = semigroup_gaps(c);
    const unsigned expected = (c.a() - 1) * (c.b() - 1) - 1;
    if (gaps.empty() || gaps.back() != expected)
        throw std::logic_error("gap enumeration disagrees with (a-1)(b-1)-1");
    return gaps.back();
}

bool is_symmetric(const SemigroupCurve& c) {
    const unsigned f = (c.a() - 1) * (c.b() - 1) - 1;
    auto in = membership(c, f);
    for (unsigned s = 0; s <= f; ++s)
        if (in[s] == in[f - s]) return false;
    return true;
}

unsigned delta_invariant(const SemigroupCurve& c) {
    const auto count = static_cast<unsigned>(semigroup_gaps(c).size());
    if (2 * count != (c.a() - 1) * (c.b() - 1)) throw std::logic_error("gap count disagrees with (a-1)(b-1)/2");
    return count;
}

std::vector<Polynomial> jacobian_ideal(const Polynomial& f) {
    std::vector<Polynomial> out;
    for (std::size_t v = 0; v < f.vars().size(); ++v) out.push_back(partial_derivative(f, v));
    return out;
}

std::size_t milnor_algebra_dim(const Polynomial& f, unsigned truncation) {
    std::vector<Polynomial> rels{f};
    for (auto& d : jacobian_ideal(f)) rels.push_back(std::move(d));
    return TruncatedLocalAlgebra::build(f.vars(), std::move(rels), truncation)->dim();
}

std::optional<unsigned> milnor_number(const Polynomial& f, unsigned truncation) {
    if (truncation < 3) throw std::invalid_argument("Milnor number needs truncation >= 3");
    const std::size_t at_n = milnor_algebra_dim(f, truncation);
    const std::size_t below = milnor_algebra_dim(f, truncation - 2);
    if (at_n != below) return std::nullopt;
    return static_cast<unsigned>(at_n);
}

bool milnor_jung_check(long mu, long delta, long r) { return mu == 2 * delta - r + 1; }

unsigned milnor_truncation(const Polynomial& f) { return default_truncation(f.degree()); }

InvariantReport suspension_report(const SemigroupCurve& c, unsigned l, unsigned truncation) {
    std::vector<std::string> names{"x", "y"};
    for (unsigned i = 1; i <= l; ++i) names.push_back("z" + std::to_string(i));
    Variables vars(names);
    Polynomial f = Polynomial::variable(vars, 0, c.a()) + Polynomial::variable(vars, 1, c.b());
    for (unsigned i = 0; i < l; ++i) f += Polynomial::variable(vars, 2 + i, 2);

    InvariantReport report;
    report.polynomial = f.to_string();
    report.truncation = truncation;
    report.suspensions = l;
    auto mu = milnor_number(f, truncation);
    if (!mu) throw std::runtime_error("Milnor number of " + f.to_string() + " not stable at truncation " +
                                      std::to_string(truncation));
    report.mu = *mu;
    report.delta = delta_invariant(c);
    report.branches = 1;
    report.mj_holds = milnor_jung_check(report.mu, report.delta, report.branches);
    return report;
}

}  // namespace cohann
