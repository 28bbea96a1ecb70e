#pragma once

#include "cohann/monomial.hpp"
#include "cohann/rational.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cohann {

/// Ordered list of variable names. Shared between all polynomials over the
/// same ring so that ambient comparison is usually a pointer check.
class Variables {
public:
    Variables() : names_(std::make_shared<const std::vector<std::string>>()) {}
    Variables(std::vector<std::string> names);
    Variables(std::initializer_list<std::string> names)
        : Variables(std::vector<std::string>(names)) {}

    std::size_t size() const noexcept { return names_->size(); }
    const std::string& operator[](std::size_t i) const { return (*names_)[i]; }
    const std::vector<std::string>& names() const noexcept { return *names_; }
    std::optional<std::size_t> index_of(std::string_view name) const;
    bool contains(std::string_view name) const { return index_of(name).has_value(); }

    /// Appends fresh names; throws std::invalid_argument on a collision.
    Variables extended(const std::vector<std::string>& extra) const;

    friend bool operator==(const Variables& a, const Variables& b) {
        return a.names_ == b.names_ || *a.names_ == *b.names_;
    }

private:
    std::shared_ptr<const std::vector<std::string>> names_;
};

bool is_identifier(std::string_view name);

/// Sparse multivariate polynomial with exact rational coefficients.
/// Terms are kept in descending grevlex order and never store a zero
/// coefficient, so structural equality is mathematical equality.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, GrevlexGreater>;

    Polynomial() = default;
    explicit Polynomial(Variables vars) : vars_(std::move(vars)) {}

    static Polynomial constant(const Variables& vars, const Rational& c);
    static Polynomial variable(const Variables& vars, std::size_t index, std::uint32_t power = 1);
    static Polynomial variable(const Variables& vars, std::string_view name, std::uint32_t power = 1);
    static Polynomial monomial(const Variables& vars, const Monomial& m, const Rational& c = 1);

    const Variables& vars() const noexcept { return vars_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }

    /// Highest total degree of a term; -1 for the zero polynomial.
    int degree() const;
    /// Lowest total degree of a term (the order at the origin); -1 for zero.
    int order() const;
    Rational constant_term() const;
    Rational coefficient(const Monomial& m) const;

    void add_term(const Monomial& m, const Rational& c);

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial operator-() const;

    Polynomial pow(unsigned exponent) const;

    /// Drops every term of total degree >= bound.
    Polynomial truncated(unsigned bound) const;

    /// Re-expresses the polynomial over a variable list that contains every
    /// variable of the current one (matched by name).
    Polynomial embedded(const Variables& target) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }

    std::string to_string() const;

private:
    void require_same_ambient(const Polynomial& other) const;

    Variables vars_;
    TermMap terms_;
};

Polynomial partial_derivative(const Polynomial& p, std::string_view var);
Polynomial partial_derivative(const Polynomial& p, std::size_t var_index);

/// Parses the textual grammar
///   expression = term (('+'|'-') term)*
///   term       = [rational] ['*'] factor*
///   factor     = variable ['^' positive-integer]
///   rational   = integer ['/' positive-integer]
/// with whitespace ignored, an optional leading sign, and optional '*'
/// between factors. Throws ParseError with the offending position.
Polynomial parse_polynomial(std::string_view text, const Variables& vars);

/// Identifiers in order of first appearance; used when the caller does not
/// supply a variable list.
Variables infer_variables(std::string_view text);

}  // namespace cohann
