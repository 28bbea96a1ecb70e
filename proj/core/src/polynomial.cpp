#include "cohann/polynomial.hpp"

#include "cohann/errors.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace cohann {

Variables::Variables(std::vector<std::string> names) {
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (!is_identifier(names[i]))
            throw std::invalid_argument("invalid variable name '" + names[i] + "'");
        for (std::size_t j = 0; j < i; ++j)
            if (names[j] == names[i])
                throw std::invalid_argument("duplicate variable name '" + names[i] + "'");
    }
    names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

std::optional<std::size_t> Variables::index_of(std::string_view name) const {
    const auto& v = *names_;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] == name) return i;
    return std::nullopt;
}

Variables Variables::extended(const std::vector<std::string>& extra) const {
    std::vector<std::string> all = *names_;
    for (const auto& name : extra) {
        if (contains(name))
            throw std::invalid_argument("variable '" + name + "' already in ambient ring");
        all.push_back(name);
    }
    return Variables(std::move(all));
}

bool is_identifier(std::string_view name) {
    if (name.empty()) return false;
    auto c0 = static_cast<unsigned char>(name[0]);
    if (!(std::isalpha(c0) || c0 == '_')) return false;
    return std::all_of(name.begin(), name.end(), [](char c) {
        auto u = static_cast<unsigned char>(c);
        return std::isalnum(u) || u == '_';
    });
}

Polynomial Polynomial::constant(const Variables& vars, const Rational& c) {
    Polynomial p(vars);
    p.add_term(Monomial(vars.size()), c);
    return p;
}

Polynomial Polynomial::variable(const Variables& vars, std::size_t index, std::uint32_t power) {
    if (index >= vars.size()) throw std::out_of_range("variable index out of range");
    Polynomial p(vars);
    p.add_term(Monomial::variable(vars.size(), index, power), 1);
    return p;
}

Polynomial Polynomial::variable(const Variables& vars, std::string_view name, std::uint32_t power) {
    auto idx = vars.index_of(name);
    if (!idx) throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
    return variable(vars, *idx, power);
}

Polynomial Polynomial::monomial(const Variables& vars, const Monomial& m, const Rational& c) {
    Polynomial p(vars);
    p.add_term(m, c);
    return p;
}

int Polynomial::degree() const {
    if (terms_.empty()) return -1;
    return static_cast<int>(terms_.begin()->first.degree());
}

int Polynomial::order() const {
    if (terms_.empty()) return -1;
    return static_cast<int>(terms_.rbegin()->first.degree());
}

Rational Polynomial::constant_term() const { return coefficient(Monomial(vars_.size())); }

Rational Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (cohann::is_zero(c)) return;
    if (m.size() != vars_.size()) throw AmbientMismatch("monomial length differs from ambient");
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (cohann::is_zero(it->second)) terms_.erase(it);
    }
}

void Polynomial::require_same_ambient(const Polynomial& other) const {
    if (!(vars_ == other.vars_)) throw AmbientMismatch("polynomials over different variable lists");
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    require_same_ambient(other);
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    require_same_ambient(other);
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (cohann::is_zero(c)) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_) coeff *= c;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.require_same_ambient(b);
    Polynomial out(a.vars_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial out(*this);
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

Polynomial Polynomial::pow(unsigned exponent) const {
    Polynomial result = constant(vars_, 1);
    Polynomial base = *this;
    while (exponent) {
        if (exponent & 1u) result = result * base;
        exponent >>= 1u;
        if (exponent) base = base * base;
    }
    return result;
}

Polynomial Polynomial::truncated(unsigned bound) const {
    Polynomial out(vars_);
    for (const auto& [m, c] : terms_)
        if (m.degree() < bound) out.terms_.emplace_hint(out.terms_.end(), m, c);
    return out;
}

Polynomial Polynomial::embedded(const Variables& target) const {
    std::vector<std::size_t> map(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto idx = target.index_of(vars_[i]);
        if (!idx) throw AmbientMismatch("variable '" + vars_[i] + "' missing from target ambient");
        map[i] = *idx;
    }
    Polynomial out(target);
    for (const auto& [m, c] : terms_) {
        std::vector<std::uint32_t> e(target.size(), 0);
        for (std::size_t i = 0; i < m.size(); ++i) e[map[i]] = m[i];
        out.add_term(Monomial(std::move(e)), c);
    }
    return out;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational mag = abs(c);
        if (sgn(c) < 0)
            os << '-';
        else if (!first)
            os << '+';
        first = false;
        bool wrote = false;
        if (mag != 1 || m.is_one()) {
            os << mag.get_str();
            wrote = true;
        }
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (wrote) os << '*';
            os << vars_[i];
            if (m[i] > 1) os << '^' << m[i];
            wrote = true;
        }
    }
    return os.str();
}

Polynomial partial_derivative(const Polynomial& p, std::size_t var_index) {
    if (var_index >= p.vars().size()) throw std::invalid_argument("variable index out of range");
    Polynomial out(p.vars());
    for (const auto& [m, c] : p.terms()) {
        if (m[var_index] == 0) continue;
        std::vector<std::uint32_t> e(m.exponents().begin(), m.exponents().end());
        Rational coeff = c * e[var_index];
        e[var_index] -= 1;
        out.add_term(Monomial(std::move(e)), coeff);
    }
    return out;
}

Polynomial partial_derivative(const Polynomial& p, std::string_view var) {
    auto idx = p.vars().index_of(var);
    if (!idx) throw std::invalid_argument("unknown variable '" + std::string(var) + "'");
    return partial_derivative(p, *idx);
}

namespace {

class Parser {
public:
    Parser(std::string_view text, const Variables& vars) : text_(text), vars_(vars) {}

    Polynomial parse() {
        Polynomial result(vars_);
        skip_ws();
        if (at_end()) throw ParseError("empty polynomial", pos_);
        bool negative = false;
        if (peek() == '+' || peek() == '-') {
            negative = peek() == '-';
            ++pos_;
        }
        parse_term(result, negative);
        for (;;) {
            skip_ws();
            if (at_end()) break;
            char c = peek();
            if (c != '+' && c != '-') throw ParseError(std::string("unexpected '") + c + "'", pos_);
            ++pos_;
            parse_term(result, c == '-');
        }
        return result;
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    std::string read_digits() {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    void parse_term(Polynomial& acc, bool negative) {
        skip_ws();
        if (at_end()) throw ParseError("expected term", pos_);
        Rational coeff = 1;
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            std::string num = read_digits();
            skip_ws();
            if (!at_end() && peek() == '/') {
                ++pos_;
                skip_ws();
                std::size_t den_pos = pos_;
                std::string den = read_digits();
                if (den.empty()) throw ParseError("expected denominator", den_pos);
                mpz_class d(den);
                if (d == 0) throw ParseError("zero denominator", den_pos);
                coeff = Rational(mpz_class(num), d);
                coeff.canonicalize();
            } else {
                coeff = Rational(mpz_class(num));
            }
            have_coeff = true;
        }
        std::vector<std::uint32_t> exps(vars_.size(), 0);
        bool have_factor = false;
        for (;;) {
            skip_ws();
            if (at_end()) break;
            std::size_t star_pos = pos_;
            bool star = false;
            if (peek() == '*') {
                star = true;
                ++pos_;
                skip_ws();
            }
            if (at_end() || !(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_')) {
                if (star) throw ParseError("expected variable after '*'", at_end() ? pos_ : star_pos);
                break;
            }
            std::size_t name_pos = pos_;
            std::size_t start = pos_;
            while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
            std::string_view name = text_.substr(start, pos_ - start);
            auto idx = vars_.index_of(name);
            if (!idx) throw ParseError("unknown variable '" + std::string(name) + "'", name_pos);
            std::uint64_t power = 1;
            skip_ws();
            if (!at_end() && peek() == '^') {
                ++pos_;
                skip_ws();
                std::size_t pow_pos = pos_;
                std::string digits = read_digits();
                if (digits.empty()) throw ParseError("expected exponent", pow_pos);
                if (digits.size() > 9) throw ParseError("exponent too large", pow_pos);
                power = std::stoull(digits);
                if (power == 0) throw ParseError("exponent must be positive", pow_pos);
            }
            exps[*idx] += static_cast<std::uint32_t>(power);
            have_factor = true;
        }
        if (!have_coeff && !have_factor) throw ParseError("expected term", pos_);
        if (negative) coeff = -coeff;
        acc.add_term(Monomial(std::move(exps)), coeff);
    }

    std::string_view text_;
    const Variables& vars_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const Variables& vars) {
    return Parser(text, vars).parse();
}

Variables infer_variables(std::string_view text) {
    std::vector<std::string> names;
    std::size_t i = 0;
    while (i < text.size()) {
        auto c = static_cast<unsigned char>(text[i]);
        if (std::isalpha(c) || c == '_') {
            std::size_t start = i;
            while (i < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
                ++i;
            std::string name(text.substr(start, i - start));
            if (std::find(names.begin(), names.end(), name) == names.end()) names.push_back(name);
        } else if (std::isdigit(c)) {
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        } else {
            ++i;
        }
    }
    return Variables(std::move(names));
}

}  // namespace cohann
