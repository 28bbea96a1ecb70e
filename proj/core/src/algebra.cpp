#include "cohann/algebra.hpp"

#include "cohann/errors.hpp"
#include "cohann/subspace.hpp"

#include <algorithm>
#include <stdexcept>

namespace cohann {

namespace {

void monomials_of_degree(std::size_t nvars, unsigned degree, std::vector<std::uint32_t>& current,
                         std::size_t var, std::vector<Monomial>& out) {
    if (var + 1 == nvars) {
        current[var] = degree;
        out.emplace_back(current);
        current[var] = 0;
        return;
    }
    for (unsigned e = 0; e <= degree; ++e) {
        current[var] = e;
        monomials_of_degree(nvars, degree - e, current, var + 1, out);
    }
    current[var] = 0;
}

std::vector<Monomial> monomials_below(std::size_t nvars, unsigned bound) {
    std::vector<Monomial> out;
    if (nvars == 0) {
        if (bound > 0) out.emplace_back(std::vector<std::uint32_t>{});
        return out;
    }
    std::vector<std::uint32_t> current(nvars, 0);
    for (unsigned d = 0; d < bound; ++d) {
        std::vector<Monomial> level;
        monomials_of_degree(nvars, d, current, 0, level);
        std::sort(level.begin(), level.end(), GrevlexGreater{});
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

}  // namespace

std::size_t monomial_count_below(std::size_t nvars, unsigned n) {
    if (n == 0) return 0;
    // C(nvars + n - 1, nvars)
    std::size_t top = nvars + n - 1;
    std::size_t k = std::min<std::size_t>(nvars, top - nvars);
    std::size_t result = 1;
    for (std::size_t i = 1; i <= k; ++i) result = result * (top - k + i) / i;
    return result;
}

unsigned default_truncation(int max_degree) {
    return static_cast<unsigned>(2 * std::max(max_degree, 1) + 4);
}

AlgebraPtr TruncatedLocalAlgebra::build(const Variables& vars, std::vector<Polynomial> relations,
                                        unsigned truncation) {
    if (truncation < 1) throw std::invalid_argument("truncation order must be at least 1");
    for (const auto& r : relations)
        if (!(r.vars() == vars)) throw AmbientMismatch("relation over a different variable list");

    std::shared_ptr<TruncatedLocalAlgebra> alg(new TruncatedLocalAlgebra());
    alg->vars_ = vars;
    alg->relations_ = std::move(relations);
    alg->truncation_ = truncation;
    alg->monomials_ = monomials_below(vars.size(), truncation);
    alg->monomial_index_.reserve(alg->monomials_.size());
    for (std::size_t i = 0; i < alg->monomials_.size(); ++i) alg->monomial_index_.emplace(alg->monomials_[i], i);

    const std::size_t ncols = alg->monomials_.size();
    Echelon relation_span(ncols);
    for (const auto& rel : alg->relations_) {
        Polynomial t = rel.truncated(truncation);
        if (t.is_zero()) continue;
        const auto ord = static_cast<unsigned>(t.order());
        for (const auto& u : alg->monomials_) {
            if (u.degree() + ord >= truncation) break;
            std::vector<SparseVector::Entry> entries;
            for (const auto& [m, c] : t.terms()) {
                Monomial prod = m * u;
                if (prod.degree() >= truncation) continue;
                entries.emplace_back(static_cast<SparseVector::Index>(alg->monomial_index_.at(prod)), c);
            }
            std::sort(entries.begin(), entries.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            SparseVector row;
            for (auto& [i, c] : entries) row.push_back(i, std::move(c));
            relation_span.insert(row);
        }
    }
    Subspace reduced = relation_span.to_subspace();

    std::vector<std::int64_t> pivot_of_col(ncols, -1);
    for (std::size_t r = 0; r < reduced.dim(); ++r) pivot_of_col[reduced.basis()[r].leading()] = static_cast<std::int64_t>(r);

    std::vector<std::int64_t> basis_index(ncols, -1);
    for (std::size_t col = 0; col < ncols; ++col) {
        if (pivot_of_col[col] < 0) {
            basis_index[col] = static_cast<std::int64_t>(alg->basis_.size());
            alg->basis_.push_back(alg->monomials_[col]);
        }
    }

    alg->nf_table_.resize(ncols);
    for (std::size_t col = 0; col < ncols; ++col) {
        if (basis_index[col] >= 0) {
            alg->nf_table_[col] = SparseVector::unit(static_cast<SparseVector::Index>(basis_index[col]));
            continue;
        }
        const auto& row = reduced.basis()[static_cast<std::size_t>(pivot_of_col[col])];
        SparseVector nf;
        for (const auto& [j, x] : row.entries()) {
            if (j == col) continue;
            nf.push_back(static_cast<SparseVector::Index>(basis_index[j]), -x);
        }
        alg->nf_table_[col] = std::move(nf);
    }
    return alg;
}

AlgebraPtr TruncatedLocalAlgebra::with_truncation(unsigned truncation) const {
    return build(vars_, relations_, truncation);
}

std::ptrdiff_t TruncatedLocalAlgebra::monomial_index(const Monomial& m) const {
    if (m.degree() >= truncation_) return -1;
    return static_cast<std::ptrdiff_t>(monomial_index_.at(m));
}

SparseVector TruncatedLocalAlgebra::normal_form(const Monomial& m) const {
    if (m.size() != vars_.size()) throw AmbientMismatch("monomial over a different variable list");
    auto idx = monomial_index(m);
    return idx < 0 ? SparseVector{} : nf_table_[static_cast<std::size_t>(idx)];
}

SparseVector TruncatedLocalAlgebra::normal_form(const Polynomial& p) const {
    if (!(p.vars() == vars_)) throw AmbientMismatch("polynomial over a different variable list");
    DenseAccumulator acc(dim());
    for (const auto& [m, c] : p.terms()) {
        auto idx = monomial_index(m);
        if (idx >= 0) acc.add_scaled(nf_table_[static_cast<std::size_t>(idx)], c);
    }
    return acc.take();
}

Polynomial TruncatedLocalAlgebra::to_polynomial(const SparseVector& coords) const {
    Polynomial p(vars_);
    for (const auto& [i, c] : coords.entries()) p.add_term(basis_.at(i), c);
    return p;
}

SparseVector TruncatedLocalAlgebra::multiply(const SparseVector& a, const SparseVector& b) const {
    DenseAccumulator acc(dim());
    for (const auto& [i, x] : a.entries())
        for (const auto& [j, y] : b.entries()) {
            auto idx = monomial_index(basis_[i] * basis_[j]);
            if (idx >= 0) acc.add_scaled(nf_table_[static_cast<std::size_t>(idx)], x * y);
        }
    return acc.take();
}

SparseVector TruncatedLocalAlgebra::multiply_basis(const SparseVector& a, std::size_t k) const {
    DenseAccumulator acc(dim());
    const Monomial& e = basis_.at(k);
    for (const auto& [i, x] : a.entries()) {
        auto idx = monomial_index(basis_[i] * e);
        if (idx >= 0) acc.add_scaled(nf_table_[static_cast<std::size_t>(idx)], x);
    }
    return acc.take();
}

SparseVector TruncatedLocalAlgebra::multiply_variable(const SparseVector& a, std::size_t var) const {
    DenseAccumulator acc(dim());
    Monomial v = Monomial::variable(vars_.size(), var);
    for (const auto& [i, x] : a.entries()) {
        auto idx = monomial_index(basis_[i] * v);
        if (idx >= 0) acc.add_scaled(nf_table_[static_cast<std::size_t>(idx)], x);
    }
    return acc.take();
}

SparseVector TruncatedLocalAlgebra::one() const { return normal_form(Polynomial::constant(vars_, 1)); }

}  // namespace cohann
