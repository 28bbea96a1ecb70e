#pragma once

#include "cohann/linalg.hpp"
#include "cohann/polynomial.hpp"

#include <cstddef>
#include <memory>
#include <unordered_map>
#include <vector>

namespace cohann {

/// Finite-dimensional model k[x_1..x_m] / ((relations) + m^N) of a local
/// hypersurface ring. Monomials of degree < N are ordered by degree
/// ascending, then grevlex descending; the relation span is row reduced in
/// that order so each pivot monomial is rewritten in terms of the
/// remaining (basis) monomials, which are all of strictly larger column
/// index. Degree >= N is zero.
class TruncatedLocalAlgebra {
public:
    static std::shared_ptr<const TruncatedLocalAlgebra> build(const Variables& vars,
                                                              std::vector<Polynomial> relations,
                                                              unsigned truncation);

    /// Same variables and relations at a different truncation order.
    std::shared_ptr<const TruncatedLocalAlgebra> with_truncation(unsigned truncation) const;

    const Variables& vars() const noexcept { return vars_; }
    const std::vector<Polynomial>& relations() const noexcept { return relations_; }
    unsigned truncation() const noexcept { return truncation_; }
    std::size_t dim() const noexcept { return basis_.size(); }
    /// True when a relation is a unit, so the quotient is the zero ring.
    bool is_zero_ring() const noexcept { return basis_.empty(); }

    const std::vector<Monomial>& basis() const noexcept { return basis_; }
    /// Monomials of degree < N in column order.
    const std::vector<Monomial>& monomials() const noexcept { return monomials_; }

    /// Coordinates of the residue class of p over the basis.
    SparseVector normal_form(const Polynomial& p) const;
    SparseVector normal_form(const Monomial& m) const;
    Polynomial to_polynomial(const SparseVector& coords) const;

    SparseVector multiply(const SparseVector& a, const SparseVector& b) const;
    /// a times the k-th basis monomial.
    SparseVector multiply_basis(const SparseVector& a, std::size_t k) const;
    /// NF(1).
    SparseVector one() const;

    /// a times the variable with index var.
    SparseVector multiply_variable(const SparseVector& a, std::size_t var) const;

private:
    TruncatedLocalAlgebra() = default;

    std::ptrdiff_t monomial_index(const Monomial& m) const;

    Variables vars_;
    std::vector<Polynomial> relations_;
    unsigned truncation_ = 1;
    std::vector<Monomial> monomials_;
    std::unordered_map<Monomial, std::size_t, MonomialHash> monomial_index_;
    std::vector<Monomial> basis_;
    // Normal form of each monomial of degree < N (indexed like monomials_).
    std::vector<SparseVector> nf_table_;
};

using AlgebraPtr = std::shared_ptr<const TruncatedLocalAlgebra>;

/// Heuristic truncation order 2 * (max degree) + 4.
unsigned default_truncation(int max_degree);

/// Number of monomials of degree < n in m variables, C(m + n - 1, m).
std::size_t monomial_count_below(std::size_t nvars, unsigned n);

}  // namespace cohann
