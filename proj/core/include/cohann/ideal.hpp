#pragma once

#include "cohann/algebra.hpp"
#include "cohann/subspace.hpp"

#include <vector>

namespace cohann {

/// An ideal of a truncated algebra, held as a subspace of its coordinate
/// space together with a minimal generating set.
struct TruncatedIdeal {
    AlgebraPtr algebra;
    Subspace space;
    std::vector<Polynomial> generators;
    /// Result agreed with the recomputation at truncation + 2.
    bool stabilized = false;

    unsigned truncation() const { return algebra->truncation(); }
    /// dim_k(A / I).
    std::size_t dim_quotient() const { return algebra->dim() - space.dim(); }
    bool is_unit() const { return space.dim() == algebra->dim() && algebra->dim() > 0; }
};

/// Linear span of { NF(g * e) : g in gens, e a basis monomial }.
Subspace ideal_span(const TruncatedLocalAlgebra& alg, const std::vector<Polynomial>& gens);

/// True if the subspace is closed under multiplication by every variable.
bool is_ideal(const TruncatedLocalAlgebra& alg, const Subspace& space);

/// Representatives of a basis of I / m I, lowest degree first. Throws
/// ValidationError if the subspace is not an ideal or if the chosen
/// generators fail to regenerate it.
std::vector<Polynomial> minimal_generators(const TruncatedLocalAlgebra& alg, const Subspace& space);

TruncatedIdeal make_ideal(const AlgebraPtr& alg, const std::vector<Polynomial>& gens);
TruncatedIdeal make_ideal(const AlgebraPtr& alg, Subspace space);

TruncatedIdeal intersect(const TruncatedIdeal& a, const TruncatedIdeal& b);
TruncatedIdeal ideal_power(const TruncatedIdeal& ideal, unsigned k);
/// Decides I^k ⊆ J inside the common truncated algebra.
bool power_containment(const TruncatedIdeal& i, const TruncatedIdeal& j, unsigned k);

/// Same-algebra equality of the underlying subspaces.
bool same_ideal(const TruncatedIdeal& a, const TruncatedIdeal& b);

}  // namespace cohann
