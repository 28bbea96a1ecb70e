#include "cohann/ideal.hpp"

#include "cohann/errors.hpp"

#include <stdexcept>

namespace cohann {

namespace {

void require_same_algebra(const TruncatedIdeal& a, const TruncatedIdeal& b) {
    const bool same = a.algebra == b.algebra ||
                      (a.algebra->vars() == b.algebra->vars() &&
                       a.algebra->truncation() == b.algebra->truncation() &&
                       a.algebra->relations() == b.algebra->relations());
    if (!same) throw AmbientMismatch("ideals live in different truncated algebras");
}

}  // namespace

Subspace ideal_span(const TruncatedLocalAlgebra& alg, const std::vector<Polynomial>& gens) {
    Echelon e(alg.dim());
    for (const auto& g : gens) {
        SparseVector v = alg.normal_form(g);
        if (v.empty()) continue;
        for (std::size_t k = 0; k < alg.dim(); ++k) e.insert(alg.multiply_basis(v, k));
    }
    return e.to_subspace();
}

bool is_ideal(const TruncatedLocalAlgebra& alg, const Subspace& space) {
    for (const auto& row : space.basis())
        for (std::size_t var = 0; var < alg.vars().size(); ++var)
            if (!space.contains(alg.multiply_variable(row, var))) return false;
    return true;
}

std::vector<Polynomial> minimal_generators(const TruncatedLocalAlgebra& alg, const Subspace& space) {
    if (space.ambient_dim() != alg.dim()) throw AmbientMismatch("subspace does not match algebra");
    Echelon span(alg.dim());
    for (const auto& row : space.basis())
        for (std::size_t var = 0; var < alg.vars().size(); ++var) {
            SparseVector prod = alg.multiply_variable(row, var);
            if (!space.contains(prod)) throw ValidationError("subspace is not closed under multiplication");
            span.insert(prod);
        }
    // Canonical rows come out lowest degree first; keep those that are new
    // modulo m*I.
    std::vector<Polynomial> gens;
    for (const auto& row : space.basis())
        if (span.insert(row)) gens.push_back(alg.to_polynomial(row));
    if (!(ideal_span(alg, gens) == space))
        throw ValidationError("minimal generators do not regenerate the ideal");
    return gens;
}

TruncatedIdeal make_ideal(const AlgebraPtr& alg, const std::vector<Polynomial>& gens) {
    return make_ideal(alg, ideal_span(*alg, gens));
}

TruncatedIdeal make_ideal(const AlgebraPtr& alg, Subspace space) {
    TruncatedIdeal out;
    out.algebra = alg;
    out.generators = minimal_generators(*alg, space);
    out.space = std::move(space);
    return out;
}

TruncatedIdeal intersect(const TruncatedIdeal& a, const TruncatedIdeal& b) {
    require_same_algebra(a, b);
    TruncatedIdeal out = make_ideal(a.algebra, intersect(a.space, b.space));
    out.stabilized = a.stabilized && b.stabilized;
    return out;
}

TruncatedIdeal ideal_power(const TruncatedIdeal& ideal, unsigned k) {
    const auto& alg = *ideal.algebra;
    if (k == 0) return make_ideal(ideal.algebra, Subspace::full(alg.dim()));
    Subspace current = ideal.space;
    std::vector<SparseVector> gens;
    for (const auto& g : ideal.generators) gens.push_back(alg.normal_form(g));
    for (unsigned step = 1; step < k; ++step) {
        Echelon e(alg.dim());
        for (const auto& row : current.basis())
            for (const auto& g : gens) e.insert(alg.multiply(row, g));
        current = e.to_subspace();
    }
    return make_ideal(ideal.algebra, std::move(current));
}

bool power_containment(const TruncatedIdeal& i, const TruncatedIdeal& j, unsigned k) {
    require_same_algebra(i, j);
    return ideal_power(i, k).space.is_subspace_of(j.space);
}

bool same_ideal(const TruncatedIdeal& a, const TruncatedIdeal& b) {
    require_same_algebra(a, b);
    return a.space == b.space;
}

}  // namespace cohann
