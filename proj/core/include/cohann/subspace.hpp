#pragma once

#include "cohann/linalg.hpp"

#include <cstddef>
#include <vector>

namespace cohann {

/// Linear subspace of k^n stored by its reduced row echelon basis. The
/// basis is canonical, so two subspaces are equal iff their bases are.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {}

    /// Builds from rows already in reduced echelon form (leading ones,
    /// zero in every other row's pivot column, sorted by pivot).
    static Subspace from_rref_rows(std::size_t ambient_dim, std::vector<SparseVector> rows);
    static Subspace span(std::size_t ambient_dim, const std::vector<SparseVector>& vectors);
    static Subspace full(std::size_t ambient_dim);

    std::size_t ambient_dim() const noexcept { return ambient_dim_; }
    std::size_t dim() const noexcept { return rows_.size(); }
    const std::vector<SparseVector>& basis() const noexcept { return rows_; }
    std::vector<std::size_t> pivots() const;

    /// Remainder of v after subtracting its projection along the basis.
    SparseVector reduce(const SparseVector& v) const;
    bool contains(const SparseVector& v) const { return reduce(v).empty(); }
    bool is_subspace_of(const Subspace& other) const;

    friend bool operator==(const Subspace&, const Subspace&) = default;

private:
    std::size_t ambient_dim_ = 0;
    std::vector<SparseVector> rows_;
};

Subspace intersect(const Subspace& u, const Subspace& v);
Subspace sum(const Subspace& u, const Subspace& v);
/// Image of u under the coordinate projection onto window (indices into
/// the ambient space, in the order given).
Subspace project_coords(const Subspace& u, const std::vector<std::size_t>& window);

}  // namespace cohann
