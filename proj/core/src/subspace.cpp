#include "cohann/subspace.hpp"

#include <stdexcept>

namespace cohann {

Subspace Subspace::from_rref_rows(std::size_t ambient_dim, std::vector<SparseVector> rows) {
    Subspace s(ambient_dim);
    s.rows_ = std::move(rows);
    return s;
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<SparseVector>& vectors) {
    Echelon e(ambient_dim);
    for (const auto& v : vectors) e.insert(v);
    return e.to_subspace();
}

Subspace Subspace::full(std::size_t ambient_dim) {
    std::vector<SparseVector> rows;
    rows.reserve(ambient_dim);
    for (std::size_t i = 0; i < ambient_dim; ++i)
        rows.push_back(SparseVector::unit(static_cast<SparseVector::Index>(i)));
    return from_rref_rows(ambient_dim, std::move(rows));
}

std::vector<std::size_t> Subspace::pivots() const {
    std::vector<std::size_t> out;
    out.reserve(rows_.size());
    for (const auto& r : rows_) out.push_back(r.leading());
    return out;
}

SparseVector Subspace::reduce(const SparseVector& v) const {
    // In reduced echelon form each pivot column is owned by one row, so the
    // projection coefficients are read directly from v.
    DenseAccumulator acc(ambient_dim_);
    acc.add_scaled(v, 1);
    for (const auto& row : rows_) {
        Rational c = v.at(row.leading());
        if (!is_zero(c)) acc.add_scaled(row, -c);
    }
    return acc.take();
}

bool Subspace::is_subspace_of(const Subspace& other) const {
    if (ambient_dim_ != other.ambient_dim_) throw std::invalid_argument("ambient dimension mismatch");
    for (const auto& r : rows_)
        if (!other.contains(r)) return false;
    return true;
}

Subspace intersect(const Subspace& u, const Subspace& v) {
    if (u.ambient_dim() != v.ambient_dim()) throw std::invalid_argument("ambient dimension mismatch");
    // Zassenhaus: rows (u|u) and (v|0); rows with empty first half span u∩v.
    const std::size_t n = u.ambient_dim();
    const auto offset = static_cast<SparseVector::Index>(n);
    Echelon e(2 * n);
    for (const auto& r : u.basis()) e.insert(r + r.shifted(offset));
    for (const auto& r : v.basis()) e.insert(r);
    std::vector<SparseVector> rows;
    for (const auto& r : e.rows())
        if (r.leading() >= offset) rows.push_back(r.slice(offset, offset + n));
    return Subspace::span(n, rows);
}

Subspace sum(const Subspace& u, const Subspace& v) {
    if (u.ambient_dim() != v.ambient_dim()) throw std::invalid_argument("ambient dimension mismatch");
    Echelon e(u.ambient_dim());
    for (const auto& r : u.basis()) e.insert(r);
    for (const auto& r : v.basis()) e.insert(r);
    return e.to_subspace();
}

Subspace project_coords(const Subspace& u, const std::vector<std::size_t>& window) {
    std::vector<std::int64_t> position(u.ambient_dim(), -1);
    for (std::size_t k = 0; k < window.size(); ++k) {
        if (window[k] >= u.ambient_dim()) throw std::invalid_argument("projection window outside ambient space");
        position[window[k]] = static_cast<std::int64_t>(k);
    }
    std::vector<SparseVector> projected;
    for (const auto& r : u.basis()) {
        DenseAccumulator acc(window.size());
        for (const auto& [i, x] : r.entries())
            if (position[i] >= 0) acc.add(static_cast<SparseVector::Index>(position[i]), x);
        projected.push_back(acc.take());
    }
    return Subspace::span(window.size(), projected);
}

}  // namespace cohann
