#include "cohann/linalg.hpp"

#include "cohann/subspace.hpp"

#include <algorithm>
#include <stdexcept>

namespace cohann {

SparseVector SparseVector::from_dense(const std::vector<Rational>& dense) {
    SparseVector v;
    for (std::size_t i = 0; i < dense.size(); ++i)
        if (!is_zero(dense[i])) v.entries_.emplace_back(static_cast<Index>(i), dense[i]);
    return v;
}

Rational SparseVector::at(Index i) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                               [](const Entry& e, Index idx) { return e.first < idx; });
    return (it != entries_.end() && it->first == i) ? it->second : Rational(0);
}

void SparseVector::push_back(Index i, Rational value) {
    if (is_zero(value)) return;
    if (!entries_.empty() && entries_.back().first >= i)
        throw std::logic_error("SparseVector::push_back out of order");
    entries_.emplace_back(i, std::move(value));
}

SparseVector& SparseVector::operator*=(const Rational& c) {
    if (is_zero(c)) {
        entries_.clear();
        return *this;
    }
    for (auto& e : entries_) e.second *= c;
    return *this;
}

namespace {

SparseVector merge(const SparseVector& a, const SparseVector& b, bool subtract) {
    SparseVector out;
    const auto& ea = a.entries();
    const auto& eb = b.entries();
    std::size_t i = 0, j = 0;
    while (i < ea.size() || j < eb.size()) {
        if (j == eb.size() || (i < ea.size() && ea[i].first < eb[j].first)) {
            out.push_back(ea[i].first, ea[i].second);
            ++i;
        } else if (i == ea.size() || eb[j].first < ea[i].first) {
            out.push_back(eb[j].first, subtract ? Rational(-eb[j].second) : eb[j].second);
            ++j;
        } else {
            Rational s = subtract ? Rational(ea[i].second - eb[j].second)
                                  : Rational(ea[i].second + eb[j].second);
            out.push_back(ea[i].first, std::move(s));
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

SparseVector& SparseVector::operator+=(const SparseVector& other) {
    *this = merge(*this, other, false);
    return *this;
}

SparseVector& SparseVector::operator-=(const SparseVector& other) {
    *this = merge(*this, other, true);
    return *this;
}

SparseVector SparseVector::shifted(Index offset) const {
    SparseVector out(*this);
    for (auto& e : out.entries_) e.first += offset;
    return out;
}

SparseVector SparseVector::slice(Index lo, Index hi) const {
    SparseVector out;
    for (const auto& [i, v] : entries_)
        if (i >= lo && i < hi) out.entries_.emplace_back(i - lo, v);
    return out;
}

std::vector<Rational> SparseVector::to_dense(std::size_t dim) const {
    std::vector<Rational> out(dim);
    for (const auto& [i, v] : entries_) {
        if (i >= dim) throw std::out_of_range("sparse index beyond dense dimension");
        out[i] = v;
    }
    return out;
}

void DenseAccumulator::add(SparseVector::Index i, const Rational& value) {
    if (!touched_flag_[i]) {
        touched_flag_[i] = 1;
        touched_.push_back(i);
    }
    values_[i] += value;
}

void DenseAccumulator::add_scaled(const SparseVector& v, const Rational& c) {
    for (const auto& [i, x] : v.entries()) add(i, x * c);
}

SparseVector DenseAccumulator::take() {
    std::sort(touched_.begin(), touched_.end());
    SparseVector out;
    for (auto i : touched_) {
        if (!is_zero(values_[i])) out.push_back(i, values_[i]);
        values_[i] = 0;
        touched_flag_[i] = 0;
    }
    touched_.clear();
    return out;
}

Echelon::Echelon(std::size_t dim) : dim_(dim), pivot_row_(dim, -1) {}

namespace {

// Reduces the vector held in scratch[first..dim) against leading-entry rows.
// Returns the remainder and leaves scratch zeroed.
SparseVector reduce_in_scratch(std::vector<Rational>& scratch, std::size_t first, std::size_t dim,
                               const std::vector<std::int32_t>& pivot_row,
                               const std::vector<SparseVector>& rows) {
    SparseVector out;
    Rational c;
    for (std::size_t col = first; col < dim; ++col) {
        if (sgn(scratch[col]) == 0) continue;
        const std::int32_t r = pivot_row[col];
        if (r < 0) {
            out.push_back(static_cast<SparseVector::Index>(col), scratch[col]);
            scratch[col] = 0;
            continue;
        }
        c = scratch[col];
        for (const auto& [j, x] : rows[static_cast<std::size_t>(r)].entries()) scratch[j] -= c * x;
        scratch[col] = 0;
    }
    return out;
}

std::vector<Rational>& scratch_for(std::size_t dim) {
    thread_local std::vector<Rational> scratch;
    if (scratch.size() < dim) scratch.resize(dim);
    return scratch;
}

}  // namespace

SparseVector Echelon::reduce(const SparseVector& v) const {
    if (v.empty()) return v;
    if (v.entries().back().first >= dim_) throw std::invalid_argument("vector exceeds echelon dimension");
    auto& scratch = scratch_for(dim_);
    for (const auto& [i, x] : v.entries()) scratch[i] = x;
    return reduce_in_scratch(scratch, v.leading(), dim_, pivot_row_, rows_);
}

bool Echelon::insert(const SparseVector& v) {
    SparseVector r = reduce(v);
    if (r.empty()) return false;
    Rational inv = 1 / r.leading_value();
    r *= inv;
    pivot_row_[r.leading()] = static_cast<std::int32_t>(rows_.size());
    rows_.push_back(std::move(r));
    return true;
}

Subspace Echelon::to_subspace() const {
    std::vector<std::size_t> order;
    order.reserve(rows_.size());
    for (std::size_t col = 0; col < dim_; ++col)
        if (pivot_row_[col] >= 0) order.push_back(col);

    // Back-substitute from the largest pivot down; each finished row is zero
    // in every larger pivot column.
    std::vector<std::int32_t> done_row(dim_, -1);
    std::vector<SparseVector> reduced(order.size());
    std::vector<Rational> scratch(dim_);
    Rational c;
    for (std::size_t k = order.size(); k-- > 0;) {
        const std::size_t pivot = order[k];
        const auto& row = rows_[static_cast<std::size_t>(pivot_row_[pivot])];
        for (const auto& [i, x] : row.entries()) scratch[i] = x;
        SparseVector out;
        out.push_back(static_cast<SparseVector::Index>(pivot), scratch[pivot]);
        scratch[pivot] = 0;
        for (std::size_t col = pivot + 1; col < dim_; ++col) {
            if (sgn(scratch[col]) == 0) continue;
            if (done_row[col] >= 0) {
                c = scratch[col];
                for (const auto& [j, x] : reduced[static_cast<std::size_t>(done_row[col])].entries())
                    scratch[j] -= c * x;
                scratch[col] = 0;
            } else {
                out.push_back(static_cast<SparseVector::Index>(col), scratch[col]);
                scratch[col] = 0;
            }
        }
        reduced[k] = std::move(out);
        done_row[pivot] = static_cast<std::int32_t>(k);
    }
    return Subspace::from_rref_rows(dim_, std::move(reduced));
}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

SparseVector RationalMatrix::row(std::size_t i) const {
    SparseVector v;
    for (std::size_t j = 0; j < cols_; ++j) v.push_back(static_cast<SparseVector::Index>(j), (*this)(i, j));
    return v;
}

SparseVector RationalMatrix::column(std::size_t j) const {
    SparseVector v;
    for (std::size_t i = 0; i < rows_; ++i) v.push_back(static_cast<SparseVector::Index>(i), (*this)(i, j));
    return v;
}

RrefResult rref(const RationalMatrix& m) {
    Echelon e(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) e.insert(m.row(i));
    Subspace s = e.to_subspace();
    RrefResult out{RationalMatrix(m.rows(), m.cols()), s.dim(), s.pivots()};
    for (std::size_t i = 0; i < s.dim(); ++i)
        for (const auto& [j, x] : s.basis()[i].entries()) out.reduced(i, j) = x;
    return out;
}

Subspace kernel(const RationalMatrix& m) {
    std::vector<SparseVector> cols;
    cols.reserve(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.column(j));
    return kernel_of_columns(cols, m.rows());
}

Subspace image(const RationalMatrix& m) {
    std::vector<SparseVector> cols;
    for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.column(j));
    return Subspace::span(m.rows(), cols);
}

std::optional<std::vector<Rational>> solve(const RationalMatrix& m, const std::vector<Rational>& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("right-hand side has wrong length");
    std::vector<SparseVector> cols;
    for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.column(j));
    auto x = solve_columns(cols, m.rows(), SparseVector::from_dense(b));
    if (!x) return std::nullopt;
    return x->to_dense(m.cols());
}

Subspace kernel_of_columns(const std::vector<SparseVector>& columns, std::size_t rows) {
    const auto offset = static_cast<SparseVector::Index>(rows);
    Echelon e(rows + columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        SparseVector v = columns[j];
        v.push_back(offset + static_cast<SparseVector::Index>(j), 1);
        e.insert(v);
    }
    std::vector<SparseVector> kernel_rows;
    for (const auto& r : e.rows())
        if (r.leading() >= offset) kernel_rows.push_back(r.slice(offset, offset + columns.size()));
    return Subspace::span(columns.size(), kernel_rows);
}

std::optional<SparseVector> solve_columns(const std::vector<SparseVector>& columns, std::size_t rows,
                                          const SparseVector& rhs) {
    const auto offset = static_cast<SparseVector::Index>(rows);
    Echelon e(rows + columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        SparseVector v = columns[j];
        v.push_back(offset + static_cast<SparseVector::Index>(j), 1);
        e.insert(v);
    }
    SparseVector residue = e.reduce(rhs);
    if (!residue.empty() && residue.leading() < offset) return std::nullopt;
    residue *= Rational(-1);
    return residue.slice(offset, offset + columns.size());
}

Subspace projected_solution_space(const std::vector<SparseVector>& columns,
                                  const std::vector<SparseVector>& targets, std::size_t rows) {
    const auto offset = static_cast<SparseVector::Index>(rows);
    Echelon e(rows + targets.size());
    for (const auto& c : columns) e.insert(c);
    for (std::size_t k = 0; k < targets.size(); ++k) {
        SparseVector v = targets[k] * Rational(-1);
        v.push_back(offset + static_cast<SparseVector::Index>(k), 1);
        e.insert(v);
    }
    std::vector<SparseVector> projected;
    for (const auto& r : e.rows())
        if (r.leading() >= offset) projected.push_back(r.slice(offset, offset + targets.size()));
    return Subspace::span(targets.size(), projected);
}

}  // namespace cohann
