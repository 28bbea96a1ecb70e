#pragma once

#include "cohann/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace cohann {

class Subspace;

/// Sparse vector of rationals: strictly increasing indices, no zero values.
class SparseVector {
public:
    using Index = std::uint32_t;
    using Entry = std::pair<Index, Rational>;

    SparseVector() = default;

    static SparseVector unit(Index i, const Rational& value = 1) {
        SparseVector v;
        v.entries_.emplace_back(i, value);
        return v;
    }
    static SparseVector from_dense(const std::vector<Rational>& dense);

    bool empty() const noexcept { return entries_.empty(); }
    std::size_t nnz() const noexcept { return entries_.size(); }
    const std::vector<Entry>& entries() const noexcept { return entries_; }
    Index leading() const { return entries_.front().first; }
    const Rational& leading_value() const { return entries_.front().second; }
    Rational at(Index i) const;

    /// Appends an entry; the index must exceed every stored index.
    void push_back(Index i, Rational value);

    SparseVector& operator*=(const Rational& c);
    SparseVector& operator+=(const SparseVector& other);
    SparseVector& operator-=(const SparseVector& other);
    friend SparseVector operator+(SparseVector a, const SparseVector& b) { return a += b; }
    friend SparseVector operator-(SparseVector a, const SparseVector& b) { return a -= b; }
    friend SparseVector operator*(SparseVector a, const Rational& c) { return a *= c; }

    /// Adds offset to every index (for assembling block vectors).
    SparseVector shifted(Index offset) const;
    /// Keeps entries with lo <= index < hi, re-indexed from zero.
    SparseVector slice(Index lo, Index hi) const;

    std::vector<Rational> to_dense(std::size_t dim) const;

    friend bool operator==(const SparseVector&, const SparseVector&) = default;

private:
    std::vector<Entry> entries_;
};

/// Dense scratch space for summing many sparse contributions.
class DenseAccumulator {
public:
    explicit DenseAccumulator(std::size_t dim) : values_(dim), touched_flag_(dim, 0) {}

    std::size_t dim() const noexcept { return values_.size(); }
    void add(SparseVector::Index i, const Rational& value);
    void add_scaled(const SparseVector& v, const Rational& c);
    /// Returns the accumulated vector and clears the accumulator.
    SparseVector take();

private:
    std::vector<Rational> values_;
    std::vector<std::uint8_t> touched_flag_;
    std::vector<SparseVector::Index> touched_;
};

/// Incremental leading-entry echelon basis. Each stored row has a distinct
/// leading index and leading coefficient one; reduction walks columns in
/// increasing order. Not safe for concurrent mutation.
class Echelon {
public:
    explicit Echelon(std::size_t dim);

    std::size_t dim() const noexcept { return dim_; }
    std::size_t rank() const noexcept { return rows_.size(); }

    /// Reduces v and keeps the remainder as a new row if nonzero.
    bool insert(const SparseVector& v);
    SparseVector reduce(const SparseVector& v) const;
    bool contains(const SparseVector& v) const { return reduce(v).empty(); }

    const std::vector<SparseVector>& rows() const noexcept { return rows_; }
    bool is_pivot(std::size_t col) const { return pivot_row_[col] >= 0; }

    /// Canonical reduced row echelon basis of the span.
    Subspace to_subspace() const;

private:
    std::size_t dim_;
    std::vector<std::int32_t> pivot_row_;
    std::vector<SparseVector> rows_;
};

/// Dense exact rational matrix (small public-facing operations).
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static RationalMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    SparseVector row(std::size_t i) const;
    SparseVector column(std::size_t j) const;

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

struct RrefResult {
    RationalMatrix reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_columns;
};

RrefResult rref(const RationalMatrix& m);
/// Null space {x : m x = 0} inside k^cols.
Subspace kernel(const RationalMatrix& m);
/// Column space inside k^rows.
Subspace image(const RationalMatrix& m);
/// One solution of m x = b, or nullopt when the system is inconsistent.
std::optional<std::vector<Rational>> solve(const RationalMatrix& m, const std::vector<Rational>& b);

// Sparse column-oriented forms used by the large structured systems. A
// "column list" describes the linear map sending e_j to columns[j] in
// k^rows.

Subspace kernel_of_columns(const std::vector<SparseVector>& columns, std::size_t rows);
std::optional<SparseVector> solve_columns(const std::vector<SparseVector>& columns, std::size_t rows,
                                          const SparseVector& rhs);

/// Joint-system projection: the set of coefficient vectors c with
/// sum_k c_k targets[k] in the span of columns, i.e. the solution space of
/// [columns | -targets] projected onto the target coordinates.
Subspace projected_solution_space(const std::vector<SparseVector>& columns,
                                  const std::vector<SparseVector>& targets, std::size_t rows);

}  // namespace cohann
