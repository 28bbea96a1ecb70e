#pragma once

#include "cohann/polynomial.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace cohann {

/// Dense matrix of polynomials over one variable list.
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(std::size_t rows, std::size_t cols, const Variables& vars);
    PolyMatrix(const Variables& vars, const std::vector<std::vector<Polynomial>>& rows);

    static PolyMatrix identity(std::size_t n, const Variables& vars);
    static PolyMatrix scalar(std::size_t n, const Polynomial& p);
    /// [[tl, tr], [bl, br]] from four equally sized square blocks.
    static PolyMatrix block(const PolyMatrix& tl, const PolyMatrix& tr, const PolyMatrix& bl,
                            const PolyMatrix& br);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    const Variables& vars() const noexcept { return vars_; }

    Polynomial& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Polynomial& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    const std::vector<Polynomial>& entries() const noexcept { return entries_; }

    PolyMatrix transposed() const;
    PolyMatrix embedded(const Variables& target) const;

    /// Highest total degree among the entries; -1 if all are zero.
    int max_degree() const;

    PolyMatrix& operator+=(const PolyMatrix& other);
    PolyMatrix& operator-=(const PolyMatrix& other);
    friend PolyMatrix operator+(PolyMatrix a, const PolyMatrix& b) { return a += b; }
    friend PolyMatrix operator-(PolyMatrix a, const PolyMatrix& b) { return a -= b; }
    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator*(const Polynomial& p, const PolyMatrix& m);

    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

    std::vector<std::vector<std::string>> to_strings() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    Variables vars_;
    std::vector<Polynomial> entries_;
};

/// Cofactor-expansion determinant; fine for the small sizes used here.
Polynomial determinant(const PolyMatrix& m);
/// Transposed cofactor matrix, so that m * adjugate(m) = det(m) * I.
PolyMatrix adjugate(const PolyMatrix& m);

}  // namespace cohann
