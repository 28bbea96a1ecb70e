#include "cohann/poly_matrix.hpp"

#include "cohann/errors.hpp"

#include <stdexcept>

namespace cohann {

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, const Variables& vars)
    : rows_(rows), cols_(cols), vars_(vars), entries_(rows * cols, Polynomial(vars)) {}

PolyMatrix::PolyMatrix(const Variables& vars, const std::vector<std::vector<Polynomial>>& rows)
    : rows_(rows.size()), cols_(rows.empty() ? 0 : rows.front().size()), vars_(vars) {
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw std::invalid_argument("ragged polynomial matrix");
        for (const auto& p : row) {
            if (!(p.vars() == vars)) throw AmbientMismatch("matrix entry over a different ring");
            entries_.push_back(p);
        }
    }
}

PolyMatrix PolyMatrix::identity(std::size_t n, const Variables& vars) {
    return scalar(n, Polynomial::constant(vars, 1));
}

PolyMatrix PolyMatrix::scalar(std::size_t n, const Polynomial& p) {
    PolyMatrix m(n, n, p.vars());
    for (std::size_t i = 0; i < n; ++i) m(i, i) = p;
    return m;
}

PolyMatrix PolyMatrix::block(const PolyMatrix& tl, const PolyMatrix& tr, const PolyMatrix& bl,
                             const PolyMatrix& br) {
    const std::size_t n = tl.rows();
    for (const auto* b : {&tl, &tr, &bl, &br}) {
        if (b->rows() != n || b->cols() != n) throw std::invalid_argument("block size mismatch");
        if (!(b->vars() == tl.vars())) throw AmbientMismatch("blocks over different rings");
    }
    PolyMatrix out(2 * n, 2 * n, tl.vars());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            out(i, j) = tl(i, j);
            out(i, j + n) = tr(i, j);
            out(i + n, j) = bl(i, j);
            out(i + n, j + n) = br(i, j);
        }
    }
    return out;
}

PolyMatrix PolyMatrix::transposed() const {
    PolyMatrix out(cols_, rows_, vars_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

PolyMatrix PolyMatrix::embedded(const Variables& target) const {
    PolyMatrix out(rows_, cols_, target);
    for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = entries_[k].embedded(target);
    return out;
}

int PolyMatrix::max_degree() const {
    int d = -1;
    for (const auto& p : entries_) d = std::max(d, p.degree());
    return d;
}

PolyMatrix& PolyMatrix::operator+=(const PolyMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("shape mismatch");
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
    return *this;
}

PolyMatrix& PolyMatrix::operator-=(const PolyMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("shape mismatch");
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
    return *this;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("shape mismatch in matrix product");
    if (!(a.vars_ == b.vars_)) throw AmbientMismatch("matrices over different rings");
    PolyMatrix out(a.rows_, b.cols_, a.vars_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const auto& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const auto& bkj = b(k, j);
                if (!bkj.is_zero()) out(i, j) += aik * bkj;
            }
        }
    return out;
}

PolyMatrix operator*(const Polynomial& p, const PolyMatrix& m) {
    PolyMatrix out(m.rows_, m.cols_, m.vars_);
    for (std::size_t k = 0; k < m.entries_.size(); ++k) out.entries_[k] = p * m.entries_[k];
    return out;
}

std::vector<std::vector<std::string>> PolyMatrix::to_strings() const {
    std::vector<std::vector<std::string>> out(rows_, std::vector<std::string>(cols_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j).to_string();
    return out;
}

namespace {

PolyMatrix minor_matrix(const PolyMatrix& m, std::size_t skip_row, std::size_t skip_col) {
    const std::size_t n = m.rows();
    PolyMatrix out(n - 1, n - 1, m.vars());
    for (std::size_t i = 0, oi = 0; i < n; ++i) {
        if (i == skip_row) continue;
        for (std::size_t j = 0, oj = 0; j < n; ++j) {
            if (j == skip_col) continue;
            out(oi, oj++) = m(i, j);
        }
        ++oi;
    }
    return out;
}

}  // namespace

Polynomial determinant(const PolyMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return Polynomial::constant(m.vars(), 1);
    if (n == 1) return m(0, 0);
    if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    Polynomial det(m.vars());
    for (std::size_t j = 0; j < n; ++j) {
        if (m(0, j).is_zero()) continue;
        Polynomial term = m(0, j) * determinant(minor_matrix(m, 0, j));
        if (j % 2) det -= term;
        else det += term;
    }
    return det;
}

PolyMatrix adjugate(const PolyMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("adjugate of non-square matrix");
    const std::size_t n = m.rows();
    PolyMatrix adj(n, n, m.vars());
    if (n == 1) {
        adj(0, 0) = Polynomial::constant(m.vars(), 1);
        return adj;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Polynomial c = determinant(minor_matrix(m, i, j));
            adj(j, i) = ((i + j) % 2) ? -c : c;
        }
    return adj;
}

}  // namespace cohann
