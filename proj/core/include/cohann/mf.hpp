#pragma once

#include "cohann/poly_matrix.hpp"

#include <string>

namespace cohann {

/// A pair of square polynomial matrices with A B = B A = f I. The module
/// of interest is coker(A) over S/(f); it is never materialized.
class MatrixFactorization {
public:
    /// Checks both products exactly; throws ValidationError naming the
    /// first offending entry.
    static MatrixFactorization validate(PolyMatrix a, PolyMatrix b, Polynomial f, std::string label = {});

    const Polynomial& f() const noexcept { return f_; }
    const PolyMatrix& a() const noexcept { return a_; }
    const PolyMatrix& b() const noexcept { return b_; }
    const std::string& label() const noexcept { return label_; }
    std::size_t size() const noexcept { return a_.rows(); }
    const Variables& vars() const noexcept { return f_.vars(); }

    MatrixFactorization relabeled(std::string label) const {
        MatrixFactorization m(*this);
        m.label_ = std::move(label);
        return m;
    }

    /// Highest degree among f and all entries of A and B.
    int max_degree() const;

    friend bool operator==(const MatrixFactorization& x, const MatrixFactorization& y) {
        return x.f_ == y.f_ && x.a_ == y.a_ && x.b_ == y.b_ && x.label_ == y.label_;
    }

private:
    MatrixFactorization(PolyMatrix a, PolyMatrix b, Polynomial f, std::string label)
        : a_(std::move(a)), b_(std::move(b)), f_(std::move(f)), label_(std::move(label)) {}

    PolyMatrix a_;
    PolyMatrix b_;
    Polynomial f_;
    std::string label_;
};

/// (A, B) -> (B, A): the factorization whose cokernel is the syzygy.
MatrixFactorization mf_syzygy(const MatrixFactorization& m);
/// (A, B) -> (A^T, B^T): the dual module.
MatrixFactorization mf_dual(const MatrixFactorization& m);
/// Block-diagonal sum; both factorizations must share f.
MatrixFactorization mf_direct_sum(const MatrixFactorization& m1, const MatrixFactorization& m2);
/// The size-zero factorization of f (unit of the direct sum).
MatrixFactorization mf_zero(const Polynomial& f);

/// Double branched cover: for a factorization (A, B) of f returns
///   ( [[B, -z I], [z I, A]], [[A, z I], [-z I, B]] ),
/// a factorization of f + z^2 over the variables extended by z.
MatrixFactorization knorrer_cover(const MatrixFactorization& m, const std::string& z);

/// f + y^m over the variables of f extended by a fresh y.
struct BranchedCoverRing {
    Polynomial base;
    std::string variable;
    unsigned exponent = 2;
    Polynomial cover;
};

BranchedCoverRing branched_cover_ring(const Polynomial& f, unsigned m, const std::string& y);

/// (A, adj A) after checking det A = f exactly.
MatrixFactorization adjugate_partner(const PolyMatrix& a, const Polynomial& f, std::string label = {});

/// n x n matrix of fresh indeterminates x11 .. xnn and its variable list.
PolyMatrix generic_matrix(std::size_t n);

}  // namespace cohann
