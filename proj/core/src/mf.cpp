#include "cohann/mf.hpp"

#include "cohann/errors.hpp"

#include <stdexcept>

namespace cohann {

namespace {

void check_product(const PolyMatrix& prod, const Polynomial& f, const char* which) {
    for (std::size_t i = 0; i < prod.rows(); ++i)
        for (std::size_t j = 0; j < prod.cols(); ++j) {
            const Polynomial expected = (i == j) ? f : Polynomial(f.vars());
            if (!(prod(i, j) == expected)) {
                throw ValidationError(std::string(which) + " differs from f*I at entry (" + std::to_string(i) + "," +
                                      std::to_string(j) + "): got " + prod(i, j).to_string() + ", expected " +
                                      expected.to_string());
            }
        }
}

}  // namespace

MatrixFactorization MatrixFactorization::validate(PolyMatrix a, PolyMatrix b, Polynomial f, std::string label) {
    if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
        throw ValidationError("matrix factorization needs two square matrices of equal size");
    if (!(a.vars() == f.vars()) || !(b.vars() == f.vars()))
        throw AmbientMismatch("matrix entries and f use different variable lists");
    check_product(a * b, f, "A*B");
    check_product(b * a, f, "B*A");
    return MatrixFactorization(std::move(a), std::move(b), std::move(f), std::move(label));
}

int MatrixFactorization::max_degree() const {
    return std::max({f_.degree(), a_.max_degree(), b_.max_degree()});
}

MatrixFactorization mf_syzygy(const MatrixFactorization& m) {
    return MatrixFactorization::validate(m.b(), m.a(), m.f(), m.label().empty() ? "" : "syz(" + m.label() + ")");
}

MatrixFactorization mf_dual(const MatrixFactorization& m) {
    return MatrixFactorization::validate(m.a().transposed(), m.b().transposed(), m.f(),
                                         m.label().empty() ? "" : "dual(" + m.label() + ")");
}

MatrixFactorization mf_zero(const Polynomial& f) {
    return MatrixFactorization::validate(PolyMatrix(0, 0, f.vars()), PolyMatrix(0, 0, f.vars()), f, "0");
}

MatrixFactorization mf_direct_sum(const MatrixFactorization& m1, const MatrixFactorization& m2) {
    if (!(m1.f() == m2.f())) throw ValidationError("direct sum of factorizations of different polynomials");
    const std::size_t n1 = m1.size(), n = m1.size() + m2.size();
    const auto& vars = m1.vars();
    PolyMatrix a(n, n, vars), b(n, n, vars);
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = 0; j < n1; ++j) {
            a(i, j) = m1.a()(i, j);
            b(i, j) = m1.b()(i, j);
        }
    for (std::size_t i = 0; i < m2.size(); ++i)
        for (std::size_t j = 0; j < m2.size(); ++j) {
            a(n1 + i, n1 + j) = m2.a()(i, j);
            b(n1 + i, n1 + j) = m2.b()(i, j);
        }
    std::string label;
    if (m1.size() == 0) label = m2.label();
    else if (m2.size() == 0) label = m1.label();
    else label = m1.label() + "+" + m2.label();
    return MatrixFactorization::validate(std::move(a), std::move(b), m1.f(), std::move(label));
}

MatrixFactorization knorrer_cover(const MatrixFactorization& m, const std::string& z) {
    if (m.vars().contains(z)) throw std::invalid_argument("cover variable '" + z + "' collides with the ambient ring");
    Variables vars = m.vars().extended({z});
    const std::size_t n = m.size();
    PolyMatrix a = m.a().embedded(vars);
    PolyMatrix b = m.b().embedded(vars);
    Polynomial zp = Polynomial::variable(vars, z);
    PolyMatrix zi = PolyMatrix::scalar(n, zp);
    PolyMatrix neg_zi = PolyMatrix::scalar(n, -zp);
    PolyMatrix first = PolyMatrix::block(b, neg_zi, zi, a);
    PolyMatrix second = PolyMatrix::block(a, zi, neg_zi, b);
    Polynomial f = m.f().embedded(vars) + zp * zp;
    return MatrixFactorization::validate(std::move(first), std::move(second), std::move(f),
                                         m.label().empty() ? "" : "cover(" + m.label() + ")");
}

BranchedCoverRing branched_cover_ring(const Polynomial& f, unsigned m, const std::string& y) {
    if (m < 2) throw std::invalid_argument("branched cover exponent must be at least 2");
    Variables vars = f.vars().extended({y});
    BranchedCoverRing out;
    out.base = f;
    out.variable = y;
    out.exponent = m;
    out.cover = f.embedded(vars) + Polynomial::variable(vars, y, m);
    return out;
}

MatrixFactorization adjugate_partner(const PolyMatrix& a, const Polynomial& f, std::string label) {
    if (!a.is_square()) throw ValidationError("adjugate partner needs a square matrix");
    Polynomial det = determinant(a);
    if (!(det == f)) throw ValidationError("det(A) = " + det.to_string() + " differs from f = " + f.to_string());
    return MatrixFactorization::validate(a, adjugate(a), f, std::move(label));
}

PolyMatrix generic_matrix(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j) names.push_back("x" + std::to_string(i) + std::to_string(j));
    Variables vars(names);
    PolyMatrix x(n, n, vars);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) x(i, j) = Polynomial::variable(vars, i * n + j);
    return x;
}

}  // namespace cohann
