#include "cohann/annihilator.hpp"

#include "cohann/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace cohann {

namespace {

using Index = SparseVector::Index;

void require_hypersurface_algebra(const MatrixFactorization& m, const TruncatedLocalAlgebra& alg) {
    if (!(m.vars() == alg.vars())) throw AmbientMismatch("factorization and algebra use different variables");
    if (!alg.normal_form(m.f()).empty())
        throw std::invalid_argument("f is not among the algebra relations (its normal form is nonzero)");
}

// Coordinates of n x n matrices over the algebra, two at a time:
//   index(block, i, j, k) = ((block * n + i) * n + j) * d + k
// where block selects the first or second matrix of a pair.
class PairLayout {
public:
    PairLayout(std::size_t n, std::size_t d) : n_(n), d_(d) {}

    std::size_t dim() const { return 2 * n_ * n_ * d_; }
    Index offset(std::size_t block, std::size_t i, std::size_t j) const {
        return static_cast<Index>(((block * n_ + i) * n_ + j) * d_);
    }
    Index index(std::size_t block, std::size_t i, std::size_t j, std::size_t k) const {
        return offset(block, i, j) + static_cast<Index>(k);
    }

private:
    std::size_t n_;
    std::size_t d_;
};

SparseVector assemble(std::vector<SparseVector::Entry>& entries) {
    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVector out;
    for (std::size_t t = 0; t < entries.size();) {
        Index idx = entries[t].first;
        Rational acc = entries[t].second;
        for (++t; t < entries.size() && entries[t].first == idx; ++t) acc += entries[t].second;
        out.push_back(idx, std::move(acc));
    }
    return out;
}

void append_shifted(std::vector<SparseVector::Entry>& entries, const SparseVector& v, Index offset,
                    const Rational& scale = 1) {
    for (const auto& [i, x] : v.entries()) entries.emplace_back(offset + i, x * scale);
}

// The linear map (g, h) -> (A g + h B, B h + g A) on pairs of matrices over
// the algebra, one column per unknown coordinate, plus the images of
// r = e_k under r -> (r I, r I).
struct HomotopySystem {
    PairLayout layout;
    std::vector<SparseVector> columns;
    std::vector<SparseVector> targets;
};

HomotopySystem build_homotopy_system(const MatrixFactorization& m, const TruncatedLocalAlgebra& alg) {
    const std::size_t n = m.size(), d = alg.dim();
    HomotopySystem sys{PairLayout(n, d), {}, {}};
    const auto& layout = sys.layout;

    // entry_times_basis[mat][i*n+j][k] = NF(X_ij * e_k) for X = A, B.
    std::vector<std::vector<std::vector<SparseVector>>> prod(2, std::vector<std::vector<SparseVector>>(n * n));
    for (std::size_t mat = 0; mat < 2; ++mat) {
        const PolyMatrix& x = mat == 0 ? m.a() : m.b();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                SparseVector nf = alg.normal_form(x(i, j));
                auto& row = prod[mat][i * n + j];
                row.reserve(d);
                for (std::size_t k = 0; k < d; ++k) row.push_back(nf.empty() ? SparseVector{} : alg.multiply_basis(nf, k));
            }
    }
    const auto& pa = prod[0];
    const auto& pb = prod[1];

    sys.columns.reserve(layout.dim());
    std::vector<SparseVector::Entry> entries;
    // Unknown g_ij e_k: contributes A_pi e_k to (A g)_pj and e_k A_jq to (g A)_iq.
    // Unknown h_ij e_k: contributes e_k B_jq to (h B)_iq and B_pi e_k to (B h)_pj.
    for (std::size_t unknown = 0; unknown < 2; ++unknown)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < d; ++k) {
                    entries.clear();
                    const auto& left = unknown == 0 ? pa : pb;   // X_pi e_k
                    const auto& right = unknown == 0 ? pa : pb;  // e_k X_jq
                    const std::size_t left_eq = unknown == 0 ? 0 : 1;
                    const std::size_t right_eq = unknown == 0 ? 1 : 0;
                    for (std::size_t p = 0; p < n; ++p)
                        append_shifted(entries, left[p * n + i][k], layout.offset(left_eq, p, j));
                    for (std::size_t q = 0; q < n; ++q)
                        append_shifted(entries, right[j * n + q][k], layout.offset(right_eq, i, q));
                    sys.columns.push_back(assemble(entries));
                }

    sys.targets.reserve(d);
    for (std::size_t k = 0; k < d; ++k) {
        entries.clear();
        for (std::size_t eq = 0; eq < 2; ++eq)
            for (std::size_t i = 0; i < n; ++i) entries.emplace_back(layout.index(eq, i, i, k), 1);
        sys.targets.push_back(assemble(entries));
    }
    return sys;
}

PolyMatrix matrix_from_coords(const SparseVector& x, const PairLayout& layout, std::size_t block, std::size_t n,
                              const TruncatedLocalAlgebra& alg) {
    PolyMatrix out(n, n, alg.vars());
    const std::size_t d = alg.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Index lo = layout.offset(block, i, j);
            out(i, j) = alg.to_polynomial(x.slice(lo, lo + static_cast<Index>(d)));
        }
    return out;
}

std::optional<HomotopyCertificate> solve_certificate(const Polynomial& r, const MatrixFactorization& m,
                                                     const TruncatedLocalAlgebra& alg) {
    HomotopySystem sys = build_homotopy_system(m, alg);
    SparseVector rc = alg.normal_form(r);
    DenseAccumulator acc(sys.layout.dim());
    for (const auto& [k, c] : rc.entries()) acc.add_scaled(sys.targets[k], c);
    auto x = solve_columns(sys.columns, sys.layout.dim(), acc.take());
    if (!x) return std::nullopt;
    const std::size_t n = m.size();
    HomotopyCertificate cert{r, matrix_from_coords(*x, sys.layout, 0, n, alg),
                             matrix_from_coords(*x, sys.layout, 1, n, alg)};
    if (!verify_certificate(cert, m, alg)) throw std::logic_error("homotopy certificate failed re-verification");
    return cert;
}

bool matrix_vanishes(const PolyMatrix& x, const TruncatedLocalAlgebra& alg) {
    return std::all_of(x.entries().begin(), x.entries().end(),
                       [&](const Polynomial& p) { return alg.normal_form(p).empty(); });
}

bool is_stable(const std::vector<Polynomial>& gens, const Subspace& next, const TruncatedLocalAlgebra& next_alg) {
    return ideal_span(next_alg, gens) == next;
}

TruncatedIdeal finish(const AlgebraPtr& alg, Subspace space, bool check, auto&& recompute) {
    TruncatedIdeal ideal = make_ideal(alg, std::move(space));
    if (check && ideal.space.dim() > 0) {
        AlgebraPtr next = alg->with_truncation(alg->truncation() + 2);
        ideal.stabilized = is_stable(ideal.generators, recompute(*next), *next);
    }
    return ideal;
}

// ---- Ext^2 oracle -------------------------------------------------------
// Works at the level of polynomial matrices, independent of the product
// tables used by the homotopy solver.

SparseVector pair_coords(const PolyMatrix& first, const PolyMatrix& second, const PairLayout& layout,
                         const TruncatedLocalAlgebra& alg) {
    std::vector<SparseVector::Entry> entries;
    const std::size_t n = first.rows();
    for (std::size_t block = 0; block < 2; ++block) {
        const PolyMatrix& x = block == 0 ? first : second;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) append_shifted(entries, alg.normal_form(x(i, j)), layout.offset(block, i, j));
    }
    return assemble(entries);
}

PolyMatrix elementary(std::size_t n, std::size_t i, std::size_t j, const Polynomial& p) {
    PolyMatrix e(n, n, p.vars());
    e(i, j) = p;
    return e;
}

struct HomComplex {
    PairLayout layout;
    Subspace cycles;
    Echelon boundaries;
};

HomComplex build_hom_complex(const MatrixFactorization& m, const TruncatedLocalAlgebra& alg) {
    const std::size_t n = m.size(), d = alg.dim();
    PairLayout layout(n, d);
    const PolyMatrix& a = m.a();
    const PolyMatrix& b = m.b();
    PolyMatrix zero(n, n, alg.vars());

    // Degree-zero cochains (phi0, phi1) with phi0: F0 -> F0, phi1: F1 -> F1.
    // Cycle condition: phi0 A = A phi1 and phi1 B = B phi0.
    // Boundaries: (A s + t B, B t + s A) for s: F0 -> F1, t: F1 -> F0.
    std::vector<SparseVector> chain_columns;
    Echelon boundaries(layout.dim());
    for (std::size_t block = 0; block < 2; ++block)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < d; ++k) {
                    Polynomial e = Polynomial::monomial(alg.vars(), alg.basis()[k]);
                    PolyMatrix u = elementary(n, i, j, e);
                    if (block == 0) {
                        chain_columns.push_back(pair_coords(u * a, zero - b * u, layout, alg));
                        boundaries.insert(pair_coords(a * u, u * a, layout, alg));
                    } else {
                        chain_columns.push_back(pair_coords(zero - a * u, u * b, layout, alg));
                        boundaries.insert(pair_coords(u * b, b * u, layout, alg));
                    }
                }
    return HomComplex{layout, kernel_of_columns(chain_columns, layout.dim()), std::move(boundaries)};
}

// Multiplies every matrix entry of a cochain by the k-th basis monomial.
SparseVector scale_cochain(const SparseVector& z, std::size_t k, const PairLayout& layout, std::size_t n,
                           const TruncatedLocalAlgebra& alg) {
    const auto d = static_cast<Index>(alg.dim());
    std::vector<SparseVector::Entry> entries;
    for (std::size_t block = 0; block < 2; ++block)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Index lo = layout.offset(block, i, j);
                SparseVector entry = z.slice(lo, lo + d);
                if (!entry.empty()) append_shifted(entries, alg.multiply_basis(entry, k), lo);
            }
    return assemble(entries);
}

}  // namespace

AlgebraPtr hypersurface_algebra(const Polynomial& f, unsigned truncation) {
    return TruncatedLocalAlgebra::build(f.vars(), {f}, truncation);
}

Subspace stable_annihilator_space(const MatrixFactorization& m, const TruncatedLocalAlgebra& alg) {
    require_hypersurface_algebra(m, alg);
    HomotopySystem sys = build_homotopy_system(m, alg);
    return projected_solution_space(sys.columns, sys.targets, sys.layout.dim());
}

TruncatedIdeal stable_annihilator(const MatrixFactorization& m, const AlgebraPtr& alg, AnnihilatorOptions options) {
    return finish(alg, stable_annihilator_space(m, *alg), options.check_stability,
                  [&](const TruncatedLocalAlgebra& next) { return stable_annihilator_space(m, next); });
}

std::optional<HomotopyCertificate> element_test(const Polynomial& r, const MatrixFactorization& m,
                                                const AlgebraPtr& alg) {
    require_hypersurface_algebra(m, *alg);
    return solve_certificate(r, m, *alg);
}

std::optional<HomotopyCertificate> ambient_certificate(const Polynomial& r, const MatrixFactorization& m,
                                                       unsigned truncation) {
    AlgebraPtr free = TruncatedLocalAlgebra::build(m.vars(), {}, truncation);
    return solve_certificate(r, m, *free);
}

bool verify_certificate(const HomotopyCertificate& cert, const MatrixFactorization& m,
                        const TruncatedLocalAlgebra& alg) {
    const std::size_t n = m.size();
    if (cert.g.rows() != n || cert.h.rows() != n) return false;
    PolyMatrix ri = PolyMatrix::scalar(n, cert.r);
    return matrix_vanishes(m.a() * cert.g + cert.h * m.b() - ri, alg) &&
           matrix_vanishes(m.b() * cert.h + cert.g * m.a() - ri, alg);
}

HomotopyCertificate lift_certificate(const HomotopyCertificate& cert, const MatrixFactorization& m,
                                     const std::string& z) {
    if (m.vars().contains(z)) throw std::invalid_argument("cover variable '" + z + "' collides with the ambient ring");
    Variables vars = m.vars().extended({z});
    const std::size_t n = m.size();
    PolyMatrix g = cert.g.embedded(vars), h = cert.h.embedded(vars);
    PolyMatrix zero(n, n, vars);
    return HomotopyCertificate{cert.r.embedded(vars), PolyMatrix::block(h, zero, zero, g),
                               PolyMatrix::block(g, zero, zero, h)};
}

Subspace ext2_annihilator_space(const MatrixFactorization& m, const TruncatedLocalAlgebra& alg) {
    require_hypersurface_algebra(m, alg);
    const std::size_t n = m.size(), d = alg.dim();
    HomComplex complex = build_hom_complex(m, alg);

    // Representatives of cycles modulo boundaries span the homology.
    Echelon quotient = complex.boundaries;
    std::vector<SparseVector> homology;
    for (const auto& z : complex.cycles.basis())
        if (quotient.insert(z)) homology.push_back(z);
    if (homology.empty()) return Subspace::full(d);

    // r = sum c_k e_k annihilates iff every r * z reduces to zero modulo the
    // boundaries; that is the kernel of c -> (residue(e_k z_t))_t.
    const auto block = static_cast<Index>(complex.layout.dim());
    std::vector<SparseVector> columns;
    columns.reserve(d);
    std::vector<SparseVector::Entry> entries;
    for (std::size_t k = 0; k < d; ++k) {
        entries.clear();
        for (std::size_t t = 0; t < homology.size(); ++t) {
            SparseVector residue =
                complex.boundaries.reduce(scale_cochain(homology[t], k, complex.layout, n, alg));
            append_shifted(entries, residue, static_cast<Index>(t) * block);
        }
        columns.push_back(assemble(entries));
    }
    return kernel_of_columns(columns, homology.size() * complex.layout.dim());
}

TruncatedIdeal ext2_annihilator(const MatrixFactorization& m, const AlgebraPtr& alg, AnnihilatorOptions options) {
    return finish(alg, ext2_annihilator_space(m, *alg), options.check_stability,
                  [&](const TruncatedLocalAlgebra& next) { return ext2_annihilator_space(m, next); });
}

TruncatedIdeal cohomology_annihilator(const std::vector<MatrixFactorization>& ms, const AlgebraPtr& alg,
                                      AnnihilatorOptions options) {
    if (ms.empty()) throw std::invalid_argument("cohomology annihilator needs a nonempty catalog");
    auto intersect_all = [&](const TruncatedLocalAlgebra& a) {
        Subspace acc = Subspace::full(a.dim());
        for (const auto& m : ms) acc = intersect(acc, stable_annihilator_space(m, a));
        return acc;
    };
    return finish(alg, intersect_all(*alg), options.check_stability, intersect_all);
}

bool jacobian_containment_check(const MatrixFactorization& m, const AlgebraPtr& alg) {
    for (std::size_t v = 0; v < m.vars().size(); ++v)
        if (!element_test(partial_derivative(m.f(), v), m, alg)) return false;
    return true;
}

}  // namespace cohann
