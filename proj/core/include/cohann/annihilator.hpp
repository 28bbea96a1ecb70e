#pragma once

#include "cohann/ideal.hpp"
#include "cohann/mf.hpp"

#include <optional>
#include <vector>

namespace cohann {

/// Matrices g, h with A g + h B = r I and B h + g A = r I, i.e. a
/// null-homotopy of multiplication by r on the 2-periodic resolution.
struct HomotopyCertificate {
    Polynomial r;
    PolyMatrix g;
    PolyMatrix h;
};

struct AnnihilatorOptions {
    /// Recompute at truncation + 2 and compare.
    bool check_stability = true;
};

/// Stable annihilator of coker(A): all r admitting a certificate in the
/// truncated algebra. Solves the joint linear system in the unknown
/// entries of g, h and the coefficients of r, then projects onto r.
/// The algebra must contain f in its relation ideal.
TruncatedIdeal stable_annihilator(const MatrixFactorization& m, const AlgebraPtr& alg,
                                  AnnihilatorOptions options = {});

/// Raw solution subspace without generators or stability check.
Subspace stable_annihilator_space(const MatrixFactorization& m, const TruncatedLocalAlgebra& alg);

/// Returns a certificate for r (re-verified by multiplication), or nullopt
/// if r does not annihilate at this truncation.
std::optional<HomotopyCertificate> element_test(const Polynomial& r, const MatrixFactorization& m,
                                                const AlgebraPtr& alg);

/// Certificate valid over the polynomial ring modulo m^N (no relation f
/// used), suitable for lifting along a branched cover.
std::optional<HomotopyCertificate> ambient_certificate(const Polynomial& r, const MatrixFactorization& m,
                                                       unsigned truncation);

/// Checks both homotopy identities after normal form in alg.
bool verify_certificate(const HomotopyCertificate& cert, const MatrixFactorization& m,
                        const TruncatedLocalAlgebra& alg);

/// Given a certificate (g, h) for (A, B), the certificate
/// (diag(h, g), diag(g, h)) for knorrer_cover(m, z).
HomotopyCertificate lift_certificate(const HomotopyCertificate& cert, const MatrixFactorization& m,
                                     const std::string& z);

/// Annihilator of the degree-zero homology of the Hom complex
/// Hom(F, F) of the 2-periodic resolution (stable End = Ext^2), computed
/// from cycles and boundaries alone. Independent of stable_annihilator.
TruncatedIdeal ext2_annihilator(const MatrixFactorization& m, const AlgebraPtr& alg,
                                AnnihilatorOptions options = {});
Subspace ext2_annihilator_space(const MatrixFactorization& m, const TruncatedLocalAlgebra& alg);

/// Intersection of stable annihilators over a list assumed to contain
/// every indecomposable non-free MCM module.
TruncatedIdeal cohomology_annihilator(const std::vector<MatrixFactorization>& ms, const AlgebraPtr& alg,
                                      AnnihilatorOptions options = {});

/// Every partial derivative of f passes element_test.
bool jacobian_containment_check(const MatrixFactorization& m, const AlgebraPtr& alg);

/// The algebra S/((f) + m^N) over the variables of f.
AlgebraPtr hypersurface_algebra(const Polynomial& f, unsigned truncation);

}  // namespace cohann
