#pragma once

#include "cohann/mf.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace cohann {

/// Labeled matrix factorizations over one hypersurface.
struct Catalog {
    Polynomial f;
    /// True when the entries are asserted to cover every indecomposable
    /// non-free MCM module (finite CM type).
    bool complete = false;
    std::vector<MatrixFactorization> entries;
    /// Factorizations with free or zero cokernel, kept for reference but
    /// left out of annihilator intersections.
    std::vector<MatrixFactorization> trivial_entries;

    const Variables& vars() const { return f.vars(); }
    /// Highest degree over f and every entry (trivial ones included).
    int max_degree() const;

    friend bool operator==(const Catalog&, const Catalog&) = default;
};

/// The 2x2 factorization [[x, y^j], [y^(n+1-j), -x]] of x^2 + y^(n+1),
/// which is its own partner. Valid for 0 <= j <= n+1.
MatrixFactorization a_n_factorization(unsigned n, unsigned j);

/// A_j for j = 1..n as entries; j = 0 and j = n+1 as trivial entries.
Catalog a_n_catalog(unsigned n);

/// (X, adj X) for the generic n x n matrix over k[x11..xnn]/(det X),
/// n in {2, 3}.
Catalog determinantal_catalog(unsigned n);

/// Reads a catalog file and revalidates every entry. Throws ParseError on
/// malformed JSON and ValidationError naming the failing entry's label.
Catalog load_catalog(const std::filesystem::path& path);
void save_catalog(const Catalog& catalog, const std::filesystem::path& path);

}  // namespace cohann
