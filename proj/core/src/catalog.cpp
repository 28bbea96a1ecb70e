#include "cohann/catalog.hpp"

#include "cohann/errors.hpp"
#include "cohann/serialize.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

namespace cohann {

int Catalog::max_degree() const {
    int d = f.degree();
    for (const auto& m : entries) d = std::max(d, m.max_degree());
    for (const auto& m : trivial_entries) d = std::max(d, m.max_degree());
    return d;
}

MatrixFactorization a_n_factorization(unsigned n, unsigned j) {
    if (n < 1) throw std::invalid_argument("A_n needs n >= 1");
    if (j > n + 1) throw std::invalid_argument("A_n factorization index j must lie in 0..n+1");
    Variables vars{"x", "y"};
    Polynomial x = Polynomial::variable(vars, 0);
    Polynomial f = x * x + Polynomial::variable(vars, 1, n + 1);
    auto y_pow = [&](unsigned e) {
        return e == 0 ? Polynomial::constant(vars, 1) : Polynomial::variable(vars, 1, e);
    };
    PolyMatrix a(vars, {{x, y_pow(j)}, {y_pow(n + 1 - j), -x}});
    std::string label = "A_" + std::to_string(n) + ":" + std::to_string(j);
    return MatrixFactorization::validate(a, a, f, std::move(label));
}

Catalog a_n_catalog(unsigned n) {
    if (n < 1) throw std::invalid_argument("A_n catalog needs n >= 1");
    Catalog c;
    c.complete = true;
    for (unsigned j = 0; j <= n + 1; ++j) {
        auto m = a_n_factorization(n, j);
        if (c.f.vars().size() == 0) c.f = m.f();
        if (j == 0 || j == n + 1) c.trivial_entries.push_back(std::move(m));
        else c.entries.push_back(std::move(m));
    }
    return c;
}

Catalog determinantal_catalog(unsigned n) {
    if (n != 2 && n != 3) throw std::invalid_argument("determinantal catalog supports n = 2 or 3");
    PolyMatrix x = generic_matrix(n);
    Polynomial f = determinant(x);
    Catalog c;
    c.f = f;
    c.complete = false;
    c.entries.push_back(adjugate_partner(x, f, "det" + std::to_string(n)));
    return c;
}

Catalog load_catalog(const std::filesystem::path& path) {
    return catalog_from_json(read_json_file(path.string()));
}

void save_catalog(const Catalog& catalog, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << dump(catalog_to_json(catalog));
}

}  // namespace cohann
