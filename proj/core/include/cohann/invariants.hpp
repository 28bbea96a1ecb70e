#pragma once

#include "cohann/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cohann {

/// The plane curve x^a + y^b with a, b > 1 coprime, whose value semigroup
/// is generated by a and b.
class SemigroupCurve {
public:
    /// Throws std::invalid_argument unless a, b > 1 and gcd(a, b) = 1.
    SemigroupCurve(unsigned a, unsigned b);

    unsigned a() const noexcept { return a_; }
    unsigned b() const noexcept { return b_; }

    /// x^a + y^b over the variables (x, y).
    Polynomial polynomial() const;

private:
    unsigned a_;
    unsigned b_;
};

/// Non-negative integers not of the form a i + b j (i, j >= 0), by
/// enumeration up to (a-1)(b-1).
std::vector<unsigned> semigroup_gaps(const SemigroupCurve& c);
/// Largest gap, cross-checked against (a-1)(b-1) - 1.
unsigned frobenius_number(const SemigroupCurve& c);
/// For every 0 <= s <= F exactly one of s and F - s lies in the semigroup.
bool is_symmetric(const SemigroupCurve& c);
/// Number of gaps, cross-checked against (a-1)(b-1)/2.
unsigned delta_invariant(const SemigroupCurve& c);

/// All first partial derivatives, in variable order.
std::vector<Polynomial> jacobian_ideal(const Polynomial& f);

/// dim_k k[x]/((f) + J_f + m^N) when it agrees with the value at N - 2;
/// nullopt otherwise (non-isolated singularity or truncation too small).
std::optional<unsigned> milnor_number(const Polynomial& f, unsigned truncation);
/// dim_k of the Milnor algebra at one truncation order, no stability test.
std::size_t milnor_algebra_dim(const Polynomial& f, unsigned truncation);

/// mu = 2 delta - r + 1.
bool milnor_jung_check(long mu, long delta, long r);

enum class Provenance { computed, supplied };

struct InvariantReport {
    long mu = 0;
    long delta = 0;
    long branches = 0;
    bool mj_holds = false;
    Provenance mu_source = Provenance::computed;
    Provenance delta_source = Provenance::computed;
    Provenance branches_source = Provenance::computed;
    unsigned truncation = 0;
    unsigned suspensions = 0;
    std::string polynomial;
};

/// Milnor-Jung type check for S = k[x, y, z_1..z_l]/(x^a + y^b + sum z_i^2):
/// mu(S) from the truncated Milnor algebra, dim S/ca(S) = delta(a, b) and
/// r = 1 for the unibranch curve. Throws std::runtime_error if mu does not
/// stabilize at the given truncation.
InvariantReport suspension_report(const SemigroupCurve& c, unsigned l, unsigned truncation);

/// Default truncation used for Milnor number computations of f.
unsigned milnor_truncation(const Polynomial& f);

}  // namespace cohann
