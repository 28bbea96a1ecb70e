#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace cohann {

/// Exponent vector over a fixed ambient variable list.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
    explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {
        for (auto e : exps_) degree_ += e;
    }

    static Monomial variable(std::size_t nvars, std::size_t index, std::uint32_t power = 1) {
        Monomial m(nvars);
        m.exps_[index] = power;
        m.degree_ = power;
        return m;
    }

    std::size_t size() const noexcept { return exps_.size(); }
    std::uint32_t degree() const noexcept { return degree_; }
    std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
    std::span<const std::uint32_t> exponents() const noexcept { return exps_; }
    bool is_one() const noexcept { return degree_ == 0; }

    Monomial operator*(const Monomial& other) const {
        Monomial out(*this);
        for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] += other.exps_[i];
        out.degree_ += other.degree_;
        return out;
    }

    bool divides(const Monomial& other) const {
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > other.exps_[i]) return false;
        return true;
    }

    /// Same exponents with one extra trailing variable of exponent zero.
    Monomial extended(std::size_t extra) const {
        Monomial out(*this);
        out.exps_.resize(exps_.size() + extra, 0);
        return out;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<std::uint32_t> exps_;
    std::uint32_t degree_ = 0;
};

/// Graded reverse lexicographic comparison: higher total degree is larger;
/// on ties the monomial with the smaller exponent in the last differing
/// variable is larger.
inline std::strong_ordering grevlex_compare(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() <=> b.degree();
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return b[i] <=> a[i];
    }
    return std::strong_ordering::equal;
}

/// Orders monomials descending in grevlex (canonical term order).
struct GrevlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return grevlex_compare(a, b) == std::strong_ordering::greater;
    }
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (auto e : m.exponents()) {
            h ^= e + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }
};

}  // namespace cohann
