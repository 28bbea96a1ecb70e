#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cohann {

/// Malformed textual or JSON input. The CLI maps this to exit code 3.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position = npos)
        : std::runtime_error(position == npos ? what
                                              : what + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    std::size_t position_;
};

/// A mathematical check failed (product mismatch, determinant mismatch,
/// non-ideal subspace). The CLI maps this to exit code 2.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands live over different variable lists or algebras.
class AmbientMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace cohann
