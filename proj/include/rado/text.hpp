#pragma once

#include "rado/polynomial.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace rado {

inline constexpr std::size_t kMaxArity = 8;
inline constexpr std::uint32_t kMaxExponent = 1024;

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

struct ParsedInput {
    IntPolynomial polynomial;
    /// Name used in the source for each variable slot, e.g. {"x", "y", "z"}.
    std::vector<std::string> variable_names;
    std::string source;
};

/// Parses `expr := term (('+'|'-') term)*` over variables x, y, z, w or
/// x1..x8. Arity is the highest variable index used, raised to `min_arity`.
ParsedInput parse_polynomial(const std::string& text, std::size_t min_arity = 0);

/// Canonical form: graded-lex descending terms, variables x1..xn, `*` and `^`.
std::string to_string(const IntPolynomial& p);

}  // namespace rado
