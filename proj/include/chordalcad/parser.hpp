#ifndef CHORDALCAD_PARSER_HPP
#define CHORDALCAD_PARSER_HPP

#include "chordalcad/advisor.hpp"
#include "chordalcad/poly.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace chordalcad {

class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, int line, int column, std::string expected);
    int line() const { return line_; }
    int column() const { return column_; }
    const std::string& expected() const { return expected_; }

private:
    int line_;
    int column_;
    std::string expected_;
};

struct InputSystem {
    PolySystem system;
    std::optional<std::string> declared_order;  // from a leading "# order: ..." comment
    std::string source;
};

/// One polynomial per line; '#' starts a comment. Terms use integer
/// literals, identifiers, + - * ^ and parentheses; multiplication is
/// explicit and '^' takes a nonnegative integer literal.
InputSystem parse_system(std::string_view text, std::string_view source_name = "<input>");

/// Single-expression entry point, mostly for tests.
Poly parse_poly(std::string_view text, VarTable& table);

}  // namespace chordalcad

#endif
