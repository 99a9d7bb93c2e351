#pragma once

#include "ghostalg/scene.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace ghost {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at offset " + std::to_string(pos)), position(pos) {}
    std::size_t position;
};

// Grammar:
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '·') unary)*
//   unary  := '-' unary | atom
//   atom   := rational | name | '𝟙' | '[' expr ',' expr ']' | '(' expr ')'
//           | '⌈' geodesic (',' geodesic)* '⌉' | geodesic
//   geodesic := name | point ('->' | '→') point ['@' label] | '(' point ('->' | '→') point ')' ['@' label]
// A leading '-' is negation: write (-1->2) for a geodesic from -1.
// Names resolve to configurations, then geodesics, of the scene. Brackets use
// the scene's Θ-signature.
GhostElement parse_expression(std::string_view text, const Scene& scene);

}  // namespace ghost
