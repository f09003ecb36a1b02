#pragma once

#include "qjf/form.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace qjf {

// Expression grammar for forms (also the canonical printing format):
//
//   expr   := addend (('+' | '-') addend)*
//   addend := '-' addend | mul
//   mul    := power ('*' power)*
//   power  := atom ('^' ['-'] INT)?
//   atom   := INT ('/' INT)? | 'c' | 'P' | 'Pz' | 'E4' | 'E1' | 'E2'
//           | '(' expr ')'
//
// Precedence: ^ > * > unary - > binary + -. Rational literals carry the
// '/' (there is no general division). Negative exponents are only valid
// on invertible scalars such as c.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t position, const std::string& message)
        : std::runtime_error("parse error at " + std::to_string(position) + ": " + message),
          position_(position)
    {
    }
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

Form parse_form(std::string_view text);

// Canonical printing: terms in descending graded-lex order; round-trips
// through parse_form exactly.
std::string to_string(const Form& f);
std::string to_string(const Scalar& s);

} // namespace qjf
