#ifndef KNOTREP_POLY_TEXT_HPP
#define KNOTREP_POLY_TEXT_HPP

#include <string>
#include <string_view>

#include "knotrep/polynomial.hpp"

namespace knotrep {

// Infix polynomial grammar:
//   poly   := ['+'|'-'] term (('+'|'-') term)*
//   term   := coef | coef '*' powers | powers
//   powers := power ('*' power)*
//   power  := name ['^' uint]
//   coef   := int ['/' uint]
// Whitespace is free. Names must appear in `names`.
Polynomial parse_polynomial(std::string_view text,
                            const std::vector<std::string>& names,
                            const MonomialOrder& order);
std::string polynomial_to_text(const Polynomial& p,
                               const std::vector<std::string>& names);

// Ideal text format: a "vars: x y z" header, optionally an
// "order: lex|grevlex" line, then one polynomial per line. '#'
// comments allowed.
Ideal parse_ideal_text(std::string_view text);
std::string ideal_to_text(const Ideal& I);

// Convenience for tests and demos: parse against explicit names with
// the default grevlex order.
Ideal ideal_of(const std::vector<std::string>& names,
               const std::vector<std::string>& polys);

}  // namespace knotrep

#endif
