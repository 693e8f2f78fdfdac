#pragma once

// Canonical text form and parser for scalars and elements.
//
// expr    := ['+'|'-'] tterm { ('+'|'-') tterm }
// tterm   := product { '@' product }
// product := factor { '*' factor }
// factor  := primary [ '^' ['-'] digits ]
// primary := digits | 'q' | sym '[' digits ',' digits ']' | '(' expr ')'
// sym     := 'X' | 'Y' | 'Z'

#include "qm/laurent.hpp"
#include "qm/pbw.hpp"

#include <string>
#include <string_view>

namespace qm {

/// Canonical element text: terms in descending monomial order, tensor slots joined by '@'.
std::string format_element(const Presentation& p, const Element& x);
std::string format_monomial(const Presentation& p, const Monomial& m);

/// Parses an element over p; throws ParseError with the offending position.
Element parse_element(const Presentation& p, std::string_view text);
/// Parses a scalar expression in q.
LaurentInt parse_laurent(std::string_view text);

}  // namespace qm
