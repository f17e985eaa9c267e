#pragma once

#include <string_view>

#include "pjsat/errors.hpp"
#include "pjsat/syntax.hpp"

namespace pjsat {

// Grammar (whitespace-insensitive, `#` starts a line comment):
//
//   pformula := pfactor | pformula '&' pfactor
//   pfactor  := '~' pfactor | '(' pformula ')' | 'P>=' rational jfactor | 'P<' rational jfactor
//   jformula := jfactor | jformula '&' jfactor
//   jfactor  := '~' jfactor | '(' jformula ')' | term ':' jfactor | prop
//   term     := tfactor | term '+' tfactor
//   tfactor  := tprim | tfactor '.' tprim
//   tprim    := '!' tprim | constant | variable | '(' term ')'
//
// `a -> b` (right associative, loosest) and `a | b` are accepted at both levels and
// desugared on the spot; `P<s a` becomes `~P>=s a`. All parse failures throw ParseError.

PFormula parse_pformula(std::string_view text);
JFormula parse_jformula(std::string_view text);
Term parse_term(std::string_view text);

}  // namespace pjsat
