// Recursive-descent parser for the canonical text forms of scalars and
// polynomials.  Grammar (whitespace-insensitive):
//
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := '-'* primary ('^' '-'? INT)*
//   primary:= INT | NAME | '(' expr ')'
//
// NAME resolves against the declared parameter/generator sets; names that
// contain '^' (a_1^2) are matched greedily, so "a_1^2" is the generator while
// "q^2" is a power of q.  Division is only defined when the divisor is scalar.
#pragma once

#include <string>

#include "qpencil/cpoly.hpp"
#include "qpencil/ncpoly.hpp"
#include "qpencil/scalar.hpp"

namespace qpencil {

Scalar parse_scalar(const ParamSetPtr& ps, const std::string& text);
CPoly parse_cpoly(const GenSetPtr& gens, const ParamSetPtr& ps, const std::string& text);
NCPoly parse_ncpoly(const GenSetPtr& gens, const ParamSetPtr& ps, const std::string& text);

}  // namespace qpencil
