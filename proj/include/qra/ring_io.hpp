#pragma once

#include <string>
#include <vector>

#include "qra/cyclotomic.hpp"
#include "qra/laurent.hpp"
#include "qra/ratfunc.hpp"

namespace qra {

// Canonical text forms. Laurent/Cyc: terms in decreasing exponent, "2*q^3 - 1 + q^-2",
// "2*eps^2 - eps + 1/3". RatFunc: "num" or "(num)/(den)". Zero is "0".
std::string laurent_str(const Laurent& f);
std::string ratfunc_str(const RatFunc& f);
std::string cyc_str(const Cyc& c);

// u-polynomials in ascending degree; multi-term coefficients are parenthesized,
// e.g. "1 - (eps^4 + eps)*u + u^2"
std::string upoly_str(const std::vector<Cyc>& p);
std::string upoly_str_rf(const std::vector<RatFunc>& p);

// Expression grammar over exact scalars and u:
//   expr := term (('+'|'-') term)* ; term := factor (('*'|'/')? factor)*
//   factor := ('-'|'+')* atom ('^' int)? ; atom := digits | 'eps' | 'u' | '(' expr ')'
// Implicit multiplication is allowed ("(1-2u)(1-u^3)", "2u"). Division and
// negative exponents only apply to u-free values. 'eps' requires ell >= 2.
// Result: dense coefficients, ascending, trimmed.
std::vector<Cyc> parse_upoly(const std::string& s, long ell);

Cyc parse_scalar(const std::string& s, long ell);  // u-free expression
Rat parse_rat_scalar(const std::string& s);        // additionally eps-free

}  // namespace qra
