#pragma once

#include <complex>
#include <string>

#include "eqlines/cyclotomic.hpp"

namespace eqlines {

// Text grammar for exact scalar entries:
//
//   expr     := term (('+'|'-') term)*
//   term     := factor (('*'|'/') factor)*
//   factor   := rational | 'i' | 'zeta(' int ')' ('^' int)?
//             | 'sqrt(' int ')' | '(' expr ')' | '-' factor
//   rational := int ('/' posint)?
//
// sqrt(k) is accepted for k in {2, 3, 5}. Whitespace between tokens is
// ignored on input; rendering is canonical (ascending basis exponents, no
// spaces), so rendered text reparses to an equal value.
Cyclotomic parse_exact_scalar(const std::string& text);
std::string render_exact_scalar(const Cyclotomic& value);

// Floating entries use decimal "a", "bi" or "a+bi"/"a-bi" notation.
std::complex<double> parse_float_scalar(const std::string& text);
std::string render_float_scalar(const std::complex<double>& value);

}  // namespace eqlines
