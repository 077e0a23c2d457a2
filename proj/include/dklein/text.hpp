#pragma once

#include <string>

#include "dklein/algebra.hpp"
#include "dklein/poisson.hpp"

namespace dklein {

/* Expression syntax shared by all four readers: integer and a/b literals,
 * the imaginary unit i, + - * ^ and parentheses.  Multiplication is always
 * written out ("2*t", not "2t").  Readers differ only in which variable
 * letters they accept; parse errors carry the offending position. */
Scalar parse_scalar(const std::string& text);
Poly parse_poly(const std::string& text);  // variable t (s also accepted)
Element parse_element(const AlgebraSpec& spec, const std::string& text);
CPoly parse_cpoly(const std::string& text);  // variables X, Y, Z

/* Canonical printers; each output parses back to an equal value. */
std::string to_text(const Scalar& s);
std::string to_text(const Poly& p, char var = 't');
std::string to_text(const Element& x);
std::string to_text(const CPoly& p);

}  // namespace dklein
