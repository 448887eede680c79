#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace coherent {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Quotient rounded toward -inf.  b must be nonzero.
Int floor_div(const Int& a, const Int& b);

// Canonical representative of x modulo tau, in [0, tau).  Requires tau > 0.
Rat mod_tau(const Rat& x, const Rat& tau);

// Accepts "p" or "p/q" with an optional leading sign; q must be nonzero.
// Throws DomainError("ParseError") otherwise.
Rat parse_rational(const std::string& text);

// Lowest-terms rendering: "p" when the denominator is 1, else "p/q".
std::string rational_string(const Rat& x);

double as_double(const Rat& x);

// Best rational approximation of x with denominator <= max_den (continued
// fractions).  Used to snap numerically computed quantities that are known
// to be rational onto their exact value.
Rat nearest_rational(double x, unsigned max_den);

}
