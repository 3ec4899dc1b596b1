#pragma once

#include <cstdint>

#include <gmpxx.h>

namespace airpockets {

using Integer = mpz_class;
using Rational = mpq_class;

// C(n, k) with C(n, k) = 0 for k < 0 or k > n (n >= 0). Negative n is
// evaluated with the generalized falling-factorial definition, so
// C(-2, 0) = 1 and C(-1, 3) = -1.
Integer binomial(std::int64_t n, std::int64_t k);

// Exact integer value of a rational, throwing std::domain_error when the
// denominator is not 1.
Integer require_integral(const Rational& q, const char* what);

}  // namespace airpockets
