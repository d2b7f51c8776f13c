#pragma once

#include "linrel/bigint.hpp"
#include "linrel/polynomial.hpp"

namespace linrel {

/// Generalized binomial x(x-1)...(x-d+1)/d!, defined for every integer x.
/// binomial(x, 0) == 1 and binomial(-1, 2) == 1.
BigInt binomial(const BigInt& x, unsigned d);

/// Combinatorial binomial: zero whenever x < d, otherwise binomial(x, d).
BigInt choose(const BigInt& x, unsigned d);

/// binomial(a*n + b, d) expanded as a polynomial in n.
/// Degree d with leading coefficient a^d/d! when a != 0; a constant when a == 0.
Poly binomial_linear_poly(const BigInt& a, const BigInt& b, unsigned d);

}  // namespace linrel
