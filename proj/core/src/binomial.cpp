#include "linrel/binomial.hpp"

#include <vector>

namespace linrel {

BigInt binomial(const BigInt& x, unsigned d) {
  // Every partial product C(x, i) is an integer, so each division is exact.
  BigInt result = 1;
  for (unsigned i = 0; i < d; ++i) {
    result *= x - i;
    result /= i + 1;
  }
  return result;
}

BigInt choose(const BigInt& x, unsigned d) {
  if (x < d) return 0;
  return binomial(x, d);
}

Poly binomial_linear_poly(const BigInt& a, const BigInt& b, unsigned d) {
  // Multiply out prod_{i<d} (a*n + b - i) over the integers, divide by d! once.
  std::vector<BigInt> acc{1};
  for (unsigned i = 0; i < d; ++i) {
    const BigInt shift = b - i;
    std::vector<BigInt> next(acc.size() + 1);
    for (std::size_t j = 0; j < acc.size(); ++j) {
      next[j] += acc[j] * shift;
      next[j + 1] += acc[j] * a;
    }
    acc = std::move(next);
  }
  const BigInt denom = factorial(d);
  std::vector<Rat> coeffs;
  coeffs.reserve(acc.size());
  for (auto& c : acc) coeffs.emplace_back(std::move(c), denom);
  return Poly(std::move(coeffs));
}

}  // namespace linrel
