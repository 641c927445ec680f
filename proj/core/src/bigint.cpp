#include <klm/bigint.hpp>
#include <klm/errors.hpp>

namespace klm {

BigInt factorial(int n) {
  if (n < 0) throw InvalidArgumentError("factorial of negative argument");
  BigInt r = 1;
  for (int j = 2; j <= n; ++j) r *= j;
  return r;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n)
    throw InvalidArgumentError("binomial(n, k) requires 0 <= k <= n");
  k = std::min(k, n - k);
  BigInt r = 1;
  for (int j = 1; j <= k; ++j) {
    r *= n - k + j;
    r /= j;  // exact at every step: r is binomial(n-k+j, j)
  }
  return r;
}

std::string to_decimal(const BigInt& v) { return v.str(); }

BigInt parse_decimal(const std::string& s) {
  if (s.empty()) throw InvalidArgumentError("empty integer literal");
  try {
    return BigInt(s);
  } catch (const std::exception&) {
    throw InvalidArgumentError("bad integer literal: " + s);
  }
}

}  // namespace klm
