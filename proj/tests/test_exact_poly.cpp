#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <klm/errors.hpp>
#include <klm/polynomial.hpp>

#include <random>

using namespace klm;

namespace {

QPoly qp(std::vector<long long> coeffs) {
  std::vector<BigInt> big(coeffs.begin(), coeffs.end());
  return QPoly(std::move(big));
}

TPoly tp(std::vector<long long> coeffs) {
  std::vector<BigInt> big(coeffs.begin(), coeffs.end());
  return TPoly(std::move(big));
}

}  // namespace

TEST_CASE("q_int basics") {
  CHECK(q_int(1) == QPoly(1));
  CHECK(q_int(3) == qp({1, 1, 1}));
  CHECK(q_int(3).degree() == 2);
  CHECK(evaluate(q_int(4), 2) == 15);  // 1 + 2 + 4 + 8
  CHECK_THROWS_AS(q_int(0), InvalidArgumentError);
  CHECK_THROWS_AS(q_int(-2), InvalidArgumentError);
}

TEST_CASE("q_factorial basics") {
  CHECK(q_factorial(0) == QPoly(1));
  CHECK(q_factorial(3) == qp({1, 2, 2, 1}));  // (1)(1+q)(1+q+q^2)
  CHECK(evaluate(q_factorial(4), 1) == 24);
}

TEST_CASE("gaussian binomial values") {
  for (int n = 0; n <= 6; ++n) CHECK(gaussian_binomial(n, 0) == QPoly(1));
  CHECK(gaussian_binomial(4, 2) == qp({1, 1, 2, 1, 1}));
  CHECK(evaluate(gaussian_binomial(4, 2), 1) == 6);
  CHECK(evaluate(gaussian_binomial(4, 2), 2) == 35);
  CHECK_THROWS_AS(gaussian_binomial(3, 4), InvalidArgumentError);
}

TEST_CASE("gaussian binomial properties") {
  for (int n = 0; n <= 12; ++n) {
    for (int k = 0; k <= n; ++k) {
      const QPoly g = gaussian_binomial(n, k);
      CHECK(g == gaussian_binomial(n, n - k));
      for (const auto& c : g.coeffs()) CHECK(c >= 0);
      CHECK(evaluate(g, 1) == binomial(n, k));
    }
  }
  // q-Pascal: [n,k] = [n-1,k-1] + q^k [n-1,k]
  for (int n = 1; n <= 12; ++n)
    for (int k = 1; k < n; ++k)
      CHECK(gaussian_binomial(n, k) ==
            gaussian_binomial(n - 1, k - 1) +
                gaussian_binomial(n - 1, k).shifted(k));
}

TEST_CASE("t-polynomial ring operations") {
  const TPoly t_minus_1 = tp({-1, 1});
  CHECK(t_minus_1 * t_minus_1 == tp({1, -2, 1}));

  const TPoly p = tp({3, 0, 7});
  CHECK(p + TPoly() == p);
  CHECK(p - p == TPoly());
  CHECK((p * tp({1, 1})).div_exact(tp({1, 1})) == p);
}

TEST_CASE("division over the q-coefficient ring") {
  // (t^2 - (1+q)t + q) / (t - 1) = t - q
  const QTPoly numerator{QPoly::monomial(1), -q_int(2), QPoly(1)};
  const QTPoly divisor{QPoly(-1), QPoly(1)};
  const QTPoly expected{-QPoly::monomial(1), QPoly(1)};
  CHECK(numerator.div_exact(divisor) == expected);
}

TEST_CASE("inexact division is rejected") {
  CHECK_THROWS_AS(tp({1, 1}).div_exact(tp({0, 1})), DivisibilityError);
  CHECK_THROWS_AS(qp({1, 1, 1}).div_exact(qp({1, 1})), DivisibilityError);
  CHECK_THROWS_AS(tp({1}).div_exact(TPoly()), InvalidArgumentError);
}

TEST_CASE("evaluation and q substitution") {
  CHECK(evaluate(qp({1, 1, 1}), 1) == 3);
  CHECK(evaluate(QPoly(), 17) == 0);
  // 1 + (q^2+q^4) t  ->  1 + 2t at q=1
  const QTPoly p{QPoly(1), qp({0, 0, 1, 0, 1})};
  CHECK(substitute_q_one(p) == tp({1, 2}));
  CHECK(substitute_q(p, 2) == tp({1, 20}));
}

TEST_CASE("canonical form strips trailing zeros") {
  CHECK(qp({0, 0, 0}).is_zero());
  CHECK(qp({1, 0, 0}).degree() == 0);
  CHECK(qp({5}) - qp({5}) == QPoly());
  CHECK(QPoly().degree() == -1);
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> deg(0, 6), coeff(-9, 9);
  auto random_qpoly = [&]() {
    std::vector<BigInt> coeffs;
    const int d = deg(rng);
    for (int i = 0; i <= d; ++i) coeffs.emplace_back(coeff(rng));
    return QPoly(std::move(coeffs));
  };
  for (int trial = 0; trial < 500; ++trial) {
    const QPoly a = random_qpoly(), b = random_qpoly(), c = random_qpoly();
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!b.is_zero()) CHECK((a * b).div_exact(b) == a);
  }
}

TEST_CASE("pretty rendering") {
  CHECK(to_string(QPoly()) == "0");
  CHECK(to_string(qp({1, 2, 0, 1})) == "1 + 2q + q^3");
  CHECK(to_string(tp({1, -2, 1})) == "1 - 2t + t^2");
  const QTPoly chi{QPoly::monomial(1), -q_int(2), QPoly(1)};
  CHECK(to_string(chi) == "q - (1 + q)t + t^2");
  const QTPoly p{QPoly(1), qp({0, 0, 1, 0, 1})};
  CHECK(to_string(p) == "1 + (q^2 + q^4)t");
}
