#include <klm/polynomial.hpp>

#include <sstream>

namespace klm {

namespace detail {

BigInt ring_div_exact(const BigInt& a, const BigInt& b) {
  if (b.is_zero()) throw InvalidArgumentError("integer division by zero");
  BigInt quo, rem;
  boost::multiprecision::divide_qr(a, b, quo, rem);
  if (!rem.is_zero())
    throw DivisibilityError("inexact integer division: " + a.str() + " / " +
                            b.str());
  return quo;
}

}  // namespace detail

QPoly q_int(int k) {
  if (k < 1) throw InvalidArgumentError("q_int requires k >= 1");
  return QPoly(std::vector<BigInt>(static_cast<size_t>(k), BigInt(1)));
}

QPoly q_factorial(int k) {
  if (k < 0) throw InvalidArgumentError("q_factorial requires k >= 0");
  QPoly r(1);
  for (int j = 1; j <= k; ++j) r *= q_int(j);
  return r;
}

QPoly gaussian_binomial(int n, int k) {
  if (k < 0 || k > n)
    throw InvalidArgumentError("gaussian_binomial(n, k) requires 0 <= k <= n");
  return q_factorial(n).div_exact(q_factorial(k) * q_factorial(n - k));
}

namespace {

template <class Var>
BigInt horner(const Polynomial<BigInt, Var>& p, const BigInt& x) {
  BigInt acc = 0;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

}  // namespace

BigInt evaluate(const QPoly& p, const BigInt& x) { return horner(p, x); }
BigInt evaluate(const TPoly& p, const BigInt& x) { return horner(p, x); }

TPoly substitute_q(const QTPoly& p, const BigInt& q_value) {
  std::vector<BigInt> coeffs;
  coeffs.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) coeffs.push_back(evaluate(c, q_value));
  return TPoly(std::move(coeffs));
}

TPoly substitute_q_one(const QTPoly& p) { return substitute_q(p, 1); }

QTPoly to_qt(const TPoly& p) {
  std::vector<QPoly> coeffs;
  coeffs.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) coeffs.emplace_back(c);
  return QTPoly(std::move(coeffs));
}

namespace {

void append_power(std::ostream& os, char var, int e) {
  os << var;
  if (e > 1) os << '^' << e;
}

// Ascending-exponent rendering: "1 + 2q + q^3", "t^2 - 2t + 1" style.
template <class Var>
std::string render_int_poly(const Polynomial<BigInt, Var>& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int e = 0; e <= p.degree(); ++e) {
    BigInt c = p.coeff(e);
    if (c.is_zero()) continue;
    const bool neg = c < 0;
    if (first) {
      if (neg) os << '-';
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    BigInt a = neg ? BigInt(-c) : c;
    if (e == 0) {
      os << a.str();
    } else {
      if (a != 1) os << a.str();
      append_power(os, Var::name, e);
    }
  }
  return os.str();
}

// A q-coefficient is rendered bare when it is a constant or a single
// monomial; anything longer gets parentheses so "(q^2 + q^4)t" stays
// unambiguous.
bool needs_parens(const QPoly& c) {
  int nonzero = 0;
  for (const auto& a : c.coeffs())
    if (!a.is_zero()) ++nonzero;
  return nonzero > 1;
}

bool all_negative(const QPoly& c) {
  for (const auto& a : c.coeffs())
    if (a > 0) return false;
  return !c.is_zero();
}

}  // namespace

std::string to_string(const QPoly& p) { return render_int_poly(p); }
std::string to_string(const TPoly& p) { return render_int_poly(p); }

std::string to_string(const QTPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int e = 0; e <= p.degree(); ++e) {
    QPoly c = p.coeff(e);
    if (c.is_zero()) continue;
    const bool neg = all_negative(c);
    if (neg) c = -c;
    if (first) {
      if (neg) os << '-';
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    if (e == 0) {
      os << to_string(c);
      continue;
    }
    if (c == QPoly(1)) {
      append_power(os, VarT::name, e);
    } else if (needs_parens(c)) {
      os << '(' << to_string(c) << ')';
      append_power(os, VarT::name, e);
    } else {
      os << to_string(c);
      append_power(os, VarT::name, e);
    }
  }
  return os.str();
}

}  // namespace klm
