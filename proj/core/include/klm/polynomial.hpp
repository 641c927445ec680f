#pragma once

#include <klm/bigint.hpp>
#include <klm/errors.hpp>

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace klm {

struct VarQ {
  static constexpr char name = 'q';
};
struct VarT {
  static constexpr char name = 't';
};

template <class R, class Var>
class Polynomial;

namespace detail {

inline bool ring_is_zero(const BigInt& v) { return v.is_zero(); }

template <class R, class Var>
bool ring_is_zero(const Polynomial<R, Var>& p) {
  return p.is_zero();
}

BigInt ring_div_exact(const BigInt& a, const BigInt& b);

template <class R, class Var>
Polynomial<R, Var> ring_div_exact(const Polynomial<R, Var>& a,
                                  const Polynomial<R, Var>& b) {
  return a.div_exact(b);
}

}  // namespace detail

/// Dense univariate polynomial over an exact coefficient ring R, in canonical
/// form: coeffs_[i] is the coefficient of Var^i and the top coefficient is
/// never zero (the zero polynomial stores nothing). The variable tag keeps
/// polynomials in q and polynomials in t distinct at the type level, so a
/// q-polynomial can never be added to a t-polynomial by accident.
template <class R, class Var>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(int constant) : Polynomial(R(constant)) {}
  Polynomial(R constant) {
    if (!detail::ring_is_zero(constant)) coeffs_.push_back(std::move(constant));
  }
  explicit Polynomial(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
  }
  Polynomial(std::initializer_list<R> coeffs)
      : Polynomial(std::vector<R>(coeffs)) {}

  static Polynomial monomial(int exponent, R coeff = R(1)) {
    Polynomial p;
    if (detail::ring_is_zero(coeff)) return p;
    p.coeffs_.assign(static_cast<size_t>(exponent) + 1, R(0));
    p.coeffs_.back() = std::move(coeff);
    return p;
  }
  static Polynomial variable() { return monomial(1); }

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree of the zero polynomial is -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<R>& coeffs() const { return coeffs_; }

  R coeff(int exponent) const {
    if (exponent < 0 || exponent > degree()) return R(0);
    return coeffs_[static_cast<size_t>(exponent)];
  }
  const R& leading() const { return coeffs_.back(); }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()), R(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) r.coeffs_[i] = a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) r.coeffs_[i] += b.coeffs_[i];
    r.normalize();
    return r;
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return a + (-b);
  }
  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    if (a.is_zero() || b.is_zero()) return r;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, R(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (detail::ring_is_zero(a.coeffs_[i])) continue;
      for (size_t j = 0; j < b.coeffs_.size(); ++j)
        r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    r.normalize();
    return r;
  }
  friend Polynomial operator*(const Polynomial& a, const R& s) {
    Polynomial r = a;
    for (auto& c : r.coeffs_) c *= s;
    r.normalize();
    return r;
  }
  friend Polynomial operator*(const R& s, const Polynomial& a) { return a * s; }

  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  /// Long division that must terminate with zero remainder; throws
  /// DivisibilityError otherwise. Every division in this library is backed by
  /// an algebraic identity, so a remainder means a bug, not bad data.
  Polynomial div_exact(const Polynomial& divisor) const {
    if (divisor.is_zero())
      throw InvalidArgumentError("polynomial division by zero");
    Polynomial rem = *this;
    if (rem.is_zero()) return rem;
    if (rem.degree() < divisor.degree())
      throw DivisibilityError("inexact polynomial division: degree too low");
    Polynomial quo;
    quo.coeffs_.assign(
        static_cast<size_t>(rem.degree() - divisor.degree()) + 1, R(0));
    while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
      const int shift = rem.degree() - divisor.degree();
      R factor = detail::ring_div_exact(rem.leading(), divisor.leading());
      quo.coeffs_[static_cast<size_t>(shift)] = factor;
      for (size_t i = 0; i < divisor.coeffs_.size(); ++i)
        rem.coeffs_[static_cast<size_t>(shift) + i] -=
            factor * divisor.coeffs_[i];
      rem.normalize();
    }
    if (!rem.is_zero())
      throw DivisibilityError("inexact polynomial division: nonzero remainder");
    quo.normalize();
    return quo;
  }

  /// Multiplication by Var^k.
  Polynomial shifted(int k) const {
    if (is_zero()) return *this;
    Polynomial r;
    r.coeffs_.assign(coeffs_.size() + static_cast<size_t>(k), R(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
      r.coeffs_[i + static_cast<size_t>(k)] = coeffs_[i];
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  void normalize() {
    while (!coeffs_.empty() && detail::ring_is_zero(coeffs_.back()))
      coeffs_.pop_back();
  }

  std::vector<R> coeffs_;
};

/// Integer-coefficient polynomial in the formal variable q.
using QPoly = Polynomial<BigInt, VarQ>;
/// Polynomial in t with integer coefficients (uniform-matroid side).
using TPoly = Polynomial<BigInt, VarT>;
/// Polynomial in t with q-polynomial coefficients (q-niform side).
using QTPoly = Polynomial<QPoly, VarT>;

/// [k]_q = 1 + q + ... + q^{k-1}. Requires k >= 1; bare [0]_q never occurs
/// (only the empty product [0]_q! = 1 does).
QPoly q_int(int k);

/// [k]_q! = [k]_q [k-1]_q ... [1]_q, with [0]_q! = 1.
QPoly q_factorial(int k);

/// Gaussian binomial [n choose k]_q = [n]_q! / ([k]_q! [n-k]_q!), computed by
/// exact division so the divisibility assertion doubles as a self-check.
QPoly gaussian_binomial(int n, int k);

/// Exact evaluation at an integer point. Any integer is accepted; the
/// group-theoretic reading of q requires a prime power, but every identity
/// implemented here is a polynomial identity in q.
BigInt evaluate(const QPoly& p, const BigInt& x);
BigInt evaluate(const TPoly& p, const BigInt& x);

/// Coefficient-wise substitution of a numeric q into a t-polynomial over q.
TPoly substitute_q(const QTPoly& p, const BigInt& q_value);
TPoly substitute_q_one(const QTPoly& p);

/// Re-tag an integer t-polynomial as a t-polynomial over q-polynomials
/// (constant embedding Z -> Z[q]).
QTPoly to_qt(const TPoly& p);

std::string to_string(const QPoly& p);
std::string to_string(const TPoly& p);
std::string to_string(const QTPoly& p);

}  // namespace klm
