#pragma once

// Dense univariate polynomials over Q and over F_p (small p).

#include "g2root/padic.hpp"

#include <vector>

namespace g2root {

/// Polynomial over Q, coefficients in ascending degree. Trailing zeros are
/// trimmed so that degree() is exact; the zero polynomial has degree -1.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rational> coeffs);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  /// Coefficient of X^i (zero beyond the degree).
  Rational operator[](int i) const;
  Rational leading() const;

  Rational operator()(const Rational& x) const;
  QPoly derivative() const;

  /// P(X + t).
  QPoly shifted(const Rational& t) const;
  /// P(s X).
  QPoly scaled(const Rational& s) const;

  friend QPoly operator+(const QPoly& a, const QPoly& b);
  friend QPoly operator-(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const Rational& s, const QPoly& a);
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Quotient and remainder of a by nonzero b.
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);

/// Res(a, b) by the Euclidean remainder sequence over Q.
Rational resultant(const QPoly& a, const QPoly& b);

/// (-1)^(n(n-1)/2) Res(P, P') / lc(P).
Rational discriminant(const QPoly& p);

/// Polynomials over F_p, coefficients in [0, p), ascending, trimmed.
namespace fp {

using Poly = std::vector<long>;

Poly reduce(const QPoly& p, long q);  // coefficients must be q-integral
Poly trim(Poly a);
Poly sub(const Poly& a, const Poly& b, long p);
Poly mul(const Poly& a, const Poly& b, long p);
Poly derivative(const Poly& a, long p);
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, long p);
Poly gcd(Poly a, Poly b, long p);  // monic
long eval(const Poly& a, long x, long p);
long inverse(long a, long p);
inline int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

}  // namespace fp

}  // namespace g2root
