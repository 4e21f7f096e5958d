#include "g2root/poly.hpp"

#include <utility>

namespace g2root {

QPoly::QPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational QPoly::operator[](int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(i)];
}

Rational QPoly::leading() const {
  if (c_.empty()) throw DomainError("leading coefficient of the zero polynomial");
  return c_.back();
}

Rational QPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

QPoly QPoly::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
  return QPoly(std::move(d));
}

QPoly QPoly::shifted(const Rational& t) const {
  // Horner in the ring Q[X] with X -> X + t.
  QPoly acc;
  QPoly lin(std::vector<Rational>{t, 1});
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * lin + QPoly(std::vector<Rational>{*it});
  }
  return acc;
}

QPoly QPoly::scaled(const Rational& s) const {
  std::vector<Rational> out(c_);
  Rational pw = 1;
  for (auto& c : out) {
    c *= pw;
    pw *= s;
  }
  return QPoly(std::move(out));
}

QPoly operator+(const QPoly& a, const QPoly& b) {
  std::vector<Rational> out(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[static_cast<int>(i)] + b[static_cast<int>(i)];
  return QPoly(std::move(out));
}

QPoly operator-(const QPoly& a, const QPoly& b) { return a + Rational(-1) * b; }

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  return QPoly(std::move(out));
}

QPoly operator*(const Rational& s, const QPoly& a) {
  std::vector<Rational> out(a.c_);
  for (auto& c : out) c *= s;
  return QPoly(std::move(out));
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Rational> r = a.coeffs();
  int db = b.degree();
  if (a.degree() < db) return {QPoly(), a};
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db + 1));
  Rational lb = b.leading();
  for (int i = a.degree(); i >= db; --i) {
    Rational coef = r[static_cast<std::size_t>(i)] / lb;
    q[static_cast<std::size_t>(i - db)] = coef;
    if (coef == 0) continue;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= coef * b[j];
  }
  return {QPoly(std::move(q)), QPoly(std::move(r))};
}

Rational resultant(const QPoly& a0, const QPoly& b0) {
  if (a0.is_zero() || b0.is_zero()) return 0;
  QPoly a = a0, b = b0;
  Rational acc = 1;
  for (;;) {
    int m = a.degree(), n = b.degree();
    if (n == 0) {
      Rational out = acc;
      for (int i = 0; i < m; ++i) out *= b.leading();
      return out;
    }
    if (m < n) {
      if ((m * n) % 2) acc = -acc;
      std::swap(a, b);
      continue;
    }
    QPoly r = divmod(a, b).second;
    if (r.is_zero()) return 0;
    // Res(a, b) = (-1)^(mn) lc(b)^(m - deg r) Res(b, r)
    if ((m * n) % 2) acc = -acc;
    for (int i = 0; i < m - r.degree(); ++i) acc *= b.leading();
    a = b;
    b = r;
  }
}

Rational discriminant(const QPoly& p) {
  int n = p.degree();
  if (n < 1) throw DomainError("discriminant of a constant");
  Rational d = resultant(p, p.derivative()) / p.leading();
  if ((n * (n - 1) / 2) % 2) d = -d;
  return d;
}

namespace fp {

namespace {
long mulmod(long a, long b, long p) { return static_cast<long>(static_cast<__int128>(a) * b % p); }
}  // namespace

Poly trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

Poly reduce(const QPoly& p, long q) {
  Poly out;
  for (const auto& c : p.coeffs()) out.push_back(residue(c, q));
  return trim(out);
}

long inverse(long a, long p) {
  Integer r, az(a), pz(p);
  if (mpz_invert(r.get_mpz_t(), az.get_mpz_t(), pz.get_mpz_t()) == 0) throw DomainError("not invertible mod p");
  return r.get_si();
}

Poly sub(const Poly& a, const Poly& b, long p) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    long x = (i < a.size() ? a[i] : 0) - (i < b.size() ? b[i] : 0);
    out[i] = ((x % p) + p) % p;
  }
  return trim(out);
}

Poly mul(const Poly& a, const Poly& b, long p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + mulmod(a[i], b[j], p)) % p;
  return trim(out);
}

Poly derivative(const Poly& a, long p) {
  Poly out;
  for (std::size_t i = 1; i < a.size(); ++i) out.push_back(mulmod(a[i], static_cast<long>(i % static_cast<std::size_t>(p)), p));
  return trim(out);
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, long p) {
  if (b.empty()) throw DomainError("division by zero polynomial mod p");
  Poly r = a;
  int db = degree(b);
  if (degree(a) < db) return {{}, a};
  Poly q(static_cast<std::size_t>(degree(a) - db + 1), 0);
  long inv = inverse(b.back(), p);
  for (int i = degree(a); i >= db; --i) {
    long coef = mulmod(r[static_cast<std::size_t>(i)], inv, p);
    q[static_cast<std::size_t>(i - db)] = coef;
    for (int j = 0; j <= db; ++j) {
      auto& slot = r[static_cast<std::size_t>(i - db + j)];
      slot = ((slot - mulmod(coef, b[static_cast<std::size_t>(j)], p)) % p + p) % p;
    }
  }
  return {trim(q), trim(r)};
}

Poly gcd(Poly a, Poly b, long p) {
  a = trim(a);
  b = trim(b);
  while (!b.empty()) {
    Poly r = divmod(a, b, p).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.empty()) return a;
  long inv = inverse(a.back(), p);
  for (auto& c : a) c = mulmod(c, inv, p);
  return a;
}

long eval(const Poly& a, long x, long p) {
  long acc = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = (mulmod(acc, ((x % p) + p) % p, p) + *it) % p;
  return ((acc % p) + p) % p;
}

}  // namespace fp

}  // namespace g2root
