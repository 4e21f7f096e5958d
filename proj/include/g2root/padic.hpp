#pragma once

// Exact p-adic arithmetic over the rationals: valuations, unit parts,
// Legendre symbols and quadratic Hilbert symbols.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace g2root {

/// Exact rational, always in canonical reduced form (GMP keeps it so).
using Rational = mpq_class;
using Integer = mpz_class;

/// Raised for inputs outside an operation's domain (zero where a unit is
/// required, non-prime moduli, malformed strings...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Sign : int { minus = -1, plus = 1 };

constexpr Sign operator*(Sign a, Sign b) {
  return static_cast<int>(a) == static_cast<int>(b) ? Sign::plus : Sign::minus;
}
constexpr Sign& operator*=(Sign& a, Sign b) { return a = a * b; }
constexpr int to_int(Sign s) { return static_cast<int>(s); }
Sign sign_from_int(int v);  // throws DomainError unless v = +-1

/// v_p(x), with a distinguished infinite value for x = 0.
class Valuation {
 public:
  static Valuation infinity() { return Valuation(); }
  explicit Valuation(long v) : value_(v), infinite_(false) {}

  bool is_infinite() const { return infinite_; }
  long value() const;  // throws on infinity

  friend bool operator==(const Valuation&, const Valuation&) = default;
  Valuation operator+(const Valuation& o) const;

 private:
  Valuation() = default;
  long value_ = 0;
  bool infinite_ = true;
};

Rational parse_rational(std::string_view text);
/// "num/den", denominator omitted when it is 1.
std::string to_string(const Rational& x);

bool is_prime(long p);
void require_prime(long p);

Valuation val(const Rational& x, long p);
/// val for x != 0 as a plain integer.
long ord(const Rational& x, long p);
long ord(const Integer& x, long p);

/// x * p^(-val(x, p)); x must be nonzero.
Rational unit_part(const Rational& x, long p);

/// x mod m for x with denominator coprime to m; result in [0, m).
Integer residue(const Rational& x, const Integer& m);
long residue(const Rational& x, long m);

/// Legendre symbol of the residue of x in F_p; 0 when the residue vanishes.
/// Requires p odd and val(x, p) >= 0.
int legendre(const Rational& x, long p);

/// Quadratic Hilbert symbol (a, b) over Q_p, any prime p.
Sign hilbert(const Rational& a, const Rational& b, long p);

/// Archimedean Hilbert symbol: -1 iff a < 0 and b < 0.
Sign hilbert_real(const Rational& a, const Rational& b);

/// Canonical representative of x in Q_p^x / (Q_p^x)^2.
/// Odd p: one of 1, u, p, u*p where u is the least quadratic non-residue.
/// p = 2: e * 2^k with e in {1, 3, 5, 7}, k in {0, 1}.
Rational square_class(const Rational& x, long p);

/// Smallest positive quadratic non-residue modulo the odd prime p.
long least_nonresidue(long p);

/// Distinct prime divisors of |n| (n != 0), ascending. Throws when a prime
/// factor does not fit in a long.
std::vector<long> prime_divisors(const Integer& n);

/// 5^k and friends.
Integer ipow(long base, unsigned long exp);
Rational rpow(const Rational& base, long exp);

}  // namespace g2root
