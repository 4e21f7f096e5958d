#pragma once

// Table-driven finite fields F_{p^f} of desk size. Elements are packed as
// sum c_i p^i over the polynomial basis 1, X, ..., X^(f-1).

#include "g2root/poly.hpp"

#include <cstdint>
#include <memory>
#include <vector>

namespace g2root::ff {

using Elem = std::uint32_t;

/// Largest field order the tables are built for.
constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 24;

/// Exhaustive trial division by every monic polynomial of degree <= deg/2.
bool is_irreducible(const fp::Poly& m, long p);

/// Fixed moduli for p = 5, f <= 8; otherwise the irreducible monic
/// polynomial with the smallest packed lower coefficients.
fp::Poly default_modulus(long p, int f);
fp::Poly smallest_irreducible(long p, int f);

class FiniteField {
 public:
  FiniteField(long p, int f);
  FiniteField(long p, fp::Poly modulus);  // throws DomainError unless monic irreducible

  long p() const;
  int degree() const;
  std::uint64_t order() const;
  const fp::Poly& modulus() const;

  Elem from_coeffs(const std::vector<long>& c) const;
  std::vector<long> coeffs(Elem x) const;
  Elem from_int(long n) const;

  Elem add(Elem x, Elem y) const;
  Elem sub(Elem x, Elem y) const;
  Elem neg(Elem x) const;
  Elem mul(Elem x, Elem y) const;
  Elem inv(Elem x) const;
  Elem pow(Elem x, std::uint64_t e) const;
  Elem square(Elem x) const { return mul(x, x); }

  /// x^(p^k).
  Elem frobenius(Elem x, unsigned k = 1) const;
  /// Absolute trace to F_p, as an integer in [0, p).
  long trace(Elem x) const;
  /// Quadratic character: 0, +1 or -1 (odd p).
  int quadratic_character(Elem x) const;

  Elem generator() const;
  std::uint64_t log(Elem x) const;  // x != 0
  Elem exp(std::uint64_t k) const;

  friend bool operator==(const FiniteField& a, const FiniteField& b);

 private:
  struct Tables;
  std::shared_ptr<const Tables> t_;
};

/// Field homomorphism sub -> big (degree of sub divides degree of big),
/// sending X to the first root of sub's modulus among the powers of big's
/// generator.
class Embedding {
 public:
  Embedding(const FiniteField& sub, const FiniteField& big);
  Elem operator()(Elem x) const;
  Elem image_of_x() const { return basis_.size() > 1 ? basis_[1] : 1; }

 private:
  FiniteField sub_, big_;
  std::vector<Elem> basis_;  // images of 1, X, ..., X^(f-1)
};

}  // namespace g2root::ff
