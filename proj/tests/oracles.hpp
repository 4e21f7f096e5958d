#pragma once

// Slow, independent reference computations used only by the tests.

#include "g2root/poly.hpp"

#include <complex>
#include <cstdint>
#include <vector>

namespace oracle {

using g2root::Integer;
using g2root::QPoly;
using g2root::Rational;

/// det of the Sylvester matrix by Gaussian elimination over Q.
Rational sylvester_resultant(const QPoly& a, const QPoly& b);
/// (-1)^(n(n-1)/2) Res(P, P') / lc(P) with the Sylvester resultant.
Rational discriminant(const QPoly& p);

/// +1 iff a x^2 + b y^2 = z^2 has a primitive solution mod p^k
/// (k = 3 for odd p, k = 6 for p = 2), after stripping even powers of p.
int hilbert_by_search(const Rational& a, const Rational& b, long p);

/// F_p[X]/(m) with elements as coefficient vectors; deliberately table-free.
class SlowField {
 public:
  SlowField(long p, g2root::fp::Poly modulus);
  long p() const { return p_; }
  int degree() const { return static_cast<int>(modulus_.size()) - 1; }
  std::uint64_t order() const { return order_; }

  using E = std::vector<long>;
  E element(std::uint64_t index) const;  // base-p digits
  std::uint64_t index(const E& x) const;
  E add(const E& x, const E& y) const;
  E sub(const E& x, const E& y) const;
  E mul(const E& x, const E& y) const;
  E pow(E x, std::uint64_t e) const;
  E constant(long c) const;
  long trace(const E& x) const;  // sum of conjugates, must land in F_p

 private:
  long p_;
  g2root::fp::Poly modulus_;
  std::uint64_t order_;
};

/// Projective points of x^p - x - c = a y^2 over the field (a, c constants in F_p).
std::uint64_t count_points_brute(const SlowField& field, long a, long c);

/// Fixed points of iota^n o sigma_1^r o F on C_{a,c}/F_5 with x enumerated in
/// F_{5^5} and y in F_25 (both conditions checked directly).
std::uint64_t count_fixed_frobenius1(long a, long c, int n, long r);

/// Quadratic Gauss sum by direct summation over the field.
std::complex<double> gauss_sum_brute(const SlowField& field);

/// Smallest k >= 0 with 2^k = u mod 5^a, by linear search.
std::uint64_t discrete_log_linear(std::uint64_t u, long a);

}  // namespace oracle
