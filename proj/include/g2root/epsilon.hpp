#pragma once

// Characters of Q_5^x, the standard additive character, epsilon factors as
// finite sums, gauges and quadratic Gauss sums.

#include "g2root/ffield.hpp"
#include "g2root/padic.hpp"

#include <complex>

namespace g2root::eps {

using Complex = std::complex<double>;

constexpr long kP = 5;

/// exp(2 pi i x) for x in Q / Z, reduced exactly before conversion.
Complex root_of_unity(const Rational& x);

/// psi(x) = exp(2 pi i frac(x / 5)) for x in Z[1/5]: level -1.
Complex psi_eval(const Rational& x);

/// chi(2) = exp(2 pi i unit_exp) on units (2 generates (Z/5^a)^x for every a),
/// chi(5) = exp(2 pi i unif_val_exp).
class WeilCharacter {
 public:
  WeilCharacter(const Rational& unit_exp, const Rational& unif_val_exp);

  long conductor() const { return a_; }
  const Rational& unit_exp() const { return unit_exp_; }
  const Rational& unif_val_exp() const { return unif_val_exp_; }

  /// chi(x) as an element of Q / Z.
  Rational phase(const Rational& x) const;
  Complex operator()(const Rational& x) const { return root_of_unity(phase(x)); }

  WeilCharacter inverse() const;
  WeilCharacter power(long k) const;

 private:
  Rational unit_exp_, unif_val_exp_;
  long a_ = 0;
};

/// Discrete log of the unit u modulo 5^a to base 2 (baby-step giant-step).
Integer discrete_log2(const Integer& u, long a);

Complex chi_eval(const WeilCharacter& chi, const Rational& x);

/// sum over u in (Z/5^a)^x of chi^-1(5^(1-a) u) psi(5^(1-a) u).
Complex epsilon_factor(const WeilCharacter& chi);
/// epsilon / |epsilon|.
Complex root_number(const WeilCharacter& chi);

/// c = t / 5^(a-1) with chi(1 + x) = psi(c x) on x in 5^n Z_5 (n = floor((a+1)/2)),
/// or, refined, chi(1 + x + x^2/2) = psi(c x) on x in 5^(a-n) Z_5.
/// Returns the candidate with the least t in [0, 5^(a - d)), d the domain exponent.
Rational gauge(const WeilCharacter& chi, bool refined);
/// All solutions t in [0, 5^(a-d)) for the same search, for uniqueness checks.
std::vector<Rational> gauge_candidates(const WeilCharacter& chi, bool refined);

/// sum over x in F of psi(Tr(x^2)).
Complex gauss_sum(const ff::FiniteField& field);

struct ApproxConfig {
  long p = kP;
  long max_power = 1;  // compare against p^max_power-th roots of unity
  double tolerance = 1e-9;
};

/// z / w is a positive real times a p^k-th root of unity, k <= max_power.
bool approx_equiv(Complex z, Complex w, const ApproxConfig& cfg);

struct AbbesSaitoCheck {
  Complex lhs;  // epsilon factor
  Complex rhs;
  Rational c;   // refined gauge
  bool holds = false;
};
AbbesSaitoCheck abbes_saito(const WeilCharacter& chi, double tolerance = 1e-9);
bool verify_abbes_saito(const WeilCharacter& chi, double tolerance = 1e-9);

}  // namespace g2root::eps
