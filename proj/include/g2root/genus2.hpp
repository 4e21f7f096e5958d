#pragma once

// Genus-2 Weierstrass equations Y^2 = P(X): discriminants, changes of
// variables, the 5-adic special form and the inertia classification in the
// wildly ramified case.

#include "g2root/padic.hpp"
#include "g2root/poly.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace g2root::genus2 {

using g2root::to_string;

class SingularCurveError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// The bounded 5-adic search could not produce a special form.
class NormalizationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation that presupposes wild ramification at 5 was called on an
/// equation for which the wildness criterion does not hold.
class NotWildError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// X' = (aX + b)/(cX + d), Y' = eY/(cX + d)^3.
struct VariableChange {
  Rational a = 1, b = 0, c = 0, d = 1, e = 1;

  static VariableChange identity() { return {}; }
  static VariableChange translation(const Rational& t);  // X = X' + t
  /// X = lambda X', Y = mu Y'.
  static VariableChange scaling(const Rational& lambda, const Rational& mu);

  Rational det() const { return a * d - b * c; }
  void validate() const;

  /// The change equivalent to applying `first`, then `*this`.
  VariableChange after(const VariableChange& first) const;

  friend bool operator==(const VariableChange&, const VariableChange&) = default;
};

/// Y^2 = P(X) with deg P in {5, 6} and nonzero discriminant.
class Equation {
 public:
  /// Throws DomainError on bad degree, SingularCurveError when disc(P) = 0.
  explicit Equation(QPoly p);
  static Equation from_strings(const std::vector<std::string>& coeffs);

  const QPoly& poly() const { return p_; }
  int degree() const { return p_.degree(); }
  std::vector<std::string> coefficient_strings() const;

  friend bool operator==(const Equation&, const Equation&) = default;

 private:
  QPoly p_;
};

/// 2^-12 disc(4P), with the extra a0^2 (a0 = lc(4P)) in degree 5.
Rational discriminant(const Equation& eq);
/// Same quantity for an arbitrary polynomial of degree 5 or 6; zero when
/// P has a repeated root.
Rational discriminant_of(const QPoly& p);

Equation apply_change(const Equation& eq, const VariableChange& vc);

struct NormalizeOptions {
  unsigned precision = 40;  // 5-adic digits used when locating roots
  unsigned max_depth = 10;  // translation steps before giving up
};

/// Working precision, overridable through GENUS2_PRECISION.
unsigned default_precision();
NormalizeOptions default_normalize_options();

struct NormalizationStep {
  std::string description;
  VariableChange change;
};

/// Y^2 = X^5 + a2 X^4 + ... + a6 with 5-integral a_i and
/// v6 = v_5(a6) in {1,2,3,4,6,7,8,9}.
struct SpecialForm {
  Equation equation;
  long v6 = 0;
  VariableChange composite;  // apply_change(input, composite) == equation
  std::vector<NormalizationStep> steps;

  /// a_k is the coefficient of X^(6-k), k = 2..6.
  Rational a(int k) const { return equation.poly()[6 - k]; }
  Rational a6() const { return a(6); }
};

/// Throws NormalizationError (with a diagnostic) when the bounded search
/// fails, which includes every input where the wildness criterion is negative.
SpecialForm normalize_5adic(const Equation& eq, const NormalizeOptions& opts = default_normalize_options());

/// Sufficient criterion for wild ramification at 5: the normalization reaches
/// a monic integral quintic with single-slope Newton polygon of slope m/5,
/// 5 not dividing m.
bool detect_wild5(const Equation& eq, const NormalizeOptions& opts = default_normalize_options());

enum class InertiaType { C5, C10, Dic5, C5xC8 };
std::string to_string(InertiaType t);

/// Inertia image from nu = v_5(delta); delta should be the discriminant of a
/// special form (only nu mod 8 matters, and that is fixed by the special form).
InertiaType inertia_type(const Rational& delta);

struct MaximalityWitness {
  bool maximal = false;
  long nu = 0;  // v_5 of the special-form discriminant
  InertiaType type = InertiaType::C5;
  Rational delta;               // discriminant of the input equation
  Rational special_delta;       // discriminant of the special form
  bool conductor_odd = false;   // reported from the parity of nu, not computed
};

/// Throws NotWildError when detect_wild5 fails.
MaximalityWitness is_maximal(const Equation& eq, const NormalizeOptions& opts = default_normalize_options());

/// Rational roots of P lying in Q_5, located 5-adically to `precision`
/// digits and confirmed exactly. Exposed for tests.
std::vector<Rational> rational_5adic_roots(const QPoly& p, unsigned precision);

}  // namespace g2root::genus2
