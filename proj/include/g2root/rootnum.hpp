#pragma once

// Local root numbers of genus-2 Jacobians over Q and their product.

#include "g2root/genus2.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace g2root::rootnum {

using g2root::to_string;

/// No handler applies at this place (the result is reported, never guessed).
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An asserted local root number disagrees with the computed one.
class AssertionConflict : public DomainError {
 public:
  using DomainError::DomainError;
};

enum class ReductionKind { good, semistable_node, wild_maximal, unsupported, asserted };
std::string to_string(ReductionKind k);

constexpr long kInfinity = 0;  // place id of the real place

struct LocalAnalysis {
  long place = kInfinity;
  ReductionKind kind = ReductionKind::unsupported;
  std::optional<Sign> root_number;
  std::string detail;
  std::string provenance;  // formula applied and its inputs
};

struct GlobalReport {
  std::vector<LocalAnalysis> places;  // infinity first, then primes ascending
  std::optional<Sign> global;         // nullopt means PARTIAL
};

/// (-1)^(f+1) (v6 / k) (delta, a6)_K for K unramified of degree f over Q_5.
/// delta and a6 are rational, so the symbols over K are the f-th powers of
/// those over Q_5.
Sign local_root_number_5(const Rational& a6, const Rational& delta, int f = 1);
Sign local_root_number_5(const genus2::SpecialForm& sf, const Rational& delta, int f = 1);

/// Integral model at q reached by X -> q^s X', Y -> q^t Y' with the smallest
/// v_q of the discriminant.
struct LocalModel {
  genus2::Equation equation;
  long s = 0, t = 0;
  long disc_valuation = 0;
};
LocalModel minimal_scaled_model(const genus2::Equation& eq, long q);

struct NodeWitness {
  LocalModel model;
  long x0 = 0;       // the double root of P mod q
  fp::Poly h;        // P mod q = (X - x0)^2 h
  long h_at_x0 = 0;
  Sign root_number = Sign::plus;
};
/// Throws UnsupportedError unless P mod q has a single node.
NodeWitness semistable_witness(const genus2::Equation& eq, long q);
Sign local_root_number_semistable_odd(const genus2::Equation& eq, long q);

/// +1 when some scaled model has unit discriminant at q; UnsupportedError otherwise.
Sign local_root_number_good(const genus2::Equation& eq, long q);

Sign archimedean_root_number();

/// Primes examined by global_root_number: 2, 5, the asserted primes and all
/// primes dividing numerators or denominators of the discriminant and the
/// coefficients.
std::vector<long> relevant_primes(const genus2::Equation& eq, const std::map<long, Sign>& assertions = {});

GlobalReport global_root_number(const genus2::Equation& eq, const std::map<long, Sign>& assertions = {},
                                const genus2::NormalizeOptions& opts = genus2::default_normalize_options());

}  // namespace g2root::rootnum
