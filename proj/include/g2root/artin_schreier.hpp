#pragma once

// Artin-Schreier curves x^p - x - c = a y^2 over F_{p^f}: point counts,
// fixed points of iota^n o sigma_1^r o F^k, and traces on H^1.

#include "g2root/ffield.hpp"

#include <cstdint>

namespace g2root::ff {

struct ASCurve {
  FiniteField base;
  Elem a;
  Elem c;
  ASCurve(FiniteField base, Elem a, Elem c);  // a != 0
};

/// iota^n o sigma_1^r o F^fpow, where F is the Frobenius of the base field.
struct MapSpec {
  int n = 0;          // mod 2
  long r = 0;         // mod p
  unsigned fpow = 1;  // >= 1 for fixed-point counts
};

/// Projective points over the degree-ext extension of the base field.
std::uint64_t count_points(const ASCurve& curve, unsigned ext);

/// Geometric fixed points, the point at infinity included.
std::uint64_t count_fixed(const ASCurve& curve, const MapSpec& m);

/// 1 + Q - #Fix with Q = |base|^fpow.
long long trace_lefschetz(const ASCurve& curve, const MapSpec& m);

/// Closed form for the trace of (iota^n o sigma_1^r o F^f)^* on C_{1,0}/F_p,
/// p = 1 mod 4. f = 0 gives the trace of sigma_1^r alone.
long long trace_formula(int n, long r, unsigned f, long p);

/// (a / base)^n * trace_formula(0, r m, n [base:F_5], 5): the trace of
/// sigma^m phi^n when the special fibre is C_{a,0} over base and sigma acts
/// as x -> x + r.
long long trace_twisted(const FiniteField& base, Elem a, long r, long m, long n);

}  // namespace g2root::ff
