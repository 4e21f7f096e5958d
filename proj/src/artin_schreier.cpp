#include "g2root/artin_schreier.hpp"

#include <string>

namespace g2root::ff {

namespace {

long mod(long x, long p) { return ((x % p) + p) % p; }

long long ipow_ll(long long b, unsigned e) {
  long long r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

ASCurve::ASCurve(FiniteField base_, Elem a_, Elem c_) : base(std::move(base_)), a(a_), c(c_) {
  if (a == 0) throw DomainError("Artin-Schreier curve needs a != 0");
  if (a >= base.order() || c >= base.order()) throw DomainError("curve coefficients outside the base field");
}

std::uint64_t count_points(const ASCurve& curve, unsigned ext) {
  if (ext < 1) throw DomainError("extension degree must be positive");
  const FiniteField E(curve.base.p(), curve.base.degree() * static_cast<int>(ext));
  const Embedding emb(curve.base, E);
  const Elem a = emb(curve.a), c = emb(curve.c);
  const std::uint64_t q = E.order();

  // hist[v] = #{y : a y^2 = v}
  std::vector<std::uint32_t> hist(q, 0);
  for (Elem y = 0; y < q; ++y) ++hist[E.mul(a, E.square(y))];
  std::uint64_t affine = 0;
  for (Elem x = 0; x < q; ++x) affine += hist[E.sub(E.sub(E.frobenius(x), x), c)];
  return affine + 1;
}

std::uint64_t count_fixed(const ASCurve& curve, const MapSpec& m) {
  if (m.fpow == 0) throw DomainError("maps without a Frobenius factor have no finite Lefschetz count");
  const long p = curve.base.p();
  // A fixed point has y^2 = s in F_Q and x^p - x = t := c + a s in F_Q; the p
  // solutions x are fixed exactly when Tr_{F_Q/F_p}(t) = -r. The number of y
  // with y^2 = s and y^Q = (-1)^n y is 1 + chi(s) for n even, 1 - chi(s) otherwise.
  const FiniteField L(p, curve.base.degree() * static_cast<int>(m.fpow));
  const Embedding emb(curve.base, L);
  const Elem a = emb(curve.a), c = emb(curve.c);
  const long target = mod(-m.r, p);
  const int sgn = (m.n % 2 == 0) ? 1 : -1;
  std::uint64_t ys = 0;
  for (Elem s = 0; s < L.order(); ++s) {
    if (L.trace(L.add(c, L.mul(a, s))) != target) continue;
    ys += static_cast<std::uint64_t>(1 + sgn * L.quadratic_character(s));
  }
  return 1 + static_cast<std::uint64_t>(p) * ys;
}

long long trace_lefschetz(const ASCurve& curve, const MapSpec& m) {
  long long Q = 1;
  for (unsigned i = 0; i < m.fpow; ++i) Q *= static_cast<long long>(curve.base.order());
  return 1 + Q - static_cast<long long>(count_fixed(curve, m));
}

long long trace_formula(int n, long r, unsigned f, long p) {
  require_prime(p);
  if (p % 4 != 1) throw DomainError("closed trace formula needs p = 1 mod 4");
  const long long sign = (n % 2 == 0) ? 1 : -1;  // (-1)^n
  if (f % 2 == 0) {
    long long h = ipow_ll(p, f / 2);
    if (mod(r, p) != 0) return -sign * h;
    return sign * h * (p - 1);
  }
  int leg = legendre(Rational(mod(r, p)), p);
  return -sign * leg * ipow_ll(p, (f + 1) / 2);
}

long long trace_twisted(const FiniteField& base, Elem a, long r, long m, long n) {
  if (base.p() != 5) throw DomainError("twisted traces are defined over extensions of F_5");
  if (a == 0 || a >= base.order()) throw DomainError("twisted trace needs a nonzero a in the base field");
  if (n < 0) throw DomainError("Frobenius power must be non-negative");
  long long chi = base.quadratic_character(a);
  long long twist = (n % 2 == 0) ? 1 : chi;
  return twist * trace_formula(0, mod(r * m, 5), static_cast<unsigned>(n * base.degree()), 5);
}

}  // namespace g2root::ff
