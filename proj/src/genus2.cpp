#include "g2root/genus2.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace g2root::genus2 {

namespace {

constexpr long kFive = 5;

using IPoly = std::vector<Integer>;

Integer mod_pos(const Integer& x, const Integer& m) {
  Integer r = x % m;
  if (r < 0) r += m;
  return r;
}

Integer eval(const IPoly& f, const Integer& x) {
  Integer acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IPoly derivative(const IPoly& f) {
  IPoly d;
  for (std::size_t i = 1; i < f.size(); ++i) d.push_back(f[i] * static_cast<unsigned long>(i));
  return d;
}

// f(t + s X) over Z.
IPoly shift_scale(const IPoly& f, const Integer& t, const Integer& s) {
  IPoly acc;
  for (auto it = f.rbegin(); it != f.rend(); ++it) {
    IPoly next(acc.size() + 1, 0);
    for (std::size_t i = 0; i < acc.size(); ++i) {
      next[i] += acc[i] * t;
      next[i + 1] += acc[i] * s;
    }
    next[0] += *it;
    acc = std::move(next);
  }
  return acc;
}

IPoly primitive_integer_poly(const QPoly& p) {
  Integer l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  IPoly out;
  Integer g = 0;
  for (const auto& c : p.coeffs()) {
    Rational s = c * l;
    out.push_back(s.get_num());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), s.get_num().get_mpz_t());
  }
  if (g != 0)
    for (auto& c : out) c /= g;
  return out;
}

Integer hensel_lift(const IPoly& g, Integer x, const Integer& modulus) {
  IPoly dg = derivative(g);
  for (int iter = 0; iter < 256; ++iter) {
    Integer fx = mod_pos(eval(g, x), modulus);
    if (fx == 0) break;
    Integer inv, d = mod_pos(eval(dg, x), modulus);
    if (mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), modulus.get_mpz_t()) == 0) break;
    x = mod_pos(x - fx * inv, modulus);
  }
  return x;
}

// Approximations mod 5^prec of the roots of g in Z_5 (Panayi's recursion).
void roots_in_z5(IPoly g, unsigned prec, std::vector<Integer>& out) {
  if (prec == 0) {
    out.push_back(0);
    return;
  }
  // Remove the 5-content.
  long vmin = -1;
  for (const auto& c : g) {
    if (c == 0) continue;
    long v = ord(c, kFive);
    if (vmin < 0 || v < vmin) vmin = v;
  }
  if (vmin < 0) return;  // zero polynomial: nothing sensible to report
  Integer pw = ipow(kFive, static_cast<unsigned long>(vmin));
  for (auto& c : g) c /= pw;

  bool nonconstant = false;
  for (std::size_t i = 1; i < g.size(); ++i) nonconstant |= mod_pos(g[i], kFive) != 0;
  if (!nonconstant) return;

  IPoly dg = derivative(g);
  Integer modulus = ipow(kFive, prec);
  for (long t = 0; t < kFive; ++t) {
    if (mod_pos(eval(g, t), kFive) != 0) continue;
    if (mod_pos(eval(dg, t), kFive) != 0) {
      out.push_back(hensel_lift(g, t, modulus));
      continue;
    }
    std::vector<Integer> sub;
    roots_in_z5(shift_scale(g, t, kFive), prec - 1, sub);
    for (const auto& s : sub) out.push_back(mod_pos(t + kFive * s, modulus));
  }
}

std::optional<Rational> rational_reconstruction(const Integer& r, const Integer& m) {
  Integer bound;
  mpz_sqrt(bound.get_mpz_t(), Integer(m / 2).get_mpz_t());
  Integer r0 = m, r1 = mod_pos(r, m), s0 = 0, s1 = 1;
  while (r1 > bound) {
    Integer q = r0 / r1;
    Integer r2 = r0 - q * r1, s2 = s0 - q * s1;
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
  }
  if (s1 == 0 || abs(s1) > bound) return std::nullopt;
  Rational out(r1, s1);
  out.canonicalize();
  return out;
}

std::string describe(const VariableChange& vc) {
  std::ostringstream os;
  os << "(a,b,c,d,e)=(" << to_string(vc.a) << "," << to_string(vc.b) << "," << to_string(vc.c) << ","
     << to_string(vc.d) << "," << to_string(vc.e) << ")";
  return os.str();
}

}  // namespace

VariableChange VariableChange::translation(const Rational& t) { return {1, -t, 0, 1, 1}; }

VariableChange VariableChange::scaling(const Rational& lambda, const Rational& mu) {
  if (lambda == 0 || mu == 0) throw DomainError("degenerate scaling");
  return {Rational(1) / lambda, 0, 0, 1, Rational(1) / mu};
}

void VariableChange::validate() const {
  if (det() == 0) throw DomainError("variable change with ad - bc = 0");
  if (e == 0) throw DomainError("variable change with e = 0");
}

VariableChange VariableChange::after(const VariableChange& first) const {
  // Matrix product (*this) * first; the Y factors multiply.
  return {a * first.a + b * first.c, a * first.b + b * first.d, c * first.a + d * first.c,
          c * first.b + d * first.d, e * first.e};
}

Rational discriminant_of(const QPoly& p) {
  int n = p.degree();
  if (n != 5 && n != 6) throw DomainError("genus-2 equations need deg P in {5, 6}");
  QPoly q = Rational(4) * p;
  Rational d = discriminant(q) / 4096;
  if (n == 5) d *= q.leading() * q.leading();
  return d;
}

Equation::Equation(QPoly p) : p_(std::move(p)) {
  if (p_.degree() != 5 && p_.degree() != 6)
    throw DomainError("genus-2 equations need deg P in {5, 6}, got degree " + std::to_string(p_.degree()));
  if (discriminant_of(p_) == 0) throw SingularCurveError("P has a repeated root: discriminant is zero");
}

Equation Equation::from_strings(const std::vector<std::string>& coeffs) {
  std::vector<Rational> c;
  c.reserve(coeffs.size());
  for (const auto& s : coeffs) c.push_back(parse_rational(s));
  return Equation(QPoly(std::move(c)));
}

std::vector<std::string> Equation::coefficient_strings() const {
  std::vector<std::string> out;
  for (const auto& c : p_.coeffs()) out.push_back(to_string(c));
  return out;
}

Rational discriminant(const Equation& eq) { return discriminant_of(eq.poly()); }

Equation apply_change(const Equation& eq, const VariableChange& vc) {
  vc.validate();
  // P'(X') = e^2 det^-6 * sum_i p_i (dX' - b)^i (a - cX')^(6-i)
  QPoly num(std::vector<Rational>{-vc.b, vc.d});
  QPoly den(std::vector<Rational>{vc.a, -vc.c});
  std::vector<QPoly> num_pw{QPoly(std::vector<Rational>{1})}, den_pw{QPoly(std::vector<Rational>{1})};
  for (int i = 1; i <= 6; ++i) {
    num_pw.push_back(num_pw.back() * num);
    den_pw.push_back(den_pw.back() * den);
  }
  QPoly acc;
  const QPoly& p = eq.poly();
  for (int i = 0; i <= 6; ++i) {
    Rational c = p[i];
    if (c == 0) continue;
    acc = acc + c * (num_pw[static_cast<std::size_t>(i)] * den_pw[static_cast<std::size_t>(6 - i)]);
  }
  acc = (vc.e * vc.e / rpow(vc.det(), 6)) * acc;
  if (acc.degree() < 5) throw DomainError("transformed polynomial has degree " + std::to_string(acc.degree()));
  return Equation(std::move(acc));
}

unsigned default_precision() {
  const char* env = std::getenv("GENUS2_PRECISION");
  if (env == nullptr || *env == '\0') return 40;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < 4 || v > 100000)
    throw DomainError(std::string("GENUS2_PRECISION must be an integer in [4, 100000], got '") + env + "'");
  return static_cast<unsigned>(v);
}

NormalizeOptions default_normalize_options() {
  NormalizeOptions o;
  o.precision = default_precision();
  return o;
}

std::vector<Rational> rational_5adic_roots(const QPoly& p, unsigned precision) {
  if (p.degree() < 1) return {};
  std::vector<Rational> found;
  Integer modulus = ipow(kFive, precision);
  auto consider = [&](const Rational& cand) {
    if (p(cand) == 0 && std::find(found.begin(), found.end(), cand) == found.end()) found.push_back(cand);
  };

  IPoly f = primitive_integer_poly(p);
  std::vector<Integer> approx;
  roots_in_z5(f, precision, approx);
  for (const auto& r : approx)
    if (auto q = rational_reconstruction(r, modulus)) consider(*q);

  // Roots of negative valuation via the reciprocal polynomial.
  IPoly rev(f.rbegin(), f.rend());
  approx.clear();
  roots_in_z5(rev, precision, approx);
  for (const auto& r : approx) {
    if (mod_pos(r, kFive) != 0) continue;
    if (auto q = rational_reconstruction(r, modulus); q && *q != 0) consider(Rational(1) / *q);
  }
  std::sort(found.begin(), found.end());
  return found;
}

SpecialForm normalize_5adic(const Equation& input, const NormalizeOptions& opts) {
  SpecialForm sf{input, 0, VariableChange::identity(), {}};
  auto apply = [&](const VariableChange& vc, std::string what) {
    sf.equation = apply_change(sf.equation, vc);
    sf.composite = vc.after(sf.composite);
    sf.steps.push_back({std::move(what) + " " + describe(vc), vc});
  };
  auto fail = [&](const std::string& why) -> NormalizationError {
    return NormalizationError("5-adic normalization failed: " + why);
  };

  if (sf.equation.degree() == 6) {
    auto roots = rational_5adic_roots(sf.equation.poly(), opts.precision);
    if (roots.empty())
      throw fail("degree-6 equation without a rational 5-adic root detectable at precision 5^" +
                 std::to_string(opts.precision));
    const Rational r = roots.front();
    apply({0, 1, 1, -r, 1}, "move root X=" + to_string(r) + " to infinity");
  }

  const Rational lead = sf.equation.poly().leading();
  if (lead != 1) apply({lead, 0, 0, 1, lead * lead}, "make monic");

  // Smallest k making X -> X'/25^k integral: v(c_i) + 2k(5 - i) >= 0.
  long k = 0;
  for (int i = 0; i < 5; ++i) {
    Rational c = sf.equation.poly()[i];
    if (c == 0) continue;
    long v = ord(c, kFive);
    long w = 2 * (5 - i);
    if (v < 0) k = std::max(k, (-v + w - 1) / w);
  }
  if (k > 0) {
    apply({Rational(ipow(25, static_cast<unsigned long>(k))), 0, 0, 1,
           Rational(ipow(kFive, static_cast<unsigned long>(5 * k)))},
          "clear 5-adic denominators");
  }

  const VariableChange shrink{Rational(1, 25), 0, 0, 1, Rational(1, 3125)};
  unsigned depth = 0;
  for (;;) {
    const QPoly& p = sf.equation.poly();
    const Rational a6 = p[0];
    if (a6 == 0) throw fail("P(0) = 0 after translation; the equation has a rational Weierstrass point");
    const long v6 = ord(a6, kFive);

    if (v6 == 0) {
      // Unit roots: the reduction must be X^5 - t = (X - t)^5.
      for (int i = 1; i < 5; ++i)
        if (residue(p[i], kFive) != 0) throw fail("reduction mod 5 is not a fifth power of a linear factor");
      long t = residue(-a6, kFive);
      if (++depth > opts.max_depth) throw fail("translation depth bound exhausted");
      apply(VariableChange::translation(t), "translate by residue " + std::to_string(t));
      continue;
    }

    for (int i = 1; i < 5; ++i) {
      Rational c = p[i];
      if (c != 0 && 5 * ord(c, kFive) < v6 * (5 - i))
        throw fail("Newton polygon has more than one segment");
    }

    if (v6 % 5 != 0) {
      if (v6 >= 10) {
        apply(shrink, "scale X by 25");
        continue;
      }
      sf.v6 = v6;
      return sf;
    }

    const long m = v6 / 5;  // every root has valuation exactly m
    if (m >= 2) {
      apply(shrink, "scale X by 25");
      continue;
    }
    // m = 1: look at Q(X) = P(5X)/5^5 whose roots are units.
    QPoly q = Rational(1, 3125) * p.scaled(Rational(5));
    for (int i = 1; i < 5; ++i)
      if (residue(q[i], kFive) != 0) throw fail("roots of valuation 1 do not form a single residue class");
    long t = residue(-q[0], kFive);
    if (++depth > opts.max_depth) throw fail("translation depth bound exhausted");
    apply(VariableChange::translation(Rational(5 * t)), "translate by 5*" + std::to_string(t));
  }
}

bool detect_wild5(const Equation& eq, const NormalizeOptions& opts) {
  try {
    normalize_5adic(eq, opts);
    return true;
  } catch (const NormalizationError&) {
    return false;
  }
}

std::string to_string(InertiaType t) {
  switch (t) {
    case InertiaType::C5: return "C5";
    case InertiaType::C10: return "C10";
    case InertiaType::Dic5: return "Dic5";
    case InertiaType::C5xC8: return "C5xC8";
  }
  return "?";
}

InertiaType inertia_type(const Rational& delta) {
  if (delta == 0) throw DomainError("inertia type of a zero discriminant");
  long nu = ord(delta, kFive);
  long r = ((nu % 8) + 8) % 8;
  if (r % 2 == 1) return InertiaType::C5xC8;
  if (r % 4 == 2) return InertiaType::Dic5;
  if (r == 4) return InertiaType::C10;
  return InertiaType::C5;
}

MaximalityWitness is_maximal(const Equation& eq, const NormalizeOptions& opts) {
  SpecialForm sf = [&] {
    try {
      return normalize_5adic(eq, opts);
    } catch (const NormalizationError& e) {
      throw NotWildError(std::string("wild ramification at 5 not established: ") + e.what());
    }
  }();
  MaximalityWitness w;
  w.delta = discriminant(eq);
  w.special_delta = discriminant(sf.equation);
  w.nu = ord(w.special_delta, kFive);
  w.type = inertia_type(w.special_delta);
  w.maximal = (w.nu % 2) != 0;
  w.conductor_odd = w.maximal;
  return w;
}

}  // namespace g2root::genus2
