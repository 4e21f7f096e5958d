#include "g2root/rootnum.hpp"

#include <algorithm>
#include <climits>
#include <set>
#include <sstream>

namespace g2root::rootnum {

using genus2::Equation;

std::string to_string(ReductionKind k) {
  switch (k) {
    case ReductionKind::good: return "good";
    case ReductionKind::semistable_node: return "semistable_node";
    case ReductionKind::wild_maximal: return "wild_maximal";
    case ReductionKind::unsupported: return "unsupported";
    case ReductionKind::asserted: return "asserted";
  }
  return "?";
}

Sign local_root_number_5(const Rational& a6, const Rational& delta, int f) {
  if (f < 1) throw DomainError("residue degree must be positive");
  if (delta == 0 || a6 == 0) throw DomainError("root number formula needs nonzero delta and a6");
  long nu = ord(delta, 5);
  if (nu % 2 == 0) throw DomainError("v_5(delta) = " + std::to_string(nu) + " is even: not the maximal case");
  long v6 = ord(a6, 5);
  if (v6 % 5 == 0) throw DomainError("v_5(a6) = " + std::to_string(v6) + " is divisible by 5");
  int leg = legendre(Rational(((v6 % 5) + 5) % 5), 5);
  int h = to_int(hilbert(delta, a6, 5));
  int s = (f % 2 == 0) ? -1 : 1;
  if (f % 2 == 1) s *= leg * h;  // even f: both symbols are squares
  return sign_from_int(s);
}

Sign local_root_number_5(const genus2::SpecialForm& sf, const Rational& delta, int f) {
  return local_root_number_5(sf.a6(), delta, f);
}

LocalModel minimal_scaled_model(const Equation& eq, long q) {
  require_prime(q);
  const QPoly& p = eq.poly();
  std::vector<std::pair<int, long>> vals;
  long vmax = 0;
  for (int i = 0; i <= p.degree(); ++i) {
    if (p[i] == 0) continue;
    long v = ord(p[i], q);
    vals.emplace_back(i, v);
    vmax = std::max(vmax, std::labs(v));
  }
  const long vdisc = ord(genus2::discriminant(eq), q);
  const long bound = 2 * vmax + 4;
  bool have = false;
  long best_s = 0, best_t = 0, best_v = 0;
  for (long s = -bound; s <= bound; ++s) {
    long m = LONG_MAX;
    for (auto [i, v] : vals) m = std::min(m, v + s * i);
    long t = m >= 0 ? m / 2 : -((-m + 1) / 2);
    long vd = vdisc - 20 * t + 30 * s;
    if (!have || vd < best_v || (vd == best_v && std::labs(s) < std::labs(best_s))) {
      have = true;
      best_s = s;
      best_t = t;
      best_v = vd;
    }
  }
  auto change = genus2::VariableChange::scaling(rpow(Rational(q), best_s), rpow(Rational(q), best_t));
  return {genus2::apply_change(eq, change), best_s, best_t, best_v};
}

NodeWitness semistable_witness(const Equation& eq, long q) {
  require_prime(q);
  if (q == 2 || q == 5) throw UnsupportedError("node handler is not used at " + std::to_string(q));
  LocalModel model = minimal_scaled_model(eq, q);
  if (model.disc_valuation == 0) throw UnsupportedError("model has good reduction");
  if (model.equation.degree() != 5) throw UnsupportedError("scaled model is not a quintic");
  fp::Poly pbar = fp::reduce(model.equation.poly(), q);
  if (fp::degree(pbar) != 5) throw UnsupportedError("leading coefficient vanishes mod " + std::to_string(q));
  fp::Poly g = fp::gcd(pbar, fp::derivative(pbar, q), q);
  if (fp::degree(g) != 1) {
    throw UnsupportedError("reduction has gcd(P, P') of degree " + std::to_string(fp::degree(g)) +
                           ", not a single node");
  }
  long x0 = (q - g[0]) % q;
  fp::Poly sq = fp::mul({(q - x0) % q, 1}, {(q - x0) % q, 1}, q);
  auto [h, rem] = fp::divmod(pbar, sq, q);
  if (!rem.empty()) throw UnsupportedError("repeated factor is not (X - x0)^2");
  long hx0 = fp::eval(h, x0, q);
  if (hx0 == 0) throw UnsupportedError("x0 is a root of multiplicity > 2");
  if (fp::degree(fp::gcd(h, fp::derivative(h, q), q)) != 0) throw UnsupportedError("cofactor H is not separable");
  int leg = legendre(Rational(hx0), q);
  return {std::move(model), x0, std::move(h), hx0, sign_from_int(-leg)};
}

Sign local_root_number_semistable_odd(const Equation& eq, long q) { return semistable_witness(eq, q).root_number; }

Sign local_root_number_good(const Equation& eq, long q) {
  LocalModel m = minimal_scaled_model(eq, q);
  if (m.disc_valuation != 0)
    throw UnsupportedError("no scaled model with unit discriminant at " + std::to_string(q));
  return Sign::plus;
}

Sign archimedean_root_number() { return Sign::plus; }

std::vector<long> relevant_primes(const Equation& eq, const std::map<long, Sign>& assertions) {
  std::set<long> out{2, 5};
  auto add = [&](const Integer& n) {
    if (n == 0) return;
    for (long p : prime_divisors(n)) out.insert(p);
  };
  Rational d = genus2::discriminant(eq);
  add(d.get_num());
  add(d.get_den());
  for (const auto& c : eq.poly().coeffs()) {
    add(c.get_num());
    add(c.get_den());
  }
  for (const auto& [p, s] : assertions) {
    require_prime(p);
    out.insert(p);
  }
  return {out.begin(), out.end()};
}

namespace {

std::string poly_string(const fp::Poly& h) {
  std::ostringstream os;
  bool first = true;
  for (int i = fp::degree(h); i >= 0; --i) {
    long c = h[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || c != 1) os << c;
    if (i >= 1) os << "X";
    if (i >= 2) os << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

std::string sign_string(Sign s) { return s == Sign::plus ? "+1" : "-1"; }

LocalAnalysis analyze_at_5(const Equation& eq, const genus2::NormalizeOptions& opts) {
  LocalAnalysis la;
  la.place = 5;
  try {
    genus2::SpecialForm sf = genus2::normalize_5adic(eq, opts);
    Rational delta = genus2::discriminant(sf.equation);
    long nu = ord(delta, 5);
    auto type = genus2::inertia_type(delta);
    if (nu % 2 == 0) {
      la.kind = ReductionKind::unsupported;
      la.detail = "wild, inertia " + genus2::to_string(type) + " (nu = " + std::to_string(nu) +
                  "); no root number formula outside the maximal case";
      return la;
    }
    Sign w = local_root_number_5(sf, delta, 1);
    la.kind = ReductionKind::wild_maximal;
    la.root_number = w;
    la.detail = "maximal wild ramification, inertia C5xC8, nu = " + std::to_string(nu);
    int leg = legendre(Rational(sf.v6 % 5), 5);
    la.provenance = "w = (v6/F_5) * (delta, a6)_5 with v6 = " + std::to_string(sf.v6) +
                    ", a6 = " + to_string(sf.a6()) + ", delta = " + to_string(delta) + ": (" +
                    std::to_string(leg) + ") * (" + std::to_string(to_int(hilbert(delta, sf.a6(), 5))) + ")";
    return la;
  } catch (const genus2::NormalizationError& e) {
    try {
      local_root_number_good(eq, 5);
      la.kind = ReductionKind::good;
      la.root_number = Sign::plus;
      la.detail = "scaled model with unit discriminant at 5";
      la.provenance = "good reduction: w = +1";
    } catch (const UnsupportedError&) {
      la.kind = ReductionKind::unsupported;
      la.detail = std::string("wildness not detected (criterion-negative): ") + e.what();
    }
    return la;
  }
}

LocalAnalysis analyze_at_odd(const Equation& eq, long q) {
  LocalAnalysis la;
  la.place = q;
  LocalModel m = minimal_scaled_model(eq, q);
  if (m.disc_valuation == 0) {
    la.kind = ReductionKind::good;
    la.root_number = Sign::plus;
    la.detail = "scaled model (s = " + std::to_string(m.s) + ", t = " + std::to_string(m.t) +
                ") has unit discriminant";
    la.provenance = "good reduction: w = +1";
    return la;
  }
  try {
    NodeWitness nw = semistable_witness(eq, q);
    la.kind = ReductionKind::semistable_node;
    la.root_number = nw.root_number;
    la.detail = "P = (X - " + std::to_string(nw.x0) + ")^2 H mod " + std::to_string(q) + ", H = " +
                poly_string(nw.h);
    la.provenance = "w = -(H(x0)/F_" + std::to_string(q) + ") with H(" + std::to_string(nw.x0) +
                    ") = " + std::to_string(nw.h_at_x0) + ": w = " + sign_string(nw.root_number);
  } catch (const UnsupportedError& e) {
    la.kind = ReductionKind::unsupported;
    la.detail = std::string("v_q(disc) = ") + std::to_string(m.disc_valuation) + "; " + e.what();
  }
  return la;
}

}  // namespace

GlobalReport global_root_number(const Equation& eq, const std::map<long, Sign>& assertions,
                                const genus2::NormalizeOptions& opts) {
  GlobalReport rep;
  LocalAnalysis inf;
  inf.place = kInfinity;
  inf.kind = ReductionKind::good;
  inf.root_number = archimedean_root_number();
  inf.detail = "real place";
  inf.provenance = "w = (-1)^dim J = +1";
  rep.places.push_back(inf);

  for (long q : relevant_primes(eq, assertions)) {
    LocalAnalysis la;
    if (q == 2) {
      la.place = 2;
      la.kind = ReductionKind::unsupported;
      la.detail = "residue characteristic 2 is not analyzed";
    } else if (q == 5) {
      la = analyze_at_5(eq, opts);
    } else {
      la = analyze_at_odd(eq, q);
    }
    if (auto it = assertions.find(q); it != assertions.end()) {
      if (la.root_number) {
        if (*la.root_number != it->second) {
          throw AssertionConflict("asserted w = " + sign_string(it->second) + " at " + std::to_string(q) +
                                  " but computed " + sign_string(*la.root_number));
        }
        la.detail += "; assertion agrees";
      } else {
        la.kind = ReductionKind::asserted;
        la.root_number = it->second;
        la.provenance = "asserted by caller";
      }
    }
    rep.places.push_back(std::move(la));
  }

  Sign g = Sign::plus;
  bool complete = true;
  for (const auto& la : rep.places) {
    if (!la.root_number) {
      complete = false;
      continue;
    }
    g *= *la.root_number;
  }
  if (complete) rep.global = g;
  return rep;
}

}  // namespace g2root::rootnum
