#include "g2root/suites.hpp"

#include "g2root/artin_schreier.hpp"
#include "g2root/epsilon.hpp"

#include <cmath>
#include <random>
#include <set>

namespace g2root::suites {

namespace {

Json finish(const std::string& name, Json rows, Json summary, bool pass, bool verbose) {
  return {{"report", "verify"}, {"suite", name}, {"pass", pass}, {"verbose", verbose}, {"summary", summary},
          {"rows", rows}};
}

Rational ratio(long n, long d) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

long long ipow_ll(long long b, unsigned e) {
  long long r = 1;
  while (e--) r *= b;
  return r;
}

Rational random_rational(std::mt19937_64& rng, const std::vector<long>& primes, int max_exp) {
  std::uniform_int_distribution<int> ex(0, max_exp), coin(0, 1);
  Integer num = 1, den = 1;
  for (long p : primes) {
    int e = ex(rng) - (max_exp / 2);
    if (e > 0) num *= ipow(p, static_cast<unsigned long>(e));
    if (e < 0) den *= ipow(p, static_cast<unsigned long>(-e));
  }
  Rational r(num, den);
  r.canonicalize();
  return coin(rng) ? r : Rational(-r);
}

}  // namespace

Json verify_traces(const SuiteParams& params) {
  const long p = params.p;
  require_prime(p);
  if (p % 4 != 1) throw DomainError("traces suite needs p = 1 mod 4");
  if (params.fmax < 1) throw DomainError("fmax must be at least 1");
  const ff::FiniteField base(p, 1);
  const ff::ASCurve curve(base, 1, 0);
  Json rows = Json::array();
  bool pass = true;
  long cells = 0, failed = 0;
  for (unsigned f = 1; f <= params.fmax; ++f) {
    for (int n = 0; n <= 1; ++n) {
      for (long r = 0; r < p; ++r) {
        long long lef = ff::trace_lefschetz(curve, {n, r, f});
        long long formula = ff::trace_formula(n, r, f, p);
        bool weil = static_cast<double>(std::llabs(lef)) <= (p - 1) * std::sqrt(std::pow(p, f)) + 1e-9;
        bool ok = lef == formula && weil;
        ++cells;
        if (!ok) ++failed;
        pass &= ok;
        rows.push_back({{"check", "trace"}, {"n", n}, {"r", r}, {"f", f}, {"formula", formula}, {"lefschetz", lef},
                        {"pass", ok}});
      }
    }
  }
  for (unsigned e = 1; e <= params.fmax; ++e) {
    auto pts = static_cast<long long>(ff::count_points(curve, e));
    long long predicted = 1 + ipow_ll(p, e) - ff::trace_lefschetz(curve, {0, 0, e});
    bool ok = pts == predicted;
    pass &= ok;
    rows.push_back({{"check", "points"}, {"ext", e}, {"count", pts}, {"lefschetz", predicted}, {"pass", ok}});
  }
  for (long r = 1; r < p; ++r) {
    auto fixed = static_cast<long long>(ff::count_fixed(curve, {0, r, 1}));
    long long expected = p * (legendre(Rational(r), p) + 1) + 1;
    bool ok = fixed == expected;
    pass &= ok;
    rows.push_back({{"check", "fixed"}, {"r", r}, {"count", fixed}, {"expected", expected}, {"pass", ok}});
  }
  Json summary = {{"p", p}, {"fmax", params.fmax}, {"trace_cells", cells}, {"trace_failures", failed}};
  return finish("traces", rows, summary, pass, params.verbose);
}

Json verify_epsilon(const SuiteParams& params) {
  if (params.max_conductor < 1 || params.max_conductor > 4) throw DomainError("max conductor must be in 1..4");
  if (params.unif_steps < 1) throw DomainError("unif_steps must be positive");
  Json rows = Json::array();
  bool pass = true;
  long count = 0, as_checked = 0, failed = 0;
  for (long a = 1; a <= params.max_conductor; ++a) {
    long order = 4;
    for (long i = 1; i < a; ++i) order *= 5;
    for (long j = 1; j < order; ++j) {
      if (a >= 2 && j % 5 == 0) continue;
      for (unsigned k = 0; k < params.unif_steps; ++k) {
        eps::WeilCharacter chi(ratio(j, order), ratio(static_cast<long>(k), static_cast<long>(params.unif_steps)));
        eps::Complex e = eps::epsilon_factor(chi);
        eps::Complex w = e / std::abs(e);
        bool ok = std::abs(e) > 1e-9 && std::abs(std::abs(w) - 1.0) < 1e-9;
        Json row = {{"unit_exp", to_string(chi.unit_exp())},
                    {"unif_val_exp", to_string(chi.unif_val_exp())},
                    {"conductor", a},
                    {"epsilon", {e.real(), e.imag()}},
                    {"w", {w.real(), w.imag()}}};
        if (a >= 2) {
          auto as = eps::abbes_saito(chi);
          auto plain = eps::gauge_candidates(chi, false);
          bool unique = plain.size() == 1;
          bool agree = a != 2 || (unique && eps::gauge(chi, true) == plain.front());
          row["gauge"] = plain.empty() ? Json(nullptr) : Json(to_string(plain.front()));
          row["refined_gauge"] = to_string(as.c);
          row["abbes_saito"] = as.holds;
          ok = ok && as.holds && unique && agree;
          ++as_checked;
        }
        row["pass"] = ok;
        ++count;
        if (!ok) ++failed;
        pass &= ok;
        rows.push_back(row);
      }
    }
  }
  Json summary = {{"characters", count}, {"abbes_saito_checked", as_checked}, {"failures", failed}};
  return finish("epsilon", rows, summary, pass, params.verbose);
}

Json verify_symbols(const SuiteParams& params) {
  Json rows = Json::array();
  bool pass = true;
  for (long p : {2L, 3L, 5L, 7L, 41L}) {
    std::vector<Rational> reps;
    if (p == 2) {
      for (long e : {1L, 3L, 5L, 7L})
        for (long k : {1L, 2L}) reps.emplace_back(e * k);
    } else {
      long u = least_nonresidue(p);
      reps = {Rational(1), Rational(u), Rational(p), Rational(u * p)};
    }
    long checks = 0, bad = 0;
    for (const auto& a : reps) {
      ++checks;
      if (hilbert(a, -a, p) != Sign::plus) ++bad;
      for (const auto& b : reps) {
        ++checks;
        if (hilbert(a, b, p) != hilbert(b, a, p)) ++bad;
        for (const auto& c : reps) {
          ++checks;
          if (hilbert(a, b * c, p) != hilbert(a, b, p) * hilbert(a, c, p)) ++bad;
        }
      }
    }
    // square-class invariance on a few scalings
    for (const auto& a : reps)
      for (const auto& b : reps) {
        ++checks;
        if (hilbert(a * 9, b * Rational(1, 4) * p * p, p) != hilbert(a, b, p)) ++bad;
      }
    pass &= bad == 0;
    rows.push_back({{"check", "bilinearity"}, {"p", p}, {"checks", checks}, {"failures", bad}, {"pass", bad == 0}});
  }

  std::mt19937_64 rng(params.seed);
  const std::vector<long> support = {2, 3, 5, 7, 11, 13, 41};
  long bad_pf = 0;
  const unsigned pairs = params.samples == 0 ? 500 : std::min(params.samples, 500u);
  for (unsigned i = 0; i < pairs; ++i) {
    Rational a = random_rational(rng, support, 4), b = random_rational(rng, support, 4);
    std::set<long> primes{2};
    for (const Rational* x : {&a, &b})
      for (const Integer* n : {&x->get_num(), &x->get_den()})
        for (long q : prime_divisors(*n)) primes.insert(q);
    Sign s = hilbert_real(a, b);
    for (long q : primes) s *= hilbert(a, b, q);
    if (s != Sign::plus) {
      ++bad_pf;
      rows.push_back({{"check", "product_formula"}, {"a", to_string(a)}, {"b", to_string(b)}, {"pass", false}});
    }
  }
  pass &= bad_pf == 0;
  rows.push_back({{"check", "product_formula"}, {"pairs", pairs}, {"failures", bad_pf}, {"pass", bad_pf == 0}});

  long bad_leg = 0;
  for (long p = 3; p <= 41; p += 2) {
    if (!is_prime(p)) continue;
    long plus = 0;
    for (long x = 1; x < p; ++x) {
      if (legendre(Rational(x), p) == 1) ++plus;
      for (long y = 1; y < p; ++y)
        if (legendre(Rational(x * y), p) != legendre(Rational(x), p) * legendre(Rational(y), p)) ++bad_leg;
    }
    if (2 * plus != p - 1) ++bad_leg;
  }
  pass &= bad_leg == 0;
  rows.push_back({{"check", "legendre_homomorphism"}, {"max_p", 41}, {"failures", bad_leg}, {"pass", bad_leg == 0}});
  Json summary = {{"primes", {2, 3, 5, 7, 41}}, {"product_formula_pairs", pairs}};
  return finish("symbols", rows, summary, pass, params.verbose);
}

Json verify_discriminant(const SuiteParams& params) {
  std::mt19937_64 rng(params.seed);
  std::uniform_int_distribution<int> small(-9, 9), deg(5, 6), den(1, 4);
  auto rnd = [&] { return ratio(small(rng), den(rng)); };
  auto nonzero = [&] {
    Rational r;
    do r = rnd();
    while (r == 0);
    return r;
  };
  auto random_equation = [&](bool monic_quintic) {
    for (;;) {
      int d = monic_quintic ? 5 : deg(rng);
      std::vector<Rational> c(static_cast<std::size_t>(d) + 1);
      for (auto& x : c) x = rnd();
      c.back() = monic_quintic ? Rational(1) : nonzero();
      QPoly p(std::move(c));
      if (genus2::discriminant_of(p) != 0) return genus2::Equation(p);
    }
  };
  Json rows = Json::array();
  long law_fail = 0, class_fail = 0, tested = 0;
  const unsigned n = params.samples == 0 ? 1000 : params.samples;
  while (tested < static_cast<long>(n)) {
    genus2::Equation eq = random_equation(false);
    genus2::VariableChange vc{rnd(), rnd(), rnd(), rnd(), nonzero()};
    if (vc.det() == 0) continue;
    genus2::Equation out = [&] {
      try {
        return genus2::apply_change(eq, vc);
      } catch (const DomainError&) {
        return eq;
      }
    }();
    if (out == eq && !(vc == genus2::VariableChange::identity())) continue;
    ++tested;
    Rational d0 = genus2::discriminant(eq), d1 = genus2::discriminant(out);
    bool law = d1 == rpow(vc.e, 20) * rpow(vc.det(), -30) * d0;
    bool cls = square_class(d1, 5) == square_class(d0, 5);
    if (!law) ++law_fail;
    if (!cls) ++class_fail;
    if (!law || !cls || params.verbose) {
      rows.push_back({{"check", "transform"}, {"curve", report::curve_json(eq)["P"]}, {"change", report::change_json(vc)},
                      {"law", law}, {"square_class", cls}, {"pass", law && cls}});
    }
  }
  long monic_fail = 0;
  for (int i = 0; i < 200; ++i) {
    genus2::Equation eq = random_equation(true);
    if (genus2::discriminant(eq) != 256 * discriminant(eq.poly())) ++monic_fail;
  }
  bool pass = law_fail == 0 && class_fail == 0 && monic_fail == 0;
  Json summary = {{"transforms", tested},
                  {"law_failures", law_fail},
                  {"square_class_failures", class_fail},
                  {"monic_quintics", 200},
                  {"monic_failures", monic_fail}};
  return finish("discriminant", rows, summary, pass, params.verbose);
}

Json run_suite(const std::string& name, const SuiteParams& params) {
  if (name == "traces") return verify_traces(params);
  if (name == "epsilon") return verify_epsilon(params);
  if (name == "symbols") return verify_symbols(params);
  if (name == "discriminant") return verify_discriminant(params);
  throw DomainError("unknown suite '" + name + "' (expected traces, epsilon, symbols or discriminant)");
}

}  // namespace g2root::suites
