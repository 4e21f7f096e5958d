// One line per acceptance criterion; exit status 1 when any of them fails.

#include "oracles.hpp"

#include "g2root/artin_schreier.hpp"
#include "g2root/epsilon.hpp"
#include "g2root/rootnum.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

using namespace g2root;
using genus2::Equation;
using genus2::VariableChange;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream notes;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (!pass) notes << "; ";
      pass = false;
      notes << what;
    }
  }
};

Rational ratio(long n, long d) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

Equation example() { return Equation::from_strings({"1/4", "5/2", "-5/4", "-5/2", "5/4", "1"}); }

std::optional<Equation> transformed(const Equation& e, const VariableChange& vc) {
  try {
    return genus2::apply_change(e, vc);
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

Rational random_rational(std::mt19937_64& rng, long span, long den) {
  std::uniform_int_distribution<long> n(-span, span), d(1, den);
  return ratio(n(rng), d(rng));
}

VariableChange random_change(std::mt19937_64& rng, long span, long den) {
  for (;;) {
    VariableChange vc{random_rational(rng, span, den), random_rational(rng, span, den), random_rational(rng, span, den),
                      random_rational(rng, span, den), random_rational(rng, span, den)};
    if (vc.det() != 0 && vc.e != 0) return vc;
  }
}

void worked_example(Outcome& o) {
  Equation e = example();
  o.require(genus2::discriminant(e) == -896875, "discriminant");
  auto sf = genus2::normalize_5adic(e);
  o.require(sf.a6() == ratio(5, 4) && sf.v6 == 1, "special form a6 = 5/4, v6 = 1");
  auto w = genus2::is_maximal(e);
  o.require(w.nu == 5 && w.type == genus2::InertiaType::C5xC8 && w.maximal, "nu = 5, C5xC8, maximal");
  auto g = rootnum::global_root_number(e, {{2, Sign::plus}});
  std::map<long, int> want = {{rootnum::kInfinity, 1}, {2, 1}, {5, -1}, {7, -1}, {41, 1}};
  o.require(g.places.size() == want.size(), "set of places");
  for (const auto& l : g.places) {
    auto it = want.find(l.place);
    o.require(it != want.end() && l.root_number && to_int(*l.root_number) == it->second,
              "local root number at " + std::to_string(l.place));
  }
  o.require(g.global == Sign::plus, "global root number +1");
}

void discriminant_law(Outcome& o) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> deg(5, 6);
  long checked = 0, bad = 0;
  while (checked < 1000) {
    std::vector<Rational> c;
    int d = deg(rng);
    for (int i = 0; i <= d; ++i) c.push_back(random_rational(rng, 9, 4));
    if (c.back() == 0 || genus2::discriminant_of(QPoly(c)) == 0) continue;
    Equation e{QPoly(c)};
    VariableChange vc = random_change(rng, 7, 3);
    auto t = transformed(e, vc);
    if (!t) continue;
    ++checked;
    if (genus2::discriminant(*t) != genus2::discriminant(e) * rpow(vc.e, 20) * rpow(vc.det(), -30)) ++bad;
  }
  o.require(bad == 0, std::to_string(bad) + " of 1000 transforms break the law");
  long monic_bad = 0;
  for (int i = 0; i < 200; ++i) {
    std::vector<Rational> c;
    for (int k = 0; k < 5; ++k) c.push_back(random_rational(rng, 9, 4));
    c.push_back(1);
    QPoly p(c);
    if (g2root::discriminant(p) == 0) continue;
    if (genus2::discriminant(Equation(p)) != 256 * oracle::discriminant(p)) ++monic_bad;
  }
  o.require(monic_bad == 0, "monic quintic identity");
}

void trace_sweep(Outcome& o) {
  ff::FiniteField F5(5, 1);
  ff::ASCurve curve(F5, 1, 0);
  long bad = 0;
  for (unsigned f = 1; f <= 4; ++f)
    for (int n : {0, 1})
      for (long r = 0; r < 5; ++r)
        if (ff::trace_lefschetz(curve, {n, r, f}) != ff::trace_formula(n, r, f, 5)) ++bad;
  o.require(bad == 0, std::to_string(bad) + " of 40 trace cells differ");
  auto n25 = ff::count_points(curve, 2);
  o.require(n25 == 26, "|C_{1,0}(F_25)| = " + std::to_string(n25) + ", expected 26");
  for (unsigned e = 1; e <= 4; ++e) {
    long long q = static_cast<long long>(std::pow(5, e));
    o.require(static_cast<long long>(ff::count_points(curve, e)) == 1 + q - ff::trace_lefschetz(curve, {0, 0, e}),
              "Lefschetz consistency at f = " + std::to_string(e));
  }
  for (long r = 1; r < 5; ++r)
    o.require(ff::count_fixed(curve, {0, r, 1}) == static_cast<std::uint64_t>(5 * (legendre(Rational(r), 5) + 1) + 1),
              "fixed points at r = " + std::to_string(r));
}

void gauss_sums(Outcome& o) {
  for (int f = 1; f <= 3; ++f) {
    eps::Complex g = eps::gauss_sum(ff::FiniteField(5, f));
    double q = std::pow(5.0, f);
    o.require(std::abs(g * g - q) <= 1e-9 * q, "G(F_5^" + std::to_string(f) + ")^2");
    double sign = f % 2 ? 1.0 : -1.0;  // -(-1)^f
    o.require(eps::approx_equiv(g, sign, {}), "sign pattern at f = " + std::to_string(f));
  }
}

void epsilon_sweep(Outcome& o) {
  long as_bad = 0, unit_bad = 0, count = 0;
  for (long a = 1; a <= 2; ++a) {
    long order = a == 1 ? 4 : 20;
    for (long j = 1; j < order; ++j) {
      if (a == 2 && j % 5 == 0) continue;
      for (long k = 0; k < 100; ++k) {
        eps::WeilCharacter chi(ratio(j, order), ratio(k, 100));
        ++count;
        if (std::abs(std::abs(eps::root_number(chi)) - 1.0) > 1e-9) ++unit_bad;
        if (a == 2 && !eps::verify_abbes_saito(chi, 1e-9)) ++as_bad;
      }
    }
  }
  o.require(as_bad == 0, std::to_string(as_bad) + " conductor-2 characters fail Abbes-Saito");
  o.require(unit_bad == 0, std::to_string(unit_bad) + " of " + std::to_string(count) + " root numbers off the unit circle");
}

std::vector<Rational> reps(long p) {
  std::vector<Rational> r;
  if (p == 2) {
    for (long e : {1L, 3L, 5L, 7L})
      for (long k : {1L, 2L}) r.emplace_back(e * k);
  } else {
    long u = least_nonresidue(p);
    r = {Rational(1), Rational(u), Rational(p), Rational(u * p)};
  }
  return r;
}

void hilbert_suite(Outcome& o) {
  const std::vector<long> primes = {2, 3, 5, 7, 41};
  for (long p : primes) {
    long bad = 0;
    for (const auto& a : reps(p)) {
      if (hilbert(a, -a, p) != Sign::plus) ++bad;
      for (const auto& b : reps(p)) {
        if (hilbert(a, b, p) != hilbert(b, a, p)) ++bad;
        for (const auto& c : reps(p))
          if (hilbert(a, b * c, p) != hilbert(a, b, p) * hilbert(a, c, p)) ++bad;
      }
    }
    o.require(bad == 0, "identities at p = " + std::to_string(p));
  }
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<long> n(-2000, 2000);
  long pf_bad = 0;
  for (int i = 0; i < 500;) {
    long an = n(rng), ad = n(rng), bn = n(rng), bd = n(rng);
    if (!an || !ad || !bn || !bd) continue;
    ++i;
    Rational a = ratio(an, ad), b = ratio(bn, bd);
    Sign prod = hilbert_real(a, b);
    for (long p : prime_divisors(2 * a.get_num() * a.get_den() * b.get_num() * b.get_den())) prod *= hilbert(a, b, p);
    if (prod != Sign::plus) ++pf_bad;
  }
  o.require(pf_bad == 0, "product formula");
  std::uniform_int_distribution<int> ex(-3, 3), sgn(0, 1);
  for (long p : primes) {
    long bad = 0;
    for (int i = 0; i < 200; ++i) {
      auto pick = [&] {
        Rational x = 1;
        for (long q : {2L, 3L, 5L, 7L, 41L}) x *= rpow(Rational(q), ex(rng));
        return sgn(rng) ? Rational(-x) : x;
      };
      Rational a = pick(), b = pick();
      if (to_int(hilbert(a, b, p)) != oracle::hilbert_by_search(a, b, p)) ++bad;
    }
    o.require(bad == 0, "oracle disagreement at p = " + std::to_string(p));
  }
}

void invariance(Outcome& o) {
  std::mt19937_64 rng(31);
  long done = 0, bad = 0;
  std::string first_failure;
  while (done < 200) {
    VariableChange vc = random_change(rng, 6, 3);
    auto t = transformed(example(), vc);
    if (!t) continue;
    ++done;
    try {
      auto w = genus2::is_maximal(*t);
      auto sf = genus2::normalize_5adic(*t);
      if (!w.maximal || rootnum::local_root_number_5(sf, w.special_delta) != Sign::minus) ++bad;
    } catch (const std::exception& e) {
      ++bad;
      if (first_failure.empty()) first_failure = e.what();
    }
  }
  o.require(bad == 0, std::to_string(bad) + " of 200 transforms" + (first_failure.empty() ? "" : ": " + first_failure));
}

void classification_table(Outcome& o) {
  using genus2::InertiaType;
  for (unsigned long nu = 1; nu <= 16; ++nu) {
    InertiaType want = nu % 2 ? InertiaType::C5xC8 : nu % 4 == 2 ? InertiaType::Dic5
                                                   : nu % 8 == 4   ? InertiaType::C10
                                                                   : InertiaType::C5;
    o.require(genus2::inertia_type(Rational(ipow(5, nu)) * 7) == want, "nu = " + std::to_string(nu));
  }
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<void(Outcome&)> run;
    double limit_s;  // 0 = untimed
  };
  const std::vector<Criterion> criteria = {
      {1, "worked example", worked_example, 1.0},
      {2, "discriminant transformation law", discriminant_law, 0},
      {3, "trace formula sweep", trace_sweep, 60.0},
      {4, "quadratic Gauss sums", gauss_sums, 0},
      {5, "epsilon factor sweep", epsilon_sweep, 60.0},
      {6, "Hilbert symbol suite", hilbert_suite, 0},
      {7, "root number invariance", invariance, 0},
      {8, "inertia classification table", classification_table, 0},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_s > 0) o.require(secs < c.limit_s, "runtime over " + std::to_string(c.limit_s) + " s");
    std::cout << (o.pass ? "[PASS]" : "[FAIL]") << " criterion " << c.id << ": " << c.name;
    if (c.limit_s > 0) std::cout << " (" << std::fixed << std::setprecision(3) << secs << " s)";
    if (!o.pass) std::cout << " -- " << o.notes.str();
    std::cout << "\n";
    if (!o.pass) ++failed;
  }
  return failed ? 1 : 0;
}
