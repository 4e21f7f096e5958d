#include "doctest.h"
#include "oracles.hpp"

#include "g2root/genus2.hpp"

#include <cstdlib>
#include <random>

using namespace g2root;
using namespace g2root::genus2;

namespace {

Equation eqn(std::vector<std::string> c) { return Equation::from_strings(c); }

Equation example() { return eqn({"1/4", "5/2", "-5/4", "-5/2", "5/4", "1"}); }

Rational r(long n, long d = 1) {
  Rational x(n, d);
  x.canonicalize();
  return x;
}

// Reference for 2^-12 disc(4P) (times lc(4P)^2 in degree 5) via the Sylvester oracle.
Rational reference_discriminant(const QPoly& p) {
  QPoly four = Rational(4) * p;
  Rational d = oracle::discriminant(four) / 4096;
  if (p.degree() == 5) d *= four.leading() * four.leading();
  return d;
}

Equation random_equation(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 4);
  std::uniform_int_distribution<int> deg(5, 6);
  for (;;) {
    int d = deg(rng);
    std::vector<Rational> c;
    for (int i = 0; i <= d; ++i) c.push_back(r(num(rng), den(rng)));
    if (c.back() == 0) continue;
    QPoly p(c);
    if (discriminant_of(p) == 0) continue;
    return Equation(p);
  }
}

VariableChange random_change(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-6, 6), den(1, 3);
  for (;;) {
    VariableChange vc{r(num(rng), den(rng)), r(num(rng), den(rng)), r(num(rng), den(rng)), r(num(rng), den(rng)),
                      r(num(rng), den(rng))};
    if (vc.det() != 0 && vc.e != 0) return vc;
  }
}

}  // namespace

TEST_SUITE("genus2") {

TEST_CASE("equation validation") {
  CHECK_THROWS_AS(eqn({"1", "0", "0", "1"}), DomainError);
  CHECK_THROWS_AS(eqn({"0", "0", "1", "0", "0", "1"}), SingularCurveError);  // X^2 (X^3 + 1)
  CHECK_THROWS_AS(eqn({"1", "x", "0", "0", "0", "1"}), DomainError);
  CHECK(example().degree() == 5);
  CHECK(example().coefficient_strings().front() == "1/4");
}

TEST_CASE("discriminant examples") {
  CHECK(discriminant(example()) == -896875);
  CHECK(discriminant(eqn({"5", "0", "0", "0", "0", "1"})) == Rational(ipow(2, 8) * ipow(5, 9)));
  for (int i = 0; i < 20; ++i) {
    std::mt19937_64 rng(static_cast<unsigned>(100 + i));
    auto e = random_equation(rng);
    CHECK(discriminant(e) == reference_discriminant(e.poly()));
  }
}

TEST_CASE("monic quintic identity") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 4);
  for (int i = 0; i < 50; ++i) {
    std::vector<Rational> c;
    for (int k = 0; k < 5; ++k) c.push_back(r(num(rng), den(rng)));
    c.push_back(1);
    QPoly p(c);
    if (g2root::discriminant(p) == 0) continue;
    CHECK(discriminant(Equation(p)) == 256 * oracle::discriminant(p));
  }
}

TEST_CASE("changes of variables") {
  const Equation e = example();
  CHECK(apply_change(e, VariableChange::identity()) == e);
  Equation moved = apply_change(e, {1, 1, 0, 1, 1});
  CHECK(discriminant(moved) == discriminant(e));
  CHECK(discriminant(apply_change(e, {1, 0, 0, 1, 2})) == discriminant(e) * Rational(ipow(2, 20)));
  CHECK_THROWS_AS(apply_change(e, {1, 0, 1, 0, 0}), DomainError);  // e = 0
  CHECK_THROWS_AS(apply_change(e, {1, 1, 1, 1, 1}), DomainError);  // det = 0
  // a degree-6 sextic with X -> 1/X' sends the root at 0 to infinity, degree 5
  Equation six = eqn({"0", "1", "0", "0", "0", "0", "1"});
  CHECK(apply_change(six, {0, 1, 1, 0, 1}).degree() == 5);
}

TEST_CASE("discriminant transformation law") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 150; ++i) {
    Equation e = random_equation(rng);
    VariableChange vc = random_change(rng);
    std::optional<Equation> t;
    try {
      t = apply_change(e, vc);
    } catch (const DomainError&) {
      continue;  // degree dropped below 5
    }
    CHECK(discriminant(*t) == discriminant(e) * rpow(vc.e, 20) * rpow(vc.det(), -30));
  }
}

TEST_CASE("composition of changes") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 40; ++i) {
    Equation e = random_equation(rng);
    VariableChange f = random_change(rng), g = random_change(rng);
    try {
      CHECK(apply_change(apply_change(e, f), g) == apply_change(e, g.after(f)));
    } catch (const DomainError&) {
    }
  }
}

TEST_CASE("5-adic roots") {
  // (X - 3)(X - 10)(X^3 + 7) and (5X - 1)(X^4 + X + 1)
  QPoly a = QPoly({Rational(-3), Rational(1)}) * QPoly({Rational(-10), Rational(1)}) *
            QPoly({Rational(7), Rational(0), Rational(0), Rational(1)});
  auto ra = rational_5adic_roots(a, 30);
  CHECK(ra.size() == 2);
  CHECK(std::count(ra.begin(), ra.end(), Rational(3)) == 1);
  CHECK(std::count(ra.begin(), ra.end(), Rational(10)) == 1);
  QPoly b = QPoly({Rational(-1), Rational(5)}) *
            QPoly({Rational(1), Rational(1), Rational(0), Rational(0), Rational(1)});
  auto rb = rational_5adic_roots(b, 30);
  REQUIRE(rb.size() == 1);
  CHECK(rb[0] == r(1, 5));
}

TEST_CASE("normalization of the worked example") {
  const Equation e = example();
  SpecialForm sf = normalize_5adic(e);
  CHECK(sf.a6() == r(5, 4));
  CHECK(sf.v6 == 1);
  CHECK(apply_change(e, sf.composite) == sf.equation);
  REQUIRE(!sf.steps.empty());
  CHECK(sf.steps.front().change == VariableChange::translation(1));
  CHECK(detect_wild5(e));
}

TEST_CASE("normalization lands in the special form") {
  for (auto c : std::vector<std::vector<std::string>>{{"5", "0", "0", "0", "0", "1"},
                                                      {"25", "0", "0", "0", "0", "1"},
                                                      {"48828125", "0", "0", "0", "0", "1"},
                                                      {"5", "0", "5", "0", "0", "1"}}) {
    Equation e = eqn(c);
    SpecialForm sf = normalize_5adic(e);
    CHECK(sf.equation.poly().leading() == 1);
    CHECK(sf.equation.degree() == 5);
    for (int k = 2; k <= 6; ++k)
      if (sf.a(k) != 0) CHECK(val(sf.a(k), 5).value() >= 0);
    CHECK(sf.v6 == ord(sf.a6(), 5));
    CHECK(sf.v6 % 5 != 0);
    CHECK(apply_change(e, sf.composite) == sf.equation);
  }
  CHECK(normalize_5adic(eqn({"48828125", "0", "0", "0", "0", "1"})).a6() == 5);  // 5^11
  CHECK(normalize_5adic(eqn({"25", "0", "0", "0", "0", "1"})).v6 == 2);
}

TEST_CASE("sextic with a rational root normalizes; without one it fails cleanly") {
  // X (X^5 + 5) as a sextic: root 0 goes to infinity
  Equation six = eqn({"0", "5", "0", "0", "0", "0", "1"});
  CHECK(detect_wild5(six));
  CHECK(normalize_5adic(six).v6 % 5 != 0);
  Equation good = eqn({"1", "1", "0", "0", "0", "1"});  // X^5 + X + 1
  CHECK_FALSE(detect_wild5(good));
  CHECK_THROWS_AS(normalize_5adic(good), NormalizationError);
  CHECK_THROWS_AS(is_maximal(good), NotWildError);
}

TEST_CASE("inertia classification table") {
  for (long nu = 1; nu <= 16; ++nu) {
    InertiaType t = inertia_type(Rational(ipow(5, static_cast<unsigned long>(nu))) * 3);
    InertiaType want = nu % 2 ? InertiaType::C5xC8 : nu % 4 == 2 ? InertiaType::Dic5
                                                 : nu % 8 == 4   ? InertiaType::C10
                                                                 : InertiaType::C5;
    CAPTURE(nu);
    CHECK(t == want);
  }
  CHECK(to_string(InertiaType::C5xC8) == "C5xC8");
  CHECK_THROWS_AS(inertia_type(Rational(0)), DomainError);
}

TEST_CASE("maximality") {
  auto w = is_maximal(example());
  CHECK(w.maximal);
  CHECK(w.nu == 5);
  CHECK(w.type == InertiaType::C5xC8);
  CHECK(w.conductor_odd);
  CHECK(w.delta == -896875);

  auto w5 = is_maximal(eqn({"5", "0", "0", "0", "0", "1"}));
  CHECK(w5.maximal);
  CHECK(w5.nu == 9);
  auto w25 = is_maximal(eqn({"25", "0", "0", "0", "0", "1"}));
  CHECK(w25.nu == 13);
  CHECK(w25.maximal);
  auto dic = is_maximal(eqn({"5", "0", "5", "0", "0", "1"}));
  CHECK(dic.nu == 6);
  CHECK_FALSE(dic.maximal);
  CHECK(dic.type == InertiaType::Dic5);
}

TEST_CASE("invariance of the special-form data under random transforms") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> num(-4, 4), den(1, 2);
  int tried = 0;
  while (tried < 25) {
    VariableChange vc{r(num(rng), den(rng)), r(num(rng), den(rng)), r(num(rng), den(rng)), r(num(rng), den(rng)),
                      r(num(rng), den(rng))};
    if (vc.det() == 0 || vc.e == 0) continue;
    std::optional<Equation> t;
    try {
      t = apply_change(example(), vc);
    } catch (const DomainError&) {
      continue;
    }
    ++tried;
    auto w = is_maximal(*t);
    CHECK(w.maximal);
    CHECK(w.nu % 2 == 1);
  }
}

TEST_CASE("precision from the environment") {
  setenv("GENUS2_PRECISION", "55", 1);
  CHECK(default_precision() == 55);
  setenv("GENUS2_PRECISION", "2", 1);
  CHECK_THROWS(default_precision());
  setenv("GENUS2_PRECISION", "lots", 1);
  CHECK_THROWS(default_precision());
  unsetenv("GENUS2_PRECISION");
  CHECK(default_precision() == 40);
}

}  // TEST_SUITE
