#include "g2root/epsilon.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <unordered_map>

namespace g2root::eps {

namespace {

constexpr long kMaxSumConductor = 8;

Rational frac(Rational x) {
  x.canonicalize();
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return x - Rational(fl);
}

std::uint64_t pow5(long k) {
  std::uint64_t r = 1;
  for (long i = 0; i < k; ++i) r *= 5;
  return r;
}

// log_2 of every unit mod 5^a, indexed by residue.
std::vector<std::uint64_t> log_table(long a) {
  const std::uint64_t n = pow5(a);
  std::vector<std::uint64_t> table(n, 0);
  std::uint64_t x = 1;
  for (std::uint64_t k = 0; k < 4 * n / 5; ++k) {
    table[x] = k;
    x = x * 2 % n;
  }
  return table;
}

}  // namespace

Complex root_of_unity(const Rational& x) {
  double t = frac(x).get_d();
  return std::polar(1.0, 2 * std::numbers::pi * t);
}

Complex psi_eval(const Rational& x) {
  Integer den = x.get_den();
  Integer five(kP);
  mpz_remove(den.get_mpz_t(), den.get_mpz_t(), five.get_mpz_t());
  if (den != 1) throw DomainError("psi is evaluated on Z[1/5] only, got " + to_string(x));
  return root_of_unity(x / kP);
}

WeilCharacter::WeilCharacter(const Rational& unit_exp, const Rational& unif_val_exp)
    : unit_exp_(frac(unit_exp)), unif_val_exp_(frac(unif_val_exp)) {
  if (unit_exp_ == 0) {
    a_ = 0;
    return;
  }
  Integer den = unit_exp_.get_den();
  Integer two(2), five(kP);
  long v2 = static_cast<long>(mpz_remove(den.get_mpz_t(), den.get_mpz_t(), two.get_mpz_t()));
  long v5 = static_cast<long>(mpz_remove(den.get_mpz_t(), den.get_mpz_t(), five.get_mpz_t()));
  if (den != 1 || v2 > 2) throw DomainError("unit exponent " + to_string(unit_exp_) + " has order not dividing 4*5^k");
  if (v5 + 1 > 25) throw DomainError("conductor too large");
  a_ = v5 + 1;
}

Integer discrete_log2(const Integer& u0, long a) {
  if (a < 1 || a > 25) throw DomainError("discrete log needs 1 <= a <= 25");
  const std::uint64_t n = pow5(a);
  Integer uz = u0 % Integer(static_cast<unsigned long>(n));
  if (uz < 0) uz += Integer(static_cast<unsigned long>(n));
  const std::uint64_t u = uz.get_ui();
  if (u % kP == 0) throw DomainError("discrete log of a non-unit");
  auto mulmod = [n](std::uint64_t x, std::uint64_t y) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * y % n);
  };
  const std::uint64_t order = 4 * (n / 5);
  const auto m = static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(order))));
  std::unordered_map<std::uint64_t, std::uint64_t> baby;
  std::uint64_t x = 1;
  for (std::uint64_t j = 0; j < m; ++j) {
    baby.emplace(x, j);
    x = mulmod(x, 2);
  }
  // x = 2^m; giant step multiplies by 2^-m
  Integer inv, xz(static_cast<unsigned long>(x)), nz(static_cast<unsigned long>(n));
  mpz_invert(inv.get_mpz_t(), xz.get_mpz_t(), nz.get_mpz_t());
  const std::uint64_t giant = inv.get_ui();
  std::uint64_t g = u;
  for (std::uint64_t i = 0; i <= m; ++i) {
    if (auto it = baby.find(g); it != baby.end()) return Integer(static_cast<unsigned long>((i * m + it->second) % order));
    g = mulmod(g, giant);
  }
  throw std::logic_error("2 is not a primitive root modulo 5^a");
}

Rational WeilCharacter::phase(const Rational& x) const {
  if (x == 0) throw DomainError("character evaluated at zero");
  long v = ord(x, kP);
  Rational acc = Rational(v) * unif_val_exp_;
  if (a_ > 0) {
    Rational u = unit_part(x, kP);
    Integer r = residue(u, Integer(static_cast<unsigned long>(pow5(a_))));
    acc += Rational(discrete_log2(r, a_)) * unit_exp_;
  }
  return frac(acc);
}

WeilCharacter WeilCharacter::inverse() const { return WeilCharacter(-unit_exp_, -unif_val_exp_); }

WeilCharacter WeilCharacter::power(long k) const {
  return WeilCharacter(Rational(k) * unit_exp_, Rational(k) * unif_val_exp_);
}

Complex chi_eval(const WeilCharacter& chi, const Rational& x) { return chi(x); }

Complex epsilon_factor(const WeilCharacter& chi) {
  const long a = chi.conductor();
  if (a < 1) throw DomainError("epsilon factor sum needs a ramified character");
  if (a > kMaxSumConductor) throw DomainError("conductor too large for the finite sum");
  const std::uint64_t n = pow5(a);
  const auto logs = log_table(a);
  const Rational scale(Integer(1), Integer(static_cast<unsigned long>(pow5(a - 1))));
  Complex sum = 0;
  for (std::uint64_t u = 1; u < n; ++u) {
    if (u % kP == 0) continue;
    Rational x = scale * Rational(Integer(static_cast<unsigned long>(u)));
    // chi(x) = chi(5)^(1-a) chi(u)
    Rational chi_phase = Rational(1 - a) * chi.unif_val_exp() +
                         Rational(Integer(static_cast<unsigned long>(logs[u]))) * chi.unit_exp();
    sum += root_of_unity(x / kP - chi_phase);
  }
  return sum;
}

Complex root_number(const WeilCharacter& chi) {
  Complex e = epsilon_factor(chi);
  return e / std::abs(e);
}

std::vector<Rational> gauge_candidates(const WeilCharacter& chi, bool refined) {
  const long a = chi.conductor();
  if (a < 2) throw DomainError("gauges need conductor at least 2");
  if (a > kMaxSumConductor) throw DomainError("conductor too large for the gauge search");
  const long n = (a + 1) / 2;
  const long d = refined ? a - n : n;
  const std::uint64_t N = pow5(a);
  const std::uint64_t span = pow5(a - d);
  const std::uint64_t step = pow5(d);
  const auto logs = log_table(a);
  const std::uint64_t inv2 = (N + 1) / 2;
  const Rational cden(Integer(1), Integer(static_cast<unsigned long>(pow5(a - 1))));
  auto mulmod = [N](std::uint64_t x, std::uint64_t y) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * y % N);
  };

  std::vector<Rational> lhs(span);
  for (std::uint64_t j = 0; j < span; ++j) {
    std::uint64_t x = step * j % N;
    std::uint64_t arg = (1 + x) % N;
    if (refined) arg = (arg + mulmod(mulmod(x, x), inv2)) % N;
    lhs[j] = frac(Rational(Integer(static_cast<unsigned long>(logs[arg]))) * chi.unit_exp());
  }
  std::vector<Rational> out;
  for (std::uint64_t t = 1; t < span; ++t) {
    if (t % kP == 0) continue;
    Rational c = cden * Rational(Integer(static_cast<unsigned long>(t)));
    bool ok = true;
    for (std::uint64_t j = 0; j < span && ok; ++j) {
      Rational x(Integer(static_cast<unsigned long>(step * j % N)));
      ok = frac(c * x / kP) == lhs[j];
    }
    if (ok) out.push_back(c);
  }
  return out;
}

Rational gauge(const WeilCharacter& chi, bool refined) {
  auto c = gauge_candidates(chi, refined);
  if (c.empty()) throw std::logic_error("no gauge satisfies the defining identity");
  return c.front();
}

Complex gauss_sum(const ff::FiniteField& field) {
  const long p = field.p();
  if (p == 2) throw DomainError("quadratic Gauss sums need odd p");
  std::vector<std::uint64_t> hist(static_cast<std::size_t>(p), 0);
  for (ff::Elem x = 0; x < field.order(); ++x) ++hist[static_cast<std::size_t>(field.trace(field.square(x)))];
  Complex g = 0;
  for (long t = 0; t < p; ++t)
    g += static_cast<double>(hist[static_cast<std::size_t>(t)]) * std::polar(1.0, 2 * std::numbers::pi * t / p);
  return g;
}

bool approx_equiv(Complex z, Complex w, const ApproxConfig& cfg) {
  if (std::abs(z) == 0 || std::abs(w) == 0) throw DomainError("approx_equiv of zero");
  Complex u = z / w;
  u /= std::abs(u);
  double m = std::pow(static_cast<double>(cfg.p), static_cast<double>(cfg.max_power));
  double theta = std::arg(u) / (2 * std::numbers::pi);
  double j = std::round(theta * m);
  return std::abs(u - std::polar(1.0, 2 * std::numbers::pi * j / m)) <= cfg.tolerance;
}

AbbesSaitoCheck abbes_saito(const WeilCharacter& chi, double tolerance) {
  const long a = chi.conductor();
  if (a < 2) throw DomainError("Abbes-Saito comparison needs conductor at least 2");
  AbbesSaitoCheck out;
  out.lhs = epsilon_factor(chi);
  out.c = gauge(chi, true);
  static const Complex g5 = gauss_sum(ff::FiniteField(kP, 1));
  Complex rhs = chi.inverse()(out.c) * psi_eval(out.c) * std::pow(g5, static_cast<double>(-a));
  // (-1 / F_5) = +1, so the binomial exponent drops out
  if (a % 2 == 1) rhs *= static_cast<double>(to_int(hilbert(Rational(-2) * out.c, Rational(kP), kP)));
  out.rhs = rhs;
  out.holds = approx_equiv(out.lhs, out.rhs, {kP, a, tolerance});
  return out;
}

bool verify_abbes_saito(const WeilCharacter& chi, double tolerance) { return abbes_saito(chi, tolerance).holds; }

}  // namespace g2root::eps
