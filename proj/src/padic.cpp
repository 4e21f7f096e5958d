#include "g2root/padic.hpp"

#include <algorithm>
#include <climits>
#include <set>

namespace g2root {

Sign sign_from_int(int v) {
  if (v == 1) return Sign::plus;
  if (v == -1) return Sign::minus;
  throw DomainError("sign must be +1 or -1, got " + std::to_string(v));
}

long Valuation::value() const {
  if (infinite_) throw DomainError("valuation of zero is infinite");
  return value_;
}

Valuation Valuation::operator+(const Valuation& o) const {
  if (infinite_ || o.infinite_) return infinity();
  return Valuation(value_ + o.value_);
}

Rational parse_rational(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (c != ' ' && c != '\t') s.push_back(c);
  }
  if (s.empty()) throw DomainError("empty rational");
  auto valid_int = [](std::string_view t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    return std::all_of(t.begin() + i, t.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den.find_first_of("+-") != std::string::npos) {
    throw DomainError("malformed rational '" + std::string(text) + "'");
  }
  if (num[0] == '+') num.erase(0, 1);
  Integer n(num), d(den);
  if (d == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

bool is_prime(long p) {
  if (p < 2) return false;
  Integer z(p);
  return mpz_probab_prime_p(z.get_mpz_t(), 40) != 0;
}

void require_prime(long p) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
}

long ord(const Integer& x, long p) {
  if (x == 0) throw DomainError("valuation of zero");
  Integer q = abs(x);
  Integer pz(p);
  return static_cast<long>(mpz_remove(q.get_mpz_t(), q.get_mpz_t(), pz.get_mpz_t()));
}

long ord(const Rational& x, long p) {
  if (x == 0) throw DomainError("valuation of zero");
  Integer n = x.get_num(), d = x.get_den();
  Integer pz(p);
  long vn = static_cast<long>(mpz_remove(n.get_mpz_t(), n.get_mpz_t(), pz.get_mpz_t()));
  long vd = static_cast<long>(mpz_remove(d.get_mpz_t(), d.get_mpz_t(), pz.get_mpz_t()));
  return vn - vd;
}

Valuation val(const Rational& x, long p) {
  require_prime(p);
  if (x == 0) return Valuation::infinity();
  return Valuation(ord(x, p));
}

Integer ipow(long base, unsigned long exp) {
  Integer r;
  Integer b(base);
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), exp);
  return r;
}

Rational rpow(const Rational& base, long exp) {
  if (exp < 0) {
    if (base == 0) throw DomainError("zero to a negative power");
    return rpow(Rational(1) / base, -exp);
  }
  Integer n, d;
  mpz_pow_ui(n.get_mpz_t(), base.get_num().get_mpz_t(), static_cast<unsigned long>(exp));
  mpz_pow_ui(d.get_mpz_t(), base.get_den().get_mpz_t(), static_cast<unsigned long>(exp));
  return Rational(n, d);
}

Rational unit_part(const Rational& x, long p) {
  require_prime(p);
  if (x == 0) throw DomainError("unit part of zero");
  long v = ord(x, p);
  if (v >= 0) return x / Rational(ipow(p, static_cast<unsigned long>(v)));
  return x * Rational(ipow(p, static_cast<unsigned long>(-v)));
}

Integer residue(const Rational& x, const Integer& m) {
  Integer inv;
  if (mpz_invert(inv.get_mpz_t(), x.get_den().get_mpz_t(), m.get_mpz_t()) == 0) {
    if (m == 1) return 0;
    throw DomainError("denominator of " + to_string(x) + " not invertible mod " + m.get_str());
  }
  Integer r = (x.get_num() * inv) % m;
  if (r < 0) r += m;
  return r;
}

long residue(const Rational& x, long m) { return residue(x, Integer(m)).get_si(); }

int legendre(const Rational& x, long p) {
  require_prime(p);
  if (p == 2) throw DomainError("Legendre symbol needs an odd prime");
  if (x != 0 && ord(x, p) < 0) throw DomainError("Legendre symbol of a non-integral element");
  Integer r = residue(x, Integer(p));
  Integer pz(p);
  return mpz_legendre(r.get_mpz_t(), pz.get_mpz_t());
}

namespace {

// (u - 1)/2 and (u^2 - 1)/8 mod 2 for a 2-adic unit, read off u mod 8.
int eps2(long u8) { return ((u8 - 1) / 2) & 1; }
int omega2(long u8) { return ((u8 * u8 - 1) / 8) & 1; }

}  // namespace

Sign hilbert(const Rational& a, const Rational& b, long p) {
  require_prime(p);
  if (a == 0 || b == 0) throw DomainError("Hilbert symbol of zero");
  long alpha = ord(a, p), beta = ord(b, p);
  Rational u = unit_part(a, p), v = unit_part(b, p);
  if (p == 2) {
    long u8 = residue(u, 8L), v8 = residue(v, 8L);
    int e = eps2(u8) * eps2(v8) + (alpha & 1) * omega2(v8) + (beta & 1) * omega2(u8);
    return (e & 1) ? Sign::minus : Sign::plus;
  }
  int s = 1;
  if ((alpha & 1) && (beta & 1) && ((p - 1) / 2) % 2 == 1) s = -s;
  if (beta & 1) s *= legendre(u, p);
  if (alpha & 1) s *= legendre(v, p);
  return sign_from_int(s);
}

Sign hilbert_real(const Rational& a, const Rational& b) {
  if (a == 0 || b == 0) throw DomainError("Hilbert symbol of zero");
  return (a < 0 && b < 0) ? Sign::minus : Sign::plus;
}

long least_nonresidue(long p) {
  require_prime(p);
  if (p == 2) throw DomainError("no quadratic non-residues mod 2");
  for (long u = 2;; ++u) {
    if (legendre(Rational(u), p) == -1) return u;
  }
}

Rational square_class(const Rational& x, long p) {
  require_prime(p);
  if (x == 0) throw DomainError("square class of zero");
  long k = ord(x, p) & 1;
  Rational u = unit_part(x, p);
  if (p == 2) {
    long e = residue(u, 8L);
    return Rational(e * (k ? 2 : 1));
  }
  long rep = legendre(u, p) == 1 ? 1 : least_nonresidue(p);
  return Rational(rep * (k ? p : 1));
}

namespace {

Integer pollard_brent(const Integer& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    Integer y = 2, x, q = 1, g = 1, ys;
    const unsigned long m = 128;
    unsigned long r = 1;
    auto f = [&](const Integer& v) { return Integer((v * v + c) % n); };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = (q * abs(Integer(x - y))) % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        Integer d = abs(Integer(x - ys));
        mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(Integer n, std::set<Integer>& out) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 40)) {
    out.insert(n);
    return;
  }
  Integer d = pollard_brent(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

std::vector<long> prime_divisors(const Integer& n) {
  if (n == 0) throw DomainError("prime divisors of zero");
  Integer m = abs(n);
  std::set<Integer> found;
  for (long q = 2; q < 100000 && m > 1; ++q) {
    if (q * q > m) break;
    if (mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(q))) {
      found.insert(Integer(q));
      Integer qz(q);
      mpz_remove(m.get_mpz_t(), m.get_mpz_t(), qz.get_mpz_t());
    }
  }
  factor_into(m, found);
  std::vector<long> out;
  for (const auto& f : found) {
    if (!f.fits_slong_p()) throw DomainError("prime factor " + f.get_str() + " is too large");
    out.push_back(f.get_si());
  }
  return out;
}

}  // namespace g2root
