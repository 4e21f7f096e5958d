#include "g2root/ffield.hpp"

#include <stdexcept>
#include <string>

namespace g2root::ff {

namespace {

std::uint64_t upow(long p, int f) {
  std::uint64_t q = 1;
  for (int i = 0; i < f; ++i) {
    q *= static_cast<std::uint64_t>(p);
    if (q > kMaxOrder) return kMaxOrder + 1;
  }
  return q;
}

// Monic polynomial of degree d whose lower coefficients are the base-p digits of k.
fp::Poly monic_from_index(long p, int d, std::uint64_t k) {
  fp::Poly m(static_cast<std::size_t>(d) + 1, 0);
  for (int i = 0; i < d; ++i) {
    m[static_cast<std::size_t>(i)] = static_cast<long>(k % static_cast<std::uint64_t>(p));
    k /= static_cast<std::uint64_t>(p);
  }
  m.back() = 1;
  return m;
}

}  // namespace

bool is_irreducible(const fp::Poly& m0, long p) {
  require_prime(p);
  fp::Poly m = fp::trim(m0);
  int n = fp::degree(m);
  if (n < 1) return false;
  if (n == 1) return true;
  for (int d = 1; 2 * d <= n; ++d) {
    std::uint64_t count = upow(p, d);
    if (count > kMaxOrder) throw DomainError("irreducibility check too large for exhaustive search");
    for (std::uint64_t k = 0; k < count; ++k) {
      if (fp::divmod(m, monic_from_index(p, d, k), p).second.empty()) return false;
    }
  }
  return true;
}

fp::Poly smallest_irreducible(long p, int f) {
  require_prime(p);
  if (f < 1) throw DomainError("field degree must be positive");
  std::uint64_t count = upow(p, f);
  if (count > kMaxOrder) throw DomainError("field too large");
  for (std::uint64_t k = 0; k < count; ++k) {
    fp::Poly m = monic_from_index(p, f, k);
    if (is_irreducible(m, p)) return m;
  }
  throw std::logic_error("no irreducible polynomial found");
}

fp::Poly default_modulus(long p, int f) {
  static const std::vector<fp::Poly> five = {
      {0, 1},
      {2, 0, 1},
      {1, 1, 0, 1},
      {2, 0, 0, 0, 1},
      {1, 4, 0, 0, 0, 1},
      {2, 1, 0, 0, 0, 0, 1},
      {1, 1, 0, 0, 0, 0, 0, 1},
      {2, 0, 0, 0, 0, 0, 0, 0, 1},
  };
  if (p == 5 && f >= 1 && f <= 8) return five[static_cast<std::size_t>(f - 1)];
  return smallest_irreducible(p, f);
}

struct FiniteField::Tables {
  long p = 0;
  int f = 0;
  std::uint64_t q = 0;
  fp::Poly modulus;
  std::vector<std::uint64_t> pw;  // p^i
  std::vector<Elem> exp;          // q - 1 entries
  std::vector<std::uint32_t> log;
  Elem gen = 1;
  std::vector<long> trace_basis;

  std::vector<long> unpack(Elem x) const {
    std::vector<long> c(static_cast<std::size_t>(f));
    for (int i = 0; i < f; ++i) {
      c[static_cast<std::size_t>(i)] = static_cast<long>(x % static_cast<std::uint64_t>(p));
      x /= static_cast<Elem>(p);
    }
    return c;
  }
  Elem pack(const std::vector<long>& c) const {
    std::uint64_t x = 0;
    for (int i = f - 1; i >= 0; --i) {
      long v = i < static_cast<int>(c.size()) ? c[static_cast<std::size_t>(i)] : 0;
      x = x * static_cast<std::uint64_t>(p) + static_cast<std::uint64_t>(((v % p) + p) % p);
    }
    return static_cast<Elem>(x);
  }
  Elem slow_mul(Elem x, Elem y) const {
    fp::Poly a = fp::trim(unpack(x)), b = fp::trim(unpack(y));
    return pack(fp::divmod(fp::mul(a, b, p), modulus, p).second);
  }
  Elem slow_pow(Elem x, std::uint64_t e) const {
    Elem r = 1;
    while (e) {
      if (e & 1) r = slow_mul(r, x);
      x = slow_mul(x, x);
      e >>= 1;
    }
    return r;
  }
};

FiniteField::FiniteField(long p, int f) : FiniteField(p, default_modulus(p, f)) {}

FiniteField::FiniteField(long p, fp::Poly modulus) {
  require_prime(p);
  modulus = fp::trim(modulus);
  for (auto& c : modulus) c = ((c % p) + p) % p;
  modulus = fp::trim(modulus);
  int f = fp::degree(modulus);
  if (f < 1 || modulus.back() != 1) throw DomainError("field modulus must be monic of positive degree");
  std::uint64_t q = upow(p, f);
  if (q > kMaxOrder) throw DomainError("field F_" + std::to_string(p) + "^" + std::to_string(f) + " is too large");
  if (!is_irreducible(modulus, p)) throw DomainError("field modulus is reducible");

  auto t = std::make_shared<Tables>();
  t->p = p;
  t->f = f;
  t->q = q;
  t->modulus = modulus;
  for (int i = 0; i <= f; ++i) t->pw.push_back(upow(p, i));

  std::vector<long> qm1_primes;
  for (long l : prime_divisors(Integer(static_cast<unsigned long>(q - 1)))) qm1_primes.push_back(l);
  for (Elem cand = 1; cand < q; ++cand) {
    bool primitive = true;
    for (long l : qm1_primes) {
      if (t->slow_pow(cand, (q - 1) / static_cast<std::uint64_t>(l)) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      t->gen = cand;
      break;
    }
  }
  t->exp.resize(q - 1);
  t->log.assign(q, 0);
  Elem x = 1;
  for (std::uint64_t k = 0; k + 1 < q; ++k) {
    t->exp[k] = x;
    t->log[x] = static_cast<std::uint32_t>(k);
    x = t->slow_mul(x, t->gen);
  }

  for (int i = 0; i < f; ++i) {
    std::vector<long> sum(static_cast<std::size_t>(f), 0);
    Elem y = static_cast<Elem>(t->pw[static_cast<std::size_t>(i)]);
    for (int j = 0; j < f; ++j) {
      std::vector<long> c = t->unpack(y);
      for (int k = 0; k < f; ++k) sum[static_cast<std::size_t>(k)] = (sum[static_cast<std::size_t>(k)] + c[static_cast<std::size_t>(k)]) % p;
      y = t->slow_pow(y, static_cast<std::uint64_t>(p));
    }
    for (int k = 1; k < f; ++k)
      if (sum[static_cast<std::size_t>(k)] != 0) throw std::logic_error("trace left the prime field");
    t->trace_basis.push_back(sum[0]);
  }
  t_ = std::move(t);
}

long FiniteField::p() const { return t_->p; }
int FiniteField::degree() const { return t_->f; }
std::uint64_t FiniteField::order() const { return t_->q; }
const fp::Poly& FiniteField::modulus() const { return t_->modulus; }

Elem FiniteField::from_coeffs(const std::vector<long>& c) const {
  if (static_cast<int>(c.size()) > t_->f) throw DomainError("too many coefficients for field element");
  return t_->pack(c);
}

std::vector<long> FiniteField::coeffs(Elem x) const { return t_->unpack(x); }

Elem FiniteField::from_int(long n) const { return static_cast<Elem>(((n % t_->p) + t_->p) % t_->p); }

Elem FiniteField::add(Elem x, Elem y) const {
  const auto p = static_cast<Elem>(t_->p);
  Elem out = 0, scale = 1;
  for (int i = 0; i < t_->f; ++i) {
    Elem d = (x % p + y % p) % p;
    out += d * scale;
    scale *= p;
    x /= p;
    y /= p;
  }
  return out;
}

Elem FiniteField::neg(Elem x) const {
  const auto p = static_cast<Elem>(t_->p);
  Elem out = 0, scale = 1;
  for (int i = 0; i < t_->f; ++i) {
    Elem d = (p - x % p) % p;
    out += d * scale;
    scale *= p;
    x /= p;
  }
  return out;
}

Elem FiniteField::sub(Elem x, Elem y) const { return add(x, neg(y)); }

Elem FiniteField::mul(Elem x, Elem y) const {
  if (x == 0 || y == 0) return 0;
  std::uint64_t k = std::uint64_t{t_->log[x]} + t_->log[y];
  if (k >= t_->q - 1) k -= t_->q - 1;
  return t_->exp[k];
}

Elem FiniteField::inv(Elem x) const {
  if (x == 0) throw DomainError("inverse of zero in a finite field");
  std::uint64_t k = t_->log[x];
  return t_->exp[k == 0 ? 0 : t_->q - 1 - k];
}

Elem FiniteField::pow(Elem x, std::uint64_t e) const {
  if (e == 0) return 1;
  if (x == 0) return 0;
  unsigned __int128 k = static_cast<unsigned __int128>(t_->log[x]) * e;
  return t_->exp[static_cast<std::uint64_t>(k % (t_->q - 1))];
}

Elem FiniteField::frobenius(Elem x, unsigned k) const {
  k %= static_cast<unsigned>(t_->f);
  return pow(x, t_->pw[k]);
}

long FiniteField::trace(Elem x) const {
  std::vector<long> c = t_->unpack(x);
  long tr = 0;
  for (int i = 0; i < t_->f; ++i)
    tr = (tr + c[static_cast<std::size_t>(i)] * t_->trace_basis[static_cast<std::size_t>(i)]) % t_->p;
  return tr;
}

int FiniteField::quadratic_character(Elem x) const {
  if (x == 0) return 0;
  if (t_->p == 2) return 1;
  return (t_->log[x] % 2 == 0) ? 1 : -1;
}

Elem FiniteField::generator() const { return t_->gen; }

std::uint64_t FiniteField::log(Elem x) const {
  if (x == 0) throw DomainError("logarithm of zero");
  return t_->log[x];
}

Elem FiniteField::exp(std::uint64_t k) const { return t_->exp[k % (t_->q - 1)]; }

bool operator==(const FiniteField& a, const FiniteField& b) {
  return a.t_ == b.t_ || (a.t_->p == b.t_->p && a.t_->modulus == b.t_->modulus);
}

Embedding::Embedding(const FiniteField& sub, const FiniteField& big) : sub_(sub), big_(big) {
  if (sub.p() != big.p() || big.degree() % sub.degree() != 0)
    throw DomainError("no embedding between these fields");
  const fp::Poly& m = sub.modulus();
  auto eval = [&](Elem x) {
    Elem acc = 0;
    for (auto it = m.rbegin(); it != m.rend(); ++it) acc = big.add(big.mul(acc, x), big.from_int(*it));
    return acc;
  };
  // Nonzero elements of the degree-f subfield are the powers of g^((Q-1)/(q-1)).
  std::uint64_t step = (big.order() - 1) / (sub.order() - 1);
  Elem alpha = 0;
  bool found = eval(0) == 0;
  for (std::uint64_t j = 0; !found && j + 1 < sub.order(); ++j) {
    Elem cand = big.exp(j * step);
    if (eval(cand) == 0) {
      alpha = cand;
      found = true;
    }
  }
  if (!found) throw std::logic_error("modulus of the subfield has no root in the extension");
  Elem pw = 1;
  for (int i = 0; i < sub.degree(); ++i) {
    basis_.push_back(pw);
    pw = big.mul(pw, alpha);
  }
}

Elem Embedding::operator()(Elem x) const {
  std::vector<long> c = sub_.coeffs(x);
  Elem acc = 0;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) acc = big_.add(acc, big_.mul(big_.from_int(c[i]), basis_[i]));
  return acc;
}

}  // namespace g2root::ff
