#include "rootforge/mod_poly.hpp"

#include "rootforge/errors.hpp"
#include "rootforge/int_poly2.hpp"

namespace rootforge {

ModPoly::ModPoly(std::vector<uint64_t> coeffs, uint64_t prime) : c(std::move(coeffs)), p(prime) {
  for (auto& v : c) v %= p;
  trim();
}

void ModPoly::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

std::string ModPoly::to_string(char var) const {
  std::string out;
  for (int d = degree(); d >= 0; --d) {
    if (c[d] == 0) continue;
    if (!out.empty()) out += " + ";
    if (c[d] != 1 || d == 0) out += std::to_string(c[d]);
    if (d > 0) {
      if (c[d] != 1) out += "*";
      out += var;
      if (d > 1) out += "^" + std::to_string(d);
    }
  }
  return out.empty() ? "0" : out;
}

uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t p) {
  return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

uint64_t inv_mod(uint64_t a, uint64_t p) {
  // Extended Euclid on signed 128-bit values.
  __int128 t = 0, nt = 1, r = p, nr = a % p;
  if (nr == 0) throw DomainError("inverse of zero modulo p");
  while (nr != 0) {
    __int128 q = r / nr;
    __int128 tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) throw DomainError("element not invertible modulo p");
  if (t < 0) t += p;
  return static_cast<uint64_t>(t);
}

BigInt mod_reduce(const BigInt& v, uint64_t prime) {
  BigInt r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), prime);
  return r;
}

ModPoly mod_reduce(const IntPoly& f, uint64_t prime) {
  if (prime < 2) throw DomainError("modulus must be at least 2");
  std::vector<uint64_t> r(f.c.size());
  for (size_t i = 0; i < f.c.size(); ++i) r[i] = mpz_fdiv_ui(f.c[i].get_mpz_t(), prime);
  return ModPoly(std::move(r), prime);
}

ModPoly2 mod_reduce(const IntPoly2& f, uint64_t prime) {
  ModPoly2 r;
  r.p = prime;
  for (const auto& cy : f.c) r.c.push_back(mod_reduce(cy, prime));
  while (!r.c.empty() && r.c.back().is_zero()) r.c.pop_back();
  return r;
}

ModPoly monic(const ModPoly& a) {
  if (a.is_zero()) return a;
  uint64_t inv = inv_mod(a.lc(), a.p);
  ModPoly r = a;
  for (auto& v : r.c) v = mul_mod(v, inv, a.p);
  return r;
}

ModPoly add(const ModPoly& a, const ModPoly& b) {
  ModPoly r = a;
  if (b.c.size() > r.c.size()) r.c.resize(b.c.size());
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = (r.c[i] + b.c[i]) % a.p;
  r.trim();
  return r;
}

ModPoly sub(const ModPoly& a, const ModPoly& b) {
  ModPoly r = a;
  if (b.c.size() > r.c.size()) r.c.resize(b.c.size());
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = (r.c[i] + a.p - b.c[i]) % a.p;
  r.trim();
  return r;
}

ModPoly mul(const ModPoly& a, const ModPoly& b) {
  if (a.is_zero() || b.is_zero()) return ModPoly({}, a.p);
  std::vector<uint64_t> r(a.c.size() + b.c.size() - 1);
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j) r[i + j] = (r[i + j] + mul_mod(a.c[i], b.c[j], a.p)) % a.p;
  return ModPoly(std::move(r), a.p);
}

void divrem(const ModPoly& a, const ModPoly& b, ModPoly* q, ModPoly* r) {
  if (b.is_zero()) throw DomainError("modular division by zero polynomial");
  if (a.p != b.p) throw DomainError("modulus mismatch");
  const uint64_t p = a.p;
  std::vector<uint64_t> rem = a.c;
  const int db = b.degree();
  std::vector<uint64_t> quo(a.degree() >= db ? a.degree() - db + 1 : 0);
  uint64_t inv = inv_mod(b.lc(), p);
  for (int d = a.degree(); d >= db; --d) {
    if (rem[d] == 0) continue;
    uint64_t t = mul_mod(rem[d], inv, p);
    quo[d - db] = t;
    for (int i = 0; i <= db; ++i) rem[d - db + i] = (rem[d - db + i] + p - mul_mod(t, b.c[i], p)) % p;
  }
  if (q) *q = ModPoly(std::move(quo), p);
  if (r) *r = ModPoly(std::move(rem), p);
}

ModPoly mod_gcd(const ModPoly& a, const ModPoly& b) {
  if (a.p != b.p) throw DomainError("modulus mismatch");
  ModPoly x = a, y = b;
  while (!y.is_zero()) {
    ModPoly r;
    divrem(x, y, nullptr, &r);
    x = std::move(y);
    y = std::move(r);
  }
  return monic(x);
}

ModPoly mod_div(const ModPoly& a, const ModPoly& b) {
  ModPoly q, r;
  divrem(a, b, &q, &r);
  if (!r.is_zero()) throw DomainError("modular division is not exact");
  return q;
}

uint64_t mod_resultant(const ModPoly& a, const ModPoly& b) {
  if (a.is_zero() || b.is_zero()) throw DomainError("resultant with a zero polynomial");
  const uint64_t p = a.p;
  ModPoly f = a, g = b;
  uint64_t res = 1;
  // res(f, g) = (-1)^(df dg) lc(g)^(df - dr) res(g, r) with r = f mod g.
  while (true) {
    int df = f.degree(), dg = g.degree();
    if (dg == 0) {
      uint64_t v = 1;
      for (int i = 0; i < df; ++i) v = mul_mod(v, g.c[0], p);
      return mul_mod(res, v, p);
    }
    ModPoly r;
    divrem(f, g, nullptr, &r);
    if (r.is_zero()) return 0;
    if ((df & 1) && (dg & 1)) res = (p - res) % p;
    for (int i = 0; i < df - r.degree(); ++i) res = mul_mod(res, g.lc(), p);
    f = std::move(g);
    g = std::move(r);
  }
}

const std::vector<uint64_t>& prime_table() {
  static const std::vector<uint64_t> primes = {
      2147483647, 2147483629, 2147483587, 2147483579, 2147483563,
      2147483549, 2147483543, 2147483497, 2147483489, 2147483477,
      2147483423, 2147483399, 2147483353, 2147483323, 2147483269,
      2147483249, 2147483237, 2147483179, 2147483171, 2147483137};
  return primes;
}

}  // namespace rootforge
