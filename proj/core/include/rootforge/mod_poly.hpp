#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rootforge/int_poly.hpp"

namespace rootforge {

struct IntPoly2;

// Polynomial over Z/pZ for a word-sized prime p; c[i] is the residue of x^i.
struct ModPoly {
  std::vector<uint64_t> c;
  uint64_t p = 2;

  ModPoly() = default;
  ModPoly(std::vector<uint64_t> coeffs, uint64_t prime);

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  uint64_t lc() const { return c.empty() ? 0 : c.back(); }
  void trim();
  std::string to_string(char var = 'x') const;
  friend bool operator==(const ModPoly&, const ModPoly&) = default;
};

struct ModPoly2 {
  std::vector<ModPoly> c;  // by power of y
  uint64_t p = 2;
};

uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t p);
uint64_t inv_mod(uint64_t a, uint64_t p);

ModPoly mod_reduce(const IntPoly& f, uint64_t prime);
ModPoly2 mod_reduce(const IntPoly2& f, uint64_t prime);
BigInt mod_reduce(const BigInt& v, uint64_t prime);

ModPoly monic(const ModPoly& a);
ModPoly add(const ModPoly& a, const ModPoly& b);
ModPoly sub(const ModPoly& a, const ModPoly& b);
ModPoly mul(const ModPoly& a, const ModPoly& b);
// Quotient and remainder; b nonzero.
void divrem(const ModPoly& a, const ModPoly& b, ModPoly* q, ModPoly* r);
// Monic gcd; gcd(0, 0) is the zero polynomial.
ModPoly mod_gcd(const ModPoly& a, const ModPoly& b);
// Exact quotient; throws DomainError when b does not divide a.
ModPoly mod_div(const ModPoly& a, const ModPoly& b);

// Resultant over Z/pZ (Euclidean algorithm); both nonzero.
uint64_t mod_resultant(const ModPoly& a, const ModPoly& b);

// Fixed table of primes just below 2^31, consumed in order by the counting gate.
const std::vector<uint64_t>& prime_table();

}  // namespace rootforge
