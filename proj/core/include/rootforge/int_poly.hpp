#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "rootforge/dyadic.hpp"

namespace rootforge {

// Dense univariate integer polynomial; c[i] is the coefficient of x^i.
// The zero polynomial has an empty coefficient vector and degree -1.
struct IntPoly {
  std::vector<BigInt> c;

  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs) : c(std::move(coeffs)) { trim(); }
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const BigInt& a);
  static IntPoly monomial(const BigInt& a, int degree);

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  const BigInt& lc() const;
  BigInt coeff(int i) const;
  void trim();
  std::string to_string(char var = 'x') const;

  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const BigInt& s);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const BigInt& s) { return a *= s; }
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c == b.c; }
};

IntPoly derivative(const IntPoly& p);
IntPoly pow(const IntPoly& p, int e);
// p(x) -> p(x) * x^k
IntPoly shift_up(const IntPoly& p, int k);

// Nonnegative gcd of the coefficients (0 for the zero polynomial).
BigInt content(const IntPoly& p);
// p / content(p) with positive leading coefficient.
IntPoly primitive_part(const IntPoly& p);

// lc(b)^e * a mod b for a suitable e; b nonzero.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);
// Exact quotient a / b over Z; throws DomainError if b does not divide a.
IntPoly exact_div(const IntPoly& a, const IntPoly& b);
bool divides(const IntPoly& b, const IntPoly& a);

// Primitive gcd with positive leading coefficient.
IntPoly gcd(const IntPoly& a, const IntPoly& b);
// gcd including the integer content: gcd(content a, content b) * gcd(a, b).
IntPoly gcd_full(const IntPoly& a, const IntPoly& b);

struct SquareFree {
  IntPoly part;
  int k = 0;
};
SquareFree square_free_part(const IntPoly& p);

// Sylvester-determinant resultant with the rows of f first.
BigInt resultant(const IntPoly& f, const IntPoly& g);
// Determinant of a square integer matrix (fraction-free elimination).
BigInt determinant(std::vector<std::vector<BigInt>> m);

BigInt evaluate(const IntPoly& p, const BigInt& x);
Dyadic evaluate(const IntPoly& p, const Dyadic& x);
int sign_at(const IntPoly& p, const Dyadic& x);

std::vector<ComplexDyadic> to_dyadic(const IntPoly& p);

}  // namespace rootforge
