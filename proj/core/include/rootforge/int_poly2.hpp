#pragma once

#include <string>
#include <vector>

#include "rootforge/int_poly.hpp"

namespace rootforge {

// Dense bivariate integer polynomial stored as a polynomial in y with
// coefficients in Z[x]: c[j] is the coefficient of y^j. Trailing zero
// y-coefficients are trimmed; the zero polynomial has no entries.
struct IntPoly2 {
  std::vector<IntPoly> c;

  IntPoly2() = default;
  explicit IntPoly2(std::vector<IntPoly> coeffs) : c(std::move(coeffs)) { trim(); }

  static IntPoly2 from_x(const IntPoly& p);
  static IntPoly2 from_y(const IntPoly& p);
  static IntPoly2 constant(const BigInt& a);
  // a * x^i * y^j
  static IntPoly2 term(const BigInt& a, int i, int j);

  int deg_y() const { return static_cast<int>(c.size()) - 1; }
  int deg_x() const;
  int total_degree() const;
  bool is_zero() const { return c.empty(); }
  const IntPoly& coeff_y(int j) const;
  BigInt coeff(int i, int j) const;
  void add_term(const BigInt& a, int i, int j);
  void trim();
  std::string to_string() const;

  IntPoly2 operator-() const;
  IntPoly2& operator+=(const IntPoly2& o);
  IntPoly2& operator-=(const IntPoly2& o);
  friend IntPoly2 operator+(IntPoly2 a, const IntPoly2& b) { return a += b; }
  friend IntPoly2 operator-(IntPoly2 a, const IntPoly2& b) { return a -= b; }
  friend IntPoly2 operator*(const IntPoly2& a, const IntPoly2& b);
  friend IntPoly2 operator*(const IntPoly2& a, const IntPoly& s);
  friend bool operator==(const IntPoly2& a, const IntPoly2& b) { return a.c == b.c; }
};

// Leading coefficient with respect to y.
const IntPoly& lc_y(const IntPoly2& f);
IntPoly2 derivative_x(const IntPoly2& f);
IntPoly2 derivative_y(const IntPoly2& f);
// f(x + s*y, y)
IntPoly2 shear(const IntPoly2& f, const BigInt& s);
// f(x0, y) as a polynomial in y.
IntPoly evaluate_x(const IntPoly2& f, const BigInt& x0);
// f(x, y0) as a polynomial in x.
IntPoly evaluate_y(const IntPoly2& f, const BigInt& y0);

// gcd over Z[x] of the y-coefficients (integer content included, positive lc).
IntPoly content_y(const IntPoly2& f);
IntPoly2 primitive_y(const IntPoly2& f);
IntPoly2 pseudo_remainder_y(const IntPoly2& a, const IntPoly2& b);
// Exact quotient in Z[x][y]; throws DomainError when not exact.
IntPoly2 exact_div(const IntPoly2& a, const IntPoly2& b);
IntPoly2 exact_div(const IntPoly2& a, const IntPoly& b);
// gcd in Z[x, y], normalized so that lc_y(lc_y) is positive.
IntPoly2 gcd(const IntPoly2& a, const IntPoly2& b);

}  // namespace rootforge
