#include "rootforge/int_poly.hpp"

#include <algorithm>

#include "rootforge/errors.hpp"

namespace rootforge {

namespace {
const BigInt kZero(0);

void append_term(std::string& out, const BigInt& a, int d, char var) {
  if (sgn(a) == 0) return;
  BigInt mag = abs(a);
  if (out.empty()) {
    if (sgn(a) < 0) out += "-";
  } else {
    out += sgn(a) < 0 ? " - " : " + ";
  }
  bool unit = mag == 1;
  if (!unit || d == 0) out += mag.get_str();
  if (d > 0) {
    if (!unit) out += "*";
    out += var;
    if (d > 1) out += "^" + std::to_string(d);
  }
}
}  // namespace

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  for (long v : coeffs) c.emplace_back(v);
  trim();
}

IntPoly IntPoly::constant(const BigInt& a) { return IntPoly(std::vector<BigInt>{a}); }

IntPoly IntPoly::monomial(const BigInt& a, int degree) {
  std::vector<BigInt> v(degree + 1);
  v[degree] = a;
  return IntPoly(std::move(v));
}

const BigInt& IntPoly::lc() const { return c.empty() ? kZero : c.back(); }

BigInt IntPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c.size())) return 0;
  return c[i];
}

void IntPoly::trim() {
  while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
}

std::string IntPoly::to_string(char var) const {
  std::string out;
  for (int d = degree(); d >= 0; --d) append_term(out, c[d], d, var);
  return out.empty() ? "0" : out;
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& v : r.c) v = -v;
  return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.c.size() > c.size()) c.resize(o.c.size());
  for (size_t i = 0; i < o.c.size(); ++i) c[i] += o.c[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.c.size() > c.size()) c.resize(o.c.size());
  for (size_t i = 0; i < o.c.size(); ++i) c[i] -= o.c[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator*=(const BigInt& s) {
  if (sgn(s) == 0) {
    c.clear();
    return *this;
  }
  for (auto& v : c) v *= s;
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> r(a.c.size() + b.c.size() - 1);
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (sgn(a.c[i]) == 0) continue;
    for (size_t j = 0; j < b.c.size(); ++j)
      mpz_addmul(r[i + j].get_mpz_t(), a.c[i].get_mpz_t(), b.c[j].get_mpz_t());
  }
  return IntPoly(std::move(r));
}

IntPoly derivative(const IntPoly& p) {
  if (p.degree() <= 0) return {};
  std::vector<BigInt> r(p.c.size() - 1);
  for (size_t i = 1; i < p.c.size(); ++i) r[i - 1] = p.c[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(r));
}

IntPoly pow(const IntPoly& p, int e) {
  IntPoly r = IntPoly::constant(1), b = p;
  while (e > 0) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

IntPoly shift_up(const IntPoly& p, int k) {
  if (p.is_zero()) return p;
  std::vector<BigInt> r(k);
  r.insert(r.end(), p.c.begin(), p.c.end());
  return IntPoly(std::move(r));
}

BigInt content(const IntPoly& p) {
  BigInt g = 0;
  for (const auto& v : p.c) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return p;
  BigInt g = content(p);
  if (sgn(p.lc()) < 0) g = -g;
  if (g == 1) return p;
  IntPoly r = p;
  for (auto& v : r.c) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  return r;
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw DomainError("pseudo_remainder by zero");
  IntPoly r = a;
  const int db = b.degree();
  const BigInt& lb = b.lc();
  while (!r.is_zero() && r.degree() >= db) {
    int shift = r.degree() - db;
    BigInt lr = r.lc();
    for (auto& v : r.c) v *= lb;
    for (int i = 0; i <= db; ++i)
      mpz_submul(r.c[i + shift].get_mpz_t(), lr.get_mpz_t(), b.c[i].get_mpz_t());
    r.trim();
  }
  return r;
}

namespace {
bool divide_exact(const IntPoly& a, const IntPoly& b, IntPoly* quotient) {
  if (b.is_zero()) throw DomainError("division by the zero polynomial");
  if (a.is_zero()) {
    if (quotient) *quotient = IntPoly();
    return true;
  }
  if (a.degree() < b.degree()) return false;
  std::vector<BigInt> r = a.c;
  const int db = b.degree();
  std::vector<BigInt> q(a.degree() - db + 1);
  for (int d = a.degree(); d >= db; --d) {
    if (sgn(r[d]) == 0) continue;
    if (!mpz_divisible_p(r[d].get_mpz_t(), b.lc().get_mpz_t())) return false;
    BigInt t;
    mpz_divexact(t.get_mpz_t(), r[d].get_mpz_t(), b.lc().get_mpz_t());
    for (int i = 0; i <= db; ++i)
      mpz_submul(r[d - db + i].get_mpz_t(), t.get_mpz_t(), b.c[i].get_mpz_t());
    q[d - db] = std::move(t);
  }
  for (int d = 0; d < db; ++d)
    if (sgn(r[d]) != 0) return false;
  if (quotient) *quotient = IntPoly(std::move(q));
  return true;
}
}  // namespace

IntPoly exact_div(const IntPoly& a, const IntPoly& b) {
  IntPoly q;
  if (!divide_exact(a, b, &q)) throw DomainError("polynomial division is not exact");
  return q;
}

bool divides(const IntPoly& b, const IntPoly& a) { return divide_exact(a, b, nullptr); }

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() && b.is_zero()) throw DomainError("gcd of two zero polynomials");
  if (a.is_zero()) return primitive_part(b);
  if (b.is_zero()) return primitive_part(a);
  IntPoly A = primitive_part(a), B = primitive_part(b);
  if (A.degree() < B.degree()) std::swap(A, B);
  while (!B.is_zero()) {
    if (B.degree() == 0) return IntPoly::constant(1);
    IntPoly R = pseudo_remainder(A, B);
    A = std::move(B);
    B = primitive_part(R);
  }
  return primitive_part(A);
}

IntPoly gcd_full(const IntPoly& a, const IntPoly& b) {
  BigInt c;
  BigInt ca = content(a), cb = content(b);
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  return gcd(a, b) * c;
}

SquareFree square_free_part(const IntPoly& p) {
  if (p.degree() < 1) throw DomainError("square_free_part of a constant polynomial");
  IntPoly g = gcd(p, derivative(p));
  IntPoly part = primitive_part(exact_div(p, g));
  return {part, part.degree()};
}

BigInt determinant(std::vector<std::vector<BigInt>> m) {
  const size_t n = m.size();
  if (n == 0) return 1;
  int sign = 1;
  BigInt prev = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m[k][k]) == 0) {
      size_t piv = k + 1;
      while (piv < n && sgn(m[piv][k]) == 0) ++piv;
      if (piv == n) return 0;
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        BigInt t = m[i][j] * m[k][k];
        mpz_submul(t.get_mpz_t(), m[i][k].get_mpz_t(), m[k][j].get_mpz_t());
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

BigInt resultant(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() || g.is_zero()) throw DomainError("resultant with a zero polynomial");
  const int m = f.degree(), n = g.degree();
  const int N = m + n;
  if (N == 0) return 1;
  std::vector<std::vector<BigInt>> s(N, std::vector<BigInt>(N));
  // Column c holds the coefficient of x^(N-1-c).
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= m; ++i) s[r][r + (m - i)] = f.c[i];
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= n; ++i) s[n + r][r + (n - i)] = g.c[i];
  return determinant(std::move(s));
}

BigInt evaluate(const IntPoly& p, const BigInt& x) {
  BigInt acc = 0;
  for (int i = p.degree(); i >= 0; --i) {
    acc *= x;
    acc += p.c[i];
  }
  return acc;
}

Dyadic evaluate(const IntPoly& p, const Dyadic& x) {
  if (p.is_zero()) return Dyadic();
  if (x.exponent() >= 0) return Dyadic(evaluate(p, x.floor()));
  // Homogenized Horner: sum c_i m^i 2^(s(n-i)) with x = m 2^-s.
  const int64_t s = -x.exponent();
  const int n = p.degree();
  BigInt acc = p.c[n];
  for (int i = n - 1; i >= 0; --i) {
    acc *= x.mantissa();
    BigInt t;
    mpz_mul_2exp(t.get_mpz_t(), p.c[i].get_mpz_t(), static_cast<mp_bitcnt_t>(s * (n - i)));
    acc += t;
  }
  return Dyadic(std::move(acc), -s * n);
}

int sign_at(const IntPoly& p, const Dyadic& x) { return evaluate(p, x).sign(); }

std::vector<ComplexDyadic> to_dyadic(const IntPoly& p) {
  std::vector<ComplexDyadic> r;
  r.reserve(p.c.size());
  for (const auto& v : p.c) r.emplace_back(Dyadic(v));
  return r;
}

}  // namespace rootforge
