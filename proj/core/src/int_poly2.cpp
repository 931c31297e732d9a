#include "rootforge/int_poly2.hpp"

#include <algorithm>

#include "rootforge/errors.hpp"

namespace rootforge {

namespace {
const IntPoly kZeroPoly;

BigInt binomial(int n, int k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}
}  // namespace

IntPoly2 IntPoly2::from_x(const IntPoly& p) {
  IntPoly2 r;
  if (!p.is_zero()) r.c.push_back(p);
  return r;
}

IntPoly2 IntPoly2::from_y(const IntPoly& p) {
  IntPoly2 r;
  for (const auto& v : p.c) r.c.push_back(IntPoly::constant(v));
  r.trim();
  return r;
}

IntPoly2 IntPoly2::constant(const BigInt& a) { return from_x(IntPoly::constant(a)); }

IntPoly2 IntPoly2::term(const BigInt& a, int i, int j) {
  IntPoly2 r;
  r.add_term(a, i, j);
  return r;
}

int IntPoly2::deg_x() const {
  int d = -1;
  for (const auto& p : c) d = std::max(d, p.degree());
  return d;
}

int IntPoly2::total_degree() const {
  int d = -1;
  for (size_t j = 0; j < c.size(); ++j)
    if (!c[j].is_zero()) d = std::max(d, c[j].degree() + static_cast<int>(j));
  return d;
}

const IntPoly& IntPoly2::coeff_y(int j) const {
  if (j < 0 || j >= static_cast<int>(c.size())) return kZeroPoly;
  return c[j];
}

BigInt IntPoly2::coeff(int i, int j) const { return coeff_y(j).coeff(i); }

void IntPoly2::add_term(const BigInt& a, int i, int j) {
  if (static_cast<int>(c.size()) <= j) c.resize(j + 1);
  c[j] += IntPoly::monomial(a, i);
  trim();
}

void IntPoly2::trim() {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

std::string IntPoly2::to_string() const {
  std::string out;
  for (int j = deg_y(); j >= 0; --j) {
    for (int i = c[j].degree(); i >= 0; --i) {
      const BigInt& a = c[j].c[i];
      if (sgn(a) == 0) continue;
      BigInt mag = abs(a);
      if (out.empty()) {
        if (sgn(a) < 0) out += "-";
      } else {
        out += sgn(a) < 0 ? " - " : " + ";
      }
      std::string mono;
      if (i > 0) mono += i > 1 ? "x^" + std::to_string(i) : "x";
      if (j > 0) {
        if (!mono.empty()) mono += "*";
        mono += j > 1 ? "y^" + std::to_string(j) : "y";
      }
      if (mono.empty())
        out += mag.get_str();
      else if (mag == 1)
        out += mono;
      else
        out += mag.get_str() + "*" + mono;
    }
  }
  return out.empty() ? "0" : out;
}

IntPoly2 IntPoly2::operator-() const {
  IntPoly2 r = *this;
  for (auto& p : r.c) p = -p;
  return r;
}

IntPoly2& IntPoly2::operator+=(const IntPoly2& o) {
  if (o.c.size() > c.size()) c.resize(o.c.size());
  for (size_t j = 0; j < o.c.size(); ++j) c[j] += o.c[j];
  trim();
  return *this;
}

IntPoly2& IntPoly2::operator-=(const IntPoly2& o) {
  if (o.c.size() > c.size()) c.resize(o.c.size());
  for (size_t j = 0; j < o.c.size(); ++j) c[j] -= o.c[j];
  trim();
  return *this;
}

IntPoly2 operator*(const IntPoly2& a, const IntPoly2& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<IntPoly> r(a.c.size() + b.c.size() - 1);
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i].is_zero()) continue;
    for (size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
  }
  return IntPoly2(std::move(r));
}

IntPoly2 operator*(const IntPoly2& a, const IntPoly& s) {
  if (s.is_zero()) return {};
  std::vector<IntPoly> r;
  r.reserve(a.c.size());
  for (const auto& p : a.c) r.push_back(p * s);
  return IntPoly2(std::move(r));
}

const IntPoly& lc_y(const IntPoly2& f) { return f.is_zero() ? kZeroPoly : f.c.back(); }

IntPoly2 derivative_x(const IntPoly2& f) {
  std::vector<IntPoly> r;
  for (const auto& p : f.c) r.push_back(derivative(p));
  return IntPoly2(std::move(r));
}

IntPoly2 derivative_y(const IntPoly2& f) {
  if (f.deg_y() <= 0) return {};
  std::vector<IntPoly> r;
  for (size_t j = 1; j < f.c.size(); ++j) r.push_back(f.c[j] * BigInt(static_cast<unsigned long>(j)));
  return IntPoly2(std::move(r));
}

IntPoly2 shear(const IntPoly2& f, const BigInt& s) {
  if (f.is_zero()) throw DomainError("shear of the zero polynomial");
  if (sgn(s) == 0) return f;
  // a x^i y^j -> a (x + s y)^i y^j = sum_k C(i,k) s^k a x^(i-k) y^(j+k)
  IntPoly2 r;
  const int dx = f.deg_x();
  std::vector<BigInt> spow(dx + 1);
  spow[0] = 1;
  for (int k = 1; k <= dx; ++k) spow[k] = spow[k - 1] * s;
  r.c.resize(f.c.size() + dx);
  for (size_t j = 0; j < f.c.size(); ++j) {
    for (int i = 0; i <= f.c[j].degree(); ++i) {
      const BigInt& a = f.c[j].c[i];
      if (sgn(a) == 0) continue;
      for (int k = 0; k <= i; ++k) {
        BigInt t = a * binomial(i, k) * spow[k];
        IntPoly& target = r.c[j + k];
        if (target.degree() < i - k) target.c.resize(i - k + 1);
        target.c[i - k] += t;
      }
    }
  }
  for (auto& p : r.c) p.trim();
  r.trim();
  return r;
}

IntPoly evaluate_x(const IntPoly2& f, const BigInt& x0) {
  std::vector<BigInt> r;
  for (const auto& p : f.c) r.push_back(evaluate(p, x0));
  return IntPoly(std::move(r));
}

IntPoly evaluate_y(const IntPoly2& f, const BigInt& y0) {
  IntPoly acc;
  for (int j = f.deg_y(); j >= 0; --j) {
    acc *= y0;
    acc += f.c[j];
  }
  return acc;
}

IntPoly content_y(const IntPoly2& f) {
  IntPoly g;
  for (const auto& p : f.c) {
    if (p.is_zero()) continue;
    g = g.is_zero() ? (sgn(p.lc()) < 0 ? -p : p) : gcd_full(g, p);
    if (g.degree() == 0 && g.c[0] == 1) break;
  }
  return g;
}

IntPoly2 primitive_y(const IntPoly2& f) {
  if (f.is_zero()) return f;
  IntPoly g = content_y(f);
  if (sgn(lc_y(f).lc()) < 0) g = -g;
  return exact_div(f, g);
}

IntPoly2 pseudo_remainder_y(const IntPoly2& a, const IntPoly2& b) {
  if (b.is_zero()) throw DomainError("pseudo remainder by zero");
  IntPoly2 r = a;
  const int db = b.deg_y();
  const IntPoly& lb = lc_y(b);
  while (!r.is_zero() && r.deg_y() >= db) {
    const int shift = r.deg_y() - db;
    IntPoly lr = lc_y(r);
    IntPoly2 t = r * lb;
    for (int i = 0; i <= db; ++i) t.c[i + shift] -= lr * b.c[i];
    t.trim();
    r = std::move(t);
  }
  return r;
}

IntPoly2 exact_div(const IntPoly2& a, const IntPoly& b) {
  std::vector<IntPoly> r;
  for (const auto& p : a.c) r.push_back(exact_div(p, b));
  return IntPoly2(std::move(r));
}

IntPoly2 exact_div(const IntPoly2& a, const IntPoly2& b) {
  if (b.is_zero()) throw DomainError("division by the zero polynomial");
  IntPoly2 r = a;
  const int db = b.deg_y();
  std::vector<IntPoly> q(std::max(0, a.deg_y() - db + 1));
  while (!r.is_zero()) {
    if (r.deg_y() < db) throw DomainError("bivariate division is not exact");
    const int shift = r.deg_y() - db;
    IntPoly t = exact_div(lc_y(r), lc_y(b));
    for (int i = 0; i <= db; ++i) r.c[i + shift] -= t * b.c[i];
    r.trim();
    q[shift] = std::move(t);
  }
  return IntPoly2(std::move(q));
}

IntPoly2 gcd(const IntPoly2& a, const IntPoly2& b) {
  if (a.is_zero() && b.is_zero()) throw DomainError("gcd of two zero polynomials");
  auto normalize = [](IntPoly2 g) {
    if (!g.is_zero() && sgn(lc_y(g).lc()) < 0) g = -g;
    return g;
  };
  if (a.is_zero()) return normalize(b);
  if (b.is_zero()) return normalize(a);
  IntPoly ca = content_y(a), cb = content_y(b);
  IntPoly cont = gcd_full(ca, cb);
  IntPoly2 A = exact_div(a, ca), B = exact_div(b, cb);
  if (A.deg_y() < B.deg_y()) std::swap(A, B);
  while (!B.is_zero()) {
    if (B.deg_y() == 0) {
      A = IntPoly2::constant(1);
      break;
    }
    IntPoly2 R = pseudo_remainder_y(A, B);
    A = std::move(B);
    B = primitive_y(R);
  }
  return normalize(primitive_y(A) * cont);
}

}  // namespace rootforge
