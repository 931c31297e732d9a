#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <tuple>
#include <utility>
#include <vector>

#include "rootforge/rootforge.hpp"

namespace rftest {

using rootforge::BigInt;
using rootforge::ComplexDisk;
using rootforge::ComplexDyadic;
using rootforge::Dyadic;
using rootforge::DyadicInterval;
using rootforge::IntPoly;
using rootforge::IntPoly2;

// Gaussian integer root with multiplicity.
struct KnownRoot {
  BigInt re;
  BigInt im;
  int mult = 1;
};

struct Constructed {
  IntPoly p;
  std::vector<KnownRoot> roots;
  int n() const { return p.degree(); }
  int k() const { return static_cast<int>(roots.size()); }
};

inline mpq_class to_q(const Dyadic& d) {
  mpq_class q(d.mantissa());
  if (d.exponent() >= 0)
    q *= mpq_class(mpz_class(1) << static_cast<mp_bitcnt_t>(d.exponent()));
  else
    q /= mpq_class(mpz_class(1) << static_cast<mp_bitcnt_t>(-d.exponent()));
  q.canonicalize();
  return q;
}

// Schoolbook product, kept separate from the library's own multiplication.
inline std::vector<BigInt> naive_mul(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<BigInt> r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

inline Constructed from_roots(const BigInt& lc, const std::vector<KnownRoot>& roots) {
  std::vector<BigInt> c{lc};
  for (const auto& r : roots) {
    std::vector<BigInt> f;
    if (r.im == 0)
      f = {-r.re, 1};
    else
      f = {r.re * r.re + r.im * r.im, -2 * r.re, 1};
    for (int m = 0; m < r.mult; ++m) c = naive_mul(c, f);
  }
  Constructed out;
  out.p = IntPoly(c);
  for (const auto& r : roots) {
    out.roots.push_back(r);
    if (r.im != 0) out.roots.push_back({r.re, -r.im, r.mult});
  }
  return out;
}

// Random distinct integer roots in [-bound, bound] with multiplicities in
// [1, max_mult] and total degree <= max_deg.
inline Constructed random_integer_roots(std::mt19937_64& rng, int max_deg, int max_mult,
                                        int64_t bound) {
  std::uniform_int_distribution<int> deg_d(2, max_deg);
  std::uniform_int_distribution<int> mult_d(1, max_mult);
  std::uniform_int_distribution<int64_t> root_d(-bound, bound);
  int target = deg_d(rng);
  std::vector<KnownRoot> roots;
  int deg = 0;
  while (deg < target) {
    int m = std::min(mult_d(rng), target - deg);
    BigInt r(static_cast<long>(root_d(rng)));
    bool dup = false;
    for (const auto& o : roots) dup = dup || o.re == r;
    if (dup) continue;
    roots.push_back({r, 0, m});
    deg += m;
  }
  return from_roots(1, roots);
}

// Mix of real and non-real Gaussian integer roots.
inline Constructed random_gaussian_roots(std::mt19937_64& rng, int max_deg, int max_mult,
                                         int64_t bound) {
  std::uniform_int_distribution<int> deg_d(2, max_deg);
  std::uniform_int_distribution<int> mult_d(1, max_mult);
  std::uniform_int_distribution<int64_t> root_d(-bound, bound);
  std::uniform_int_distribution<int> coin(0, 2);
  std::uniform_int_distribution<int64_t> lc_d(1, 5);
  int target = deg_d(rng);
  std::vector<KnownRoot> roots;
  int deg = 0;
  while (deg < target) {
    int m = std::min(mult_d(rng), target - deg);
    KnownRoot r{BigInt(static_cast<long>(root_d(rng))), 0, m};
    if (coin(rng) == 0 && deg + 2 * m <= target) {
      r.im = static_cast<long>(root_d(rng));
      if (r.im < 0) r.im = -r.im;
    }
    bool dup = false;
    for (const auto& o : roots) dup = dup || (o.re == r.re && (o.im == r.im || o.im == -r.im));
    if (dup) continue;
    roots.push_back(r);
    deg += r.im == 0 ? m : 2 * m;
  }
  return from_roots(BigInt(static_cast<long>(lc_d(rng))), roots);
}

inline ComplexDyadic as_point(const KnownRoot& r) { return {Dyadic(r.re), Dyadic(r.im)}; }

inline double distance(const KnownRoot& a, const KnownRoot& b) {
  mpz_class dr = a.re - b.re, di = a.im - b.im;
  mpz_class s = dr * dr + di * di;
  return std::sqrt(s.get_d());
}

// Exact squared separation of every root.
inline std::vector<mpz_class> separations_sq(const std::vector<KnownRoot>& roots) {
  std::vector<mpz_class> out;
  for (size_t i = 0; i < roots.size(); ++i) {
    mpz_class best = -1;
    for (size_t j = 0; j < roots.size(); ++j) {
      if (i == j) continue;
      mpz_class dr = roots[i].re - roots[j].re, di = roots[i].im - roots[j].im;
      mpz_class s = dr * dr + di * di;
      if (best < 0 || s < best) best = s;
    }
    out.push_back(best);
  }
  return out;
}

// R < sigma / (64 n), decided exactly from R^2 (64 n)^2 < sigma^2. A lone
// root (sigma_sq < 0) has infinite separation.
inline bool radius_below(const Dyadic& R, const mpz_class& sigma_sq, int n) {
  if (sigma_sq < 0) return true;
  mpq_class r = to_q(R);
  mpq_class lhs = r * r * mpq_class(64 * 64) * mpq_class(n) * mpq_class(n);
  return lhs < mpq_class(sigma_sq);
}

// Index of the disk containing `r`, -1 if none, -2 if several.
inline int locate(const std::vector<ComplexDisk>& disks, const ComplexDyadic& z) {
  int found = -1;
  for (size_t i = 0; i < disks.size(); ++i) {
    if (!disks[i].contains(z)) continue;
    if (found >= 0) return -2;
    found = static_cast<int>(i);
  }
  return found;
}

inline bool pairwise_disjoint(const std::vector<ComplexDisk>& disks) {
  for (size_t i = 0; i < disks.size(); ++i)
    for (size_t j = i + 1; j < disks.size(); ++j)
      if (disks[i].intersects(disks[j])) return false;
  return true;
}

// Exact complex rational arithmetic for independent expansions.
struct Cq {
  mpq_class re, im;
};

inline std::vector<Cq> expand_independent(const BigInt& lc, const std::vector<ComplexDyadic>& zs) {
  std::vector<Cq> c{{mpq_class(lc), 0}};
  for (const auto& z : zs) {
    mpq_class zr = to_q(z.re), zi = to_q(z.im);
    std::vector<Cq> next(c.size() + 1);
    for (size_t i = 0; i < c.size(); ++i) {
      next[i + 1].re += c[i].re;
      next[i + 1].im += c[i].im;
      next[i].re -= c[i].re * zr - c[i].im * zi;
      next[i].im -= c[i].re * zi + c[i].im * zr;
    }
    c = std::move(next);
  }
  return c;
}

// Upper bound on |a + bi| with 2^-bits absolute slack.
inline mpq_class abs_upper_q(const Cq& c, unsigned bits) {
  if (c.im == 0) return abs(c.re);
  if (c.re == 0) return abs(c.im);
  mpq_class s = c.re * c.re + c.im * c.im;
  mpz_class scaled = (s.get_num() << (2 * bits)) / s.get_den() + 1;
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
  root += 1;
  return mpq_class(root) / mpq_class(mpz_class(1) << bits);
}

// True when || p - lc prod (x - z) ||_1 <= 2^-b ||p||_1, via an independent
// exact expansion and upper bounds on the coefficient moduli.
inline bool backward_error_holds(const IntPoly& p, const std::vector<ComplexDyadic>& zs, int64_t b) {
  std::vector<Cq> e = expand_independent(p.lc(), zs);
  if (static_cast<int>(e.size()) != p.degree() + 1) return false;
  mpq_class norm = 0;
  for (const auto& v : p.c) norm += abs(mpq_class(v));
  mpq_class err = 0;
  unsigned bits = static_cast<unsigned>(b + 64);
  for (size_t i = 0; i < e.size(); ++i) {
    Cq d{mpq_class(p.c[i]) - e[i].re, -e[i].im};
    err += abs_upper_q(d, bits);
  }
  return err * mpq_class(mpz_class(1) << static_cast<mp_bitcnt_t>(b)) <= norm;
}

// Smallest power of two b meeting every precision condition of the
// clustering analysis, evaluated from the constructed roots: b >= 8n,
// b >= n log n, 2^(-b/(2m)) <= min(1/(2n^2), sigma/(2n)),
// 2^(-b/2) <= |P| / (16 (n+1) 2^tau M(z)^n),
// 2^(-b/(2m)) < min((sigma/(4n))^8, sigma/(1024 n^2)),
// 2^(-b/8) < min(1/16, |P| / ((n+1) 2^(2 n Gamma_p + 8n))).
inline int64_t b0_from_ground_truth(const Constructed& c) {
  const int n = c.n();
  const double dn = n;
  int64_t tau = 0;
  for (const auto& v : c.p.c) {
    mpz_class a = abs(v), l = abs(c.p.lc());
    while (a > l * (mpz_class(1) << static_cast<mp_bitcnt_t>(tau))) ++tau;
  }
  double gamma_p = 1;
  for (const auto& r : c.roots) {
    mpz_class s = r.re * r.re + r.im * r.im;
    gamma_p = std::max(gamma_p, 0.5 * std::log2(s.get_d()));
  }
  double need = std::max(8 * dn, dn * std::log2(dn));
  for (size_t i = 0; i < c.roots.size(); ++i) {
    const auto& zi = c.roots[i];
    const double m = zi.mult;
    double log_p = 0;
    double log_sigma = 1e300;
    for (size_t j = 0; j < c.roots.size(); ++j) {
      if (i == j) continue;
      double lg = std::log2(distance(zi, c.roots[j]));
      log_p += c.roots[j].mult * lg;
      log_sigma = std::min(log_sigma, lg);
    }
    mpz_class s = zi.re * zi.re + zi.im * zi.im;
    double log_m = std::max(0.0, 0.5 * std::log2(s.get_d()));
    need = std::max(need, 2 * m * std::log2(2 * dn * dn));
    if (c.roots.size() > 1) {
      need = std::max(need, 2 * m * (std::log2(2 * dn) - log_sigma));
      need = std::max(need, 2 * m * 8 * (std::log2(4 * dn) - log_sigma));
      need = std::max(need, 2 * m * (std::log2(1024 * dn * dn) - log_sigma));
    }
    need = std::max(need, 2 * (std::log2(16 * (dn + 1)) + tau + dn * log_m - log_p));
    need = std::max(need, 8.0 * 4);
    need = std::max(need, 8 * (std::log2(dn + 1) + 2 * dn * gamma_p + 8 * dn - log_p));
  }
  int64_t b = 1;
  while (static_cast<double>(b) <= need + 1) b *= 2;
  return b;
}

// Real-coefficient bivariate polynomial from an integer triple list.
inline IntPoly2 poly2(std::initializer_list<std::tuple<long, int, int>> terms) {
  IntPoly2 f;
  for (const auto& [a, i, j] : terms) f.add_term(BigInt(a), i, j);
  return f;
}

inline rootforge::TopologyConfig seeded(uint64_t seed) {
  rootforge::TopologyConfig cfg;
  cfg.seed = seed;
  return cfg;
}

inline int sign_q(const IntPoly& p, const mpq_class& x) {
  mpq_class v = 0;
  for (int i = p.degree(); i >= 0; --i) v = v * x + mpq_class(p.c[i]);
  return sgn(v);
}

}  // namespace rftest
