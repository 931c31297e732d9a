#include "rootforge/factorizer.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <string>
#include <utility>

#include "mp_complex.hpp"
#include "rootforge/errors.hpp"
#include "rootforge/int_poly.hpp"

namespace rootforge {
namespace {

using detail::MpComplex;
using detail::MpScratch;

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// ---------------------------------------------------------------- exact side

struct GaussPoly {
  std::vector<BigInt> re;
  std::vector<BigInt> im;
};

GaussPoly mul(const GaussPoly& a, const GaussPoly& b) {
  const size_t n = a.re.size() + b.re.size() - 1;
  GaussPoly r{std::vector<BigInt>(n), std::vector<BigInt>(n)};
  for (size_t i = 0; i < a.re.size(); ++i)
    for (size_t j = 0; j < b.re.size(); ++j) {
      mpz_addmul(r.re[i + j].get_mpz_t(), a.re[i].get_mpz_t(), b.re[j].get_mpz_t());
      mpz_submul(r.re[i + j].get_mpz_t(), a.im[i].get_mpz_t(), b.im[j].get_mpz_t());
      mpz_addmul(r.im[i + j].get_mpz_t(), a.re[i].get_mpz_t(), b.im[j].get_mpz_t());
      mpz_addmul(r.im[i + j].get_mpz_t(), a.im[i].get_mpz_t(), b.re[j].get_mpz_t());
    }
  return r;
}

template <class P, class Mul>
P tree_product(std::vector<P> v, Mul m, P one) {
  if (v.empty()) return one;
  while (v.size() > 1) {
    std::vector<P> next;
    next.reserve(v.size() / 2 + 1);
    for (size_t i = 0; i + 1 < v.size(); i += 2) next.push_back(m(v[i], v[i + 1]));
    if (v.size() % 2) next.push_back(std::move(v.back()));
    v = std::move(next);
  }
  return std::move(v[0]);
}

// ---------------------------------------------------------------- numeric side

std::vector<MpComplex> to_mp(const std::vector<ComplexDyadic>& c, mpfr_prec_t P) {
  std::vector<MpComplex> r;
  r.reserve(c.size());
  for (const auto& x : c) {
    r.emplace_back(P);
    r.back().set(x);
  }
  return r;
}

// v = q(z), dv = q'(z)
void horner(const std::vector<MpComplex>& q, const MpComplex& z, MpComplex& v, MpComplex& dv,
            MpScratch& s) {
  v.set(q.back());
  dv.set_zero();
  for (int i = static_cast<int>(q.size()) - 2; i >= 0; --i) {
    s.mul(dv, dv, z);
    s.add(dv, dv, v);
    s.mul(v, v, z);
    s.add(v, v, q[i]);
  }
}

double log2_add(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  double hi = std::max(a, b), lo = std::min(a, b);
  return hi + std::log2(1.0 + std::exp2(lo - hi));
}

void set_polar(MpComplex& z, double log2r, double theta) {
  double ip = std::floor(log2r);
  double scale = std::exp2(log2r - ip);
  mpfr_set_d(z.re(), scale * std::cos(theta), MPFR_RNDN);
  mpfr_set_d(z.im(), scale * std::sin(theta), MPFR_RNDN);
  mpfr_mul_2si(z.re(), z.re(), static_cast<long>(ip), MPFR_RNDN);
  mpfr_mul_2si(z.im(), z.im(), static_cast<long>(ip), MPFR_RNDN);
}

// Starting points on circles read off the Newton polygon of g; g_0 != 0.
std::vector<MpComplex> initial_points(const std::vector<ComplexDyadic>& g, mpfr_prec_t P) {
  const int d = static_cast<int>(g.size()) - 1;
  std::vector<double> lg(d + 1, kNegInf);
  for (int i = 0; i <= d; ++i)
    if (!g[i].is_zero()) lg[i] = 0.5 * g[i].norm2().log2_approx();
  std::vector<int> hull;
  for (int i = 0; i <= d; ++i) {
    if (lg[i] == kNegInf) continue;
    while (hull.size() >= 2) {
      int a = hull[hull.size() - 2], m = hull.back();
      if ((lg[m] - lg[a]) * (i - a) <= (lg[i] - lg[a]) * (m - a))
        hull.pop_back();
      else
        break;
    }
    hull.push_back(i);
  }
  std::vector<MpComplex> z;
  z.reserve(d);
  for (size_t h = 0; h + 1 < hull.size(); ++h) {
    int a = hull[h], c = hull[h + 1], cnt = c - a;
    double logr = std::min((lg[a] - lg[c]) / cnt, 0.0);
    for (int j = 0; j < cnt; ++j) {
      double theta = 2 * M_PI * j / cnt + 2 * M_PI * a / d + 0.7;
      z.emplace_back(P);
      set_polar(z.back(), logr, theta);
    }
  }
  return z;
}

// Ehrlich-Aberth with Gauss-Seidel updates. Stops when every point is frozen
// or max |correction| stops halving for a few sweeps.
void aberth(const std::vector<MpComplex>& g, std::vector<MpComplex>& z, mpfr_prec_t P,
            int maxit) {
  const size_t d = z.size();
  MpScratch s(P);
  MpComplex v(P), dv(P), N(P), S(P), t(P), w(P), one(P);
  mpfr_set_ui(one.re(), 1, MPFR_RNDN);
  std::vector<char> frozen(d, 0);
  double best = std::numeric_limits<double>::infinity();
  int stall = 0;
  for (int it = 0; it < maxit; ++it) {
    double maxw = kNegInf;
    bool active = false;
    for (size_t i = 0; i < d; ++i) {
      if (frozen[i]) continue;
      active = true;
      horner(g, z[i], v, dv, s);
      if (v.is_zero()) {
        frozen[i] = 1;
        continue;
      }
      if (dv.is_zero()) {
        set_polar(w, -static_cast<double>(P) / 4, 0.3 + static_cast<double>(i));
      } else {
        s.div(N, v, dv);
        S.set_zero();
        for (size_t j = 0; j < d; ++j) {
          if (j == i) continue;
          s.sub(t, z[i], z[j]);
          if (t.is_zero()) set_polar(t, -static_cast<double>(P), 1.0 + static_cast<double>(j));
          s.inv(t, t);
          s.add(S, S, t);
        }
        s.mul(t, N, S);
        s.sub(t, one, t);
        if (t.is_zero())
          w.set(N);
        else
          s.div(w, N, t);
      }
      s.sub(z[i], z[i], w);
      if (!z[i].finite()) {
        set_polar(z[i], -1.0, 0.9 + static_cast<double>(i));
        continue;
      }
      double lw = w.log2_abs();
      if (lw <= -static_cast<double>(P) + 4 + std::max(0.0, z[i].log2_abs())) frozen[i] = 1;
      maxw = std::max(maxw, lw);
    }
    if (!active) return;
    if (maxw < best - 1) {
      best = maxw;
      stall = 0;
    } else if (++stall >= 6) {
      return;
    }
  }
}

int find_root(std::vector<int>& parent, int i) {
  while (parent[i] != i) i = parent[i] = parent[parent[i]];
  return i;
}

// Points whose inclusion disks d |g/g'| overlap, with a factor 4 margin, share a group.
std::vector<std::vector<int>> find_groups(const std::vector<MpComplex>& g,
                                          const std::vector<MpComplex>& z, mpfr_prec_t P) {
  const int d = static_cast<int>(z.size());
  MpScratch s(P);
  MpComplex v(P), dv(P), t(P);
  std::vector<double> lg(d + 1);
  for (int k = 0; k <= d; ++k) lg[k] = g[k].log2_abs();
  // |g(z)| and |g'(z)| below the rounding noise of Horner are replaced by
  // that noise level, so points sitting on a multiple root still get a
  // radius of the size of the cluster.
  const double noise = -static_cast<double>(P) + 4 + std::log2(static_cast<double>(d + 1));
  std::vector<double> lr(d);
  for (int i = 0; i < d; ++i) {
    horner(g, z[i], v, dv, s);
    double lz = z[i].log2_abs();
    double sv = kNegInf, sdv = kNegInf;
    for (int k = 0; k <= d; ++k) {
      if (lg[k] == kNegInf) continue;
      sv = log2_add(sv, lg[k] + (k ? k * lz : 0.0));
      if (k) sdv = log2_add(sdv, lg[k] + std::log2(static_cast<double>(k)) + (k > 1 ? (k - 1) * lz : 0.0));
    }
    double lv = std::max(v.log2_abs(), sv + noise);
    double ldv = std::max(dv.log2_abs(), sdv + noise);
    lr[i] = lv - ldv + std::log2(static_cast<double>(d));
  }
  std::vector<int> parent(d);
  std::iota(parent.begin(), parent.end(), 0);
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      s.sub(t, z[i], z[j]);
      if (t.log2_abs() <= log2_add(lr[i], lr[j]) + 2)
        parent[find_root(parent, i)] = find_root(parent, j);
    }
  std::vector<std::vector<int>> groups;
  std::vector<int> slot(d, -1);
  for (int i = 0; i < d; ++i) {
    int r = find_root(parent, i);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(groups.size());
      groups.emplace_back();
    }
    groups[slot[r]].push_back(i);
  }
  return groups;
}

std::vector<ComplexDyadic> derivative(const std::vector<ComplexDyadic>& q) {
  std::vector<ComplexDyadic> r;
  for (size_t i = 1; i < q.size(); ++i)
    r.push_back(q[i] * ComplexDyadic(Dyadic(static_cast<long>(i))));
  return r;
}

// Newton on q from x with precision doubling from P0 up to Pf. At each level
// the iteration stops once the step is at the rounding level or stops
// shrinking; the backward-error check decides whether the result is usable.
bool newton(const std::vector<ComplexDyadic>& q, MpComplex& x, mpfr_prec_t P0, mpfr_prec_t Pf) {
  if (q.size() < 2) return false;
  mpfr_prec_t prec = std::min(P0, Pf);
  for (;;) {
    std::vector<MpComplex> qc = to_mp(q, prec);
    x.round_prec(prec);
    MpScratch s(prec);
    MpComplex v(prec), dv(prec), st(prec);
    double prev = std::numeric_limits<double>::infinity();
    for (int it = 0; it < 40; ++it) {
      horner(qc, x, v, dv, s);
      if (v.is_zero()) break;
      if (dv.is_zero()) return false;
      s.div(st, v, dv);
      s.sub(x, x, st);
      if (!x.finite()) return false;
      double ls = st.log2_abs();
      if (ls <= -static_cast<double>(prec) + 6 + std::max(0.0, x.log2_abs())) break;
      if (it >= 2 && ls > prev - 1) break;
      prev = ls;
    }
    if (prec >= Pf) return true;
    prec = std::min<mpfr_prec_t>(2 * prec, Pf);
  }
}

// Group of size m is replaced by m copies of a root of g^(m-1) near its
// centroid; singletons by Newton on g. Failed polishes keep the input points.
std::vector<MpComplex> polish(const std::vector<ComplexDyadic>& g, const std::vector<MpComplex>& z,
                              const std::vector<std::vector<int>>& groups, mpfr_prec_t P0,
                              mpfr_prec_t Pf) {
  std::map<size_t, std::vector<ComplexDyadic>> derivs;
  derivs[0] = g;
  auto deriv = [&](size_t k) -> const std::vector<ComplexDyadic>& {
    auto it = derivs.find(k);
    if (it != derivs.end()) return it->second;
    auto prev = std::prev(derivs.upper_bound(k));
    std::vector<ComplexDyadic> q = prev->second;
    for (size_t j = prev->first; j < k; ++j) q = derivative(q);
    return derivs[k] = std::move(q);
  };
  std::vector<MpComplex> out(z.begin(), z.end());
  for (const auto& G : groups) {
    const size_t m = G.size();
    mpfr_prec_t p = std::max<mpfr_prec_t>(P0, z[G[0]].prec());
    MpComplex c(p);
    for (int i : G) {
      mpfr_add(c.re(), c.re(), z[i].re(), MPFR_RNDN);
      mpfr_add(c.im(), c.im(), z[i].im(), MPFR_RNDN);
    }
    mpfr_div_ui(c.re(), c.re(), m, MPFR_RNDN);
    mpfr_div_ui(c.im(), c.im(), m, MPFR_RNDN);
    double extent = -static_cast<double>(p);
    MpScratch s(p);
    MpComplex t(p);
    for (int i : G) {
      s.sub(t, z[i], c);
      extent = std::max(extent, t.log2_abs());
    }
    MpComplex x = c;
    if (!newton(deriv(m - 1), x, p, Pf)) continue;
    if (m > 1) {
      MpComplex cc = c;
      cc.round_prec(x.prec());
      MpScratch s2(x.prec());
      MpComplex diff(x.prec());
      s2.sub(diff, x, cc);
      if (diff.log2_abs() > extent + 8) continue;
    }
    for (int i : G) out[i] = x;
  }
  return out;
}

// For real input, pair each upper-half point with the nearest lower-half
// point and make them exact conjugates; leftovers become real.
void symmetrize(std::vector<ComplexDyadic>& xs) {
  std::vector<size_t> up, down;
  for (size_t i = 0; i < xs.size(); ++i) {
    int s = xs[i].im.sign();
    if (s > 0) up.push_back(i);
    if (s < 0) down.push_back(i);
  }
  std::vector<char> used(down.size(), 0);
  for (size_t u : up) {
    int best = -1;
    Dyadic bd;
    ComplexDyadic cu = xs[u].conj();
    for (size_t k = 0; k < down.size(); ++k) {
      if (used[k]) continue;
      Dyadic dist = (xs[down[k]] - cu).norm2();
      if (best < 0 || dist < bd) {
        best = static_cast<int>(k);
        bd = dist;
      }
    }
    if (best >= 0) {
      used[best] = 1;
      xs[down[best]] = cu;
    } else {
      xs[u].im = Dyadic();
    }
  }
  for (size_t k = 0; k < down.size(); ++k)
    if (!used[k]) xs[down[k]].im = Dyadic();
}

// Floating-point pre-filter of the backward error, with a factor 2 margin.
bool cheap_check(const std::vector<ComplexDyadic>& f, int64_t Gamma,
                 const std::vector<ComplexDyadic>& xs, int64_t b, mpfr_prec_t Pc) {
  const size_t n = xs.size();
  MpScratch s(Pc);
  std::vector<MpComplex> pr(n + 1, MpComplex(Pc));
  mpfr_set_ui(pr[0].re(), 1, MPFR_RNDN);
  MpComplex X(Pc), t(Pc);
  for (size_t k = 0; k < n; ++k) {
    X.set(xs[k]);
    for (size_t j = k + 1; j >= 1; --j) {
      s.mul(t, X, pr[j]);
      s.sub(pr[j], pr[j - 1], t);
    }
    s.mul(pr[0], X, pr[0]);
    mpfr_neg(pr[0].re(), pr[0].re(), MPFR_RNDN);
    mpfr_neg(pr[0].im(), pr[0].im(), MPFR_RNDN);
  }
  MpComplex fn(Pc), fi(Pc);
  fn.set(f[n]);
  mpfr_t lhs, rhs, a;
  mpfr_inits2(Pc, lhs, rhs, a, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_zero(lhs, 1);
  mpfr_set_zero(rhs, 1);
  for (size_t i = 0; i <= n; ++i) {
    fi.set(f[i]);
    s.mul(t, fn, pr[i]);
    s.sub(t, fi, t);
    mpfr_hypot(a, t.re(), t.im(), MPFR_RNDU);
    mpfr_mul_2si(a, a, -static_cast<long>(Gamma * static_cast<int64_t>(i)), MPFR_RNDU);
    mpfr_add(lhs, lhs, a, MPFR_RNDU);
    mpfr_hypot(a, fi.re(), fi.im(), MPFR_RNDD);
    mpfr_mul_2si(a, a, -static_cast<long>(Gamma * static_cast<int64_t>(i)), MPFR_RNDD);
    mpfr_add(rhs, rhs, a, MPFR_RNDD);
  }
  mpfr_mul_2si(rhs, rhs, -static_cast<long>(b + 1), MPFR_RNDD);
  bool ok = mpfr_lessequal_p(lhs, rhs);
  mpfr_clears(lhs, rhs, a, static_cast<mpfr_ptr>(nullptr));
  return ok;
}

int64_t fraction_bits(const ComplexDyadic& z) {
  int64_t r = 0;
  if (!z.re.is_zero()) r = std::max(r, -z.re.exponent());
  if (!z.im.is_zero()) r = std::max(r, -z.im.exponent());
  return r;
}

bool verify_impl(const OracleHandle& h, const std::vector<ComplexDyadic>& zs, int64_t b,
                 int64_t min_L) {
  const int n = h.degree();
  if (static_cast<int>(zs.size()) != n) return false;
  std::vector<ComplexDyadic> prod = expand_monic_product(zs);
  Dyadic pn = norm1_upper(prod);
  const int64_t L = std::max(min_L, b + pn.log2_ceil() + 5);
  ApproxPolynomial pt = h.approximate(L);
  Dyadic E;
  for (int k = 0; k <= n; ++k) E += abs_upper(pt.coeffs[k] - pt.coeffs[n] * prod[k]);
  Dyadic nl = norm1_lower(pt.coeffs);
  if (pt.exact) return E <= nl.ldexp(-b);
  const int64_t eL = pt.precision_L;
  Dyadic eps = Dyadic::pow2(-eL);
  Dyadic nu = norm1_upper(pt.coeffs);
  int64_t lg = 0;
  while ((int64_t{2} << lg) <= n + 1) ++lg;  // floor(log2(n + 1))
  Dyadic slack = eps * nu * (Dyadic(1) + eps.ldexp(1)) * (Dyadic(1) + pn.ldexp(-lg));
  return E + slack <= nl.ldexp(-b) * (Dyadic(1) - eps);
}

}  // namespace

std::vector<ComplexDyadic> expand_monic_product(const std::vector<ComplexDyadic>& zs) {
  const int64_t n = static_cast<int64_t>(zs.size());
  if (n == 0) return {ComplexDyadic(1)};
  int64_t D = 0;
  for (const auto& z : zs) D = std::max(D, fraction_bits(z));
  std::map<std::pair<BigInt, BigInt>, int> lower;  // (X, -Y) for Y < 0
  for (const auto& z : zs)
    if (z.im.sign() < 0) ++lower[{z.re.scaled_floor(D), -z.im.scaled_floor(D)}];
  std::vector<IntPoly> reals;
  std::vector<GaussPoly> cplx;
  for (const auto& z : zs) {
    BigInt X = z.re.scaled_floor(D), Y = z.im.scaled_floor(D);
    if (sgn(Y) == 0) {
      reals.emplace_back(std::vector<BigInt>{-X, BigInt(1)});
    } else if (sgn(Y) > 0) {
      auto it = lower.find({X, Y});
      if (it != lower.end() && it->second > 0) {
        --it->second;
        reals.emplace_back(std::vector<BigInt>{X * X + Y * Y, -2 * X, BigInt(1)});
      } else {
        cplx.push_back({{-X, BigInt(1)}, {-Y, BigInt(0)}});
      }
    }
  }
  for (const auto& [key, cnt] : lower)
    for (int c = 0; c < cnt; ++c) cplx.push_back({{-key.first, BigInt(1)}, {key.second, BigInt(0)}});

  IntPoly R = tree_product(
      std::move(reals), [](const IntPoly& a, const IntPoly& b) { return a * b; },
      IntPoly::constant(1));
  GaussPoly C = tree_product(std::move(cplx), [](const GaussPoly& a, const GaussPoly& b) { return mul(a, b); }, GaussPoly{{BigInt(1)}, {BigInt(0)}});
  GaussPoly Rg{R.c, std::vector<BigInt>(R.c.size())};
  GaussPoly Q = mul(C, Rg);
  std::vector<ComplexDyadic> out(n + 1);
  for (int64_t k = 0; k <= n; ++k)
    out[k] = ComplexDyadic(Dyadic(Q.re[k], D * (k - n)), Dyadic(Q.im[k], D * (k - n)));
  return out;
}

bool verify_backward_error(const OracleHandle& h, const std::vector<ComplexDyadic>& zs,
                           int64_t b) {
  return verify_impl(h, zs, b, 0);
}

Factorization factorize(const OracleHandle& h, int64_t b, int64_t Gamma,
                        const std::vector<ComplexDyadic>* hint) {
  const int n = h.degree();
  if (n < 1) throw DomainError("factorize needs degree >= 1");
  const int64_t bp = b + n * Gamma;
  const int64_t L = b + n * (Gamma + 1) + 4;
  ApproxPolynomial pt = h.approximate(L);
  std::vector<ComplexDyadic> f(n + 1);
  for (int i = 0; i <= n; ++i) f[i] = pt.coeffs[i].ldexp(Gamma * i);
  int m0 = 0;
  while (m0 < n && f[m0].is_zero()) ++m0;
  const std::vector<ComplexDyadic> g(f.begin() + m0, f.end());
  const int d = n - m0;
  const int64_t B = bp + 2 * n + ceil_log2(n) + 8;
  const mpfr_prec_t Pf = static_cast<mpfr_prec_t>(bp + 2 * n + 16);
  const mpfr_prec_t Pmax = 4 * Pf + 256;
  const bool real = pt.is_real();

  Factorization out;
  out.b_achieved = b;
  out.oracle_L = L;
  out.denominator_exp = B - Gamma;
  out.working_precision = Pf;

  auto attempt = [&](const std::vector<MpComplex>& xi) {
    std::vector<ComplexDyadic> xs(n);
    for (int i = 0; i < d; ++i)
      xs[m0 + i] = round_to_precision(xi[i].to_dyadic(), B, Round::nearest);
    std::vector<std::vector<ComplexDyadic>> variants;
    if (real) {
      std::vector<ComplexDyadic> sym = xs;
      symmetrize(sym);
      if (sym != xs) variants.push_back(std::move(sym));
    }
    variants.push_back(std::move(xs));
    for (const auto& v : variants) {
      if (!cheap_check(f, Gamma, v, b, Pf + 32)) continue;
      std::vector<ComplexDyadic> zs(n);
      for (int i = 0; i < n; ++i) zs[i] = v[i].ldexp(Gamma);
      if (verify_impl(h, zs, b, L)) {
        out.approximations = std::move(zs);
        out.verified = true;
        return true;
      }
    }
    return false;
  };

  if (d == 0) {
    if (attempt({})) return out;
    throw FactorizationFailed("factorization failed at b = " + std::to_string(b));
  }

  std::vector<MpComplex> z;
  mpfr_prec_t P = 64;
  if (hint && static_cast<int>(hint->size()) == n) {
    std::vector<ComplexDyadic> hx;
    int zeros = 0;
    int64_t bits = 0;
    for (const auto& w : *hint) {
      ComplexDyadic x = w.ldexp(-Gamma);
      if (x.is_zero() && zeros < m0) {
        ++zeros;
        continue;
      }
      bits = std::max(bits, fraction_bits(x));
      hx.push_back(std::move(x));
    }
    if (zeros == m0 && static_cast<int>(hx.size()) == d) {
      const mpfr_prec_t P0 = std::clamp<mpfr_prec_t>(bits + 8, 64, Pf);
      z = to_mp(hx, P0);
      // Coincident hint points first (clusters collapsed by an earlier polish).
      std::vector<std::vector<int>> groups;
      std::vector<int> slot(d, -1);
      for (int i = 0; i < d; ++i) {
        if (slot[i] >= 0) continue;
        slot[i] = static_cast<int>(groups.size());
        groups.push_back({i});
        for (int j = i + 1; j < d; ++j)
          if (slot[j] < 0 && hx[j] == hx[i]) {
            slot[j] = slot[i];
            groups.back().push_back(j);
          }
      }
      if (attempt(polish(g, z, groups, P0, Pf))) return out;
      if (static_cast<int>(groups.size()) == d) {
        groups = find_groups(to_mp(g, P0), z, P0);
        if (static_cast<int>(groups.size()) < d && attempt(polish(g, z, groups, P0, Pf)))
          return out;
      }
      // Restart Aberth at low precision from the hint, splitting coincident points.
      for (auto& x : z) x.round_prec(P);
      for (const auto& G : groups) {
        if (G.size() < 2) continue;
        for (size_t j = 0; j < G.size(); ++j) {
          MpComplex off(P);
          set_polar(off, -20.0, 2 * M_PI * j / G.size() + 0.3);
          mpfr_add(z[G[j]].re(), z[G[j]].re(), off.re(), MPFR_RNDN);
          mpfr_add(z[G[j]].im(), z[G[j]].im(), off.im(), MPFR_RNDN);
        }
      }
    }
  }
  auto run_from = [&](std::vector<MpComplex> z, mpfr_prec_t P) {
    for (; P <= Pmax; P *= 2) {
      std::vector<MpComplex> gc = to_mp(g, P);
      for (auto& x : z) x.round_prec(P);
      aberth(gc, z, P, 30 + static_cast<int>(P / 4));
      std::vector<std::vector<int>> groups = find_groups(gc, z, P);
      out.working_precision = std::max<int64_t>(out.working_precision, P);
      if (attempt(polish(g, z, groups, P, Pf))) return true;
    }
    return false;
  };
  // A hint taken at too low a precision can pin Aberth near a merged
  // cluster; start over from the generic initial points in that case.
  if (!z.empty() && run_from(std::move(z), P)) return out;
  if (run_from(initial_points(g, P), P)) return out;
  throw FactorizationFailed("factorization failed at b = " + std::to_string(b));
}

}  // namespace rootforge
