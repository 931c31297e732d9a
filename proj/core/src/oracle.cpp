#include "rootforge/oracle.hpp"

#include <atomic>
#include <map>
#include <mutex>

#include "rootforge/errors.hpp"

namespace rootforge {

int64_t ceil_log2(int64_t v) {
  int64_t e = 0;
  while ((int64_t{1} << e) < v) ++e;
  return e;
}

Dyadic norm1_upper(const std::vector<ComplexDyadic>& c) {
  Dyadic s;
  for (const auto& z : c) s += abs_upper(z);
  return s;
}

Dyadic norm1_lower(const std::vector<ComplexDyadic>& c) {
  Dyadic s;
  for (const auto& z : c) s += abs_lower(z);
  return s;
}

bool ApproxPolynomial::is_real() const {
  for (const auto& z : coeffs)
    if (!z.is_real()) return false;
  return true;
}

namespace {

// Grid exponent l = L + ceil(log2(n+1)) - e where 2^e <= ||p||_1.
int64_t grid_exponent(int64_t L, int n, int64_t norm_log2_floor) {
  return L + ceil_log2(n + 1) - norm_log2_floor;
}

}  // namespace

struct OracleHandle::Impl {
  enum class Kind { exact, fiber } kind = Kind::exact;
  std::vector<ComplexDyadic> exact_coeffs;
  IntPoly integer;
  bool has_integer = false;
  int64_t norm_log2_floor = 0;
  bool real = true;

  IntPoly2 f;
  AlgebraicPoint alpha;
  int64_t max_bits = 0;

  int n = 0;
  std::mutex mu;
  std::map<int64_t, ApproxPolynomial> memo;
  std::atomic<uint64_t> queries{0};
  std::atomic<int64_t> max_L{0};

  ApproxPolynomial compute(int64_t L);
  ApproxPolynomial compute_exact(int64_t L) const;
  ApproxPolynomial compute_fiber(int64_t L);
};

ApproxPolynomial OracleHandle::Impl::compute_exact(int64_t L) const {
  const int64_t l = grid_exponent(L, n, norm_log2_floor);
  ApproxPolynomial out;
  out.precision_L = L;
  out.shared_denominator_exp = l;
  out.exact = true;
  out.coeffs.reserve(exact_coeffs.size());
  for (const auto& z : exact_coeffs) {
    ComplexDyadic r = round_to_precision(z, l, Round::nearest);
    if (!(r == z)) out.exact = false;
    out.coeffs.push_back(std::move(r));
  }
  return out;
}

ApproxPolynomial OracleHandle::Impl::compute_fiber(int64_t L) {
  const int64_t logn = ceil_log2(n + 1);
  int64_t w = L + logn + 16;
  while (true) {
    if (w > max_bits)
      throw PrecisionCapError("fiber oracle: enclosure refinement exceeded the precision cap");
    ComplexInterval a = alpha.enclosure(w);
    const int64_t rho = w + 8;
    std::vector<ComplexInterval> c;
    c.reserve(f.c.size());
    for (const auto& px : f.c) {
      std::vector<ComplexInterval> cx;
      for (const auto& v : px.c) cx.emplace_back(DyadicInterval(Dyadic(v)));
      if (cx.empty()) cx.emplace_back(DyadicInterval(0));
      c.push_back(eval_interval(cx, a, rho));
    }
    Dyadic norm_lo;
    for (const auto& ci : c) norm_lo += abs_interval(ci, rho).lo;
    if (norm_lo.is_zero() || c.back().contains_zero()) {
      w *= 2;
      continue;
    }
    const int64_t l = grid_exponent(L, n, norm_lo.log2_floor());
    // Half-widths <= 2^(-l-2) and rounding to the 2^(-l-1) grid keep each
    // coordinate within 2^(-l-1), hence |p~_i - p_i| < 2^-l.
    Dyadic limit = Dyadic::pow2(-l - 1);
    Dyadic worst;
    for (const auto& ci : c) worst = max(worst, max(ci.re.width(), ci.im.width()));
    if (worst > limit) {
      int64_t deficit = worst.log2_ceil() - limit.log2_floor();
      w += std::max<int64_t>(deficit + 4, w / 2);
      continue;
    }
    ApproxPolynomial out;
    out.precision_L = L;
    out.shared_denominator_exp = l + 1;
    out.exact = alpha.is_exact();
    for (const auto& ci : c) {
      ComplexDyadic m = round_to_precision(ci.mid(), l + 1, Round::nearest);
      if (!(m == ci.mid()) || !ci.re.is_point() || !ci.im.is_point()) out.exact = false;
      out.coeffs.push_back(std::move(m));
    }
    return out;
  }
}

ApproxPolynomial OracleHandle::Impl::compute(int64_t L) {
  if (L < 1) throw DomainError("oracle precision must be positive");
  queries.fetch_add(1, std::memory_order_relaxed);
  int64_t prev = max_L.load();
  while (prev < L && !max_L.compare_exchange_weak(prev, L)) {
  }
  std::lock_guard<std::mutex> lock(mu);
  auto it = memo.find(L);
  if (it != memo.end()) return it->second;
  ApproxPolynomial out = kind == Kind::exact ? compute_exact(L) : compute_fiber(L);
  memo.emplace(L, out);
  return out;
}

OracleHandle OracleHandle::from_integer(const IntPoly& p) {
  OracleHandle h = from_dyadic(to_dyadic(p));
  h.impl_->integer = p;
  h.impl_->has_integer = true;
  return h;
}

OracleHandle OracleHandle::from_dyadic(std::vector<ComplexDyadic> coeffs) {
  while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
  if (coeffs.size() < 2) throw DomainError("oracle polynomial must have degree >= 1");
  OracleHandle h;
  h.impl_ = std::make_shared<Impl>();
  auto& s = *h.impl_;
  s.kind = Impl::Kind::exact;
  s.n = static_cast<int>(coeffs.size()) - 1;
  for (const auto& z : coeffs)
    if (!z.is_real()) s.real = false;
  s.norm_log2_floor = norm1_lower(coeffs).log2_floor();
  s.exact_coeffs = std::move(coeffs);
  return h;
}

OracleHandle OracleHandle::from_fiber(const IntPoly2& f, AlgebraicPoint alpha, int64_t max_bits) {
  if (f.deg_y() < 1) throw DomainError("fiber polynomial must have positive degree in y");
  OracleHandle h;
  h.impl_ = std::make_shared<Impl>();
  auto& s = *h.impl_;
  s.kind = Impl::Kind::fiber;
  s.f = f;
  s.alpha = std::move(alpha);
  s.max_bits = max_bits;
  s.n = f.deg_y();
  s.real = s.alpha.is_real();
  // Reject a vanishing leading coefficient up front.
  const IntPoly& lead = lc_y(f);
  if (lead.degree() > 0) {
    bool ok = false;
    for (int64_t w = 32; w <= max_bits; w *= 2) {
      std::vector<ComplexInterval> cx;
      for (const auto& v : lead.c) cx.emplace_back(DyadicInterval(Dyadic(v)));
      if (!eval_interval(cx, s.alpha.enclosure(w), w + 8).contains_zero()) {
        ok = true;
        break;
      }
    }
    if (!ok) throw DomainError("leading fiber coefficient vanishes at alpha");
  }
  return h;
}

int OracleHandle::degree() const { return impl_->n; }
bool OracleHandle::real_coefficients() const { return impl_->real; }
bool OracleHandle::exact_source() const { return impl_->kind == Impl::Kind::exact; }

const IntPoly* OracleHandle::integer_polynomial() const {
  return impl_->has_integer ? &impl_->integer : nullptr;
}

ApproxPolynomial OracleHandle::approximate(int64_t L) const { return impl_->compute(L); }

OracleStats OracleHandle::stats() const {
  return {impl_->queries.load(), impl_->max_L.load()};
}

LeadingCoefficient estimate_leading_coeff(const OracleHandle& h, int64_t max_L) {
  const int n = h.degree();
  const int64_t logn = ceil_log2(n + 1);
  for (int64_t L = 1; L <= max_L; L *= 2) {
    ApproxPolynomial a = h.approximate(L);
    Dyadic pn_lo = abs_lower(a.coeffs.back());
    if (pn_lo.is_zero()) continue;
    Dyadic lhs = norm1_upper(a.coeffs).ldexp(-L - logn);
    if (a.exact || lhs <= pn_lo.ldexp(-2)) return {abs_upper(a.coeffs.back()), L};
  }
  throw PrecisionCapError("leading coefficient estimate exceeded the precision cap");
}

Dyadic estimate_lambda(const OracleHandle& h, int64_t max_L) {
  const int n = h.degree();
  const int64_t logn = ceil_log2(n + 1);
  const int64_t bits = 32;
  int64_t L = std::max<int64_t>(estimate_leading_coeff(h, max_L).witness_L, 4);
  for (; L <= max_L; L *= 2) {
    ApproxPolynomial a = h.approximate(L);
    Dyadic nl = norm1_lower(a.coeffs), nu = norm1_upper(a.coeffs);
    Dyadic pl = abs_lower(a.coeffs.back()), pu = abs_upper(a.coeffs.back());
    if (!a.exact) {
      // ||p|| in [nl / (1 + eps), nu / (1 - eps)] with eps = 2^-L.
      Dyadic eps = Dyadic::pow2(-L);
      nl = div_bound(nl, Dyadic(1) + eps, bits - nl.log2_floor(), Round::down);
      nu = div_bound(nu, Dyadic(1) - eps, bits - nu.log2_floor(), Round::up);
      Dyadic eta = nu.ldexp(-L - logn);
      pl -= eta;
      pu += eta;
      if (pl.sign() <= 0) continue;
    }
    Dyadic lo = div_bound(nl, pu, bits - nl.log2_floor() + pu.log2_floor() + 2, Round::down);
    Dyadic hi = div_bound(nu, pl, bits - nu.log2_floor() + pl.log2_floor() + 2, Round::up);
    if (hi <= lo.ldexp(1)) return pow2_ceil(hi.ldexp(-1));
  }
  throw PrecisionCapError("lambda estimate exceeded the precision cap");
}

}  // namespace rootforge
