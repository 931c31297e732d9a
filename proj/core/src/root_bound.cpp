#include "rootforge/root_bound.hpp"

#include "rootforge/errors.hpp"

namespace rootforge {

namespace {

DyadicInterval modulus(const ComplexDyadic& z, int64_t rho) {
  if (z.is_real()) return DyadicInterval(z.re.abs());
  Dyadic n2 = z.norm2();
  return {sqrt_bound(n2, rho, Round::down), sqrt_bound(n2, rho, Round::up)};
}

}  // namespace

std::vector<DyadicInterval> cauchy_poly(const std::vector<ComplexDyadic>& coeffs, int64_t rho) {
  if (coeffs.empty() || coeffs.back().is_zero())
    throw DomainError("cauchy_poly needs a nonzero leading coefficient");
  std::vector<DyadicInterval> out;
  out.reserve(coeffs.size());
  for (size_t i = 0; i + 1 < coeffs.size(); ++i) out.push_back(-modulus(coeffs[i], rho));
  out.push_back(modulus(coeffs.back(), rho));
  return out;
}

RootBoundResult compute_gamma(const OracleHandle& h, int64_t max_L) {
  const int n = h.degree();
  const int64_t logn = ceil_log2(n + 1);
  LeadingCoefficient lead = estimate_leading_coeff(h, max_L);
  // q = p / kappa has 1 <= |q_n| <= 8.
  const int64_t log_kappa = lead.abs_pn.log2_floor() - 1;
  RootBoundResult res;
  int64_t L = std::max<int64_t>(lead.witness_L, 8);
  int64_t rho = 16;

  // Certifies pbar_q(2^k) > 0 using an evaluation of width <= 1/2.
  auto positive = [&](int64_t k) {
    while (true) {
      if (L > max_L) throw PrecisionCapError("root bound search exceeded the precision cap");
      ApproxPolynomial a = h.approximate(L);
      std::vector<ComplexDyadic> q;
      q.reserve(a.coeffs.size());
      for (const auto& c : a.coeffs) q.push_back(c.ldexp(-log_kappa));
      auto coeffs = cauchy_poly(q, rho);
      if (!a.exact) {
        // Coefficient error <= 2^(-L - log(n+1)) ||q|| <= 2^(-L - log(n+1)) 2 ||q~||.
        Dyadic eta = norm1_upper(q).ldexp(1 - L - logn);
        for (auto& c : coeffs) c = DyadicInterval(c.lo - eta, c.hi + eta);
      }
      DyadicInterval v = eval_interval(coeffs, DyadicInterval(Dyadic::pow2(k)), rho);
      if (v.width() <= Dyadic::pow2(-1)) {
        res.witness_precision_rho = std::max(res.witness_precision_rho, rho);
        res.oracle_L = std::max(res.oracle_L, L);
        return v.lo.sign() > 0;
      }
      int64_t grow = v.width().log2_ceil() + 2;
      if (!a.exact) L = std::max(L * 2, L + grow);
      rho = std::max(rho * 2, rho + grow);
    }
  };

  if (positive(0)) {
    res.Gamma = 1;
    res.k0_bracket = {0, 0};
    return res;
  }
  int64_t hi = 1;
  while (!positive(hi)) {
    if (hi > (int64_t{1} << 40)) throw PrecisionCapError("root bound search diverged");
    hi *= 2;
  }
  int64_t lo = hi / 2;  // known non-positive (or k = 0)
  while (hi - lo > 1) {
    int64_t mid = lo + (hi - lo) / 2;
    if (positive(mid))
      hi = mid;
    else
      lo = mid;
  }
  res.Gamma = hi;
  res.k0_bracket = {hi - 1, hi};
  return res;
}

}  // namespace rootforge
