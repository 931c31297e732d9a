#include "rootforge/isolator.hpp"

#include <algorithm>
#include <string>

#include "rootforge/certify.hpp"
#include "rootforge/errors.hpp"
#include "rootforge/factorizer.hpp"
#include "rootforge/root_bound.hpp"

namespace rootforge {
namespace {

int64_t pow2_at_least(int64_t v) {
  int64_t b = 1;
  while (b < v) b *= 2;
  return b;
}

std::vector<bool> real_flags_for(const OracleHandle& h, const std::vector<ComplexDisk>& disks) {
  std::vector<bool> flags(disks.size(), false);
  if (!h.real_coefficients()) return flags;
  // With R_i < sigma_i / (64 n) a disk meeting the real axis cannot hold a
  // non-real root, since the conjugate root would be too close.
  for (size_t i = 0; i < disks.size(); ++i) flags[i] = disks[i].meets_real_axis();
  return flags;
}

RootResult single_root_result(const OracleHandle& h, int64_t bits) {
  RootResult r;
  r.n = h.degree();
  r.disks.push_back(single_root_disk(h, bits));
  r.multiplicities.push_back(r.n);
  // The only root of a real polynomial is its own conjugate.
  r.real_flags.push_back(h.real_coefficients());
  r.oracle_max_L = h.stats().max_L;
  return r;
}

bool safeguards_pass(const std::vector<ComplexDyadic>& zs, int64_t Gamma, const Dyadic& lambda) {
  Dyadic cap = Dyadic::pow2(2 * (Gamma + 1));
  Dyadic prod(1);
  for (const auto& z : zs) {
    if (z.norm2() >= cap) return false;
    Dyadic M = max(Dyadic(1), abs_upper(z, 32));
    prod = round_relative(prod * M, 64, Round::up);
  }
  return prod <= lambda.ldexp(3);
}

}  // namespace

int64_t initial_precision(int n) {
  return pow2_at_least(std::max<int64_t>(8 * int64_t{n}, int64_t{n} * ceil_log2(n)));
}

ComplexDisk single_root_disk(const OracleHandle& h, int64_t bits) {
  const int n = h.degree();
  const int64_t t = bits + 2;
  for (int64_t L = bits + 8;; L *= 2) {
    ApproxPolynomial a = h.approximate(L);
    const ComplexDyadic& pn = a.coeffs[n];
    const ComplexDyadic& pm = a.coeffs[n - 1];
    // -pm / (n pn) = -pm conj(pn) / (n |pn|^2)
    Dyadic den = pn.norm2() * Dyadic(n);
    if (den.is_zero()) continue;
    ComplexDyadic num = -(pm * pn.conj());
    Dyadic re_lo = div_bound(num.re, den, t, Round::down);
    Dyadic re_hi = div_bound(num.re, den, t, Round::up);
    Dyadic im_lo = div_bound(num.im, den, t, Round::down);
    Dyadic im_hi = div_bound(num.im, den, t, Round::up);
    ComplexDyadic c{re_lo, im_lo};
    Dyadic rad = (re_lo == re_hi && im_lo == im_hi) ? Dyadic() : Dyadic::pow2(1 - t);
    if (a.exact) return {c, rad};
    Dyadic eps = Dyadic::pow2(-a.precision_L);
    Dyadic eta =
        (norm1_upper(a.coeffs) * (Dyadic(1) + eps.ldexp(1))).ldexp(-a.precision_L - ceil_log2(n + 1));
    Dyadic A = abs_upper(pn), Alo = abs_lower(pn), B = abs_upper(pm);
    if (Alo <= eta) continue;
    Dyadic err = div_bound(eta * (A + B), Dyadic(n) * Alo * (Alo - eta), t, Round::up);
    if (err <= Dyadic::pow2(-bits - 1)) return {c, Dyadic::pow2(1 - t) + err};
    if (L > (int64_t{1} << 26)) throw PrecisionCapError("single root: oracle precision cap");
  }
}

RootResult isolate(const OracleHandle& h, int k, const IsolatorConfig& cfg) {
  const int n = h.degree();
  if (n < 1) throw DomainError("isolate: degree must be at least 1");
  if (k < 1) throw DomainError("isolate: k must be positive");
  if (k > n) throw PrecisionCapError("isolate: k exceeds the degree");
  const int64_t b0 = initial_precision(n);
  if (k == 1) {
    RootResult r = single_root_result(h, std::max<int64_t>(b0, cfg.b_initial));
    r.b_final = 0;
    return r;
  }

  const RootBoundResult rb = compute_gamma(h);
  const int64_t Gamma = rb.Gamma;
  const Dyadic lambda = estimate_lambda(h);

  int64_t b = std::max(b0, pow2_at_least(cfg.b_initial));
  std::vector<ComplexDyadic> hint;
  int rounds = 0;
  for (; b <= cfg.b_max_cap && rounds < cfg.max_restarts; b *= 2) {
    ++rounds;
    Factorization F;
    try {
      F = factorize(h, b, Gamma, hint.empty() ? nullptr : &hint);
    } catch (const FactorizationFailed&) {
      continue;
    }
    hint = F.approximations;
    if (!safeguards_pass(F.approximations, Gamma, lambda)) continue;
    ClusterResult cr = cluster(F.approximations, k, b, n);
    auto* cl = std::get_if<Clustering>(&cr);
    if (!cl) continue;
    CertifyResult ce = certify(F.approximations, *cl, lambda, b);
    auto* cert = std::get_if<CertifiedRoots>(&ce);
    if (!cert) continue;

    RootResult r;
    r.disks = cert->disks;
    r.multiplicities = cert->multiplicities;
    r.real_flags = real_flags_for(h, r.disks);
    r.b_final = b;
    r.n = n;
    r.gamma = Gamma;
    r.lambda = lambda;
    r.approximations = std::move(F.approximations);
    r.clusters = cl->clusters;
    r.rounds = rounds;
    r.oracle_max_L = h.stats().max_L;
    return r;
  }
  throw PrecisionCapError("k likely wrong or precision cap too low (b reached " +
                          std::to_string(b) + ")");
}

RootResult refine(const OracleHandle& h, const RootResult& result, int64_t kappa,
                  const IsolatorConfig& cfg) {
  if (kappa < 1) throw DomainError("refine: kappa must be positive");
  const Dyadic target = Dyadic::pow2(-kappa);
  if (std::all_of(result.disks.begin(), result.disks.end(),
                  [&](const ComplexDisk& d) { return d.radius < target; }))
    return result;
  const int n = h.degree();
  const int k = result.k();
  if (k == 1) {
    RootResult r = single_root_result(h, kappa + 1);
    r.multiplicities = result.multiplicities;
    return r;
  }

  const int64_t Gamma = compute_gamma(h).Gamma;
  const Dyadic lambda = estimate_lambda(h);
  const auto& D = result.disks;
  const auto& m = result.multiplicities;

  // Conservative bounds from the isolating disks.
  int64_t need = initial_precision(n);
  for (int i = 0; i < k; ++i) {
    int64_t log_sigma = 0, log_P = 0;
    bool first = true;
    for (int j = 0; j < k; ++j) {
      if (j == i) continue;
      Dyadic dlo = abs_lower(D[i].center - D[j].center) - D[i].radius - D[j].radius;
      if (dlo.sign() <= 0) throw DomainError("refine: input disks are not isolating");
      int64_t l = dlo.log2_floor();
      log_sigma = first ? l : std::min(log_sigma, l);
      first = false;
      log_P += m[j] * l;
    }
    Dyadic M = max(Dyadic(1), abs_upper(D[i].center) + D[i].radius);
    const int64_t mi = m[i];
    need = std::max(need, 2 * mi * ceil_log2(2 * int64_t{n} * n));
    need = std::max(need, 2 * mi * (ceil_log2(2 * int64_t{n}) - log_sigma));
    need = std::max(need, 2 * (ceil_log2(16 * (int64_t{n} + 1)) + lambda.ldexp(2).log2_ceil() +
                               n * M.log2_ceil() - log_P));
    need = std::max(need, 2 * mi * (kappa + 1));
  }

  const std::vector<ComplexDyadic>* hint =
      static_cast<int>(result.approximations.size()) == n ? &result.approximations : nullptr;
  int rounds = 0;
  for (int64_t b = pow2_at_least(need); b <= cfg.b_max_cap && rounds < cfg.max_restarts; b *= 2) {
    ++rounds;
    Factorization F;
    try {
      F = factorize(h, b, Gamma, hint);
    } catch (const FactorizationFailed&) {
      continue;
    }
    RootResult r;
    bool ok = true;
    for (int i = 0; i < k && ok; ++i) {
      Dyadic rad = Dyadic::pow2(-(b / (2 * m[i])));
      ComplexDisk wide{D[i].center, D[i].radius + rad};
      int count = 0, best = -1;
      Dyadic bd;
      for (int q = 0; q < n; ++q) {
        if (!wide.contains(F.approximations[q])) continue;
        ++count;
        Dyadic dist = (F.approximations[q] - D[i].center).norm2();
        if (best < 0 || dist < bd) {
          best = q;
          bd = dist;
        }
      }
      if (count != m[i]) ok = false;
      if (ok) r.disks.push_back({F.approximations[best], rad});
    }
    if (!ok) {
      hint = nullptr;
      continue;
    }
    r.multiplicities = m;
    r.real_flags = result.real_flags;
    r.b_final = b;
    r.n = n;
    r.gamma = Gamma;
    r.lambda = lambda;
    r.approximations = std::move(F.approximations);
    r.rounds = rounds;
    r.oracle_max_L = h.stats().max_L;
    return r;
  }
  throw PrecisionCapError("refine: precision cap reached");
}

RootResult isolate_integer(const IntPoly& p, const IsolatorConfig& cfg) {
  if (p.degree() < 1) throw DomainError("isolate_integer: degree must be at least 1");
  const int k = square_free_part(p).k;
  return isolate(OracleHandle::from_integer(p), k, cfg);
}

RootResult refine_integer(const IntPoly& p, const RootResult& result, int64_t kappa,
                          const IsolatorConfig& cfg) {
  if (p.degree() < 1) throw DomainError("refine_integer: degree must be at least 1");
  const IntPoly ps = square_free_part(p).part;
  RootResult simple = result;
  std::fill(simple.multiplicities.begin(), simple.multiplicities.end(), 1);
  simple.approximations.clear();
  simple.clusters.clear();
  RootResult r = refine(OracleHandle::from_integer(ps), simple, kappa, cfg);
  r.multiplicities = result.multiplicities;
  r.n = p.degree();
  return r;
}

}  // namespace rootforge
