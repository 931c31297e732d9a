#include "rootforge/certify.hpp"

#include <numeric>

#include "rootforge/errors.hpp"
#include "rootforge/oracle.hpp"

namespace rootforge {

int64_t CertificationBudget::total() const {
  return std::accumulate(rho_spent.begin(), rho_spent.end(), int64_t{0});
}

DyadicInterval eval_abs_monic_product(const ComplexDyadic& z_star,
                                      const std::vector<ComplexDyadic>& zs, int64_t rho) {
  std::vector<Dyadic> d2;
  d2.reserve(zs.size());
  for (const auto& z : zs) {
    Dyadic t = (z_star - z).norm2();
    if (t.is_zero()) return DyadicInterval(Dyadic());
    d2.push_back(std::move(t));
  }
  const int64_t n = static_cast<int64_t>(zs.size());
  for (int64_t K = rho + ceil_log2(n + 1) + 4;; K *= 2) {
    DyadicInterval acc(1);
    for (const auto& t : d2) {
      DyadicInterval f(sqrt_bound(t, K, Round::down), sqrt_bound(t, K, Round::up));
      acc = mul(acc, f, K);
    }
    if (acc.width() < Dyadic::pow2(-rho)) return acc;
  }
}

Dyadic certification_threshold(const ComplexDyadic& center, const Dyadic& lambda, int64_t b,
                               int n) {
  Dyadic M = max(Dyadic(1), abs_upper(center, 32));
  Dyadic Mn(1), base = M;
  for (int e = n; e > 0; e >>= 1) {
    if (e & 1) Mn *= base;
    if (e > 1) base *= base;
  }
  return (lambda * Mn).ldexp(5 - b);
}

CertifyResult certify(const std::vector<ComplexDyadic>& zs, const Clustering& cl,
                      const Dyadic& lambda, int64_t b) {
  const int n = static_cast<int>(zs.size());
  const int k = static_cast<int>(cl.seeds.size());
  CertifiedRoots out;
  out.budget.b = b;
  out.budget.total_cap = b;
  for (int i = 0; i < k; ++i) {
    out.disks.push_back({cl.seeds[i], cl.disks[i].radius * Dyadic(n)});
    out.multiplicities.push_back(static_cast<int>(cl.clusters[i].size()));
  }
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      Dyadic rs = out.disks[i].radius + out.disks[j].radius;
      if ((out.disks[i].center - out.disks[j].center).norm2() <= rs * rs)
        return CertifyFailure{CertifyFailure::Kind::not_disjoint, i};
    }
  int64_t spent = 0;
  for (int i = 0; i < k; ++i) {
    ComplexDyadic zstar = out.disks[i].center + ComplexDyadic(out.disks[i].radius);
    Dyadic E = certification_threshold(out.disks[i].center, lambda, b, n);
    int64_t got = 0;
    for (int64_t rho = 1; rho <= b; rho *= 2) {
      if (spent + rho > b) return CertifyFailure{CertifyFailure::Kind::budget, i};
      if (eval_abs_monic_product(zstar, zs, rho).lo > E) {
        got = rho;
        break;
      }
    }
    if (got == 0) return CertifyFailure{CertifyFailure::Kind::no_exceedance, i};
    spent += got;
    out.budget.rho_spent.push_back(got);
  }
  return out;
}

}  // namespace rootforge
