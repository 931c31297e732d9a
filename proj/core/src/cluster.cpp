#include "rootforge/cluster.hpp"

#include <algorithm>

#include "rootforge/errors.hpp"
#include "rootforge/oracle.hpp"

namespace rootforge {

std::vector<Dyadic> seed_separations(const std::vector<ComplexDyadic>& seeds, int64_t precision) {
  const size_t k = seeds.size();
  if (k < 2) throw DomainError("seed separations need at least two seeds");
  std::vector<Dyadic> best(k);
  std::vector<char> have(k, 0);
  for (size_t i = 0; i < k; ++i)
    for (size_t j = i + 1; j < k; ++j) {
      Dyadic d2 = (seeds[i] - seeds[j]).norm2();
      if (d2.is_zero()) throw DomainError("coincident seeds");
      for (size_t t : {i, j})
        if (!have[t] || d2 < best[t]) {
          best[t] = d2;
          have[t] = 1;
        }
    }
  std::vector<Dyadic> out(k);
  for (size_t i = 0; i < k; ++i) {
    int64_t rho = precision - best[i].log2_floor() / 2 + 1;
    out[i] = sqrt_bound(best[i], rho, Round::down);
  }
  return out;
}

Dyadic cluster_radius(const Dyadic& sep, int n) {
  const int64_t n2 = int64_t{n} * n;
  Dyadic cap = Dyadic::pow2(-ceil_log2(n2));
  if (sep.is_zero()) return cap;
  Dyadic denom(BigInt(256) * BigInt(static_cast<long>(n2)));
  // smallest e with 2^e * 256 n^2 >= sep
  int64_t e = sep.log2_floor() - denom.log2_ceil() - 1;
  while (denom.ldexp(e) < sep) ++e;
  return min(cap, Dyadic::pow2(e));
}

ClusterResult cluster(const std::vector<ComplexDyadic>& zs, int k, int64_t b, int n) {
  if (static_cast<int>(zs.size()) != n || n < 1) throw DomainError("cluster: need n approximations");
  int64_t a0 = 4;
  while (a0 * 2 <= 4 * int64_t{n}) a0 *= 2;  // 2^(floor(log n) + 2)
  if (b <= 0 || b % (2 * a0) != 0) throw DomainError("cluster: b must be a multiple of 2a");

  std::vector<char> done(n, 0);
  Clustering out;
  for (int s = 0; s < n; ++s) {
    if (done[s]) continue;
    std::vector<int> C;
    for (int q = 0; q < n; ++q)
      if (!done[q]) C.push_back(q);
    for (int64_t a = a0;; a /= 2) {
      // |z - q| <= 2 * 2^(-b/(2a))  <=>  |z - q|^2 <= 2^(2 - b/a)
      Dyadic T2 = Dyadic::pow2(2 - b / a);
      std::vector<int> keep;
      for (int q : C)
        if ((zs[s] - zs[q]).norm2() <= T2) keep.push_back(q);
      C = std::move(keep);
      if (2 * static_cast<int64_t>(C.size()) >= a) break;
    }
    for (int q : C) done[q] = 1;
    out.clusters.push_back(std::move(C));
    out.seeds.push_back(zs[s]);
  }
  const int found = static_cast<int>(out.clusters.size());
  if (found != k) return ClusterFailure{ClusterFailure::Kind::count_mismatch, found};

  if (k >= 2)
    out.seed_separations = seed_separations(out.seeds);
  else
    out.seed_separations.assign(1, Dyadic());
  for (int i = 0; i < k; ++i) {
    ComplexDisk D{out.seeds[i], cluster_radius(out.seed_separations[i], n)};
    for (int q : out.clusters[i])
      if (!D.contains(zs[q])) return ClusterFailure{ClusterFailure::Kind::containment, found};
    out.disks.push_back(std::move(D));
  }
  return out;
}

}  // namespace rootforge
