#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "rootforge/cluster.hpp"
#include "rootforge/interval.hpp"

namespace rootforge {

struct CertificationBudget {
  int64_t b = 0;
  std::vector<int64_t> rho_spent;  // final rho per disk
  int64_t total_cap = 0;           // == b

  int64_t total() const;
};

struct CertifiedRoots {
  std::vector<ComplexDisk> disks;  // centre = seed, radius = n * r_i
  std::vector<int> multiplicities;
  CertificationBudget budget;
};

struct CertifyFailure {
  enum class Kind { not_disjoint, no_exceedance, budget };
  Kind kind = Kind::no_exceedance;
  int disk = -1;
};

using CertifyResult = std::variant<CertifiedRoots, CertifyFailure>;

// Rouche test |p^(z_i*) / p_n| > 32 2^-b lambda max(1, |z~_i|)^n at
// z_i* = z~_i + n r_i for every cluster.
CertifyResult certify(const std::vector<ComplexDyadic>& approximations, const Clustering& clustering,
                      const Dyadic& lambda, int64_t b);

// Interval of width < 2^-rho containing prod_j |z_star - z_j|.
DyadicInterval eval_abs_monic_product(const ComplexDyadic& z_star,
                                      const std::vector<ComplexDyadic>& approximations, int64_t rho);

// 32 * 2^-b * lambda * max(1, |center|)^n rounded up.
Dyadic certification_threshold(const ComplexDyadic& center, const Dyadic& lambda, int64_t b, int n);

}  // namespace rootforge
