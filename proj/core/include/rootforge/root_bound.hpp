#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "rootforge/oracle.hpp"

namespace rootforge {

struct RootBoundResult {
  int64_t Gamma = 1;
  // k0 = min{k >= 0 : pbar(2^k) > 0} lies in this closed range.
  std::pair<int64_t, int64_t> k0_bracket{0, 1};
  int64_t witness_precision_rho = 0;
  int64_t oracle_L = 0;
};

// |p_n| x^n - sum_{i<n} |p_i| x^i as coefficient enclosures. Moduli of
// complex coefficients are bounded with `rho` fractional bits.
std::vector<DyadicInterval> cauchy_poly(const std::vector<ComplexDyadic>& coeffs,
                                        int64_t rho = 64);

// Integer Gamma with k0 <= Gamma <= k0 + 1 (and Gamma >= 1), so that all roots
// lie in the disk of radius 2^Gamma.
RootBoundResult compute_gamma(const OracleHandle& h, int64_t max_L = int64_t{1} << 24);

}  // namespace rootforge
