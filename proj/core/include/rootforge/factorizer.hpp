#pragma once

#include <cstdint>
#include <vector>

#include "rootforge/oracle.hpp"

namespace rootforge {

struct Factorization {
  std::vector<ComplexDyadic> approximations;
  int64_t b_achieved = 0;
  bool verified = false;
  // Every approximation is an integer multiple of 2^-denominator_exp.
  int64_t denominator_exp = 0;
  int64_t oracle_L = 0;
  // Largest MPFR working precision used.
  int64_t working_precision = 0;
};

// Approximations z_1..z_n with ||p - p_n prod (x - z_i)||_1 <= 2^-b ||p||_1,
// checked exactly before returning. `hint` (n points, e.g. from a previous
// run at smaller b) is used as a warm start. Throws FactorizationFailed.
Factorization factorize(const OracleHandle& h, int64_t b, int64_t Gamma,
                        const std::vector<ComplexDyadic>* hint = nullptr);

// Certified sufficient check of the backward-error bound, using an oracle
// approximation good enough that its own error is absorbed by the bound.
bool verify_backward_error(const OracleHandle& h, const std::vector<ComplexDyadic>& zs,
                           int64_t b);

// Coefficients of prod (x - z_i), computed exactly.
std::vector<ComplexDyadic> expand_monic_product(const std::vector<ComplexDyadic>& zs);

}  // namespace rootforge
