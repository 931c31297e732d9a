#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "rootforge/algebraic.hpp"
#include "rootforge/int_poly2.hpp"

namespace rootforge {

// Dyadic polynomial p~ with |p~_i - p_i| <= 2^(-L - ceil(log2(n+1))) ||p||_1.
// Every coefficient is an integer multiple of 2^-shared_denominator_exp.
struct ApproxPolynomial {
  std::vector<ComplexDyadic> coeffs;
  int64_t precision_L = 0;
  int64_t shared_denominator_exp = 0;
  bool exact = false;  // coefficients equal p's exactly

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_real() const;
};

struct OracleStats {
  uint64_t queries = 0;
  int64_t max_L = 0;
};

class OracleHandle {
 public:
  static OracleHandle from_integer(const IntPoly& p);
  static OracleHandle from_dyadic(std::vector<ComplexDyadic> coeffs);
  // Coefficients of f(alpha, y) as a polynomial in y. The leading y-coefficient
  // of f must not vanish at alpha. `max_bits` caps the refinement of alpha.
  static OracleHandle from_fiber(const IntPoly2& f, AlgebraicPoint alpha,
                                 int64_t max_bits = int64_t{1} << 24);

  int degree() const;
  bool real_coefficients() const;
  bool exact_source() const;
  // Non-null for integer sources.
  const IntPoly* integer_polynomial() const;

  ApproxPolynomial approximate(int64_t L) const;
  OracleStats stats() const;

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

struct LeadingCoefficient {
  Dyadic abs_pn;  // |p~_n|, within a factor 2 of |p_n|
  int64_t witness_L = 0;
};

LeadingCoefficient estimate_leading_coeff(const OracleHandle& h,
                                          int64_t max_L = int64_t{1} << 24);
// Power of two lambda with lambda/2 <= ||p||_1 / |p_n| <= 2 lambda.
Dyadic estimate_lambda(const OracleHandle& h, int64_t max_L = int64_t{1} << 24);

Dyadic norm1_upper(const std::vector<ComplexDyadic>& c);
Dyadic norm1_lower(const std::vector<ComplexDyadic>& c);
int64_t ceil_log2(int64_t v);

}  // namespace rootforge
