#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "rootforge/int_poly.hpp"
#include "rootforge/int_poly2.hpp"

namespace rootforge::cli {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
  size_t position() const { return position_; }

 private:
  size_t position_;
};

struct GaussRational {
  mpq_class re;
  mpq_class im;
};

// Sparse polynomial in x and y keyed by (deg_x, deg_y).
using SparsePoly = std::map<std::pair<int, int>, GaussRational>;

struct ParsedPolynomial {
  enum class Kind { integer, bivariate, dyadic } kind = Kind::integer;
  IntPoly univariate;
  IntPoly2 bivariate;
  std::vector<ComplexDyadic> dyadic;  // by degree
};

// Grammar: sums and products of numbers, x, y, i and parenthesised
// expressions, with ^ taking a non-negative integer exponent (negative
// exponents only on nonzero constants). Numbers are integers, decimals or
// m*2^e. Juxtaposition multiplies, so "3x^2" is accepted.
SparsePoly parse_sparse(std::string_view text);

// Integer coefficients give IntPoly (no y) or IntPoly2; otherwise the
// polynomial must be univariate with dyadic Gaussian coefficients.
// Throws ParseError.
ParsedPolynomial parse_polynomial(std::string_view text);

}  // namespace rootforge::cli
