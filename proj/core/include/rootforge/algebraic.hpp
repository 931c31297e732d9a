#pragma once

#include <functional>
#include <memory>

#include "rootforge/int_poly.hpp"
#include "rootforge/interval.hpp"

namespace rootforge {

// A complex number known through enclosures that can be made arbitrarily tight.
// Copies share the refinement state.
class AlgebraicPoint {
 public:
  // Returns an enclosure whose real and imaginary widths are <= 2^-bits.
  using Refiner = std::function<ComplexInterval(int64_t bits)>;

  AlgebraicPoint();
  static AlgebraicPoint exact(const ComplexDyadic& value);
  // The unique root of the square-free polynomial `defining` inside the closed
  // interval, which must show a strict sign change at its endpoints.
  static AlgebraicPoint real_root(IntPoly defining, DyadicInterval isolating);
  static AlgebraicPoint custom(Refiner refiner, bool is_real);

  ComplexInterval enclosure(int64_t bits) const;
  DyadicInterval real_enclosure(int64_t bits) const { return enclosure(bits).re; }
  bool is_real() const;
  bool is_exact() const;

 private:
  struct State;
  std::shared_ptr<State> state_;
};

}  // namespace rootforge
