#pragma once

#include <vector>

#include "rootforge/dyadic.hpp"

namespace rootforge {

struct DyadicInterval {
  Dyadic lo;
  Dyadic hi;

  DyadicInterval() = default;
  DyadicInterval(Dyadic x) : lo(x), hi(std::move(x)) {}
  DyadicInterval(int x) : lo(x), hi(x) {}
  DyadicInterval(Dyadic l, Dyadic h);

  Dyadic width() const { return hi - lo; }
  Dyadic mid() const { return (lo + hi).ldexp(-1); }
  bool is_point() const { return lo == hi; }
  bool contains(const Dyadic& x) const { return lo <= x && x <= hi; }
  bool contains(const DyadicInterval& o) const { return lo <= o.lo && o.hi <= hi; }
  bool contains_zero() const { return lo.sign() <= 0 && hi.sign() >= 0; }
  // Largest |x| over the interval.
  Dyadic mag() const { return max(lo.abs(), hi.abs()); }
  // Smallest |x| over the interval.
  Dyadic mig() const;

  DyadicInterval operator-() const { return {-hi, -lo}; }
  friend bool operator==(const DyadicInterval&, const DyadicInterval&) = default;
};

// Exact interval operations (no rounding).
DyadicInterval operator+(const DyadicInterval& a, const DyadicInterval& b);
DyadicInterval operator-(const DyadicInterval& a, const DyadicInterval& b);
DyadicInterval operator*(const DyadicInterval& a, const DyadicInterval& b);

// Endpoints rounded outward to multiples of 2^-rho.
DyadicInterval round_outward(const DyadicInterval& a, int64_t rho);
DyadicInterval add(const DyadicInterval& a, const DyadicInterval& b, int64_t rho);
DyadicInterval sub(const DyadicInterval& a, const DyadicInterval& b, int64_t rho);
DyadicInterval mul(const DyadicInterval& a, const DyadicInterval& b, int64_t rho);
// b must not contain zero.
DyadicInterval div(const DyadicInterval& a, const DyadicInterval& b, int64_t rho);
DyadicInterval hull(const DyadicInterval& a, const DyadicInterval& b);

// Rectangle in the complex plane.
struct ComplexInterval {
  DyadicInterval re;
  DyadicInterval im;

  ComplexInterval() = default;
  ComplexInterval(DyadicInterval r) : re(std::move(r)) {}
  ComplexInterval(DyadicInterval r, DyadicInterval i) : re(std::move(r)), im(std::move(i)) {}
  ComplexInterval(const ComplexDyadic& z) : re(z.re), im(z.im) {}

  bool is_real() const { return im.lo.is_zero() && im.hi.is_zero(); }
  ComplexDyadic mid() const { return {re.mid(), im.mid()}; }
  bool contains(const ComplexDyadic& z) const { return re.contains(z.re) && im.contains(z.im); }
  bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
};

ComplexInterval add(const ComplexInterval& a, const ComplexInterval& b, int64_t rho);
ComplexInterval mul(const ComplexInterval& a, const ComplexInterval& b, int64_t rho);
// Enclosure of {|z| : z in a}.
DyadicInterval abs_interval(const ComplexInterval& a, int64_t rho);

// Horner evaluation with outward rounding to rho fractional bits per step.
// Coefficients are indexed by degree.
DyadicInterval eval_interval(const std::vector<DyadicInterval>& coeffs, const DyadicInterval& x,
                             int64_t rho);
ComplexInterval eval_interval(const std::vector<ComplexInterval>& coeffs, const ComplexInterval& x,
                              int64_t rho);

DyadicInterval product_accumulate(const std::vector<DyadicInterval>& factors, int64_t rho);

struct ComplexDisk {
  ComplexDyadic center;
  Dyadic radius;

  // Closed-disk tests, decided exactly on squared distances.
  bool contains(const ComplexDyadic& z) const;
  bool contains(const ComplexDisk& d) const;
  bool intersects(const ComplexDisk& d) const;
  bool meets_real_axis() const { return center.im.abs() <= radius; }
  // Bounding box.
  ComplexInterval box() const;
  friend bool operator==(const ComplexDisk&, const ComplexDisk&) = default;
};

}  // namespace rootforge
