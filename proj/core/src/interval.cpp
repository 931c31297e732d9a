#include "rootforge/interval.hpp"

#include "rootforge/errors.hpp"

namespace rootforge {

DyadicInterval::DyadicInterval(Dyadic l, Dyadic h) : lo(std::move(l)), hi(std::move(h)) {
  if (hi < lo) throw DomainError("interval with lo > hi");
}

Dyadic DyadicInterval::mig() const {
  if (contains_zero()) return Dyadic();
  return min(lo.abs(), hi.abs());
}

DyadicInterval operator+(const DyadicInterval& a, const DyadicInterval& b) {
  return {a.lo + b.lo, a.hi + b.hi};
}

DyadicInterval operator-(const DyadicInterval& a, const DyadicInterval& b) {
  return {a.lo - b.hi, a.hi - b.lo};
}

DyadicInterval operator*(const DyadicInterval& a, const DyadicInterval& b) {
  if (a.is_point() && b.is_point()) return DyadicInterval(a.lo * b.lo);
  if (a.lo.sign() >= 0 && b.lo.sign() >= 0) return {a.lo * b.lo, a.hi * b.hi};
  Dyadic p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  return {min(min(p1, p2), min(p3, p4)), max(max(p1, p2), max(p3, p4))};
}

DyadicInterval round_outward(const DyadicInterval& a, int64_t rho) {
  return {round_to_precision(a.lo, rho, Round::down), round_to_precision(a.hi, rho, Round::up)};
}

DyadicInterval add(const DyadicInterval& a, const DyadicInterval& b, int64_t rho) {
  return round_outward(a + b, rho);
}

DyadicInterval sub(const DyadicInterval& a, const DyadicInterval& b, int64_t rho) {
  return round_outward(a - b, rho);
}

DyadicInterval mul(const DyadicInterval& a, const DyadicInterval& b, int64_t rho) {
  return round_outward(a * b, rho);
}

DyadicInterval div(const DyadicInterval& a, const DyadicInterval& b, int64_t rho) {
  if (b.contains_zero()) throw DomainError("interval division by an interval containing zero");
  const Dyadic* num[2] = {&a.lo, &a.hi};
  const Dyadic* den[2] = {&b.lo, &b.hi};
  Dyadic lo, hi;
  bool first = true;
  for (auto* x : num) {
    for (auto* y : den) {
      Dyadic d = div_bound(*x, *y, rho, Round::down);
      Dyadic u = div_bound(*x, *y, rho, Round::up);
      if (first) {
        lo = d;
        hi = u;
        first = false;
      } else {
        lo = min(lo, d);
        hi = max(hi, u);
      }
    }
  }
  return {lo, hi};
}

DyadicInterval hull(const DyadicInterval& a, const DyadicInterval& b) {
  return {min(a.lo, b.lo), max(a.hi, b.hi)};
}

ComplexInterval add(const ComplexInterval& a, const ComplexInterval& b, int64_t rho) {
  return {add(a.re, b.re, rho), add(a.im, b.im, rho)};
}

ComplexInterval mul(const ComplexInterval& a, const ComplexInterval& b, int64_t rho) {
  if (a.is_real() && b.is_real()) return ComplexInterval(mul(a.re, b.re, rho));
  DyadicInterval re = a.re * b.re - a.im * b.im;
  DyadicInterval im = a.re * b.im + a.im * b.re;
  return {round_outward(re, rho), round_outward(im, rho)};
}

DyadicInterval abs_interval(const ComplexInterval& a, int64_t rho) {
  Dyadic rl = a.re.mig(), il = a.im.mig();
  Dyadic ru = a.re.mag(), iu = a.im.mag();
  return {sqrt_bound(rl * rl + il * il, rho, Round::down),
          sqrt_bound(ru * ru + iu * iu, rho, Round::up)};
}

DyadicInterval eval_interval(const std::vector<DyadicInterval>& coeffs, const DyadicInterval& x,
                             int64_t rho) {
  if (coeffs.empty()) throw DomainError("eval_interval: empty coefficient list");
  DyadicInterval acc = round_outward(coeffs.back(), rho);
  for (size_t i = coeffs.size() - 1; i-- > 0;) acc = add(mul(acc, x, rho), coeffs[i], rho);
  return acc;
}

ComplexInterval eval_interval(const std::vector<ComplexInterval>& coeffs, const ComplexInterval& x,
                              int64_t rho) {
  if (coeffs.empty()) throw DomainError("eval_interval: empty coefficient list");
  ComplexInterval acc{round_outward(coeffs.back().re, rho), round_outward(coeffs.back().im, rho)};
  for (size_t i = coeffs.size() - 1; i-- > 0;) acc = add(mul(acc, x, rho), coeffs[i], rho);
  return acc;
}

DyadicInterval product_accumulate(const std::vector<DyadicInterval>& factors, int64_t rho) {
  DyadicInterval acc(1);
  for (const auto& f : factors) acc = mul(acc, f, rho);
  return acc;
}

bool ComplexDisk::contains(const ComplexDyadic& z) const {
  return (z - center).norm2() <= radius * radius;
}

bool ComplexDisk::contains(const ComplexDisk& d) const {
  if (radius < d.radius) return false;
  Dyadic slack = radius - d.radius;
  return (d.center - center).norm2() <= slack * slack;
}

bool ComplexDisk::intersects(const ComplexDisk& d) const {
  Dyadic s = radius + d.radius;
  return (d.center - center).norm2() <= s * s;
}

ComplexInterval ComplexDisk::box() const {
  return {DyadicInterval(center.re - radius, center.re + radius),
          DyadicInterval(center.im - radius, center.im + radius)};
}

}  // namespace rootforge
