#include "rootforge/algebraic.hpp"

#include <algorithm>
#include <mutex>

#include "rootforge/errors.hpp"

namespace rootforge {

struct AlgebraicPoint::State {
  enum class Kind { exact, real_root, custom } kind = Kind::exact;
  ComplexDyadic value;
  IntPoly poly;
  IntPoly deriv;
  DyadicInterval interval;
  int sign_lo = 0;
  int newton_gain = 4;
  Refiner refiner;
  bool real = true;
  std::mutex mu;

  // Shrinks [lo, hi] for a real root; returns true once the root is exact.
  bool step();
  bool try_newton();
  bool accept(const Dyadic& a, const Dyadic& b);
};

bool AlgebraicPoint::State::accept(const Dyadic& a, const Dyadic& b) {
  int sa = sign_at(poly, a);
  if (sa == 0) {
    kind = Kind::exact;
    value = ComplexDyadic(a);
    return true;
  }
  int sb = sign_at(poly, b);
  if (sb == 0) {
    kind = Kind::exact;
    value = ComplexDyadic(b);
    return true;
  }
  if (sa == sign_lo && sb == -sign_lo) {
    interval = DyadicInterval(a, b);
    return true;
  }
  return false;
}

bool AlgebraicPoint::State::try_newton() {
  Dyadic w = interval.width();
  Dyadic m = interval.mid();
  Dyadic v = evaluate(poly, m);
  if (v.is_zero()) {
    kind = Kind::exact;
    value = ComplexDyadic(m);
    return true;
  }
  Dyadic d = evaluate(deriv, m);
  if (d.is_zero()) return false;
  int64_t rho = -w.log2_floor() + newton_gain;
  Dyadic x = m - div_bound(v, d, rho + 1, Round::nearest);
  x = round_to_precision(x, rho, Round::nearest);
  Dyadic half = Dyadic::pow2(-rho);
  Dyadic a = x - half, b = x + half;
  if (a < interval.lo || b > interval.hi) return false;
  return accept(a, b);
}

bool AlgebraicPoint::State::step() {
  if (kind == Kind::exact) return true;
  if (try_newton()) {
    newton_gain = std::min(newton_gain * 2, 1 << 20);
    return kind == Kind::exact;
  }
  newton_gain = std::max(2, newton_gain / 2);
  Dyadic m = interval.mid();
  int sm = sign_at(poly, m);
  if (sm == 0) {
    kind = Kind::exact;
    value = ComplexDyadic(m);
    return true;
  }
  if (sm == sign_lo)
    interval.lo = m;
  else
    interval.hi = m;
  return false;
}

AlgebraicPoint::AlgebraicPoint() : state_(std::make_shared<State>()) {}

AlgebraicPoint AlgebraicPoint::exact(const ComplexDyadic& value) {
  AlgebraicPoint p;
  p.state_->kind = State::Kind::exact;
  p.state_->value = value;
  p.state_->real = value.is_real();
  return p;
}

AlgebraicPoint AlgebraicPoint::real_root(IntPoly defining, DyadicInterval isolating) {
  AlgebraicPoint p;
  auto& s = *p.state_;
  s.kind = State::Kind::real_root;
  s.poly = std::move(defining);
  s.deriv = derivative(s.poly);
  s.interval = std::move(isolating);
  if (s.interval.is_point()) {
    if (sign_at(s.poly, s.interval.lo) != 0) throw DomainError("point enclosure is not a root");
    s.kind = State::Kind::exact;
    s.value = ComplexDyadic(s.interval.lo);
    return p;
  }
  int a = sign_at(s.poly, s.interval.lo), b = sign_at(s.poly, s.interval.hi);
  if (a == 0 || b == 0 || a == b)
    throw DomainError("real root enclosure without a strict sign change");
  s.sign_lo = a;
  return p;
}

AlgebraicPoint AlgebraicPoint::custom(Refiner refiner, bool is_real) {
  AlgebraicPoint p;
  p.state_->kind = State::Kind::custom;
  p.state_->refiner = std::move(refiner);
  p.state_->real = is_real;
  return p;
}

ComplexInterval AlgebraicPoint::enclosure(int64_t bits) const {
  std::lock_guard<std::mutex> lock(state_->mu);
  auto& s = *state_;
  switch (s.kind) {
    case State::Kind::exact:
      return ComplexInterval(s.value);
    case State::Kind::custom:
      return s.refiner(bits);
    case State::Kind::real_root: {
      Dyadic target = Dyadic::pow2(-bits);
      while (s.kind == State::Kind::real_root && s.interval.width() > target) s.step();
      if (s.kind == State::Kind::exact) return ComplexInterval(s.value);
      return ComplexInterval(s.interval);
    }
  }
  throw InternalError("unreachable");
}

bool AlgebraicPoint::is_real() const { return state_->real; }

bool AlgebraicPoint::is_exact() const {
  std::lock_guard<std::mutex> lock(state_->mu);
  return state_->kind == State::Kind::exact;
}

}  // namespace rootforge
