#pragma once

#include <mpfr.h>

#include <cmath>
#include <limits>

#include "rootforge/dyadic.hpp"

namespace rootforge::detail {

// Minimal RAII complex number over MPFR; round-to-nearest throughout.
class MpComplex {
 public:
  explicit MpComplex(mpfr_prec_t prec = 64) {
    mpfr_init2(re_, prec);
    mpfr_init2(im_, prec);
    mpfr_set_zero(re_, 1);
    mpfr_set_zero(im_, 1);
  }
  MpComplex(const MpComplex& o) {
    mpfr_init2(re_, mpfr_get_prec(o.re_));
    mpfr_init2(im_, mpfr_get_prec(o.im_));
    mpfr_set(re_, o.re_, MPFR_RNDN);
    mpfr_set(im_, o.im_, MPFR_RNDN);
  }
  MpComplex& operator=(const MpComplex& o) {
    if (this != &o) {
      mpfr_set_prec(re_, mpfr_get_prec(o.re_));
      mpfr_set_prec(im_, mpfr_get_prec(o.im_));
      mpfr_set(re_, o.re_, MPFR_RNDN);
      mpfr_set(im_, o.im_, MPFR_RNDN);
    }
    return *this;
  }
  ~MpComplex() {
    mpfr_clear(re_);
    mpfr_clear(im_);
  }

  mpfr_ptr re() { return re_; }
  mpfr_ptr im() { return im_; }
  mpfr_srcptr re() const { return re_; }
  mpfr_srcptr im() const { return im_; }
  mpfr_prec_t prec() const { return mpfr_get_prec(re_); }

  // Changes precision keeping the (rounded) value.
  void round_prec(mpfr_prec_t p) {
    mpfr_prec_round(re_, p, MPFR_RNDN);
    mpfr_prec_round(im_, p, MPFR_RNDN);
  }
  void set(const ComplexDyadic& z) {
    mpfr_set_z_2exp(re_, z.re.mantissa().get_mpz_t(), z.re.exponent(), MPFR_RNDN);
    mpfr_set_z_2exp(im_, z.im.mantissa().get_mpz_t(), z.im.exponent(), MPFR_RNDN);
  }
  void set(const MpComplex& o) {
    mpfr_set(re_, o.re_, MPFR_RNDN);
    mpfr_set(im_, o.im_, MPFR_RNDN);
  }
  void set_zero() {
    mpfr_set_zero(re_, 1);
    mpfr_set_zero(im_, 1);
  }
  bool is_zero() const { return mpfr_zero_p(re_) && mpfr_zero_p(im_); }
  bool finite() const { return mpfr_number_p(re_) && mpfr_number_p(im_); }

  ComplexDyadic to_dyadic() const { return {to_dyadic(re_), to_dyadic(im_)}; }

  // log2 |z|; -inf for zero.
  double log2_abs() const {
    if (is_zero()) return -std::numeric_limits<double>::infinity();
    long er = 0, ei = 0;
    double dr = mpfr_zero_p(re_) ? 0.0 : mpfr_get_d_2exp(&er, re_, MPFR_RNDN);
    double di = mpfr_zero_p(im_) ? 0.0 : mpfr_get_d_2exp(&ei, im_, MPFR_RNDN);
    long e = std::max(mpfr_zero_p(re_) ? ei : er, mpfr_zero_p(im_) ? er : ei);
    dr = std::ldexp(dr, static_cast<int>(er - e));
    di = std::ldexp(di, static_cast<int>(ei - e));
    return 0.5 * std::log2(dr * dr + di * di) + static_cast<double>(e);
  }

  static Dyadic to_dyadic(mpfr_srcptr x) {
    if (mpfr_zero_p(x)) return Dyadic();
    BigInt m;
    mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), x);
    return Dyadic(std::move(m), e);
  }

 private:
  mpfr_t re_;
  mpfr_t im_;
};

// Scratch registers for complex arithmetic at a fixed precision.
class MpScratch {
 public:
  explicit MpScratch(mpfr_prec_t prec) {
    for (auto& t : t_) mpfr_init2(t, prec);
  }
  ~MpScratch() {
    for (auto& t : t_) mpfr_clear(t);
  }
  MpScratch(const MpScratch&) = delete;
  MpScratch& operator=(const MpScratch&) = delete;

  void set_prec(mpfr_prec_t p) {
    for (auto& t : t_) mpfr_set_prec(t, p);
  }

  // r = a * b (r may alias a or b)
  void mul(MpComplex& r, const MpComplex& a, const MpComplex& b) {
    mpfr_mul(t_[0], a.re(), b.re(), MPFR_RNDN);
    mpfr_mul(t_[1], a.im(), b.im(), MPFR_RNDN);
    mpfr_mul(t_[2], a.re(), b.im(), MPFR_RNDN);
    mpfr_mul(t_[3], a.im(), b.re(), MPFR_RNDN);
    mpfr_sub(r.re(), t_[0], t_[1], MPFR_RNDN);
    mpfr_add(r.im(), t_[2], t_[3], MPFR_RNDN);
  }
  // r = a * b + c
  void fma(MpComplex& r, const MpComplex& a, const MpComplex& b, const MpComplex& c) {
    mul(r, a, b);
    add(r, r, c);
  }
  void add(MpComplex& r, const MpComplex& a, const MpComplex& b) {
    mpfr_add(r.re(), a.re(), b.re(), MPFR_RNDN);
    mpfr_add(r.im(), a.im(), b.im(), MPFR_RNDN);
  }
  void sub(MpComplex& r, const MpComplex& a, const MpComplex& b) {
    mpfr_sub(r.re(), a.re(), b.re(), MPFR_RNDN);
    mpfr_sub(r.im(), a.im(), b.im(), MPFR_RNDN);
  }
  // r = a / b; b nonzero.
  void div(MpComplex& r, const MpComplex& a, const MpComplex& b) {
    mpfr_sqr(t_[4], b.re(), MPFR_RNDN);
    mpfr_sqr(t_[5], b.im(), MPFR_RNDN);
    mpfr_add(t_[4], t_[4], t_[5], MPFR_RNDN);
    mpfr_mul(t_[0], a.re(), b.re(), MPFR_RNDN);
    mpfr_mul(t_[1], a.im(), b.im(), MPFR_RNDN);
    mpfr_mul(t_[2], a.im(), b.re(), MPFR_RNDN);
    mpfr_mul(t_[3], a.re(), b.im(), MPFR_RNDN);
    mpfr_add(t_[0], t_[0], t_[1], MPFR_RNDN);
    mpfr_sub(t_[2], t_[2], t_[3], MPFR_RNDN);
    mpfr_div(r.re(), t_[0], t_[4], MPFR_RNDN);
    mpfr_div(r.im(), t_[2], t_[4], MPFR_RNDN);
  }
  // r = 1 / a; a nonzero.
  void inv(MpComplex& r, const MpComplex& a) {
    mpfr_sqr(t_[4], a.re(), MPFR_RNDN);
    mpfr_sqr(t_[5], a.im(), MPFR_RNDN);
    mpfr_add(t_[4], t_[4], t_[5], MPFR_RNDN);
    mpfr_div(r.re(), a.re(), t_[4], MPFR_RNDN);
    mpfr_div(t_[5], a.im(), t_[4], MPFR_RNDN);
    mpfr_neg(r.im(), t_[5], MPFR_RNDN);
  }

 private:
  mpfr_t t_[6];
};

}  // namespace rootforge::detail
