#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace rootforge {

using BigInt = mpz_class;

enum class Round { down, up, nearest };

// Number of bits of |v|; 0 for v == 0.
int64_t bit_length(const BigInt& v);

// floor(v * 2^k) and ceil(v * 2^k) for integer v and any shift k.
BigInt shift_floor(const BigInt& v, int64_t k);
BigInt shift_ceil(const BigInt& v, int64_t k);

// mantissa * 2^exponent, kept canonical: mantissa odd, or zero with exponent 0.
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(int v) : m_(v) { normalize(); }
  Dyadic(long v) : m_(v) { normalize(); }
  Dyadic(long long v) : m_(static_cast<long>(v)) { normalize(); }
  explicit Dyadic(BigInt mantissa, int64_t exponent = 0)
      : m_(std::move(mantissa)), e_(exponent) {
    normalize();
  }

  static Dyadic pow2(int64_t e) { return Dyadic(BigInt(1), e); }
  // Parses "m*2^e", "m" or "-m*2^-e". Throws DomainError.
  static Dyadic parse(std::string_view text);

  const BigInt& mantissa() const { return m_; }
  int64_t exponent() const { return e_; }
  int sign() const { return sgn(m_); }
  bool is_zero() const { return sgn(m_) == 0; }
  bool is_integer() const { return e_ >= 0; }

  // floor(log2 |x|) and ceil(log2 |x|); x must be nonzero.
  int64_t log2_floor() const;
  int64_t log2_ceil() const;

  Dyadic abs() const;
  Dyadic ldexp(int64_t k) const;  // x * 2^k
  BigInt floor() const { return shift_floor(m_, e_); }
  BigInt ceil() const { return shift_ceil(m_, e_); }
  // floor(x * 2^k), ceil(x * 2^k)
  BigInt scaled_floor(int64_t k) const { return shift_floor(m_, e_ + k); }
  BigInt scaled_ceil(int64_t k) const { return shift_ceil(m_, e_ + k); }

  double to_double() const;
  // Approximate log2|x| as a double; x nonzero.
  double log2_approx() const;
  std::string to_string() const;

  Dyadic operator-() const;
  Dyadic& operator+=(const Dyadic& o);
  Dyadic& operator-=(const Dyadic& o);
  Dyadic& operator*=(const Dyadic& o);

  friend Dyadic operator+(Dyadic a, const Dyadic& b) { return a += b; }
  friend Dyadic operator-(Dyadic a, const Dyadic& b) { return a -= b; }
  friend Dyadic operator*(Dyadic a, const Dyadic& b) { return a *= b; }
  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.e_ == b.e_ && a.m_ == b.m_;
  }
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

 private:
  void normalize();

  BigInt m_;
  int64_t e_ = 0;
};

int compare(const Dyadic& a, const Dyadic& b);
Dyadic min(const Dyadic& a, const Dyadic& b);
Dyadic max(const Dyadic& a, const Dyadic& b);

// Rounds to a multiple of 2^-rho.
Dyadic round_to_precision(const Dyadic& x, int64_t rho, Round mode);
// Keeps the `bits` most significant bits of the mantissa.
Dyadic round_relative(const Dyadic& x, int64_t bits, Round mode);
// Bound on sqrt(x) for x >= 0, as a multiple of 2^-rho.
Dyadic sqrt_bound(const Dyadic& x, int64_t rho, Round mode);
// Bound on x / y (y != 0), as a multiple of 2^-rho.
Dyadic div_bound(const Dyadic& x, const Dyadic& y, int64_t rho, Round mode);
// Smallest power of two >= |x| (x nonzero).
Dyadic pow2_ceil(const Dyadic& x);

struct ComplexDyadic {
  Dyadic re;
  Dyadic im;

  ComplexDyadic() = default;
  ComplexDyadic(Dyadic r) : re(std::move(r)) {}
  ComplexDyadic(int r) : re(r) {}
  ComplexDyadic(Dyadic r, Dyadic i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_real() const { return im.is_zero(); }
  ComplexDyadic conj() const { return {re, -im}; }
  Dyadic norm2() const { return re * re + im * im; }
  ComplexDyadic ldexp(int64_t k) const { return {re.ldexp(k), im.ldexp(k)}; }
  std::string to_string() const;

  ComplexDyadic operator-() const { return {-re, -im}; }
  ComplexDyadic& operator+=(const ComplexDyadic& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  ComplexDyadic& operator-=(const ComplexDyadic& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  friend ComplexDyadic operator+(ComplexDyadic a, const ComplexDyadic& b) { return a += b; }
  friend ComplexDyadic operator-(ComplexDyadic a, const ComplexDyadic& b) { return a -= b; }
  friend ComplexDyadic operator*(const ComplexDyadic& a, const ComplexDyadic& b);
  friend bool operator==(const ComplexDyadic& a, const ComplexDyadic& b) = default;
};

ComplexDyadic round_to_precision(const ComplexDyadic& z, int64_t rho, Round mode);

// Upper / lower bounds on |z| with `bits` relative precision.
Dyadic abs_upper(const ComplexDyadic& z, int64_t bits = 64);
Dyadic abs_lower(const ComplexDyadic& z, int64_t bits = 64);

}  // namespace rootforge
