#include "rootforge/dyadic.hpp"

#include <charconv>
#include <cmath>

#include "rootforge/errors.hpp"

namespace rootforge {

int64_t bit_length(const BigInt& v) {
  if (sgn(v) == 0) return 0;
  return static_cast<int64_t>(mpz_sizeinbase(v.get_mpz_t(), 2));
}

BigInt shift_floor(const BigInt& v, int64_t k) {
  BigInt r;
  if (k >= 0)
    mpz_mul_2exp(r.get_mpz_t(), v.get_mpz_t(), static_cast<mp_bitcnt_t>(k));
  else
    mpz_fdiv_q_2exp(r.get_mpz_t(), v.get_mpz_t(), static_cast<mp_bitcnt_t>(-k));
  return r;
}

BigInt shift_ceil(const BigInt& v, int64_t k) {
  BigInt r;
  if (k >= 0)
    mpz_mul_2exp(r.get_mpz_t(), v.get_mpz_t(), static_cast<mp_bitcnt_t>(k));
  else
    mpz_cdiv_q_2exp(r.get_mpz_t(), v.get_mpz_t(), static_cast<mp_bitcnt_t>(-k));
  return r;
}

void Dyadic::normalize() {
  if (sgn(m_) == 0) {
    e_ = 0;
    return;
  }
  mp_bitcnt_t tz = mpz_scan1(m_.get_mpz_t(), 0);
  if (tz > 0) {
    mpz_tdiv_q_2exp(m_.get_mpz_t(), m_.get_mpz_t(), tz);
    e_ += static_cast<int64_t>(tz);
  }
}

Dyadic Dyadic::parse(std::string_view text) {
  auto fail = [&]() -> Dyadic {
    throw DomainError("malformed dyadic literal '" + std::string(text) + "'");
  };
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  std::string_view mant = text;
  int64_t e = 0;
  auto star = text.find('*');
  if (star != std::string_view::npos) {
    mant = text.substr(0, star);
    std::string_view rest = text.substr(star + 1);
    if (rest.size() < 3 || rest.substr(0, 2) != "2^") return fail();
    rest.remove_prefix(2);
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), e);
    if (ec != std::errc() || ptr != rest.data() + rest.size()) return fail();
  }
  std::string digits(mant);
  size_t start = (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) ? 1 : 0;
  if (digits.size() == start) return fail();
  for (size_t i = start; i < digits.size(); ++i)
    if (digits[i] < '0' || digits[i] > '9') return fail();
  if (digits[0] == '+') digits.erase(0, 1);
  return Dyadic(BigInt(digits, 10), e);
}

int64_t Dyadic::log2_floor() const {
  if (is_zero()) throw DomainError("log2 of zero");
  return e_ + bit_length(m_) - 1;
}

int64_t Dyadic::log2_ceil() const {
  if (is_zero()) throw DomainError("log2 of zero");
  if (mpz_cmpabs_ui(m_.get_mpz_t(), 1) == 0) return e_;
  return e_ + bit_length(m_);
}

Dyadic Dyadic::abs() const {
  Dyadic r = *this;
  mpz_abs(r.m_.get_mpz_t(), r.m_.get_mpz_t());
  return r;
}

Dyadic Dyadic::ldexp(int64_t k) const {
  Dyadic r = *this;
  if (!r.is_zero()) r.e_ += k;
  return r;
}

double Dyadic::to_double() const {
  if (is_zero()) return 0.0;
  long ex = 0;
  double d = mpz_get_d_2exp(&ex, m_.get_mpz_t());
  return std::ldexp(d, static_cast<int>(ex + e_));
}

double Dyadic::log2_approx() const {
  long ex = 0;
  double d = mpz_get_d_2exp(&ex, m_.get_mpz_t());
  return std::log2(std::fabs(d)) + static_cast<double>(ex) + static_cast<double>(e_);
}

std::string Dyadic::to_string() const {
  return m_.get_str() + "*2^" + std::to_string(e_);
}

Dyadic Dyadic::operator-() const {
  Dyadic r = *this;
  mpz_neg(r.m_.get_mpz_t(), r.m_.get_mpz_t());
  return r;
}

Dyadic& Dyadic::operator+=(const Dyadic& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (e_ == o.e_) {
    m_ += o.m_;
  } else if (e_ > o.e_) {
    mpz_mul_2exp(m_.get_mpz_t(), m_.get_mpz_t(), static_cast<mp_bitcnt_t>(e_ - o.e_));
    m_ += o.m_;
    e_ = o.e_;
  } else {
    BigInt t;
    mpz_mul_2exp(t.get_mpz_t(), o.m_.get_mpz_t(), static_cast<mp_bitcnt_t>(o.e_ - e_));
    m_ += t;
  }
  normalize();
  return *this;
}

Dyadic& Dyadic::operator-=(const Dyadic& o) { return *this += -o; }

Dyadic& Dyadic::operator*=(const Dyadic& o) {
  m_ *= o.m_;
  e_ += o.e_;
  if (sgn(m_) == 0) e_ = 0;
  return *this;
}

int compare(const Dyadic& a, const Dyadic& b) {
  int sa = a.sign(), sb = b.sign();
  if (sa != sb) return sa < sb ? -1 : 1;
  if (sa == 0) return 0;
  int64_t la = a.log2_floor(), lb = b.log2_floor();
  if (la != lb) return (la < lb ? -1 : 1) * sa;
  int r;
  if (a.exponent() == b.exponent()) {
    r = cmp(a.mantissa(), b.mantissa());
  } else if (a.exponent() > b.exponent()) {
    BigInt t = shift_floor(a.mantissa(), a.exponent() - b.exponent());
    r = cmp(t, b.mantissa());
  } else {
    BigInt t = shift_floor(b.mantissa(), b.exponent() - a.exponent());
    r = cmp(a.mantissa(), t);
  }
  return r < 0 ? -1 : (r > 0 ? 1 : 0);
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  int c = compare(a, b);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Dyadic min(const Dyadic& a, const Dyadic& b) { return compare(a, b) <= 0 ? a : b; }
Dyadic max(const Dyadic& a, const Dyadic& b) { return compare(a, b) >= 0 ? a : b; }

Dyadic round_to_precision(const Dyadic& x, int64_t rho, Round mode) {
  if (x.is_zero() || x.exponent() >= -rho) return x;
  BigInt q;
  switch (mode) {
    case Round::down:
      q = x.scaled_floor(rho);
      break;
    case Round::up:
      q = x.scaled_ceil(rho);
      break;
    case Round::nearest: {
      // floor(x * 2^rho + 1/2)
      BigInt t = shift_floor(x.mantissa(), x.exponent() + rho + 1) + 1;
      q = shift_floor(t, -1);
      break;
    }
  }
  return Dyadic(std::move(q), -rho);
}

Dyadic round_relative(const Dyadic& x, int64_t bits, Round mode) {
  int64_t len = bit_length(x.mantissa());
  if (len <= bits) return x;
  int64_t drop = len - bits;
  return round_to_precision(x, -(x.exponent() + drop), mode);
}

Dyadic sqrt_bound(const Dyadic& x, int64_t rho, Round mode) {
  if (x.sign() < 0) throw DomainError("sqrt of negative dyadic");
  if (x.is_zero()) return x;
  BigInt s;
  switch (mode) {
    case Round::down: {
      BigInt t = x.scaled_floor(2 * rho);
      mpz_sqrt(s.get_mpz_t(), t.get_mpz_t());
      break;
    }
    case Round::up: {
      BigInt t = x.scaled_ceil(2 * rho);
      BigInt rem;
      mpz_sqrtrem(s.get_mpz_t(), rem.get_mpz_t(), t.get_mpz_t());
      if (sgn(rem) != 0) s += 1;
      break;
    }
    case Round::nearest: {
      BigInt t = x.scaled_floor(2 * rho + 2);
      mpz_sqrt(s.get_mpz_t(), t.get_mpz_t());
      s = shift_floor(s + 1, -1);
      break;
    }
  }
  return Dyadic(std::move(s), -rho);
}

Dyadic div_bound(const Dyadic& x, const Dyadic& y, int64_t rho, Round mode) {
  if (y.is_zero()) throw DomainError("division by zero");
  if (x.is_zero()) return x;
  int64_t s = x.exponent() - y.exponent() + rho;
  BigInt num = x.mantissa(), den = y.mantissa();
  if (s >= 0)
    num = shift_floor(num, s);
  else
    den = shift_floor(den, -s);
  if (sgn(den) < 0) {
    num = -num;
    den = -den;
  }
  BigInt q;
  switch (mode) {
    case Round::down:
      mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
      break;
    case Round::up:
      mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
      break;
    case Round::nearest: {
      BigInt n2 = 2 * num + den, d2 = 2 * den;
      mpz_fdiv_q(q.get_mpz_t(), n2.get_mpz_t(), d2.get_mpz_t());
      break;
    }
  }
  return Dyadic(std::move(q), -rho);
}

Dyadic pow2_ceil(const Dyadic& x) { return Dyadic::pow2(x.log2_ceil()); }

ComplexDyadic operator*(const ComplexDyadic& a, const ComplexDyadic& b) {
  if (a.is_real() && b.is_real()) return ComplexDyadic(a.re * b.re);
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

std::string ComplexDyadic::to_string() const {
  return "(" + re.to_string() + ", " + im.to_string() + ")";
}

ComplexDyadic round_to_precision(const ComplexDyadic& z, int64_t rho, Round mode) {
  return {round_to_precision(z.re, rho, mode), round_to_precision(z.im, rho, mode)};
}

namespace {
int64_t sqrt_rho(const Dyadic& n2, int64_t bits) {
  return bits - (n2.log2_floor() >> 1);
}
}  // namespace

Dyadic abs_upper(const ComplexDyadic& z, int64_t bits) {
  if (z.im.is_zero()) return z.re.abs();
  if (z.re.is_zero()) return z.im.abs();
  Dyadic n2 = z.norm2();
  return sqrt_bound(n2, sqrt_rho(n2, bits), Round::up);
}

Dyadic abs_lower(const ComplexDyadic& z, int64_t bits) {
  if (z.im.is_zero()) return z.re.abs();
  if (z.re.is_zero()) return z.im.abs();
  Dyadic n2 = z.norm2();
  return sqrt_bound(n2, sqrt_rho(n2, bits), Round::down);
}

}  // namespace rootforge
