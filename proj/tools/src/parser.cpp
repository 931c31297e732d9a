#include "rootforge_cli/parser.hpp"

#include <cctype>

namespace rootforge::cli {
namespace {

constexpr int kMaxExponent = 1 << 16;

bool is_zero(const GaussRational& c) { return sgn(c.re) == 0 && sgn(c.im) == 0; }

GaussRational mul(const GaussRational& a, const GaussRational& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

void add_into(SparsePoly& p, const std::pair<int, int>& key, const GaussRational& c) {
  auto& slot = p[key];
  slot.re += c.re;
  slot.im += c.im;
  if (is_zero(slot)) p.erase(key);
}

SparsePoly add(SparsePoly a, const SparsePoly& b, bool negate) {
  for (const auto& [k, c] : b) add_into(a, k, negate ? GaussRational{-c.re, -c.im} : c);
  return a;
}

SparsePoly mul(const SparsePoly& a, const SparsePoly& b) {
  SparsePoly r;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) add_into(r, {ka.first + kb.first, ka.second + kb.second}, mul(ca, cb));
  return r;
}

SparsePoly constant(GaussRational c) {
  SparsePoly p;
  if (!is_zero(c)) p[{0, 0}] = std::move(c);
  return p;
}

bool is_constant(const SparsePoly& p) { return p.empty() || (p.size() == 1 && p.begin()->first == std::pair{0, 0}); }

GaussRational constant_value(const SparsePoly& p) {
  return p.empty() ? GaussRational{} : p.begin()->second;
}

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  SparsePoly parse() {
    SparsePoly r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return r;
  }

 private:
  std::string_view s_;
  size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  bool starts_atom() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == 'x' || c == 'y' ||
           c == 'i' || c == '(';
  }

  SparsePoly expr() {
    SparsePoly r = term();
    while (true) {
      if (peek('+')) {
        ++pos_;
        r = add(std::move(r), term(), false);
      } else if (peek('-')) {
        ++pos_;
        r = add(std::move(r), term(), true);
      } else {
        return r;
      }
    }
  }

  SparsePoly term() {
    SparsePoly r = unary();
    while (true) {
      if (peek('*')) {
        ++pos_;
        r = mul(r, unary());
      } else if (peek('/')) {
        ++pos_;
        size_t at = pos_;
        SparsePoly d = unary();
        if (!is_constant(d) || d.empty()) throw ParseError("division by a non-constant or zero", at);
        GaussRational c = constant_value(d);
        mpq_class n2 = c.re * c.re + c.im * c.im;
        r = mul(r, constant({c.re / n2, -c.im / n2}));
      } else if (starts_atom()) {
        r = mul(r, power());
      } else {
        return r;
      }
    }
  }

  SparsePoly unary() {
    if (peek('-')) {
      ++pos_;
      return add(SparsePoly{}, unary(), true);
    }
    if (peek('+')) {
      ++pos_;
      return unary();
    }
    return power();
  }

  SparsePoly power() {
    SparsePoly base = atom();
    if (!peek('^')) return base;
    ++pos_;
    skip();
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      neg = s_[pos_] == '-';
      ++pos_;
    }
    size_t at = pos_;
    long e = 0;
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      fail("expected an integer exponent");
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      e = e * 10 + (s_[pos_++] - '0');
      if (e > kMaxExponent) throw ParseError("exponent too large", at);
    }
    if (neg) {
      if (!is_constant(base) || base.empty())
        throw ParseError("negative exponent needs a nonzero constant base", at);
      GaussRational c = constant_value(base);
      mpq_class n2 = c.re * c.re + c.im * c.im;
      base = constant({c.re / n2, -c.im / n2});
    }
    SparsePoly r = constant({1, 0});
    SparsePoly b = base;
    for (long k = e; k > 0; k >>= 1) {
      if (k & 1) r = mul(r, b);
      if (k > 1) b = mul(b, b);
    }
    return r;
  }

  SparsePoly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      SparsePoly r = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return r;
    }
    if (c == 'x' || c == 'y' || c == 'i') {
      ++pos_;
      SparsePoly r;
      if (c == 'x') r[{1, 0}] = {1, 0};
      if (c == 'y') r[{0, 1}] = {1, 0};
      if (c == 'i') r[{0, 0}] = {0, 1};
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return constant({number(), 0});
    fail("unexpected '" + std::string(1, c) + "'");
  }

  mpq_class number() {
    size_t start = pos_;
    std::string digits;
    int frac = 0;
    bool dot = false;
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        digits += c;
        if (dot) ++frac;
      } else if (c == '.' && !dot) {
        dot = true;
      } else {
        break;
      }
      ++pos_;
    }
    if (digits.empty()) throw ParseError("malformed number", start);
    mpq_class v{mpz_class(digits, 10)};
    if (frac > 0) {
      mpz_class ten;
      mpz_ui_pow_ui(ten.get_mpz_t(), 10, static_cast<unsigned long>(frac));
      v /= ten;
      v.canonicalize();
    }
    return v;
  }
};

bool is_dyadic(const mpq_class& q, int64_t* exp) {
  const mpz_class& d = q.get_den();
  size_t bits = mpz_scan1(d.get_mpz_t(), 0);
  if (mpz_sizeinbase(d.get_mpz_t(), 2) != bits + 1) return false;
  *exp = -static_cast<int64_t>(bits);
  return true;
}

Dyadic to_dyadic_exact(const mpq_class& q) {
  int64_t e = 0;
  if (!is_dyadic(q, &e))
    throw ParseError("coefficient " + q.get_str() + " has no finite binary expansion", 0);
  return Dyadic(q.get_num(), e);
}

}  // namespace

SparsePoly parse_sparse(std::string_view text) { return Parser(text).parse(); }

ParsedPolynomial parse_polynomial(std::string_view text) {
  SparsePoly p = parse_sparse(text);
  bool integral = true, has_y = false;
  int deg_x = 0;
  for (const auto& [k, c] : p) {
    if (sgn(c.im) != 0 || c.re.get_den() != 1) integral = false;
    if (k.second > 0) has_y = true;
    deg_x = std::max(deg_x, k.first);
  }
  ParsedPolynomial out;
  if (integral) {
    if (has_y) {
      out.kind = ParsedPolynomial::Kind::bivariate;
      for (const auto& [k, c] : p) out.bivariate.add_term(c.re.get_num(), k.first, k.second);
    } else {
      out.kind = ParsedPolynomial::Kind::integer;
      std::vector<BigInt> coeffs(p.empty() ? 0 : deg_x + 1);
      for (const auto& [k, c] : p) coeffs[k.first] = c.re.get_num();
      out.univariate = IntPoly(std::move(coeffs));
    }
    return out;
  }
  if (has_y) throw ParseError("bivariate polynomials need integer coefficients", 0);
  out.kind = ParsedPolynomial::Kind::dyadic;
  out.dyadic.assign(deg_x + 1, ComplexDyadic());
  for (const auto& [k, c] : p) out.dyadic[k.first] = {to_dyadic_exact(c.re), to_dyadic_exact(c.im)};
  return out;
}

}  // namespace rootforge::cli
