#include "doctest.h"
#include "support/test_support.hpp"

using namespace rootforge;
using rftest::poly2;

namespace {

IntPoly random_poly(std::mt19937_64& rng, int deg, long bound) {
  std::uniform_int_distribution<long> c(-bound, bound);
  std::vector<BigInt> v(deg + 1);
  for (auto& x : v) x = c(rng);
  if (v.back() == 0) v.back() = 1;
  return IntPoly(v);
}

IntPoly2 random_poly2(std::mt19937_64& rng, int total, long bound) {
  std::uniform_int_distribution<long> c(-bound, bound);
  IntPoly2 f;
  for (int i = 0; i <= total; ++i)
    for (int j = 0; i + j <= total; ++j) f.add_term(BigInt(c(rng)), i, j);
  return f;
}

ModPoly mp(std::initializer_list<uint64_t> c, uint64_t p) { return ModPoly(std::vector<uint64_t>(c), p); }

}  // namespace

TEST_CASE("gcd examples") {
  CHECK(gcd(IntPoly{2, -3, 0, 1}, IntPoly{-3, 0, 3}) == IntPoly{-1, 1});
  CHECK(gcd(IntPoly{1, 0, 1}, IntPoly{1, 0, 1}) == IntPoly{1, 0, 1});
  CHECK(gcd(IntPoly{-1, 0, 1}, IntPoly{1, 0, 1}) == IntPoly{1});
  CHECK_THROWS(gcd(IntPoly(), IntPoly()));
}

TEST_CASE("square_free_part examples") {
  SquareFree a = square_free_part(IntPoly{2, -3, 0, 1});
  CHECK(a.part == IntPoly{-2, 1, 1});
  CHECK(a.k == 2);
  SquareFree b = square_free_part(IntPoly{1, 0, 1});
  CHECK(b.part == IntPoly{1, 0, 1});
  CHECK(b.k == 2);
  SquareFree c = square_free_part(pow(IntPoly{-1, 1}, 4));
  CHECK(c.part == IntPoly{-1, 1});
  CHECK(c.k == 1);
  CHECK_THROWS(square_free_part(IntPoly{5}));
}

TEST_CASE("subresultant examples") {
  IntPoly2 parabola = poly2({{1, 0, 2}, {-1, 1, 0}});
  IntPoly2 two_y = poly2({{2, 0, 1}});
  auto seq = subresultant_sequence(parabola, two_y);
  REQUIRE(seq.size() >= 2);
  CHECK(seq[0].index == 0);
  CHECK(seq[0].sres.coeff_y(0) == IntPoly{0, -4});
  CHECK(seq[0].sr == IntPoly{0, -4});
  CHECK(seq[1].sr == IntPoly{2});

  IntPoly2 circle = poly2({{1, 0, 2}, {1, 2, 0}, {-1, 0, 0}});
  CHECK(resultant_y(circle, two_y) == IntPoly{-4, 0, 4});

  IntPoly2 a = poly2({{1, 0, 1}, {-1, 1, 0}});
  IntPoly2 b = poly2({{1, 0, 1}, {1, 1, 0}});
  IntPoly r = resultant_y(a, b);
  CHECK(abs(evaluate(r, BigInt(1))) == 2);
}

TEST_CASE("resultant examples") {
  CHECK(resultant(IntPoly{-2, 1}, IntPoly{-3, 1}) == -1);
  CHECK(resultant(IntPoly{-1, 0, 1}, IntPoly{0, 1}) == -1);
  IntPoly f{3, -1, 4, 1};
  CHECK(resultant(f, f) == 0);
  CHECK_THROWS(resultant(IntPoly(), f));
}

TEST_CASE("mod_reduce examples") {
  CHECK(mod_reduce(IntPoly{10, 7, 5}, 5) == mp({0, 2}, 5));
  CHECK(mod_reduce(IntPoly{-1, 1}, 2) == mp({1, 1}, 2));
  CHECK(mod_reduce(IntPoly{0, -4}, 5) == mp({0, 1}, 5));
}

TEST_CASE("mod_gcd and mod_div examples") {
  CHECK(mod_gcd(mp({6, 0, 1}, 7), mp({6, 1}, 7)) == mp({6, 1}, 7));
  CHECK(mod_gcd(mp({0, 1}, 5), mp({2}, 5)) == mp({1}, 5));
  CHECK(mod_div(mp({6, 0, 1}, 7), mp({6, 1}, 7)) == mp({1, 1}, 7));
  CHECK_THROWS_AS(mod_div(mp({1, 0, 1}, 7), mp({6, 1}, 7)), DomainError);
}

TEST_CASE("gcd divides both inputs on constructed products") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 100; ++t) {
    IntPoly common = random_poly(rng, 1 + static_cast<int>(rng() % 3), 9);
    IntPoly a = common * random_poly(rng, static_cast<int>(rng() % 4), 9);
    IntPoly b = common * random_poly(rng, static_cast<int>(rng() % 4), 9);
    IntPoly g = gcd(a, b);
    CHECK(divides(g, a));
    CHECK(divides(g, b));
    CHECK(divides(primitive_part(common), g));
    CHECK(g.lc() > 0);
  }
}

TEST_CASE("cofactor identity on random bivariate pairs") {
  std::mt19937_64 rng(22);
  int checked = 0;
  for (int t = 0; t < 100; ++t) {
    IntPoly2 f = random_poly2(rng, 1 + static_cast<int>(rng() % 6), 5);
    IntPoly2 g = random_poly2(rng, 1 + static_cast<int>(rng() % 6), 5);
    if (f.deg_y() < g.deg_y()) std::swap(f, g);
    if (g.is_zero()) continue;
    for (const auto& e : subresultant_sequence(f, g)) {
      CHECK(e.u * f + e.v * g == e.sres);
      CHECK(e.sres.deg_y() <= e.index);
      CHECK(e.sres.coeff_y(e.index) == e.sr);
      ++checked;
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("resultant vanishes exactly when the gcd is nonconstant") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 100; ++t) {
    bool shared = (t % 2) == 0;
    IntPoly a = random_poly(rng, 1 + static_cast<int>(rng() % 4), 6);
    IntPoly b = random_poly(rng, 1 + static_cast<int>(rng() % 4), 6);
    if (shared) {
      IntPoly c = random_poly(rng, 1 + static_cast<int>(rng() % 2), 6);
      a = a * c;
      b = b * c;
    }
    bool zero = resultant(a, b) == 0;
    CHECK(zero == (gcd(a, b).degree() > 0));
    if (shared) CHECK(zero);
  }
}

TEST_CASE("square-free reconstruction") {
  std::mt19937_64 rng(24);
  for (int t = 0; t < 60; ++t) {
    IntPoly p{1};
    IntPoly expected{1};
    int factors = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < factors; ++i) {
      IntPoly f = random_poly(rng, 1 + static_cast<int>(rng() % 2), 7);
      int e = 1 + static_cast<int>(rng() % 3);
      p = p * pow(f, e);
      expected = expected * f;
    }
    SquareFree sf = square_free_part(p);
    CHECK(divides(sf.part, p));
    CHECK(divides(primitive_part(p), pow(sf.part, p.degree())));
    CHECK(divides(sf.part, expected));
    CHECK(gcd(sf.part, derivative(sf.part)).degree() == 0);
    CHECK(sf.k == sf.part.degree());
  }
}

TEST_CASE("reduction mod p commutes with ring operations") {
  std::mt19937_64 rng(25);
  const auto& primes = prime_table();
  for (int t = 0; t < 100; ++t) {
    uint64_t p = primes[t % primes.size()];
    IntPoly a = random_poly(rng, static_cast<int>(rng() % 6), 1000000);
    IntPoly b = random_poly(rng, static_cast<int>(rng() % 6), 1000000);
    CHECK(mod_reduce(a * b, p) == mul(mod_reduce(a, p), mod_reduce(b, p)));
    CHECK(mod_reduce(a + b, p) == add(mod_reduce(a, p), mod_reduce(b, p)));
    CHECK(mod_reduce(a - b, p) == sub(mod_reduce(a, p), mod_reduce(b, p)));
    if (a.degree() > 0 && b.degree() > 0 && mod_reduce(a, p).degree() == a.degree() &&
        mod_reduce(b, p).degree() == b.degree()) {
      uint64_t r = mod_resultant(mod_reduce(a, p), mod_reduce(b, p));
      CHECK(mod_reduce(resultant(a, b), p) == BigInt(static_cast<unsigned long>(r)));
    }
    IntPoly c = random_poly(rng, 1 + static_cast<int>(rng() % 2), 50);
    ModPoly g = mod_gcd(mod_reduce(a * c, p), mod_reduce(b * c, p));
    CHECK(mod_div(g, monic(mod_reduce(c, p))).degree() >= 0);
  }
}

TEST_CASE("bivariate reduction matches univariate reduction") {
  IntPoly2 f = poly2({{7, 2, 1}, {-3, 0, 2}, {11, 1, 0}});
  ModPoly2 r = mod_reduce(f, 5);
  REQUIRE(r.c.size() == 3);
  CHECK(r.c[1] == mod_reduce(IntPoly{0, 0, 7}, 5));
  CHECK(r.c[2] == mod_reduce(IntPoly{-3}, 5));
}

TEST_CASE("bivariate gcd and shear") {
  IntPoly2 line = poly2({{1, 0, 1}, {-1, 1, 0}});
  IntPoly2 circle = poly2({{1, 0, 2}, {1, 2, 0}, {-1, 0, 0}});
  IntPoly2 g = gcd(line * circle, line * line);
  CHECK(g == line);
  IntPoly2 hyp = poly2({{1, 1, 1}, {-1, 0, 0}});
  CHECK(shear(hyp, BigInt(1)) == poly2({{1, 0, 2}, {1, 1, 1}, {-1, 0, 0}}));
  CHECK(shear(circle, BigInt(0)) == circle);
}
