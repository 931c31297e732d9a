// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "support/test_support.hpp"

using namespace rootforge;
using namespace rftest;

namespace {

struct Verdict {
  bool pass = true;
  std::ostringstream note;
  int failures = 0;
  void fail(const std::string& why) {
    if (failures++ < 5) note << " [" << why << "]";
    pass = false;
  }
};

// Factorizations collected from the isolation runs, checked in AC2.
struct Collected {
  IntPoly p;
  std::vector<ComplexDyadic> zs;
  int64_t b;
};
std::vector<Collected> g_factorizations;

// ---------------------------------------------------------------- AC1
Verdict ac1() {
  Verdict v;
  std::mt19937_64 rng(0xac1);
  int instances = 0;
  for (int t = 0; t < 1000; ++t) {
    Constructed c = random_integer_roots(rng, 40, 5, int64_t{1} << 20);
    RootResult r;
    try {
      r = isolate(OracleHandle::from_integer(c.p), c.k());
    } catch (const std::exception& e) {
      v.fail("instance " + std::to_string(t) + ": " + e.what());
      continue;
    }
    ++instances;
    if (!r.approximations.empty()) g_factorizations.push_back({c.p, r.approximations, r.b_final});
    if (r.k() != c.k()) {
      v.fail("instance " + std::to_string(t) + ": wrong disk count");
      continue;
    }
    if (!pairwise_disjoint(r.disks)) v.fail("instance " + std::to_string(t) + ": overlapping disks");
    int total = 0;
    for (int m : r.multiplicities) total += m;
    if (total != c.n()) v.fail("instance " + std::to_string(t) + ": multiplicities do not sum to n");
    auto sig = separations_sq(c.roots);
    for (int i = 0; i < c.k(); ++i) {
      int j = locate(r.disks, as_point(c.roots[i]));
      if (j < 0) {
        v.fail("instance " + std::to_string(t) + ": root " + c.roots[i].re.get_str() + " not isolated");
        continue;
      }
      if (r.multiplicities[j] != c.roots[i].mult) v.fail("instance " + std::to_string(t) + ": multiplicity");
      if (!radius_below(r.disks[j].radius, sig[i], c.n()))
        v.fail("instance " + std::to_string(t) + ": R >= sigma/(64n)");
    }
  }
  v.note << " instances=" << instances;
  return v;
}

// ---------------------------------------------------------------- AC2
Verdict ac2() {
  Verdict v;
  std::mt19937_64 rng(0xac2);
  // extra direct factorizations, including complex roots and non-monic input
  for (int t = 0; t < 100; ++t) {
    Constructed c = random_gaussian_roots(rng, 20, 3, 1 << 10);
    auto h = OracleHandle::from_integer(c.p);
    int64_t b = initial_precision(c.n()) << (t % 4);
    try {
      Factorization f = factorize(h, b, compute_gamma(h).Gamma);
      if (f.verified) g_factorizations.push_back({c.p, f.approximations, b});
    } catch (const FactorizationFailed&) {
    }
  }
  int checked = 0;
  for (const auto& f : g_factorizations) {
    ++checked;
    if (!backward_error_holds(f.p, f.zs, f.b)) v.fail("bound violated at b=" + std::to_string(f.b));
  }
  v.note << " factorizations=" << checked;
  if (checked < 1000) v.fail("too few factorizations collected");
  return v;
}

// ---------------------------------------------------------------- AC3
Verdict ac3() {
  Verdict v;
  std::mt19937_64 rng(0xac3);
  double worst_slack = 1e9;
  for (int t = 0; t < 200; ++t) {
    Constructed c = random_gaussian_roots(rng, 30, 3, int64_t{1} << (4 + t % 27));
    int64_t gamma = compute_gamma(OracleHandle::from_integer(c.p)).Gamma;
    mpz_class max_sq = 0;
    for (const auto& r : c.roots) max_sq = std::max<mpz_class>(max_sq, r.re * r.re + r.im * r.im);
    double gamma_p = std::max(1.0, 0.5 * std::log2(max_sq.get_d()));
    // Gamma_p <= Gamma, exactly: max|z|^2 <= 4^Gamma and 1 <= Gamma
    bool lower = gamma >= 1 && max_sq <= (mpz_class(1) << static_cast<mp_bitcnt_t>(2 * gamma));
    double upper_gap = 8 * std::log2(static_cast<double>(c.n())) + gamma_p - static_cast<double>(gamma);
    worst_slack = std::min(worst_slack, upper_gap);
    if (!lower) v.fail("Gamma below Gamma_p on instance " + std::to_string(t));
    if (!(upper_gap > 0)) v.fail("Gamma >= 8 log n + Gamma_p on instance " + std::to_string(t));
  }
  v.note << " instances=200 min(8log n+Gamma_p-Gamma)=" << worst_slack;
  return v;
}

// ---------------------------------------------------------------- AC4
Verdict ac4() {
  Verdict v;
  std::mt19937_64 rng(0xac4);
  int64_t largest_b = 0;
  for (int t = 0; t < 200; ++t) {
    Constructed c = random_gaussian_roots(rng, 12, 4, 1 << (1 + t % 6));
    int64_t b = b0_from_ground_truth(c);
    largest_b = std::max(largest_b, b);
    auto h = OracleHandle::from_integer(c.p);
    Factorization f = factorize(h, b, compute_gamma(h).Gamma);
    g_factorizations.push_back({c.p, f.approximations, b});
    ClusterResult cr = cluster(f.approximations, c.k(), b, c.n());
    auto* cl = std::get_if<Clustering>(&cr);
    if (!cl) {
      v.fail("clustering failed on instance " + std::to_string(t));
      continue;
    }
    std::vector<int> hit(cl->disks.size(), 0);
    for (const auto& root : c.roots) {
      int j = locate(cl->disks, as_point(root));
      if (j < 0) {
        v.fail("root outside every cluster disk on instance " + std::to_string(t));
        continue;
      }
      ++hit[j];
      if (static_cast<int>(cl->clusters[j].size()) != root.mult)
        v.fail("|C_i| != m_i on instance " + std::to_string(t));
    }
    for (int x : hit)
      if (x != 1) v.fail("cluster disk without exactly one root on instance " + std::to_string(t));
  }
  v.note << " instances=200 max b0=" << largest_b;
  return v;
}

// ---------------------------------------------------------------- AC5
struct QuadRoot {
  long a;      // root is sqrt(|a|), times i when imaginary
  bool imag;
  int sign;
};

Verdict ac5() {
  Verdict v;
  std::mt19937_64 rng(0xac5);
  const int kappa = 256, oracle_bits = 512;
  for (int t = 0; t < 50; ++t) {
    std::vector<QuadRoot> quads;
    std::vector<long> ints;
    IntPoly p{1};
    std::set<long> used;
    int real_quads = 1 + static_cast<int>(rng() % 3), imag_quads = static_cast<int>(rng() % 3);
    for (int i = 0; i < real_quads + imag_quads; ++i) {
      long a;
      do {
        a = 2 + static_cast<long>(rng() % 500);
      } while (used.count(a) || [&] { long s = std::lround(std::sqrt(static_cast<double>(a))); return s * s == a; }());
      used.insert(a);
      bool imag = i >= real_quads;
      int mult = 1 + static_cast<int>(rng() % 2);
      for (int m = 0; m < mult; ++m) p = p * IntPoly{imag ? a : -a, 0, 1};
      quads.push_back({a, imag, 1});
      quads.push_back({a, imag, -1});
    }
    int linear = static_cast<int>(rng() % 3);
    for (int i = 0; i < linear; ++i) {
      long r = static_cast<long>(rng() % 61) - 30;
      if (std::find(ints.begin(), ints.end(), r) != ints.end()) continue;
      ints.push_back(r);
      p = p * IntPoly{-r, 1};
    }
    RootResult res;
    try {
      res = refine_integer(p, isolate_integer(p), kappa);
    } catch (const std::exception& e) {
      v.fail("instance " + std::to_string(t) + ": " + e.what());
      continue;
    }
    if (res.k() != static_cast<int>(quads.size() + ints.size())) v.fail("wrong k");
    for (const auto& d : res.disks)
      if (!(d.radius < Dyadic::pow2(-kappa))) v.fail("radius not below 2^-256");
    if (!pairwise_disjoint(res.disks)) v.fail("overlapping disks");
    for (const auto& q : quads) {
      mpz_class s, big = mpz_class(q.a) << (2 * oracle_bits);
      mpz_sqrt(s.get_mpz_t(), big.get_mpz_t());
      Dyadic lo(s, -oracle_bits), hi(s + 1, -oracle_bits);
      if (q.sign < 0) std::swap(lo, hi), lo = -lo, hi = -hi;
      ComplexDyadic a = q.imag ? ComplexDyadic(Dyadic(0), lo) : ComplexDyadic(lo);
      ComplexDyadic b = q.imag ? ComplexDyadic(Dyadic(0), hi) : ComplexDyadic(hi);
      int found = 0;
      for (const auto& d : res.disks) found += d.contains(a) && d.contains(b);
      if (found != 1) v.fail("sqrt root not enclosed on instance " + std::to_string(t));
    }
    for (long r : ints)
      if (locate(res.disks, Dyadic(r)) < 0) v.fail("integer root not enclosed");
  }
  v.note << " instances=50 kappa=256 oracle=512-bit isqrt";
  return v;
}

// ---------------------------------------------------------------- AC6
Verdict ac6() {
  Verdict v;
  for (int n : {8, 16}) {
    const int tau = 14;
    IntPoly lin{-1, 1L << tau};
    IntPoly p = IntPoly::monomial(1, n) - IntPoly{2} * lin * lin;
    RootResult iso = isolate_integer(p);
    RootResult ref = refine_integer(p, iso, 100);
    std::vector<int> near;
    for (int i = 0; i < ref.k(); ++i)
      if (ref.real_flags[i] && (ref.disks[i].center.re - Dyadic::pow2(-tau)).abs() < Dyadic::pow2(-tau - 4))
        near.push_back(i);
    if (near.size() != 2) {
      v.fail("near pair not found for n=" + std::to_string(n));
      continue;
    }
    for (int i : near) {
      const auto& d = ref.disks[i];
      if (!(d.radius < Dyadic::pow2(-100))) v.fail("radius not below 2^-100");
      // evaluation oracle: a sign change across the disk's real diameter
      if (sign_at(p, d.center.re - d.radius) * sign_at(p, d.center.re + d.radius) >= 0)
        v.fail("no sign change across a near-pair disk");
    }
    if (ref.disks[near[0]].intersects(ref.disks[near[1]])) v.fail("near-pair disks overlap");
    // Separation-driven precision: the clustering condition
    // 2^(-b/2) < min((sigma/4n)^8, sigma/(1024 n^2)) for simple roots.
    double log_sigma = (ref.disks[near[0]].center.re - ref.disks[near[1]].center.re).abs().log2_approx();
    double b_sep = std::max(16 * (std::log2(4.0 * n) - log_sigma), 2 * (std::log2(1024.0 * n * n) - log_sigma));
    double ratio = std::log2(static_cast<double>(iso.b_final) / b_sep);
    v.note << " n=" << n << ": log2(sigma)=" << log_sigma << " b_sep=" << b_sep << " b_final=" << iso.b_final
           << " log2(b_final/b_sep)=" << ratio;
    if (std::abs(ratio) > 3) v.fail("b_final not within a factor 8 of the separation precision");
  }
  return v;
}

// ---------------------------------------------------------------- AC7
Verdict ac7() {
  Verdict v;
  std::mt19937_64 rng(0xac7);
  auto rpoly = [&](int deg, long bound) {
    std::uniform_int_distribution<long> c(-bound, bound);
    std::vector<BigInt> x(deg + 1);
    for (auto& y : x) y = c(rng);
    if (x.back() == 0) x.back() = 1;
    return IntPoly(x);
  };
  auto rpoly2 = [&](int total, long bound) {
    std::uniform_int_distribution<long> c(-bound, bound);
    IntPoly2 f;
    for (int i = 0; i <= total; ++i)
      for (int j = 0; i + j <= total; ++j) f.add_term(BigInt(c(rng)), i, j);
    return f;
  };
  int cofactor = 0;
  for (int t = 0; t < 100; ++t) {
    IntPoly2 f = rpoly2(1 + static_cast<int>(rng() % 6), 5), g = rpoly2(1 + static_cast<int>(rng() % 6), 5);
    if (f.deg_y() < g.deg_y()) std::swap(f, g);
    if (g.is_zero()) continue;
    for (const auto& e : subresultant_sequence(f, g)) {
      ++cofactor;
      if (!(e.u * f + e.v * g == e.sres)) v.fail("cofactor identity");
    }
  }
  for (int t = 0; t < 100; ++t) {
    IntPoly c = rpoly(1 + static_cast<int>(rng() % 3), 9);
    IntPoly a = c * rpoly(static_cast<int>(rng() % 4), 9), b = c * rpoly(static_cast<int>(rng() % 4), 9);
    IntPoly g = gcd(a, b);
    if (!divides(g, a) || !divides(g, b) || !divides(primitive_part(c), g)) v.fail("gcd divisibility");
    if ((resultant(a, b) == 0) != (g.degree() > 0)) v.fail("resultant vs gcd");
  }
  for (int t = 0; t < 100; ++t) {
    IntPoly p{1};
    for (int i = 0; i < 1 + static_cast<int>(rng() % 3); ++i)
      p = p * pow(rpoly(1 + static_cast<int>(rng() % 2), 7), 1 + static_cast<int>(rng() % 3));
    SquareFree sf = square_free_part(p);
    if (!divides(sf.part, p) || !divides(primitive_part(p), pow(sf.part, p.degree())) ||
        gcd(sf.part, derivative(sf.part)).degree() != 0 || sf.k != sf.part.degree())
      v.fail("square-free reconstruction");
  }
  const auto& primes = prime_table();
  for (int t = 0; t < 100; ++t) {
    uint64_t q = primes[t % primes.size()];
    IntPoly a = rpoly(static_cast<int>(rng() % 6), 1000000), b = rpoly(static_cast<int>(rng() % 6), 1000000);
    if (!(mod_reduce(a * b, q) == mul(mod_reduce(a, q), mod_reduce(b, q))) ||
        !(mod_reduce(a + b, q) == add(mod_reduce(a, q), mod_reduce(b, q))))
      v.fail("modular commutation");
    if (a.degree() > 0 && b.degree() > 0 && mod_reduce(a, q).degree() == a.degree() &&
        mod_reduce(b, q).degree() == b.degree() &&
        mod_reduce(resultant(a, b), q) != BigInt(static_cast<unsigned long>(mod_resultant(mod_reduce(a, q), mod_reduce(b, q)))))
      v.fail("modular resultant");
  }
  v.note << " cofactor identities=" << cofactor << " gcd=100 square-free=100 modular=100";
  return v;
}

// ---------------------------------------------------------------- curves
IntPoly2 circle() { return poly2({{1, 2, 0}, {1, 0, 2}, {-1, 0, 0}}); }
IntPoly2 parabola() { return poly2({{1, 0, 2}, {-1, 1, 0}}); }
IntPoly2 nodal() { return poly2({{1, 0, 2}, {-1, 3, 0}, {-1, 2, 0}}); }
IntPoly2 cusp() { return poly2({{1, 0, 2}, {-1, 3, 0}}); }
IntPoly2 two_ovals() {
  return circle() * poly2({{1, 2, 0}, {-8, 1, 0}, {16, 0, 0}, {1, 0, 2}, {-1, 0, 0}});
}

std::vector<IntPoly2> random_curves(int count) {
  std::mt19937_64 rng(0xc0de);
  std::uniform_int_distribution<long> coef(-4, 4);
  std::vector<IntPoly2> out;
  while (static_cast<int>(out.size()) < count) {
    IntPoly2 f;
    int deg = 2 + static_cast<int>(rng() % 4);
    for (int i = 0; i <= deg; ++i)
      for (int j = 0; i + j <= deg; ++j)
        if (rng() % 3 != 0) f.add_term(BigInt(coef(rng)), i, j);
    if (f.total_degree() < 2 || f.deg_y() < 1) continue;
    if (gcd(f, derivative_y(f)).deg_y() > 0) continue;
    out.push_back(f);
  }
  return out;
}

// Evaluation oracle for a claimed isolation: if disk i really holds m_i roots
// then |p(c_i)| <= |p_n| R_i^m_i prod_{j != i} (|c_i - c_j| + R_j)^m_j.
// Checked on a 2048-bit approximation of p in log scale, one bit of slack.
bool consistent_with_evaluation(const OracleHandle& fiber, const RootResult& r) {
  const int64_t L = 2048;
  ApproxPolynomial a = fiber.approximate(L);
  double log_norm = -1e300;
  for (const auto& c : a.coeffs) {
    double v = 0.5 * c.norm2().log2_approx();
    log_norm = std::max(log_norm, v) + std::log2(1 + std::exp2(-std::abs(log_norm - v)));
  }
  auto log_abs = [](const ComplexDyadic& z) { return z.norm2().is_zero() ? -1e300 : 0.5 * z.norm2().log2_approx(); };
  const double log_pn = log_abs(a.coeffs.back());
  for (int i = 0; i < r.k(); ++i) {
    const ComplexDyadic& c = r.disks[i].center;
    ComplexDyadic v;
    for (size_t j = a.coeffs.size(); j-- > 0;) v = v * c + a.coeffs[j];
    double bound = log_pn + r.multiplicities[i] * r.disks[i].radius.log2_approx();
    for (int j = 0; j < r.k(); ++j)
      if (j != i) {
        double d = std::exp2(log_abs(c - r.disks[j].center)) + std::exp2(r.disks[j].radius.log2_approx());
        bound += r.multiplicities[j] * std::log2(d);
      }
    double noise = -L + log_norm + a.degree() * std::max(0.0, log_abs(c)) + 1;
    double allowed = std::max(bound, noise) + 1;
    if (log_abs(v) > allowed) return false;
  }
  return true;
}

// Distinct-root count of a fiber by trying every k: exactly one k may give
// an isolation that survives the evaluation oracle.
int brute_force_k(const OracleHandle& fiber, int n) {
  IsolatorConfig cfg;
  cfg.b_max_cap = int64_t{1} << 13;
  int found = -1;
  for (int k = 1; k <= n; ++k) {
    try {
      RootResult r = isolate(fiber, k, cfg);
      int total = 0;
      for (int m : r.multiplicities) total += m;
      if (total != n || !pairwise_disjoint(r.disks)) return -2;
      if (!consistent_with_evaluation(fiber, r)) continue;
      if (found >= 0) return -3;
      found = k;
    } catch (const PrecisionCapError&) {
    }
  }
  return found;
}

// ---------------------------------------------------------------- AC8
Verdict ac8() {
  Verdict v;
  struct Named {
    const char* name;
    IntPoly2 f;
  };
  std::vector<Named> curves{{"circle", circle()}, {"parabola", parabola()}, {"nodal", nodal()}, {"cusp", cusp()}};
  int idx = 0;
  for (const auto& f : random_curves(20)) curves.push_back({nullptr, f}), ++idx;
  int columns_checked = 0, worst_attempts = 0;
  for (size_t c = 0; c < curves.size(); ++c) {
    std::string name = curves[c].name ? curves[c].name : "random#" + std::to_string(c - 4);
    Topology t;
    try {
      t = compute_topology(curves[c].f, seeded(0xac8 + c));
    } catch (const std::exception& e) {
      v.fail(name + ": " + e.what());
      continue;
    }
    worst_attempts = std::max(worst_attempts, t.attempts);
    if (t.attempts > 6) v.fail(name + ": gate needed " + std::to_string(t.attempts - 1) + " retries");
    if (!t.counts.passed()) v.fail(name + ": K- != K+");
    for (const auto& col : t.columns) {
      if (!col.critical) continue;
      int kp = t.counts.k_plus[col.alpha_index];
      int bf = brute_force_k(col.fiber, t.projection.n);
      ++columns_checked;
      if (bf != kp)
        v.fail(name + ": k+=" + std::to_string(kp) + " brute force=" + std::to_string(bf));
    }
  }
  v.note << " curves=" << curves.size() << " critical fibers checked=" << columns_checked
         << " max attempts=" << worst_attempts;
  return v;
}

// ---------------------------------------------------------------- AC9
Verdict ac9() {
  Verdict v;
  struct Known {
    const char* name;
    IntPoly2 f;
    int components, cycles;
  };
  std::vector<Known> curves{{"circle", circle(), 1, 1},
                            {"parabola", parabola(), 1, 0},
                            {"nodal cubic", nodal(), 1, 1},
                            {"cusp", cusp(), 1, 0},
                            {"two ovals", two_ovals(), 2, 2}};
  for (const auto& k : curves) {
    Topology t = compute_topology(k.f);
    if (t.graph.components() != k.components || t.graph.cycles() != k.cycles)
      v.fail(std::string(k.name) + " gave (" + std::to_string(t.graph.components()) + "," +
             std::to_string(t.graph.cycles()) + ")");
    int accepted = 0;
    for (int a = 0; a < 40 && accepted < 3; ++a) {
      BigInt s = shear_candidate(a, k.f.total_degree(), 0);
      TopologyConfig cfg;
      cfg.shear = s;
      Topology ts = compute_topology(k.f, cfg);
      if (ts.job.shear_s != s) continue;
      ++accepted;
      if (ts.graph.components() != k.components || ts.graph.cycles() != k.cycles)
        v.fail(std::string(k.name) + " not shear invariant at s=" + s.get_str());
    }
    if (accepted < 3) v.fail(std::string(k.name) + ": fewer than 3 accepted shears");
    v.note << " " << k.name << "=(" << t.graph.components() << "," << t.graph.cycles() << ")";
  }
  return v;
}

// ---------------------------------------------------------------- AC10
struct Line {
  long a, b, c;  // a x + b y + c
};

IntPoly2 line_poly(const Line& l) { return poly2({{l.a, 1, 0}, {l.b, 0, 1}, {l.c, 0, 0}}); }

Verdict ac10() {
  Verdict v;
  std::mt19937_64 rng(0xac10);
  std::uniform_int_distribution<long> small(-4, 4);
  int systems = 0, total_solutions = 0;
  while (systems < 30) {
    auto random_line = [&] {
      Line l{small(rng), small(rng), small(rng)};
      if (rng() % 4 == 0) l = {1, 0, small(rng)};  // vertical
      return l;
    };
    std::vector<Line> gl, hl;
    for (int i = 0; i < 1 + static_cast<int>(rng() % 2); ++i) gl.push_back(random_line());
    for (int i = 0; i < 1 + static_cast<int>(rng() % 2); ++i) hl.push_back(random_line());
    bool degenerate = false;
    for (const auto& l : gl) degenerate = degenerate || (l.a == 0 && l.b == 0);
    for (const auto& l : hl) degenerate = degenerate || (l.a == 0 && l.b == 0);
    if (degenerate) continue;
    IntPoly2 g = IntPoly2::constant(1), h = IntPoly2::constant(1);
    for (const auto& l : gl) g = g * line_poly(l);
    for (const auto& l : hl) h = h * line_poly(l);
    bool conic = rng() % 3 == 0;
    if (conic) h = h * poly2({{1, 2, 0}, {1, 0, 2}, {1, 0, 0}});  // no real points
    if (gcd(g, h).total_degree() > 0) continue;
    // intersections by Cramer's rule
    std::set<std::pair<mpq_class, mpq_class>> sols;
    for (const auto& p : gl)
      for (const auto& q : hl) {
        long det = p.a * q.b - p.b * q.a;
        if (det == 0) continue;
        mpq_class x(-p.c * q.b + p.b * q.c, det), y(-p.a * q.c + p.c * q.a, det);
        x.canonicalize();
        y.canonicalize();
        sols.insert({x, y});
      }
    ++systems;
    total_solutions += static_cast<int>(sols.size());
    SolutionBoxes out;
    try {
      out = solve_system(g, h, seeded(systems));
    } catch (const std::exception& e) {
      v.fail("system " + std::to_string(systems) + ": " + e.what());
      continue;
    }
    auto inside = [](const SolutionBox& b, const std::pair<mpq_class, mpq_class>& s) {
      return to_q(b.x.lo) <= s.first && s.first <= to_q(b.x.hi) && to_q(b.y.lo) <= s.second &&
             s.second <= to_q(b.y.hi);
    };
    if (out.boxes.size() != sols.size())
      v.fail("system " + std::to_string(systems) + ": " + std::to_string(out.boxes.size()) + " boxes for " +
             std::to_string(sols.size()) + " solutions");
    for (const auto& s : sols) {
      int n = 0;
      for (const auto& b : out.boxes) n += inside(b, s);
      if (n != 1) v.fail("system " + std::to_string(systems) + ": solution in " + std::to_string(n) + " boxes");
    }
    for (const auto& b : out.boxes) {
      int n = 0;
      for (const auto& s : sols) n += inside(b, s);
      if (n != 1) v.fail("system " + std::to_string(systems) + ": box with " + std::to_string(n) + " solutions");
    }
  }
  v.note << " systems=" << systems << " solutions=" << total_solutions;
  return v;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Verdict()> run;
    double limit_s;  // 0: no runtime limit
  };
  std::vector<Criterion> criteria{{"AC1 isolation soundness", ac1, 600}, {"AC2 backward error", ac2, 60},
                                  {"AC3 root bound", ac3, 60},            {"AC4 clustering at b0", ac4, 0},
                                  {"AC5 refinement", ac5, 300},           {"AC6 Mignotte", ac6, 120},
                                  {"AC7 exact algebra", ac7, 120},        {"AC8 fiber count gate", ac8, 0},
                                  {"AC9 topology", ac9, 300},             {"AC10 bivariate solving", ac10, 300}};
  int failed = 0;
  for (auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_s > 0 && secs > c.limit_s) v.fail("over the " + std::to_string(static_cast<int>(c.limit_s)) + "s limit");
    std::printf("%s %s (%.1fs)%s\n", v.pass ? "PASS" : "FAIL", c.name, secs, v.note.str().c_str());
    std::fflush(stdout);
    failed += !v.pass;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed;
}
