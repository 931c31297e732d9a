#include "rootforge/topology.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "rootforge/errors.hpp"
#include "rootforge/mod_poly.hpp"
#include "rootforge/subresultant.hpp"

namespace rootforge {
namespace {

DyadicInterval real_segment(const ComplexDisk& d) {
  return {d.center.re - d.radius, d.center.re + d.radius};
}

bool overlap(const DyadicInterval& a, const DyadicInterval& b) {
  return !(a.hi < b.lo || b.hi < a.lo);
}

// The real root of the square-free `poly` held by an isolating disk that
// meets the real axis.
AlgebraicPoint real_point(const IntPoly& poly, const ComplexDisk& d) {
  if (d.radius.is_zero()) return AlgebraicPoint::exact(ComplexDyadic(d.center.re));
  DyadicInterval seg = real_segment(d);
  if (sign_at(poly, seg.lo) == 0) return AlgebraicPoint::exact(ComplexDyadic(seg.lo));
  if (sign_at(poly, seg.hi) == 0) return AlgebraicPoint::exact(ComplexDyadic(seg.hi));
  return AlgebraicPoint::real_root(poly, seg);
}

std::vector<int> real_indices_by_x(const RootResult& r) {
  std::vector<int> idx;
  for (int i = 0; i < r.k(); ++i)
    if (r.real_flags[i]) idx.push_back(i);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    return r.disks[a].center.re < r.disks[b].center.re;
  });
  return idx;
}

IntPoly square_free(const IntPoly& p) { return square_free_part(p).part; }

// Sum over the roots alpha of r_star of mult(alpha, q).
int common_degree(const IntPoly& r_star, IntPoly q) {
  if (q.degree() < 1 || r_star.degree() < 1) return 0;
  int total = 0;
  IntPoly g = gcd(r_star, q);
  while (g.degree() >= 1) {
    total += g.degree();
    q = exact_div(q, g);
    g = gcd(g, q);
  }
  return total;
}

void match_common_roots(Projection& P, const TopologyConfig& cfg) {
  RootResult qr = isolate_integer(P.Q, cfg.isolator);
  for (int64_t kappa = 16;; kappa *= 2) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < P.alphas.k(); ++i)
      for (int j = 0; j < qr.k(); ++j)
        if (P.alphas.disks[i].intersects(qr.disks[j])) pairs.emplace_back(i, j);
    // Every common root gives one overlapping pair, so d pairs are exactly those.
    if (static_cast<int>(pairs.size()) == P.common_roots) {
      for (auto [i, j] : pairs) P.q_mults[i] = qr.multiplicities[j];
      return;
    }
    if (kappa > cfg.max_kappa)
      throw PrecisionCapError("projection: could not match the common roots of R and Q");
    P.alphas = refine_integer(P.R, P.alphas, kappa, cfg.isolator);
    qr = refine_integer(P.Q, qr, kappa, cfg.isolator);
  }
}

void choose_separating(Projection& P, const TopologyConfig& cfg) {
  P.betas = isolate_integer(P.R_hat, cfg.isolator);
  for (int64_t kappa = 16;; kappa *= 2) {
    bool ok = true;
    for (const auto& a : P.alphas.disks)
      for (const auto& b : P.betas.disks)
        if (a.intersects(b)) ok = false;
    P.separating.clear();
    const auto& A = P.alphas;
    std::vector<int> hats = real_indices_by_x(P.betas);
    for (size_t g = 0; ok && g + 1 < P.real_alphas.size(); ++g) {
      DyadicInterval left = real_segment(A.disks[P.real_alphas[g]]);
      DyadicInterval right = real_segment(A.disks[P.real_alphas[g + 1]]);
      int pick = -1;
      for (int h : hats) {
        DyadicInterval s = real_segment(P.betas.disks[h]);
        if (left.hi < s.lo && s.hi < right.lo) {
          pick = h;
          break;
        }
      }
      if (pick < 0) ok = false;
      P.separating.push_back(pick);
    }
    if (ok) return;
    if (kappa > cfg.max_kappa)
      throw PrecisionCapError("projection: could not separate the roots of R and R^");
    P.alphas = refine_integer(P.R, P.alphas, kappa, cfg.isolator);
    P.betas = refine_integer(P.R_hat, P.betas, kappa, cfg.isolator);
  }
}

FiberColumn make_column(const CurveJob& job, AlgebraicPoint a, DyadicInterval x, int k,
                        bool critical, const TopologyConfig& cfg) {
  FiberColumn col;
  col.critical = critical;
  col.x = std::move(x);
  col.alpha = a;
  col.fiber = OracleHandle::from_fiber(job.sheared, std::move(a));
  col.roots = isolate(col.fiber, k, cfg.isolator);
  col.real_order = real_indices_by_x(col.roots);
  for (int idx : col.real_order) {
    const ComplexDisk& d = col.roots.disks[idx];
    col.real_roots.push_back({real_segment(d), col.roots.multiplicities[idx]});
  }
  return col;
}

int multiple_count(FiberColumn& col) {
  int cnt = 0;
  for (size_t i = 0; i < col.real_roots.size(); ++i)
    if (col.real_roots[i].multiplicity > 1) {
      ++cnt;
      col.multiple = static_cast<int>(i);
    }
  return cnt;
}

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int i) {
    while (p[i] != i) i = p[i] = p[p[i]];
    return i;
  }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

IntPoly2 remove_vertical_content(const IntPoly2& f, IntPoly* content) {
  if (f.is_zero()) throw DomainError("curve polynomial is zero");
  IntPoly c = content_y(f);
  if (content) *content = c;
  return primitive_y(f);
}

uint64_t prime_for(int attempt, const TopologyConfig& cfg) {
  const auto& table = prime_table();
  if (cfg.prime) {
    if (attempt == 0) return *cfg.prime;
    --attempt;
  }
  return table[(cfg.seed + attempt) % table.size()];
}

struct Accepted {
  CurveJob job;
  Projection projection;
  FiberCounts counts;
  std::vector<FiberColumn> columns;
  int attempts = 0;
};

// Runs shear, project, gate and lift until a shear is accepted.
Accepted run_pipeline(const IntPoly2& f, const TopologyConfig& cfg, bool critical_only) {
  const int N = f.total_degree();
  int accepted_tries = 0;
  const int max_candidates = cfg.max_attempts * 16 + 64;
  for (int cand = -1; cand < max_candidates && accepted_tries < cfg.max_attempts; ++cand) {
    BigInt s;
    if (cand < 0) {
      if (!cfg.shear) continue;
      s = *cfg.shear;
    } else {
      s = shear_candidate(cand, N, cfg.seed);
    }
    std::optional<CurveJob> job = make_job(f, s, cfg.seed);
    if (!job) continue;
    const uint64_t prime = prime_for(accepted_tries, cfg);
    ++accepted_tries;
    Projection proj = project(*job, cfg);
    FiberCounts counts = count_gate(*job, proj, prime);
    if (!counts.passed()) continue;
    LiftResult lifted = lift(*job, proj, counts, cfg, critical_only);
    if (lifted.retry) continue;
    return {std::move(*job), std::move(proj), std::move(counts), std::move(lifted.columns),
            accepted_tries};
  }
  throw PrecisionCapError("topology: no admissible shear after " +
                          std::to_string(accepted_tries) + " attempts");
}

}  // namespace

BigInt shear_candidate(int attempt, int total_degree, uint64_t seed) {
  if (attempt < 7) {
    int v = (attempt + 1) / 2;
    return BigInt(attempt % 2 == 1 ? v : -v);
  }
  const int64_t N = std::max(2, total_degree);
  const int64_t bound = N * N * N * N;
  std::mt19937_64 gen(seed * 0x9e3779b97f4a7c15ULL + static_cast<uint64_t>(attempt));
  std::uniform_int_distribution<int64_t> dist(-bound, bound);
  return BigInt(static_cast<long>(dist(gen)));
}

std::optional<CurveJob> make_job(const IntPoly2& f, const BigInt& s, uint64_t seed) {
  CurveJob job;
  job.f = f;
  job.shear_s = s;
  job.sheared = shear(f, s);
  job.rng_seed = seed;
  if (job.sheared.deg_y() < 1 || lc_y(job.sheared).degree() != 0) return std::nullopt;
  return job;
}

Projection project(const CurveJob& job, const TopologyConfig& cfg) {
  const IntPoly2& f = job.sheared;
  Projection P;
  P.n = f.deg_y();
  if (P.n < 1) throw DomainError("project: curve must depend on y");
  if (lc_y(f).degree() != 0) throw DomainError("project: leading y-coefficient is not constant");
  const IntPoly2 fy = derivative_y(f);
  if (P.n == 1) {
    P.R = resultant_y(f, fy);
    P.sr = {P.R};
  } else {
    P.sr = principal_subresultants(f, fy);
    P.R = P.sr[0];
  }
  if (P.R.is_zero())
    throw NonSquareFreeError("curve is not square-free in y; pass its square-free part");
  if (P.R.degree() < 1) {
    P.R_star = IntPoly::constant(1);
    return P;
  }
  P.R_star = square_free(P.R);
  P.alphas = isolate_integer(P.R, cfg.isolator);
  P.q_mults.assign(P.alphas.k(), 0);

  const IntPoly2 fx = derivative_x(f);
  if (!fx.is_zero()) {
    const IntPoly2 fxs = exact_div(fx, gcd(fx, fy));
    P.Q = resultant_y(fxs, fy);
    if (P.Q.is_zero()) throw InternalError("projection: Q vanishes identically");
  }
  if (P.Q.degree() >= 1) {
    P.common_roots = gcd(P.R_star, square_free(P.Q)).degree();
    if (P.common_roots > 0) match_common_roots(P, cfg);
  }

  IntPoly d1 = derivative(P.R_star);
  if (d1.degree() >= 1) {
    P.R_hat = exact_div(d1, gcd(d1, derivative(d1)));
  } else {
    P.R_hat = IntPoly::constant(1);
  }
  P.real_alphas = real_indices_by_x(P.alphas);
  if (!cfg.rational_beta && P.real_alphas.size() >= 2) {
    choose_separating(P, cfg);
    P.real_alphas = real_indices_by_x(P.alphas);
  }
  return P;
}

FiberCounts count_gate(const CurveJob& job, const Projection& P, uint64_t prime) {
  FiberCounts c;
  c.prime_used = prime;
  const int n = P.n;
  for (int i = 0; i < P.alphas.k(); ++i) {
    c.k_plus.push_back(n - P.alphas.multiplicities[i] + P.q_mults[i]);
    c.K_plus += c.k_plus.back();
  }
  if (P.R.degree() < 1) return c;
  const int closed =
      n * P.R_star.degree() - P.R.degree() + common_degree(P.R_star, P.Q);
  if (closed != c.K_plus)
    throw InternalError("count gate: K+ from the roots disagrees with the closed form");

  // Primes dividing a leading coefficient give a shorter modular sequence.
  const BigInt lead = lc_y(job.sheared).lc() * n;
  if (sgn(mod_reduce(lead, prime)) == 0 || sgn(mod_reduce(P.R_star.lc(), prime)) == 0)
    return c;
  ModPoly S = monic(mod_reduce(P.R_star, prime));
  for (int i = 1; i < n && S.degree() > 0; ++i) {
    ModPoly sri = mod_reduce(P.sr[i], prime);
    ModPoly next = sri.is_zero() ? S : mod_gcd(S, sri);
    c.K_minus += (n - i) * (S.degree() - next.degree());
    S = std::move(next);
  }
  if (c.K_minus > c.K_plus) throw InternalError("count gate: K- exceeds K+");
  return c;
}

LiftResult lift(const CurveJob& job, const Projection& P, const FiberCounts& counts,
                const TopologyConfig& cfg, bool critical_only) {
  LiftResult out;
  const int n = P.n;
  std::vector<FiberColumn> crit;
  for (int idx : P.real_alphas) {
    const ComplexDisk& d = P.alphas.disks[idx];
    FiberColumn col = make_column(job, real_point(P.R_star, d), real_segment(d),
                                  counts.k_plus[idx], true, cfg);
    col.alpha_index = idx;
    if (multiple_count(col) > 1) {
      out.retry = true;
      out.reason = "fiber with two multiple real roots";
      return out;
    }
    crit.push_back(std::move(col));
  }
  if (critical_only) {
    out.columns = std::move(crit);
    return out;
  }

  auto rational_column = [&](const Dyadic& x) {
    return make_column(job, AlgebraicPoint::exact(ComplexDyadic(x)), DyadicInterval(x), n, false,
                       cfg);
  };
  if (crit.empty()) {
    out.columns.push_back(rational_column(Dyadic(0)));
    return out;
  }
  out.columns.push_back(rational_column(Dyadic(crit.front().x.lo.floor() - 1)));
  for (size_t g = 0; g < crit.size(); ++g) {
    out.columns.push_back(std::move(crit[g]));
    if (g + 1 == crit.size()) break;
    const Dyadic& hi = out.columns.back().x.hi;
    const Dyadic& lo = crit[g + 1].x.lo;
    if (cfg.rational_beta) {
      out.columns.push_back(rational_column((hi + lo).ldexp(-1)));
    } else {
      const ComplexDisk& d = P.betas.disks[P.separating[g]];
      out.columns.push_back(
          make_column(job, real_point(P.R_hat, d), real_segment(d), n, false, cfg));
    }
  }
  out.columns.push_back(rational_column(Dyadic(out.columns.back().x.hi.ceil() + 1)));
  for (auto& col : out.columns)
    if (!col.critical && multiple_count(col) > 0)
      throw InternalError("lift: multiple root over a regular value");
  return out;
}

int TopologyGraph::components() const {
  UnionFind uf(static_cast<int>(vertices.size()));
  for (auto [a, b] : edges) uf.unite(a, b);
  int c = 0;
  for (int i = 0; i < static_cast<int>(vertices.size()); ++i)
    if (uf.find(i) == i) ++c;
  return c;
}

int TopologyGraph::cycles() const {
  return static_cast<int>(edges.size()) - static_cast<int>(vertices.size()) + components();
}

std::vector<int> TopologyGraph::degrees() const {
  std::vector<int> d(vertices.size(), 0);
  for (auto [a, b] : edges) {
    ++d[a];
    ++d[b];
  }
  return d;
}

TopologyGraph connect(const std::vector<FiberColumn>& columns) {
  TopologyGraph G;
  std::vector<int> base;
  for (size_t t = 0; t < columns.size(); ++t) {
    base.push_back(static_cast<int>(G.vertices.size()));
    const auto& col = columns[t];
    for (const auto& r : col.real_roots)
      G.vertices.push_back({static_cast<int>(t), col.x, r.y,
                            col.critical ? VertexKind::critical : VertexKind::intermediate,
                            r.multiplicity});
  }
  for (size_t t = 0; t + 1 < columns.size(); ++t) {
    const auto& L = columns[t];
    const auto& Rc = columns[t + 1];
    if (L.critical == Rc.critical)
      throw InternalError("connect: columns must alternate between critical and regular");
    const bool left_regular = !L.critical;
    const auto& B = left_regular ? L : Rc;
    const auto& A = left_regular ? Rc : L;
    const int bb = base[left_regular ? t : t + 1];
    const int ab = base[left_regular ? t + 1 : t];
    const int arcs = static_cast<int>(B.real_roots.size());
    const int cnt = static_cast<int>(A.real_roots.size());
    std::vector<int> target(arcs);
    if (A.multiple < 0) {
      if (arcs != cnt)
        throw InternalError("connect: " + std::to_string(arcs) + " arcs reach a column with " +
                            std::to_string(cnt) + " simple points");
      std::iota(target.begin(), target.end(), 0);
    } else {
      const int below = A.multiple, above = cnt - A.multiple - 1;
      if (arcs < below + above)
        throw InternalError("connect: too few arcs at a critical column");
      for (int i = 0; i < arcs; ++i) {
        if (i < below)
          target[i] = i;
        else if (i >= arcs - above)
          target[i] = A.multiple + 1 + (i - (arcs - above));
        else
          target[i] = A.multiple;
      }
    }
    for (int i = 0; i < arcs; ++i) {
      int u = bb + i, v = ab + target[i];
      G.edges.emplace_back(std::min(u, v), std::max(u, v));
    }
  }
  return G;
}

Topology compute_topology(const IntPoly2& f, const TopologyConfig& cfg) {
  Topology T;
  IntPoly2 g = remove_vertical_content(f, &T.vertical_content);
  if (g.deg_y() < 1) {
    T.job.f = g;
    T.job.sheared = g;
    return T;
  }
  Accepted a = run_pipeline(g, cfg, false);
  T.job = std::move(a.job);
  T.projection = std::move(a.projection);
  T.counts = std::move(a.counts);
  T.columns = std::move(a.columns);
  T.attempts = a.attempts;
  T.graph = connect(T.columns);
  return T;
}

SolutionBoxes solve_system(const IntPoly2& g, const IntPoly2& h, const TopologyConfig& cfg) {
  if (g.is_zero() && h.is_zero()) throw DomainError("solve_system: both polynomials are zero");
  if (gcd(g, h).total_degree() > 0) throw NonCoprimeError("solve_system: g and h share a factor");
  SolutionBoxes out;
  IntPoly2 f = g * g + h * h;
  // Vertical content of g^2 + h^2 has no real roots when g and h are coprime.
  f = remove_vertical_content(f, nullptr);
  if (f.deg_y() < 1) return out;
  // g^2 + h^2 can have repeated factors, e.g. (x + i y)^2 (x - i y)^2.
  f = exact_div(f, gcd(f, derivative_y(f)));

  Accepted a = run_pipeline(f, cfg, true);
  out.shear_s = a.job.shear_s;
  out.prime = a.counts.prime_used;
  auto& cols = a.columns;
  const DyadicInterval s(Dyadic(a.job.shear_s));
  for (int64_t kappa = 16;; kappa *= 2) {
    out.boxes.clear();
    for (auto& col : cols) {
      DyadicInterval xh = col.alpha.real_enclosure(kappa);
      for (int idx : col.real_order) {
        DyadicInterval yh = real_segment(col.roots.disks[idx]);
        out.boxes.push_back({xh + s * yh, yh});
      }
    }
    bool disjoint = true;
    for (size_t i = 0; i < out.boxes.size() && disjoint; ++i)
      for (size_t j = i + 1; j < out.boxes.size() && disjoint; ++j)
        if (overlap(out.boxes[i].x, out.boxes[j].x) && overlap(out.boxes[i].y, out.boxes[j].y))
          disjoint = false;
    if (disjoint) break;
    if (kappa > cfg.max_kappa) throw PrecisionCapError("solve_system: boxes stay overlapping");
    for (auto& col : cols) col.roots = refine(col.fiber, col.roots, kappa, cfg.isolator);
  }
  out.count = static_cast<int>(out.boxes.size());
  return out;
}

}  // namespace rootforge
