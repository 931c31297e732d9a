#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rootforge/algebraic.hpp"
#include "rootforge/int_poly2.hpp"
#include "rootforge/isolator.hpp"

namespace rootforge {

struct TopologyConfig {
  uint64_t seed = 0;
  // Tried first; later attempts continue with the regular schedule.
  std::optional<BigInt> shear;
  std::optional<uint64_t> prime;
  // Use dyadic midpoints between critical x-values instead of roots of R^.
  bool rational_beta = false;
  int max_attempts = 32;
  // Cap on the refinement exponent used to separate disks.
  int64_t max_kappa = int64_t{1} << 14;
  IsolatorConfig isolator;
};

struct CurveJob {
  IntPoly2 f;        // input with vertical-line content removed
  BigInt shear_s;
  IntPoly2 sheared;  // f(x + s y, y)
  uint64_t rng_seed = 0;
};

// Shear number `attempt` of the schedule 0, 1, -1, 2, -2, 3, -3, then
// seeded random values in [-N^4, N^4] with N the total degree.
BigInt shear_candidate(int attempt, int total_degree, uint64_t seed);
// f(x + s y, y), or nothing when its leading y-coefficient is not constant.
std::optional<CurveJob> make_job(const IntPoly2& f, const BigInt& s, uint64_t seed = 0);

struct Projection {
  int n = 0;  // deg_y of the sheared polynomial
  IntPoly R, R_star, Q, R_hat;
  // res(f, f_y) and the principal subresultant coefficients sr_0 .. sr_{n-1}.
  std::vector<IntPoly> sr;
  // All complex roots of R with mult(alpha, R); empty when R is constant.
  RootResult alphas;
  // mult(alpha, Q) per disk of `alphas`.
  std::vector<int> q_mults;
  int common_roots = 0;  // deg gcd(R*, Q*)
  // Disk indices of the real roots of R in increasing x.
  std::vector<int> real_alphas;
  // Roots of R^ whose disks miss every disk of `alphas`, and for each gap
  // between consecutive real alphas the index of a real root of R^ inside
  // it. Left empty with rational_beta.
  RootResult betas;
  std::vector<int> separating;
};

// Throws NonSquareFreeError when res(f, f_y) vanishes identically.
Projection project(const CurveJob& job, const TopologyConfig& cfg = {});

struct FiberCounts {
  std::vector<int> k_plus;  // per disk of Projection::alphas
  int K_plus = 0;
  int K_minus = 0;
  uint64_t prime_used = 0;

  bool passed() const { return K_minus == K_plus; }
};

// K+ from the projection and K- modulo `prime`. Not passed() means retry
// with a new shear and a new prime.
FiberCounts count_gate(const CurveJob& job, const Projection& proj, uint64_t prime);

struct FiberRoot {
  DyadicInterval y;
  int multiplicity = 1;
};

struct FiberColumn {
  bool critical = false;
  DyadicInterval x;
  AlgebraicPoint alpha;
  // Index into Projection::alphas for critical columns.
  int alpha_index = -1;
  OracleHandle fiber;
  RootResult roots;
  // Disk indices of the real roots in increasing y.
  std::vector<int> real_order;
  std::vector<FiberRoot> real_roots;
  // Index into real_roots of the multiple root, or -1.
  int multiple = -1;
};

struct LiftResult {
  std::vector<FiberColumn> columns;  // ordered by x
  bool retry = false;
  std::string reason;
};

// Fibers over the real critical values (and, unless critical_only, the
// separating values between them).
LiftResult lift(const CurveJob& job, const Projection& proj, const FiberCounts& counts,
                const TopologyConfig& cfg = {}, bool critical_only = false);

enum class VertexKind { critical, intermediate };

struct TopologyVertex {
  int column = 0;
  DyadicInterval x;
  DyadicInterval y;
  VertexKind kind = VertexKind::intermediate;
  int multiplicity = 1;
};

struct TopologyGraph {
  std::vector<TopologyVertex> vertices;
  std::vector<std::pair<int, int>> edges;

  int components() const;
  // First Betti number E - V + C.
  int cycles() const;
  std::vector<int> degrees() const;
};

// Throws InternalError when the arc counts of adjacent columns disagree.
TopologyGraph connect(const std::vector<FiberColumn>& columns);

struct Topology {
  CurveJob job;
  IntPoly vertical_content;  // removed x-only factor
  Projection projection;
  FiberCounts counts;
  std::vector<FiberColumn> columns;
  TopologyGraph graph;
  int attempts = 0;
};

// Graph of the real curve f = 0 in sheared coordinates. Vertical lines are
// removed first. Throws NonSquareFreeError, PrecisionCapError.
Topology compute_topology(const IntPoly2& f, const TopologyConfig& cfg = {});

struct SolutionBox {
  DyadicInterval x;
  DyadicInterval y;
};

struct SolutionBoxes {
  std::vector<SolutionBox> boxes;
  int count = 0;
  BigInt shear_s;
  uint64_t prime = 0;
};

// Isolating boxes for the real solutions of g = h = 0 in the original
// coordinates. Throws NonCoprimeError when g and h share a factor.
SolutionBoxes solve_system(const IntPoly2& g, const IntPoly2& h, const TopologyConfig& cfg = {});

}  // namespace rootforge
