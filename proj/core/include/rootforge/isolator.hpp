#pragma once

#include <cstdint>
#include <vector>

#include "rootforge/cluster.hpp"
#include "rootforge/int_poly.hpp"
#include "rootforge/interval.hpp"
#include "rootforge/oracle.hpp"

namespace rootforge {

struct IsolatorConfig {
  // 0 selects the smallest power of two >= max(8n, n ceil(log n)).
  int64_t b_initial = 0;
  int64_t b_max_cap = int64_t{1} << 26;
  // Seed for randomized choices made by callers (shears, primes).
  uint64_t prime_table_seed = 0;
  // Upper bound on factorize/cluster/certify rounds per call.
  int max_restarts = 64;
};

struct RootResult {
  std::vector<ComplexDisk> disks;
  std::vector<int> multiplicities;
  // Only set for real-coefficient inputs: the disk holds a real root.
  std::vector<bool> real_flags;
  int64_t b_final = 0;
  int64_t oracle_max_L = 0;

  int n = 0;
  int64_t gamma = 0;
  Dyadic lambda;
  // Approximations and clusters from the accepted round (empty for k = 1).
  std::vector<ComplexDyadic> approximations;
  std::vector<std::vector<int>> clusters;
  int rounds = 0;

  int k() const { return static_cast<int>(disks.size()); }
};

// Smallest power of two >= max(8n, n ceil(log2 n)).
int64_t initial_precision(int n);

// Isolating disks for the k distinct roots of the polynomial behind h.
// Throws PrecisionCapError when b passes cfg.b_max_cap (usually a wrong k).
RootResult isolate(const OracleHandle& h, int k, const IsolatorConfig& cfg = {});

// Shrinks every disk of `result` below radius 2^-kappa.
RootResult refine(const OracleHandle& h, const RootResult& result, int64_t kappa,
                  const IsolatorConfig& cfg = {});

RootResult isolate_integer(const IntPoly& p, const IsolatorConfig& cfg = {});
// Refines via the square-free part of p and restores the multiplicities.
RootResult refine_integer(const IntPoly& p, const RootResult& result, int64_t kappa,
                          const IsolatorConfig& cfg = {});

// Disk of radius <= 2^-bits around -p_{n-1} / (n p_n); radius 0 when exact.
ComplexDisk single_root_disk(const OracleHandle& h, int64_t bits);

}  // namespace rootforge
