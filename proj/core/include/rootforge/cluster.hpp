#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "rootforge/interval.hpp"

namespace rootforge {

struct Clustering {
  std::vector<std::vector<int>> clusters;  // indices into the approximations
  std::vector<ComplexDyadic> seeds;
  // Lower bounds, within a factor 2, on the distance from each seed to the
  // nearest other seed. Zero when there is a single cluster.
  std::vector<Dyadic> seed_separations;
  std::vector<ComplexDisk> disks;
};

struct ClusterFailure {
  enum class Kind { count_mismatch, containment };
  Kind kind = Kind::count_mismatch;
  int clusters_found = 0;
};

using ClusterResult = std::variant<Clustering, ClusterFailure>;

// Greedy clustering of approximations produced at backward-error level b.
// b must be a power of two with b >= 8n.
ClusterResult cluster(const std::vector<ComplexDyadic>& approximations, int k, int64_t b, int n);

// Lower bound on min_{j != i} |s_i - s_j| with `precision` correct leading
// bits. Throws DomainError for fewer than two or coincident seeds.
std::vector<Dyadic> seed_separations(const std::vector<ComplexDyadic>& seeds,
                                     int64_t precision = 8);

// Radius min(2^-ceil(2 log n), 2^ceil(log(sep / 256n^2))); sep == 0 means
// there is no other cluster.
Dyadic cluster_radius(const Dyadic& sep, int n);

}  // namespace rootforge
