#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <string>

namespace plycover {

struct InstanceMeta {
  std::string name;
  std::string generator;
  std::uint64_t seed = 0;
};

/// A point-set instance: one row per point, `dim` columns. Points are
/// deduplicated exactly on construction.
struct Instance {
  int dim = 2;
  Eigen::MatrixXd points;
  InstanceMeta meta;

  Eigen::Index size() const { return points.rows(); }
};

enum class GenKind { Uniform, Clustered, Grid, BoundaryAdversarial };

struct GenParams {
  double range_lo = 0.0;
  double range_hi = 10.0;
  int clusters = 5;
  double sigma = 0.25;
  double spacing = 0.9;
  double eps = 1e-9;  // boundary-adversarial step perturbation
};

GenKind parse_gen_kind(const std::string& name);
std::string gen_kind_name(GenKind kind);

/// Deterministic instance generator. `boundary-adversarial` walks with axis
/// steps of exactly 1 - eps, 1 or 1 + eps to stress the closed/strict
/// semantics; `grid` emits lattice points at the given spacing.
Instance gen_instance(GenKind kind, int n, int dim, std::uint64_t seed,
                      const GenParams& params = {});

}  // namespace plycover
