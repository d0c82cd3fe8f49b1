#pragma once

#include <Eigen/Dense>

#include <optional>
#include <vector>

// Exact small-instance optima and lower bounds used to certify the
// approximation factors of the covering algorithms. Deliberately refuses
// instances beyond the configured sizes: the searches are combinatorial.

namespace plycover {

struct BoxOracleResult {
  int opt = 0;
  std::vector<std::vector<Eigen::Index>> groups;  // witness partition
  std::vector<Eigen::VectorXd> lowers;            // witness lower corners
};

/// Exact minimum number of pairwise-disjoint closed `lengths`-boxes covering
/// the points (d in {1,2,3}). Enumerates partitions in ascending block
/// count; for each partition searches the per-pair separation disjunctions,
/// each checked as a difference-constraint system with strict inequalities.
/// Defaults for n_max: 12 (d=1), 7 (d=2), 5 (d=3); larger n throws.
BoxOracleResult opt_1ply_box_cover(const Eigen::MatrixXd& points,
                                   const Eigen::VectorXd& lengths,
                                   std::optional<int> n_max = std::nullopt);
int opt_1ply_box_cover_size(const Eigen::MatrixXd& points,
                            const Eigen::VectorXd& lengths,
                            std::optional<int> n_max = std::nullopt);

/// Exact minimum interval cover size by exhaustive search over subsets of
/// candidate left endpoints (= the coordinates themselves); independent of
/// the greedy sweep. n (after dedup) must be <= n_max.
int opt_interval_cover_size(std::vector<double> coords, double length,
                            int n_max = 12);

enum class Metric { Linf, L2 };

/// Maximum independent set in the graph where points are adjacent iff their
/// distance is <= threshold (closed). Any cover by objects of diameter
/// `threshold` — regardless of ply — has at least this many objects.
/// n must be <= n_max.
int far_independent_set_lb(const Eigen::MatrixXd& points, Metric metric,
                           double threshold, int n_max = 20);

namespace detail {

/// Difference-constraint system x_i - x_j <= w (or < w when strict), checked
/// by negative-cycle detection with symbolic strict-edge tracking: a cycle
/// of total weight < 0, or = 0 containing a strict edge, is infeasible.
class DiffConstraints {
 public:
  explicit DiffConstraints(int n) : n_(n) {}

  void add(int i, int j, double w, bool strict);  // x_i - x_j <= w
  void pop();                                     // removes the last edge

  /// Feasibility; on success `witness` (if given) receives values
  /// satisfying all constraints, strict ones with positive margin.
  bool feasible(std::vector<double>* witness = nullptr) const;

 private:
  struct Edge {
    int from, to;  // constraint x_to - x_from <= w: relax to via from
    double w;
    bool strict;
  };
  bool run(double strict_penalty, std::vector<double>* dist) const;

  int n_ = 0;
  std::vector<Edge> edges_;
};

}  // namespace detail

}  // namespace plycover
