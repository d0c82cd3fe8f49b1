#include "plycover/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

#include "plycover/geom.hpp"

namespace plycover {

namespace detail {

void DiffConstraints::add(int i, int j, double w, bool strict) {
  edges_.push_back(Edge{j, i, w, strict});  // x_i - x_j <= w: relax i via j
}

void DiffConstraints::pop() { edges_.pop_back(); }

bool DiffConstraints::run(double strict_penalty,
                          std::vector<double>* dist) const {
  std::vector<double> d(static_cast<std::size_t>(n_), 0.0);
  for (int round = 0; round <= n_; ++round) {
    bool changed = false;
    for (const Edge& e : edges_) {
      const double w = e.w - (e.strict ? strict_penalty : 0.0);
      if (d[static_cast<std::size_t>(e.from)] + w <
          d[static_cast<std::size_t>(e.to)]) {
        d[static_cast<std::size_t>(e.to)] =
            d[static_cast<std::size_t>(e.from)] + w;
        changed = true;
      }
    }
    if (!changed) {
      if (dist) *dist = d;
      return true;
    }
  }
  return false;  // still relaxing after n rounds: negative cycle
}

bool DiffConstraints::feasible(std::vector<double>* witness) const {
  // Symbolic pass: lexicographic (weight, strict-count) distances. A cycle
  // of weight < 0, or weight 0 containing a strict edge, keeps relaxing.
  std::vector<double> d(static_cast<std::size_t>(n_), 0.0);
  std::vector<long> s(static_cast<std::size_t>(n_), 0);
  bool ok = false;
  for (int round = 0; round <= n_; ++round) {
    bool changed = false;
    for (const Edge& e : edges_) {
      const auto from = static_cast<std::size_t>(e.from);
      const auto to = static_cast<std::size_t>(e.to);
      const double cd = d[from] + e.w;
      const long cs = s[from] + (e.strict ? 1 : 0);
      if (cd < d[to] || (cd == d[to] && cs > s[to])) {
        d[to] = cd;
        s[to] = cs;
        changed = true;
      }
    }
    if (!changed) {
      ok = true;
      break;
    }
  }
  if (!ok || !witness) return ok;

  // Witness pass: shrink strict edges by a concrete margin and reuse the
  // plain relaxation; fall back to smaller margins near tight systems.
  double scale = 1.0;
  for (const Edge& e : edges_) scale = std::max(scale, std::abs(e.w));
  for (double eps : {1e-6 * scale, 1e-9 * scale, 1e-12 * scale}) {
    if (run(eps, witness)) return true;
  }
  *witness = d;
  return true;
}

}  // namespace detail

namespace {

int default_n_max(Eigen::Index d) {
  switch (d) {
    case 1:
      return 12;
    case 2:
      return 7;
    default:
      return 5;
  }
}

struct PartitionSearch {
  const Eigen::MatrixXd& pts;
  const Eigen::VectorXd& lengths;
  int k = 0;

  std::vector<std::vector<Eigen::Index>> blocks;
  std::vector<Eigen::VectorXd> lo, hi;  // per-block extents
  BoxOracleResult* result = nullptr;

  bool assign(Eigen::Index i) {
    const Eigen::Index n = pts.rows();
    if (i == n) {
      return static_cast<int>(blocks.size()) == k && solve_disjunctions();
    }
    // not enough elements left to open the remaining blocks
    if (n - i < k - static_cast<int>(blocks.size())) return false;

    const Eigen::VectorXd p = pts.row(i).transpose();
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      bool fits = true;
      for (Eigen::Index a = 0; a < lengths.size(); ++a) {
        if (std::max(hi[b][a], p[a]) - std::min(lo[b][a], p[a]) > lengths[a]) {
          fits = false;
          break;
        }
      }
      if (!fits) continue;
      const Eigen::VectorXd slo = lo[b], shi = hi[b];
      blocks[b].push_back(i);
      lo[b] = lo[b].cwiseMin(p);
      hi[b] = hi[b].cwiseMax(p);
      if (assign(i + 1)) return true;
      blocks[b].pop_back();
      lo[b] = slo;
      hi[b] = shi;
    }
    if (static_cast<int>(blocks.size()) < k) {
      blocks.push_back({i});
      lo.push_back(p);
      hi.push_back(p);
      if (assign(i + 1)) return true;
      blocks.pop_back();
      lo.pop_back();
      hi.pop_back();
    }
    return false;
  }

  // One difference-constraint graph per axis; node 0 is the origin, node
  // g+1 is block g's lower corner along that axis.
  bool solve_disjunctions() {
    const Eigen::Index d = lengths.size();
    const int kb = static_cast<int>(blocks.size());
    std::vector<detail::DiffConstraints> graph;
    graph.reserve(static_cast<std::size_t>(d));
    for (Eigen::Index a = 0; a < d; ++a) {
      detail::DiffConstraints g(kb + 1);
      for (int b = 0; b < kb; ++b) {
        const double wlo = hi[static_cast<std::size_t>(b)][a] - lengths[a];
        const double whi = lo[static_cast<std::size_t>(b)][a];
        g.add(b + 1, 0, whi, false);   // x_b <= min coordinate
        g.add(0, b + 1, -wlo, false);  // x_b >= max coordinate - length
      }
      graph.push_back(std::move(g));
    }
    if (!place_pairs(graph, 0, 1)) return false;

    result->groups = blocks;
    result->lowers.assign(static_cast<std::size_t>(kb), Eigen::VectorXd(d));
    for (Eigen::Index a = 0; a < d; ++a) {
      std::vector<double> w;
      graph[static_cast<std::size_t>(a)].feasible(&w);
      for (int b = 0; b < kb; ++b)
        result->lowers[static_cast<std::size_t>(b)][a] =
            w[static_cast<std::size_t>(b) + 1] - w[0];
    }
    return true;
  }

  bool place_pairs(std::vector<detail::DiffConstraints>& graph, int i, int j) {
    const int kb = static_cast<int>(blocks.size());
    if (i >= kb - 1) return true;
    const auto [ni, nj] = j >= kb - 1 ? std::pair<int, int>{i + 1, i + 2}
                                      : std::pair<int, int>{i, j + 1};

    struct Option {
      int axis, first, second;
      double slack;
    };
    std::vector<Option> options;
    for (Eigen::Index a = 0; a < lengths.size(); ++a) {
      for (auto [f, s] : {std::pair{i, j}, std::pair{j, i}}) {
        // "f left of s along axis a": lower_s - lower_f > length_a
        const double max_sep = lo[static_cast<std::size_t>(s)][a] -
                               (hi[static_cast<std::size_t>(f)][a] - lengths[a]);
        const double slack = max_sep - lengths[a];
        if (slack > 0.0)
          options.push_back(Option{static_cast<int>(a), f, s, slack});
      }
    }
    std::stable_sort(options.begin(), options.end(),
                     [](const Option& x, const Option& y) {
                       return x.slack > y.slack;
                     });
    for (const Option& o : options) {
      auto& g = graph[static_cast<std::size_t>(o.axis)];
      g.add(o.first + 1, o.second + 1, -lengths[o.axis], true);
      if (g.feasible() && place_pairs(graph, ni, nj)) return true;
      g.pop();
    }
    return false;
  }
};

}  // namespace

BoxOracleResult opt_1ply_box_cover(const Eigen::MatrixXd& points,
                                   const Eigen::VectorXd& lengths,
                                   std::optional<int> n_max) {
  const Eigen::Index d = lengths.size();
  if (d < 1 || d > 3)
    throw std::invalid_argument("opt_1ply_box_cover: d must be in {1,2,3}");
  for (Eigen::Index a = 0; a < d; ++a) {
    if (!(lengths[a] > 0.0))
      throw std::invalid_argument("opt_1ply_box_cover: lengths must be > 0");
  }
  if (points.rows() > 0 && points.cols() != d)
    throw std::invalid_argument("opt_1ply_box_cover: dimension mismatch");

  const Eigen::MatrixXd pts = dedup_points(points);
  const int limit = n_max.value_or(default_n_max(d));
  if (pts.rows() > limit)
    throw std::invalid_argument(
        "opt_1ply_box_cover: instance too large (n = " +
        std::to_string(pts.rows()) + " > n_max = " + std::to_string(limit) +
        ")");

  BoxOracleResult result;
  if (pts.rows() == 0) return result;
  for (int k = 1; k <= pts.rows(); ++k) {
    PartitionSearch search{pts, lengths, k, {}, {}, {}, &result};
    if (search.assign(0)) {
      result.opt = k;
      return result;
    }
  }
  throw std::logic_error("opt_1ply_box_cover: singleton partition must fit");
}

int opt_1ply_box_cover_size(const Eigen::MatrixXd& points,
                            const Eigen::VectorXd& lengths,
                            std::optional<int> n_max) {
  return opt_1ply_box_cover(points, lengths, n_max).opt;
}

int opt_interval_cover_size(std::vector<double> coords, double length,
                            int n_max) {
  if (!(length > 0.0))
    throw std::invalid_argument("opt_interval_cover_size: length must be > 0");
  std::sort(coords.begin(), coords.end());
  coords.erase(std::unique(coords.begin(), coords.end()), coords.end());
  const int n = static_cast<int>(coords.size());
  if (n > n_max)
    throw std::invalid_argument("opt_interval_cover_size: instance too large");
  if (n == 0) return 0;

  const auto covers = [&](std::uint32_t subset) {
    for (double c : coords) {
      bool hit = false;
      for (int i = 0; i < n; ++i) {
        if ((subset >> i & 1u) && coords[static_cast<std::size_t>(i)] <= c &&
            c <= coords[static_cast<std::size_t>(i)] + length) {
          hit = true;
          break;
        }
      }
      if (!hit) return false;
    }
    return true;
  };
  int best = n;
  for (std::uint32_t subset = 1; subset < (1u << n); ++subset) {
    const int k = std::popcount(subset);
    if (k >= best) continue;
    if (covers(subset)) best = k;
  }
  return best;
}

int far_independent_set_lb(const Eigen::MatrixXd& points, Metric metric,
                           double threshold, int n_max) {
  const Eigen::MatrixXd pts = dedup_points(points);
  const int n = static_cast<int>(pts.rows());
  if (n > n_max || n > 31)
    throw std::invalid_argument("far_independent_set_lb: instance too large");
  if (n == 0) return 0;

  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Eigen::VectorXd diff = pts.row(i) - pts.row(j);
      const double dist = metric == Metric::Linf
                              ? diff.cwiseAbs().maxCoeff()
                              : diff.norm();
      // Closed adjacency padded by kGeomTol: a rounded distance fractionally
      // above the threshold (e.g. diagonals of a 1/sqrt(2) grid at true
      // distance exactly 1) must still count as sharable. Padding merges
      // points and can only weaken the bound, never invalidate it.
      if (dist <= threshold + kGeomTol) {
        adj[static_cast<std::size_t>(i)] |= 1u << j;
        adj[static_cast<std::size_t>(j)] |= 1u << i;
      }
    }
  }

  const auto mis = [&](auto&& self, std::uint32_t rem) -> int {
    if (rem == 0) return 0;
    const int v = std::countr_zero(rem);
    const std::uint32_t vbit = 1u << v;
    int best = 1 + self(self, rem & ~(adj[static_cast<std::size_t>(v)] | vbit));
    if (adj[static_cast<std::size_t>(v)] & rem)
      best = std::max(best, self(self, rem & ~vbit));
    return best;
  };
  return mis(mis, n == 32 ? ~0u : (1u << n) - 1u);
}

}  // namespace plycover
