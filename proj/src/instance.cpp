#include "plycover/instance.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "plycover/geom.hpp"

namespace plycover {

GenKind parse_gen_kind(const std::string& name) {
  if (name == "uniform") return GenKind::Uniform;
  if (name == "clustered") return GenKind::Clustered;
  if (name == "grid") return GenKind::Grid;
  if (name == "boundary-adversarial") return GenKind::BoundaryAdversarial;
  throw std::invalid_argument("unknown generator kind: " + name);
}

std::string gen_kind_name(GenKind kind) {
  switch (kind) {
    case GenKind::Uniform:
      return "uniform";
    case GenKind::Clustered:
      return "clustered";
    case GenKind::Grid:
      return "grid";
    case GenKind::BoundaryAdversarial:
      return "boundary-adversarial";
  }
  return "?";
}

Instance gen_instance(GenKind kind, int n, int dim, std::uint64_t seed,
                      const GenParams& params) {
  if (n < 0) throw std::invalid_argument("gen_instance: n must be >= 0");
  if (dim < 1) throw std::invalid_argument("gen_instance: dim must be >= 1");

  std::mt19937_64 rng(seed);
  Eigen::MatrixXd pts(n, dim);

  switch (kind) {
    case GenKind::Uniform: {
      std::uniform_real_distribution<double> u(params.range_lo,
                                               params.range_hi);
      for (int i = 0; i < n; ++i)
        for (int a = 0; a < dim; ++a) pts(i, a) = u(rng);
      break;
    }
    case GenKind::Clustered: {
      const int k = std::max(1, params.clusters);
      std::uniform_real_distribution<double> u(params.range_lo,
                                               params.range_hi);
      std::normal_distribution<double> g(0.0, params.sigma);
      Eigen::MatrixXd centers(k, dim);
      for (int c = 0; c < k; ++c)
        for (int a = 0; a < dim; ++a) centers(c, a) = u(rng);
      std::uniform_int_distribution<int> pick(0, k - 1);
      for (int i = 0; i < n; ++i) {
        const int c = pick(rng);
        for (int a = 0; a < dim; ++a) pts(i, a) = centers(c, a) + g(rng);
      }
      break;
    }
    case GenKind::Grid: {
      const int side = std::max(
          1, static_cast<int>(std::ceil(std::pow(double(n), 1.0 / dim))));
      for (int i = 0; i < n; ++i) {
        int rest = i;
        for (int a = 0; a < dim; ++a) {
          pts(i, a) = params.spacing * (rest % side);
          rest /= side;
        }
      }
      break;
    }
    case GenKind::BoundaryAdversarial: {
      // Axis-aligned walk with step lengths exactly in {1-eps, 1, 1+eps}.
      std::uniform_int_distribution<int> axis(0, dim - 1);
      std::uniform_int_distribution<int> stepkind(0, 2);
      std::uniform_int_distribution<int> dir(0, 1);
      const double steps[3] = {1.0 - params.eps, 1.0, 1.0 + params.eps};
      Eigen::VectorXd cur = Eigen::VectorXd::Zero(dim);
      for (int i = 0; i < n; ++i) {
        pts.row(i) = cur.transpose();
        const int a = axis(rng);
        cur[a] += (dir(rng) ? 1.0 : -1.0) * steps[stepkind(rng)];
      }
      break;
    }
  }

  Instance inst;
  inst.dim = dim;
  inst.points = dedup_points(pts);
  inst.meta.generator = gen_kind_name(kind);
  inst.meta.seed = seed;
  inst.meta.name = gen_kind_name(kind) + "-n" + std::to_string(n) + "-d" +
                   std::to_string(dim) + "-s" + std::to_string(seed);
  return inst;
}

}  // namespace plycover
