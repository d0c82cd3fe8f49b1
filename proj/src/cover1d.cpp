#include "plycover/cover1d.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace plycover {

std::optional<std::size_t> IntervalCover::find(double x) const {
  auto it = std::upper_bound(lefts.begin(), lefts.end(), x);
  if (it == lefts.begin()) return std::nullopt;
  const std::size_t i = static_cast<std::size_t>(it - lefts.begin()) - 1;
  if (x <= lefts[i] + length) return i;
  return std::nullopt;
}

IntervalCover separate(std::vector<double> coords, double length) {
  if (!(length > 0.0))
    throw std::invalid_argument("separate: length must be positive");
  for (double c : coords) {
    if (!std::isfinite(c))
      throw std::invalid_argument("separate: non-finite coordinate");
  }

  std::sort(coords.begin(), coords.end());
  coords.erase(std::unique(coords.begin(), coords.end()), coords.end());

  IntervalCover cover{length, {}};
  double right = -std::numeric_limits<double>::infinity();
  bool open = false;
  for (double c : coords) {
    if (!open || c > right) {
      cover.lefts.push_back(c);
      right = c + length;
      open = true;
    }
  }
  return cover;
}

IntervalCover separate(const Eigen::Ref<const Eigen::VectorXd>& coords,
                       double length) {
  return separate(
      std::vector<double>(coords.data(), coords.data() + coords.size()),
      length);
}

}  // namespace plycover
