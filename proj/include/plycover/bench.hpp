#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "plycover/instance.hpp"

namespace plycover {

struct BenchRecord {
  std::string campaign;
  std::string generator;
  std::string algorithm;
  long n = 0;
  int d = 0;
  int m = 0;  // polygon vertex count; 0 when not applicable
  std::size_t size = 0;
  std::optional<int> oracle;
  std::optional<int> lb;
  std::optional<int> ply;
  std::optional<int> membership;
  double wall_ms = 0.0;
  std::optional<double> ratio;  // doubling / m-scaling ratio column
};

std::string bench_csv_header();
std::string bench_csv_row(const BenchRecord& record);
std::string bench_csv(const std::vector<BenchRecord>& records);

/// Median wall time of `reps` runs after `warmup` unmeasured runs.
double median_wall_ms(const std::function<void()>& fn, int reps = 5,
                      int warmup = 1);

/// Square-cover scaling: n = 2^lo_pow .. 2^hi_pow uniform points; the ratio
/// column holds time(2n)/time(n).
std::vector<BenchRecord> scaling_campaign(int lo_pow, int hi_pow,
                                          std::uint64_t seed);

/// Cover-vs-oracle comparison on small instances (square cover, exact ply,
/// membership, exact optimum and far lower bound); the ratio column holds
/// size / oracle. `jobs` > 1 runs instances concurrently.
std::vector<BenchRecord> oracle_ratio_campaign(int instances, int max_n,
                                               std::uint64_t seed,
                                               int jobs = 1);

/// Polygon-cover time as a function of the vertex count m at fixed n; the
/// ratio column holds time(m) / time(first m).
std::vector<BenchRecord> polygon_m_campaign(long n,
                                            const std::vector<int>& ms,
                                            std::uint64_t seed);

}  // namespace plycover
