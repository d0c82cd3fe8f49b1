#include "plycover/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <numbers>
#include <sstream>
#include <thread>

#include "plycover/boxcover.hpp"
#include "plycover/oracle.hpp"
#include "plycover/polycover.hpp"
#include "plycover/verify.hpp"

namespace plycover {

namespace {

std::string opt_str(const std::optional<int>& v) {
  return v ? std::to_string(*v) : "";
}

std::string num_str(double v) {
  std::ostringstream ss;
  ss << v;
  return ss.str();
}

ConvexPolygon regular_polygon(int m, double circumradius) {
  Eigen::Matrix2Xd verts(2, m);
  for (int k = 0; k < m; ++k) {
    const double a = 2.0 * std::numbers::pi * k / m;
    verts.col(k) =
        Vec2(circumradius * std::cos(a), circumradius * std::sin(a));
  }
  return ConvexPolygon::from_vertices(verts);
}

}  // namespace

std::string bench_csv_header() {
  return "campaign,generator,algorithm,n,d,m,size,oracle,lb,ply,membership,"
         "wall_ms,ratio";
}

std::string bench_csv_row(const BenchRecord& r) {
  std::ostringstream ss;
  ss << r.campaign << ',' << r.generator << ',' << r.algorithm << ',' << r.n
     << ',' << r.d << ',' << r.m << ',' << r.size << ',' << opt_str(r.oracle)
     << ',' << opt_str(r.lb) << ',' << opt_str(r.ply) << ','
     << opt_str(r.membership) << ',' << num_str(r.wall_ms) << ','
     << (r.ratio ? num_str(*r.ratio) : "");
  return ss.str();
}

std::string bench_csv(const std::vector<BenchRecord>& records) {
  std::ostringstream ss;
  ss << bench_csv_header() << '\n';
  for (const auto& r : records) ss << bench_csv_row(r) << '\n';
  return ss.str();
}

double median_wall_ms(const std::function<void()>& fn, int reps, int warmup) {
  using clock = std::chrono::steady_clock;
  for (int i = 0; i < warmup; ++i) fn();
  std::vector<double> times;
  times.reserve(static_cast<std::size_t>(reps));
  for (int i = 0; i < reps; ++i) {
    const auto t0 = clock::now();
    fn();
    const auto t1 = clock::now();
    times.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  std::sort(times.begin(), times.end());
  return times[times.size() / 2];
}

std::vector<BenchRecord> scaling_campaign(int lo_pow, int hi_pow,
                                          std::uint64_t seed) {
  std::vector<BenchRecord> records;
  GenParams params;
  params.range_lo = 0.0;
  params.range_hi = 100.0;
  double prev = 0.0;
  for (int p = lo_pow; p <= hi_pow; ++p) {
    const long n = 1L << p;
    const Instance inst =
        gen_instance(GenKind::Uniform, static_cast<int>(n), 2, seed + p, params);
    BoxCover cover;
    const double ms =
        median_wall_ms([&] { cover = square_cover(inst.points); });
    BenchRecord rec;
    rec.campaign = "scaling";
    rec.generator = "uniform";
    rec.algorithm = "square_cover";
    rec.n = n;
    rec.d = 2;
    rec.size = cover.size();
    rec.wall_ms = ms;
    if (p > lo_pow && prev > 0.0) rec.ratio = ms / prev;
    prev = ms;
    records.push_back(std::move(rec));
  }
  return records;
}

std::vector<BenchRecord> oracle_ratio_campaign(int instances, int max_n,
                                               std::uint64_t seed, int jobs) {
  std::vector<BenchRecord> records(static_cast<std::size_t>(instances));
  const auto run_one = [&](int i) {
    GenParams params;
    params.range_lo = 0.0;
    params.range_hi = 3.0;
    const int n = 2 + static_cast<int>((seed + i) % (max_n - 1));
    const Instance inst =
        gen_instance(GenKind::Uniform, n, 2, seed + 1000 * i, params);
    BoxCover cover;
    const double ms =
        median_wall_ms([&] { cover = square_cover(inst.points); });
    const CoverDocument doc = cover.to_cover("square_cover", inst.meta.seed);
    const PlyReport report = verify_cover(inst.points, doc);

    BenchRecord rec;
    rec.campaign = "oracle-ratio";
    rec.generator = "uniform";
    rec.algorithm = "square_cover";
    rec.n = inst.size();
    rec.d = 2;
    rec.size = cover.size();
    rec.oracle = opt_1ply_box_cover_size(inst.points, cover.lengths);
    rec.lb = far_independent_set_lb(inst.points, Metric::Linf, 1.0);
    rec.ply = report.ply;
    rec.membership = report.membership;
    rec.wall_ms = ms;
    rec.ratio = static_cast<double>(rec.size) / std::max(1, *rec.oracle);
    records[static_cast<std::size_t>(i)] = std::move(rec);
  };

  if (jobs <= 1) {
    for (int i = 0; i < instances; ++i) run_one(i);
  } else {
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    for (int t = 0; t < jobs; ++t) {
      pool.emplace_back([&] {
        for (int i = next.fetch_add(1); i < instances; i = next.fetch_add(1))
          run_one(i);
      });
    }
    for (auto& t : pool) t.join();
  }
  return records;
}

std::vector<BenchRecord> polygon_m_campaign(long n, const std::vector<int>& ms,
                                            std::uint64_t seed) {
  std::vector<BenchRecord> records;
  GenParams params;
  params.range_lo = 0.0;
  params.range_hi = 50.0;
  const Instance inst =
      gen_instance(GenKind::Uniform, static_cast<int>(n), 2, seed, params);
  double first = 0.0;
  for (int m : ms) {
    const ConvexPolygon poly = regular_polygon(m, 1.0);
    PolygonCover cover;
    const double ms_time =
        median_wall_ms([&] { cover = polygon_cover(inst.points, poly); });
    BenchRecord rec;
    rec.campaign = "polygon-m";
    rec.generator = "uniform";
    rec.algorithm = "polygon_cover";
    rec.n = inst.size();
    rec.d = 2;
    rec.m = m;
    rec.size = cover.size();
    rec.wall_ms = ms_time;
    if (records.empty()) {
      first = ms_time;
    } else if (first > 0.0) {
      rec.ratio = ms_time / first;
    }
    records.push_back(std::move(rec));
  }
  return records;
}

}  // namespace plycover
