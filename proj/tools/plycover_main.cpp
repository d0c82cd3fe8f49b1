// plycover command-line tool: instance generation, covering, verification,
// exact small-instance optima, benchmarks and SVG rendering.
//
// Exit codes: 0 success, 1 validation failure (an asserted bound does not
// hold), 2 usage or input error.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "plycover/bench.hpp"
#include "plycover/harness.hpp"
#include "plycover/io.hpp"
#include "plycover/oracle.hpp"
#include "plycover/svg.hpp"
#include "plycover/verify.hpp"

namespace {

using namespace plycover;

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("PLYCOVER_SEED"))
    return std::strtoull(env, nullptr, 10);
  return 0;
}

int run(int argc, char** argv) {
  CLI::App app{"Continuous minimum-membership geometric set cover toolkit"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a point-set instance");
  std::string gen_kind = "uniform";
  int gen_n = 100, gen_dim = 2;
  std::optional<std::uint64_t> gen_seed;
  GenParams gen_params;
  std::string gen_output;
  gen->add_option("--kind", gen_kind,
                  "uniform | clustered | grid | boundary-adversarial");
  gen->add_option("-n,--count", gen_n, "number of points");
  gen->add_option("--dim", gen_dim, "dimension");
  gen->add_option("--seed", gen_seed, "RNG seed (PLYCOVER_SEED overrides 0)");
  gen->add_option("--range", gen_params.range_hi, "coordinate range [0, r]");
  gen->add_option("--clusters", gen_params.clusters, "cluster count");
  gen->add_option("--sigma", gen_params.sigma, "cluster spread");
  gen->add_option("--spacing", gen_params.spacing, "grid spacing");
  gen->add_option("--eps", gen_params.eps, "boundary-adversarial epsilon");
  gen->add_option("--output", gen_output, "output instance JSON")->required();

  // cover
  auto* cover = app.add_subcommand("cover", "compute a cover");
  std::string cover_input, cover_output, cover_shape = "square";
  std::string cover_polygon_file, cover_svg;
  cover->add_option("--input", cover_input, "instance JSON")->required();
  cover->add_option("--shape", cover_shape,
                    "square | rect:a,b | hyperbox:l1,l2,... | disk | "
                    "tile-square:<s> | tile-hex:<rho> | polygon");
  cover->add_option("--polygon-file", cover_polygon_file,
                    "polygon JSON for --shape polygon");
  cover->add_option("--output", cover_output, "output cover JSON");
  cover->add_option("--svg", cover_svg, "also render instance + cover");

  // verify
  auto* verify = app.add_subcommand("verify", "verify a cover");
  std::string verify_instance, verify_cover_path;
  std::optional<int> assert_ply;
  bool assert_covered = false;
  verify->add_option("--instance", verify_instance, "instance JSON")
      ->required();
  verify->add_option("--cover", verify_cover_path, "cover JSON")->required();
  verify->add_option("--assert-ply", assert_ply,
                     "fail (exit 1) when exact ply exceeds this bound");
  verify->add_flag("--assert-covered", assert_covered,
                   "fail (exit 1) when any input point is uncovered");

  // oracle
  auto* oracle = app.add_subcommand("oracle", "exact small-instance optimum");
  std::string oracle_instance, oracle_shape = "square";
  std::optional<int> oracle_nmax;
  oracle->add_option("--instance", oracle_instance, "instance JSON")
      ->required();
  oracle->add_option("--shape", oracle_shape,
                     "square | rect:a,b | cube | hyperbox:l1,...");
  oracle->add_option("--n-max", oracle_nmax, "override instance size limit");

  // render
  auto* render = app.add_subcommand("render", "render instance (+cover) SVG");
  std::string render_instance, render_cover, render_svg_path;
  render->add_option("--instance", render_instance, "instance JSON")
      ->required();
  render->add_option("--cover", render_cover, "cover JSON (optional)");
  render->add_option("--svg", render_svg_path, "output SVG path")->required();

  // bench
  auto* bench = app.add_subcommand("bench", "benchmark campaigns");
  std::string bench_campaign = "scaling", bench_output;
  std::optional<std::uint64_t> bench_seed;
  int bench_jobs = 1, bench_instances = 100, bench_maxn = 7;
  int bench_lopow = 10, bench_hipow = 17;
  long bench_n = 200000;
  bench->add_option("--campaign", bench_campaign,
                    "scaling | oracle-ratio | polygon-m");
  bench->add_option("--output", bench_output, "CSV output (default stdout)");
  bench->add_option("--seed", bench_seed, "RNG seed");
  bench->add_option("--jobs", bench_jobs, "concurrent instances");
  bench->add_option("--instances", bench_instances, "oracle-ratio instances");
  bench->add_option("--max-n", bench_maxn, "oracle-ratio max points");
  bench->add_option("--lo-pow", bench_lopow, "scaling: smallest power of 2");
  bench->add_option("--hi-pow", bench_hipow, "scaling: largest power of 2");
  bench->add_option("-n,--count", bench_n, "polygon-m: points per instance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // prints help, exits 0
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;  // usage error
  }

  if (gen->parsed()) {
    const Instance inst = gen_instance(parse_gen_kind(gen_kind), gen_n,
                                       gen_dim, resolve_seed(gen_seed),
                                       gen_params);
    save_instance(inst, gen_output);
    std::cout << "wrote " << gen_output << " (" << inst.size() << " points)\n";
    return 0;
  }

  if (cover->parsed()) {
    const Instance inst = load_instance(cover_input);
    ShapeSpec spec = parse_shape_spec(cover_shape);
    if (spec.kind == ShapeSpec::Kind::Polygon) {
      if (cover_polygon_file.empty())
        throw CLI::ValidationError("--shape polygon requires --polygon-file");
      spec.polygon = load_polygon(cover_polygon_file);
    }
    const CoverDocument doc = run_cover(inst, spec);
    if (!cover_output.empty()) save_cover(doc, cover_output);
    if (!cover_svg.empty()) write_svg(inst, &doc, cover_svg);
    if (cover_output.empty() && cover_svg.empty())
      std::cout << to_json(doc).dump(2) << "\n";
    else
      std::cout << "cover size " << doc.size() << "\n";
    return 0;
  }

  if (verify->parsed()) {
    const Instance inst = load_instance(verify_instance);
    const CoverDocument doc = load_cover(verify_cover_path);
    const PlyReport report = verify_cover(inst.points, doc);
    std::cout << to_json(report).dump(2) << "\n";
    if (assert_ply && report.ply > *assert_ply) {
      std::cerr << "ply " << report.ply << " exceeds bound " << *assert_ply
                << "\n";
      return 1;
    }
    if (assert_covered && !report.uncovered.empty()) {
      std::cerr << report.uncovered.size() << " uncovered points\n";
      return 1;
    }
    return 0;
  }

  if (oracle->parsed()) {
    const Instance inst = load_instance(oracle_instance);
    const ShapeSpec spec = parse_shape_spec(oracle_shape);
    Eigen::VectorXd lengths;
    switch (spec.kind) {
      case ShapeSpec::Kind::Square:
        lengths = Eigen::Vector2d(1.0, 1.0);
        break;
      case ShapeSpec::Kind::Rect:
      case ShapeSpec::Kind::HyperBox:
        lengths = spec.lengths;
        break;
      default:
        throw CLI::ValidationError(
            "oracle supports square, rect:a,b, cube and hyperbox shapes");
    }
    const BoxOracleResult result =
        opt_1ply_box_cover(inst.points, lengths, oracle_nmax);
    nlohmann::json witness = nlohmann::json::array();
    for (const auto& lower : result.lowers) {
      nlohmann::json arr = nlohmann::json::array();
      for (Eigen::Index i = 0; i < lower.size(); ++i) arr.push_back(lower[i]);
      witness.push_back(arr);
    }
    std::cout << nlohmann::json{{"opt", result.opt}, {"witness", witness}}
                     .dump(2)
              << "\n";
    return 0;
  }

  if (render->parsed()) {
    const Instance inst = load_instance(render_instance);
    if (!render_cover.empty()) {
      const CoverDocument doc = load_cover(render_cover);
      write_svg(inst, &doc, render_svg_path);
    } else {
      write_svg(inst, nullptr, render_svg_path);
    }
    std::cout << "wrote " << render_svg_path << "\n";
    return 0;
  }

  if (bench->parsed()) {
    const std::uint64_t seed = resolve_seed(bench_seed);
    std::vector<BenchRecord> records;
    if (bench_campaign == "scaling") {
      records = scaling_campaign(bench_lopow, bench_hipow, seed);
    } else if (bench_campaign == "oracle-ratio") {
      records = oracle_ratio_campaign(bench_instances, bench_maxn, seed,
                                      bench_jobs);
    } else if (bench_campaign == "polygon-m") {
      records = polygon_m_campaign(bench_n, {8, 64}, seed);
    } else {
      throw CLI::ValidationError("unknown campaign: " + bench_campaign);
    }
    const std::string csv = bench_csv(records);
    if (bench_output.empty()) {
      std::cout << csv;
    } else {
      std::ofstream out(bench_output);
      if (!out) throw std::runtime_error("cannot open " + bench_output);
      out << csv;
      std::cout << "wrote " << bench_output << " (" << records.size()
                << " rows)\n";
    }
    return 0;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
