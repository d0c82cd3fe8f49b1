#include "plycover/io.hpp"

#include <fstream>
#include <stdexcept>

namespace plycover {

namespace {

using nlohmann::json;

json vec_to_json(const Eigen::VectorXd& v) {
  json arr = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v[i]);
  return arr;
}

Eigen::VectorXd vec_from_json(const json& j) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i)
    v[static_cast<Eigen::Index>(i)] = j[i].get<double>();
  return v;
}

json points_to_json(const Eigen::MatrixXd& pts) {
  json arr = json::array();
  for (Eigen::Index i = 0; i < pts.rows(); ++i)
    arr.push_back(vec_to_json(pts.row(i).transpose()));
  return arr;
}

Eigen::MatrixXd points_from_json(const json& j, Eigen::Index dim) {
  Eigen::MatrixXd pts(static_cast<Eigen::Index>(j.size()), dim);
  for (std::size_t i = 0; i < j.size(); ++i) {
    const Eigen::VectorXd row = vec_from_json(j[i]);
    if (row.size() != dim)
      throw std::invalid_argument("point arity does not match dim");
    pts.row(static_cast<Eigen::Index>(i)) = row.transpose();
  }
  return pts;
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

void write_file(const json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << j.dump(2) << "\n";
}

}  // namespace

json to_json(const Instance& instance) {
  return json{{"dim", instance.dim},
              {"points", points_to_json(instance.points)},
              {"meta",
               {{"name", instance.meta.name},
                {"generator", instance.meta.generator},
                {"seed", instance.meta.seed}}}};
}

Instance instance_from_json(const json& j) {
  Instance inst;
  inst.dim = j.at("dim").get<int>();
  if (inst.dim < 1) throw std::invalid_argument("instance dim must be >= 1");
  inst.points = dedup_points(points_from_json(j.at("points"), inst.dim));
  if (!inst.points.allFinite())
    throw std::invalid_argument("instance has non-finite coordinates");
  if (j.contains("meta")) {
    const json& m = j.at("meta");
    inst.meta.name = m.value("name", "");
    inst.meta.generator = m.value("generator", "");
    inst.meta.seed = m.value("seed", std::uint64_t{0});
  }
  return inst;
}

json to_json(const ConvexPolygon& polygon) {
  json verts = json::array();
  for (Eigen::Index i = 0; i < polygon.size(); ++i)
    verts.push_back(vec_to_json(polygon.vertex(i)));
  return json{{"vertices", verts}};
}

ConvexPolygon polygon_from_json(const json& j) {
  const json& verts = j.at("vertices");
  Eigen::Matrix2Xd m(2, static_cast<Eigen::Index>(verts.size()));
  for (std::size_t i = 0; i < verts.size(); ++i) {
    const Eigen::VectorXd v = vec_from_json(verts[i]);
    if (v.size() != 2) throw std::invalid_argument("polygon vertex arity");
    m.col(static_cast<Eigen::Index>(i)) = v;
  }
  return ConvexPolygon::from_vertices(m);
}

namespace {

json shape_to_json(const ShapeDescriptor& shape) {
  json j;
  if (std::holds_alternative<SquareShape>(shape)) {
    j["kind"] = "square";
  } else if (const auto* r = std::get_if<RectShape>(&shape)) {
    j["kind"] = "rect";
    j["a"] = r->a;
    j["b"] = r->b;
  } else if (const auto* h = std::get_if<HyperBoxShape>(&shape)) {
    j["kind"] = "hyperbox";
    j["lengths"] = vec_to_json(h->lengths);
  } else if (std::holds_alternative<DiskShape>(shape)) {
    j["kind"] = "disk";
  } else if (const auto* ts = std::get_if<TileSquareShape>(&shape)) {
    j["kind"] = "tile-square";
    j["side"] = ts->side;
    j["placed_side"] = ts->placed_side;
    j["offset"] = vec_to_json(ts->offset);
  } else if (const auto* th = std::get_if<TileHexShape>(&shape)) {
    j["kind"] = "tile-hex";
    j["rho"] = th->rho;
    j["placed_rho"] = th->placed_rho;
    j["offset"] = vec_to_json(th->offset);
  } else {
    const auto& p = std::get<PolygonShape>(shape);
    j["kind"] = "polygon";
    j["vertices"] = to_json(p.polygon).at("vertices");
  }
  return j;
}

ShapeDescriptor shape_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "square") return SquareShape{};
  if (kind == "rect")
    return RectShape{j.at("a").get<double>(), j.at("b").get<double>()};
  if (kind == "hyperbox") return HyperBoxShape{vec_from_json(j.at("lengths"))};
  if (kind == "disk") return DiskShape{};
  if (kind == "tile-square") {
    const Eigen::VectorXd off = vec_from_json(j.at("offset"));
    return TileSquareShape{j.at("side").get<double>(),
                           j.at("placed_side").get<double>(),
                           Vec2(off[0], off[1])};
  }
  if (kind == "tile-hex") {
    const Eigen::VectorXd off = vec_from_json(j.at("offset"));
    return TileHexShape{j.at("rho").get<double>(),
                        j.at("placed_rho").get<double>(),
                        Vec2(off[0], off[1])};
  }
  if (kind == "polygon") return PolygonShape{polygon_from_json(j)};
  throw std::invalid_argument("unknown shape kind: " + kind);
}

}  // namespace

json to_json(const CoverDocument& cover) {
  json placements = json::array();
  for (const auto& p : cover.placements) placements.push_back(vec_to_json(p));
  return json{{"shape", shape_to_json(cover.shape)},
              {"placements", placements},
              {"provenance",
               {{"algorithm", cover.provenance.algorithm},
                {"seed", cover.provenance.seed},
                {"version", cover.provenance.version}}}};
}

CoverDocument cover_from_json(const json& j) {
  CoverDocument doc;
  doc.shape = shape_from_json(j.at("shape"));
  const Eigen::Index arity = shape_placement_dim(doc.shape);
  for (const json& p : j.at("placements")) {
    Eigen::VectorXd v = vec_from_json(p);
    if (v.size() != arity)
      throw std::invalid_argument("placement arity does not match shape");
    doc.placements.push_back(std::move(v));
  }
  if (j.contains("provenance")) {
    const json& p = j.at("provenance");
    doc.provenance.algorithm = p.value("algorithm", "");
    doc.provenance.seed = p.value("seed", std::uint64_t{0});
    doc.provenance.version = p.value("version", "");
  }
  return doc;
}

json to_json(const PlyReport& report) {
  json uncovered = json::array();
  for (const auto& p : report.uncovered) uncovered.push_back(vec_to_json(p));
  return json{{"ply", report.ply},
              {"witness", vec_to_json(report.witness)},
              {"membership", report.membership},
              {"uncovered", uncovered}};
}

Instance load_instance(const std::string& path) {
  return instance_from_json(read_file(path));
}

void save_instance(const Instance& instance, const std::string& path) {
  write_file(to_json(instance), path);
}

CoverDocument load_cover(const std::string& path) {
  return cover_from_json(read_file(path));
}

void save_cover(const CoverDocument& cover, const std::string& path) {
  write_file(to_json(cover), path);
}

ConvexPolygon load_polygon(const std::string& path) {
  return polygon_from_json(read_file(path));
}

}  // namespace plycover
