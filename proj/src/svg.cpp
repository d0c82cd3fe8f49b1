#include "plycover/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace plycover {

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

struct Bounds {
  double lox = std::numeric_limits<double>::infinity();
  double loy = std::numeric_limits<double>::infinity();
  double hix = -std::numeric_limits<double>::infinity();
  double hiy = -std::numeric_limits<double>::infinity();

  void add(double x, double y) {
    lox = std::min(lox, x);
    loy = std::min(loy, y);
    hix = std::max(hix, x);
    hiy = std::max(hiy, y);
  }
  bool empty() const { return lox > hix; }
};

}  // namespace

std::string render_svg(const Instance& instance, const CoverDocument* cover) {
  if (instance.dim != 2)
    throw std::invalid_argument("render_svg: only 2-D instances supported");

  Bounds b;
  for (Eigen::Index i = 0; i < instance.points.rows(); ++i)
    b.add(instance.points(i, 0), instance.points(i, 1));

  std::vector<HyperBox> boxes;
  std::vector<Disk> disks;
  ConvexPolygon poly;
  std::vector<Vec2> translations;
  if (cover) {
    if (shape_is_boxes(cover->shape)) {
      boxes = cover_boxes(*cover);
      for (const auto& box : boxes) {
        b.add(box.lower[0], box.lower[1]);
        b.add(box.lower[0] + box.lengths[0], box.lower[1] + box.lengths[1]);
      }
    } else if (std::holds_alternative<DiskShape>(cover->shape)) {
      disks = cover_disks(*cover);
      for (const auto& d : disks) {
        b.add(d.center.x() - d.radius, d.center.y() - d.radius);
        b.add(d.center.x() + d.radius, d.center.y() + d.radius);
      }
    } else {
      std::tie(poly, translations) = cover_polygons(*cover);
      for (const Vec2& t : translations) {
        const Eigen::Matrix2Xd w = poly.translated(t);
        for (Eigen::Index i = 0; i < w.cols(); ++i) b.add(w(0, i), w(1, i));
      }
    }
  }
  if (b.empty()) b = Bounds{0.0, 0.0, 1.0, 1.0};

  const double pad = std::max(0.5, 0.02 * std::max(b.hix - b.lox, b.hiy - b.loy));
  b.lox -= pad;
  b.loy -= pad;
  b.hix += pad;
  b.hiy += pad;
  const double width = b.hix - b.lox;
  const double height = b.hiy - b.loy;
  const auto X = [&](double x) { return x - b.lox; };
  const auto Y = [&](double y) { return b.hiy - y; };  // SVG y grows down

  const double stroke = 0.004 * std::max(width, height);
  const double dot = 2.0 * stroke;

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 "
      << num(width) << " " << num(height) << "\">\n";

  const std::string shape_style =
      "fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"" + num(stroke) + "\"";
  for (const auto& box : boxes) {
    svg << "<rect x=\"" << num(X(box.lower[0])) << "\" y=\""
        << num(Y(box.lower[1] + box.lengths[1])) << "\" width=\""
        << num(box.lengths[0]) << "\" height=\"" << num(box.lengths[1])
        << "\" " << shape_style << "/>\n";
  }
  for (const auto& d : disks) {
    svg << "<circle cx=\"" << num(X(d.center.x())) << "\" cy=\""
        << num(Y(d.center.y())) << "\" r=\"" << num(d.radius) << "\" "
        << shape_style << "/>\n";
  }
  for (const Vec2& t : translations) {
    const Eigen::Matrix2Xd w = poly.translated(t);
    svg << "<polygon points=\"";
    for (Eigen::Index i = 0; i < w.cols(); ++i) {
      if (i) svg << " ";
      svg << num(X(w(0, i))) << "," << num(Y(w(1, i)));
    }
    svg << "\" " << shape_style << "/>\n";
  }
  for (Eigen::Index i = 0; i < instance.points.rows(); ++i) {
    svg << "<circle cx=\"" << num(X(instance.points(i, 0))) << "\" cy=\""
        << num(Y(instance.points(i, 1))) << "\" r=\"" << num(dot)
        << "\" fill=\"#d62728\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

void write_svg(const Instance& instance, const CoverDocument* cover,
               const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << render_svg(instance, cover);
}

}  // namespace plycover
