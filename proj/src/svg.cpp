#include "gasket/svg.hpp"

#include <cmath>
#include <cstdio>

#include "gasket/errors.hpp"

namespace gasket::svg {

namespace {

// Palette shared by all figures.
constexpr const char* kFill = "#aec7e8";
constexpr const char* kOutline = "#1f3d5c";
constexpr const char* kCellStroke = "#2f6db3";
constexpr const char* kQueryColor = "#c0392b";
constexpr const char* kTriangleColor = "#1f7a33";
constexpr const char* kIncircleColor = "#8e44ad";

struct Frame {
  double x0, y0, scale;  // world -> pixel: ((x - x0)*s, 900 - (y - y0)*s)

  std::pair<double, double> map(double x, double y) const {
    return {(x - x0) * scale, 900.0 - (y - y0) * scale};
  }
  std::pair<double, double> map(const Point& p) const {
    auto [x, y] = p.to_xy();
    return map(x, y);
  }
};

// Unit-triangle figures sit in [-0.05, 1.06] x [-0.06, 0.93]; the sumset
// parallelogram needs width up to 1.5.
const Frame kUnitFrame{-0.055, -0.055, 900.0};
const Frame kWideFrame{-0.100, -0.270, 580.0};

std::string num(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

std::string header() {
  return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1000 "
         "900\">\n";
}

std::string polygon(const Frame& f, std::span<const Point> pts,
                    const std::string& style) {
  std::string s = "<polygon points=\"";
  bool first = true;
  for (const Point& p : pts) {
    auto [px, py] = f.map(p);
    if (!first) s += " ";
    first = false;
    s += num(px) + "," + num(py);
  }
  return s + "\" " + style + "/>\n";
}

std::string triangle(const Frame& f, const geom::Triangle& t,
                     const std::string& style) {
  const Point pts[3] = {t.a, t.b, t.c};
  return polygon(f, pts, style);
}

std::string circle(const Frame& f, double cx, double cy, double r,
                   const std::string& style) {
  auto [px, py] = f.map(cx, cy);
  return "<circle cx=\"" + num(px) + "\" cy=\"" + num(py) + "\" r=\"" +
         num(r * f.scale) + "\" " + style + "/>\n";
}

std::string text(const Frame& f, const Point& p, double dx, double dy,
                 const std::string& label) {
  auto [px, py] = f.map(p);
  return "<text x=\"" + num(px + dx) + "\" y=\"" + num(py + dy) +
         "\" font-family=\"sans-serif\" font-size=\"28\" fill=\"#222222\">" +
         label + "</text>\n";
}

std::string fill_style(const char* color) {
  return std::string("fill=\"") + color + "\" stroke=\"none\"";
}

std::string stroke_style(const char* color, double width,
                         bool dashed = false) {
  std::string s = std::string("fill=\"none\" stroke=\"") + color +
                  "\" stroke-width=\"" + num(width) + "\"";
  if (dashed) s += " stroke-dasharray=\"12,8\"";
  return s;
}

}  // namespace

std::string render_stage(const StageSet& stage) {
  if (stage.level > kRenderLevelCap)
    throw ResourceError("render cap is level " +
                        std::to_string(kRenderLevelCap) +
                        "; request a lower stage");
  const Frame& f = kUnitFrame;
  std::string out = header();
  for (const Cell& c : stage.cells)
    out += triangle(f, c.triangle, fill_style(kFill));
  geom::Triangle delta(vertex1(), vertex2(), vertex3());
  out += triangle(f, delta, stroke_style(kOutline, 2.0));
  out += "</svg>\n";
  return out;
}

std::string render_certificate(const thickness::Certificate& cert) {
  const Frame& f = kUnitFrame;
  std::string out = header();
  geom::Triangle delta(vertex1(), vertex2(), vertex3());
  out += triangle(f, delta, stroke_style(kOutline, 2.0));
  out += triangle(f, cell(cert.word).triangle,
                  stroke_style(kCellStroke, 2.5));
  auto [qx, qy] = cert.query.p.to_xy();
  out += circle(f, qx, qy, cert.radius.to_double(),
                stroke_style(kQueryColor, 2.0, /*dashed=*/true));
  out += triangle(f, cert.triangle, stroke_style(kTriangleColor, 3.0));
  auto [ix, iy] = cert.incircle_center.to_xy();
  out += circle(f, ix, iy, cert.incircle_radius.to_double(),
                stroke_style(kIncircleColor, 2.0));
  out += circle(f, qx, qy, 0.004, fill_style(kQueryColor));
  out += "</svg>\n";
  return out;
}

std::string render_parallelogram(const geom::ConvexPolygon& para) {
  if (para.verts.size() != 4)
    throw DomainError("parallelogram render expects 4 vertices");
  const Frame& f = kWideFrame;
  std::string out = header();
  out += polygon(f, para.verts, fill_style("#c9e7c0"));
  out += polygon(f, para.verts, stroke_style(kTriangleColor, 2.5));
  static const char* kLabels[4] = {"2v1", "v1+v2", "v2+v3", "v1+v3"};
  for (std::size_t k = 0; k < 4; ++k) {
    out += circle(f, para.verts[k].to_xy().first,
                  para.verts[k].to_xy().second, 0.006, fill_style("#222222"));
    double dx = (k == 0 || k == 3) ? -95.0 : 14.0;
    double dy = (k <= 1) ? 34.0 : -16.0;
    out += text(f, para.verts[k], dx, dy, kLabels[k]);
  }
  out += "</svg>\n";
  return out;
}

}  // namespace gasket::svg
