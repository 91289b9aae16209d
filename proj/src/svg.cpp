#include <algorithm>
#include <cstdio>
#include <limits>
#include <sstream>

#include "stringob/drawing.hpp"

namespace stringob {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace

std::string export_svg(const Drawing& d, const SvgOptions& options) {
  double min_x = std::numeric_limits<double>::max(), min_y = min_x;
  double max_x = std::numeric_limits<double>::lowest(), max_y = max_x;
  auto grow = [&](const Point& p) {
    double x = p.x.get_d(), y = p.y.get_d();
    min_x = std::min(min_x, x);
    max_x = std::max(max_x, x);
    min_y = std::min(min_y, y);
    max_y = std::max(max_y, y);
  };
  for (const Point& p : d.vertex_pos) grow(p);
  for (const Polyline& path : d.edge_path)
    for (const Point& p : path) grow(p);
  if (min_x > max_x) min_x = max_x = min_y = max_y = 0.0;

  const double margin = 24.0;
  const double span = std::max({max_x - min_x, max_y - min_y, 1e-12});
  const double scale = (options.size - 2 * margin) / span;
  auto sx = [&](const Point& p) { return fmt(margin + (p.x.get_d() - min_x) * scale); };
  auto sy = [&](const Point& p) { return fmt(options.size - margin - (p.y.get_d() - min_y) * scale); };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(options.size) << "\" height=\""
      << fmt(options.size) << "\" viewBox=\"0 0 " << fmt(options.size) << " " << fmt(options.size) << "\">\n";
  out << "<g fill=\"none\" stroke=\"#333\" stroke-width=\"1.2\">\n";
  for (EdgeId e = 0; e < d.edge_path.size(); ++e) {
    out << "<polyline class=\"edge\" data-edge=\"" << d.graph.edge(e).u << "-" << d.graph.edge(e).v << "\" points=\"";
    const Polyline& path = d.edge_path[e];
    for (std::size_t i = 0; i < path.size(); ++i) out << (i ? " " : "") << sx(path[i]) << "," << sy(path[i]);
    out << "\"/>\n";
  }
  out << "</g>\n";

  if (options.highlight != nullptr) {
    const EdgePairSet& pairs = *options.highlight;
    CrossingVector cv = crossing_vector(d, pairs);
    out << "<g fill=\"#d22\" stroke=\"none\">\n";
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (!cv.mod2[k]) continue;
      const Polyline& a = d.edge_path[pairs[k].first];
      const Polyline& b = d.edge_path[pairs[k].second];
      for (std::size_t i = 0; i + 1 < a.size(); ++i) {
        for (std::size_t j = 0; j + 1 < b.size(); ++j) {
          auto contact = geometry::classify_contact(a[i], a[i + 1], b[j], b[j + 1]);
          if (contact.kind != geometry::Contact::proper) continue;
          out << "<circle class=\"crossing\" cx=\"" << sx(*contact.point) << "\" cy=\"" << sy(*contact.point)
              << "\" r=\"4\"/>\n";
        }
      }
    }
    out << "</g>\n";
  }

  out << "<g fill=\"#000\">\n";
  for (VertexId v = 0; v < d.vertex_pos.size(); ++v)
    out << "<circle class=\"vertex\" cx=\"" << sx(d.vertex_pos[v]) << "\" cy=\"" << sy(d.vertex_pos[v])
        << "\" r=\"3\"/>\n";
  out << "</g>\n";
  if (options.labels) {
    out << "<g font-family=\"sans-serif\" font-size=\"11\" fill=\"#036\">\n";
    for (VertexId v = 0; v < d.vertex_pos.size(); ++v)
      out << "<text class=\"label\" x=\"" << sx(d.vertex_pos[v]) << "\" y=\"" << sy(d.vertex_pos[v]) << "\" dx=\"5\" dy=\"-5\">"
          << v << "</text>\n";
    out << "</g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace stringob
