#include "outerstring/svg.hpp"

#include <algorithm>
#include <sstream>

namespace outerstring {

namespace {

std::string fx(const Rational& q) { return to_fixed(q, 4); }

std::string points(const std::vector<Point>& pts) {
  std::string out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) out += ' ';
    out += fx(pts[i].x) + "," + fx(-pts[i].y);
  }
  return out;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_svg(const CurveFamily& f, const RenderOptions& opt) {
  Rational min_x = 0, max_x = 1, max_y = 1;
  bool first = true;
  for (const auto& c : f.curves())
    for (const auto& p : c.vertices) {
      if (first) {
        min_x = max_x = p.x;
        first = false;
      }
      min_x = std::min(min_x, p.x);
      max_x = std::max(max_x, p.x);
      max_y = std::max(max_y, p.y);
    }
  Rational w = max_x - min_x, h = max_y;
  if (w == 0) w = 1;
  const Rational mx = w / 20, my = h / 20;
  const Rational vx = min_x - mx, vy = -(max_y + my), vw = w + 2 * mx, vh = h + 2 * my;
  const Rational font = std::max(vw, vh) / 40;

  std::vector<std::vector<std::string>> classes(f.size());
  auto tag = [&](std::size_t i, const char* c) { classes[i].push_back(c); };
  if (opt.skeleton) {
    tag(opt.skeleton->u, "anchor");
    tag(opt.skeleton->v, "anchor");
    opt.skeleton->supports.for_each([&](std::size_t s) { tag(s, "support"); });
  }
  if (opt.bracket) {
    opt.bracket->S().for_each([&](std::size_t s) { tag(s, "support"); });
    opt.bracket->P().for_each([&](std::size_t p) { tag(p, "bracketed"); });
  }
  if (opt.clique_system)
    for (const auto& a : opt.clique_system->cliques) {
      a.clique.for_each([&](std::size_t c) { tag(c, "clique"); });
      tag(a.l, "anchor");
      tag(a.r, "anchor");
    }
  if (opt.highlight) opt.highlight->for_each([&](std::size_t c) { tag(c, "highlight"); });

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fx(vx) << " " << fx(vy) << " " << fx(vw) << " "
      << fx(vh) << "\">\n";
  out << "<style>\n"
         "  .baseline { stroke: #000000; stroke-width: 2; }\n"
         "  .curve { fill: none; stroke: #7f7f7f; stroke-width: 1.5; }\n"
         "  .highlight { stroke: #d62728; }\n"
         "  .clique { stroke: #9467bd; }\n"
         "  .bracketed { stroke: #2ca02c; }\n"
         "  .support { stroke: #1f77b4; stroke-dasharray: 4 2; }\n"
         "  .anchor { stroke: #ff7f0e; stroke-width: 2.5; }\n"
         "  .p-prime { fill: none; stroke: #2ca02c; stroke-width: 3; stroke-opacity: 0.4; }\n"
         "  .label { font-family: sans-serif; fill: #000000; }\n"
         "  line, polyline { vector-effect: non-scaling-stroke; stroke-linejoin: round; }\n"
         "</style>\n";
  out << "<line class=\"baseline\" x1=\"" << fx(vx) << "\" y1=\"0.0000\" x2=\"" << fx(vx + vw) << "\" y2=\"0.0000\"/>\n";
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto& c = f[i];
    std::string cls = "curve";
    for (const auto& k : classes[i])
      if (cls.find(k) == std::string::npos) cls += " " + k;
    out << "<polyline class=\"" << cls << "\" data-id=\"" << escape(c.id) << "\" points=\"" << points(c.vertices)
        << "\"/>\n";
  }
  if (opt.bracket)
    for (const auto& e : opt.bracket->entries())
      out << "<polyline class=\"p-prime\" data-id=\"" << escape(f[e.p].id) << "\" points=\""
          << points(piece_polyline(Piece{&f[e.p], e.p_prime})) << "\"/>\n";
  for (const auto& c : f.curves()) {
    const Point& top = c.vertices.back();
    out << "<text class=\"label\" x=\"" << fx(top.x) << "\" y=\"" << fx(-top.y - font / 2) << "\" font-size=\""
        << fx(font) << "\">" << escape(c.id) << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace outerstring
