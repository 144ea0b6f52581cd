#include <algorithm>
#include <cstdio>
#include <sstream>

#include "ocvar/layout.hpp"

namespace ocvar {
namespace {

std::string number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", v);
  std::string s = buf;
  if (s.size() > 2 && s.compare(s.size() - 2, 2, ".0") == 0) s.resize(s.size() - 2);
  return s;
}

std::string escape_xml(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_svg(const LayoutGrid& grid, const std::map<std::string, std::string>& labels,
                       const Palette& palette, const ChevronGeometry& geometry) {
  const double cw = geometry.cell_width;
  const double ch = geometry.cell_height;
  const double depth = geometry.arrow_depth;
  const double pitch = ch + geometry.lane_gap;
  const double margin = geometry.margin;
  const std::size_t lanes = grid.lanes.size();
  const double width = 2 * margin + cw * grid.width + depth;
  const double height = lanes == 0 ? 2 * margin : 2 * margin + pitch * static_cast<double>(lanes) - geometry.lane_gap;

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << number(width) << "\" height=\""
      << number(height) << "\" viewBox=\"0 0 " << number(width) << ' ' << number(height) << "\">\n";
  for (const auto& warning : palette.warnings) out << "<!-- warning: " << escape_xml(warning) << " -->\n";

  for (std::size_t lane = 0; lane < lanes; ++lane) {
    const Lane& l = grid.lanes[lane];
    auto shade = palette.shade.find(l.object_id);
    const std::string fill = shade != palette.shade.end() ? shade->second.hex() : std::string("#808080");
    const double y0 = margin + pitch * static_cast<double>(lane);
    const double y1 = y0 + ch;
    const double ym = y0 + ch / 2;

    out << "<g id=\"lane-" << lane << "\">\n<title>" << escape_xml(l.object_id) << " (" << escape_xml(l.type)
        << ")</title>\n";
    for (const Cell& cell : grid.cells) {
      if (!std::binary_search(cell.lanes.begin(), cell.lanes.end(), static_cast<std::uint32_t>(lane))) continue;
      const double x0 = margin + cw * cell.span.x_start;
      const double x1 = margin + cw * (cell.span.x_end + 1);
      out << "<polygon points=\"" << number(x0) << ',' << number(y0) << ' ' << number(x1 - 2) << ','
          << number(y0) << ' ' << number(x1 - 2 + depth) << ',' << number(ym) << ' ' << number(x1 - 2) << ','
          << number(y1) << ' ' << number(x0) << ',' << number(y1) << ' ' << number(x0 + depth) << ','
          << number(ym) << "\" fill=\"" << fill << "\" stroke=\"#ffffff\" stroke-width=\"1\"/>\n";
      auto label = labels.find(cell.event_id);
      const std::string& text = label != labels.end() ? label->second : cell.event_id;
      out << "<text x=\"" << number((x0 + depth + x1 - 2) / 2) << "\" y=\"" << number(ym)
          << "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"#ffffff\" text-anchor=\"middle\" "
             "dominant-baseline=\"middle\">"
          << escape_xml(text) << "</text>\n";
    }
    out << "</g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace ocvar
