#include "ocvar/layout.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <tuple>

namespace ocvar {

std::vector<ColumnSpan> horizontal_positions(const ProjectedExecution& p) {
  const std::size_t n = p.node_count();
  std::vector<std::size_t> pending(n);
  std::vector<std::uint32_t> order;
  order.reserve(n);
  for (std::size_t v = 0; v < n; ++v) {
    pending[v] = p.in_edges(v).size();
    if (pending[v] == 0) order.push_back(static_cast<std::uint32_t>(v));
  }
  std::vector<ColumnSpan> spans(n);
  for (std::size_t head = 0; head < order.size(); ++head) {
    const auto v = order[head];
    for (auto e : p.out_edges(v)) {
      const auto w = p.edges()[e].to;
      spans[w].x_start = std::max(spans[w].x_start, spans[v].x_start + 1);
      if (--pending[w] == 0) order.push_back(w);
    }
  }
  if (order.size() != n) throw CyclicExecution("projected execution contains a cycle");

  for (std::size_t v = 0; v < n; ++v) {
    auto out = p.out_edges(v);
    if (out.empty()) {
      spans[v].x_end = spans[v].x_start;
      continue;
    }
    std::uint32_t earliest = UINT32_MAX;
    for (auto e : out) earliest = std::min(earliest, spans[p.edges()[e].to].x_start);
    spans[v].x_end = earliest - 1;
  }
  return spans;
}

std::uint32_t x_start(const ProjectedExecution& p, std::size_t node) {
  return horizontal_positions(p).at(node).x_start;
}

std::uint32_t x_end(const ProjectedExecution& p, std::size_t node) {
  return horizontal_positions(p).at(node).x_end;
}

LayoutGrid layout_variant(const EventLog& log, const ProjectedExecution& p, const ProcessExecution& exec) {
  if (p.node_count() != exec.events.size()) {
    throw std::invalid_argument("projection does not match the execution");
  }
  const auto spans = horizontal_positions(p);

  LayoutGrid grid;
  std::vector<ObjectIndex> objects = exec.objects;
  auto lane_key = [&](ObjectIndex o) {
    auto trace = log.trace(o);
    const auto first = trace.empty() ? INT64_MAX : log.event(trace.front()).timestamp.millis;
    // Type indices are already in name order.
    return std::make_tuple(log.object(o).type, first, std::string_view(log.object(o).id));
  };
  std::sort(objects.begin(), objects.end(),
            [&](ObjectIndex a, ObjectIndex b) { return lane_key(a) < lane_key(b); });
  std::vector<std::uint32_t> lane_of(log.objects().size(), UINT32_MAX);
  for (std::uint32_t i = 0; i < objects.size(); ++i) {
    const ObjectIndex o = objects[i];
    lane_of[o] = i;
    grid.lanes.push_back({o, log.object(o).id, log.object_type_name(o)});
  }

  for (std::size_t node = 0; node < p.node_count(); ++node) {
    const EventIndex e = exec.events[node];
    Cell cell;
    cell.node = node;
    cell.event_id = log.event(e).id;
    cell.span = spans[node];
    for (ObjectIndex o : log.event(e).objects) {
      if (lane_of[o] != UINT32_MAX) cell.lanes.push_back(lane_of[o]);
    }
    std::sort(cell.lanes.begin(), cell.lanes.end());
    grid.width = std::max(grid.width, cell.span.x_end + 1);
    grid.cells.push_back(std::move(cell));
  }
  std::sort(grid.cells.begin(), grid.cells.end(), [](const Cell& a, const Cell& b) {
    if (a.span.x_start != b.span.x_start) return a.span.x_start < b.span.x_start;
    return a.event_id < b.event_id;
  });
  return grid;
}

std::string Rgb::hex() const {
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", r, g, b);
  return buf;
}

Rgb hsl_to_rgb(double hue, double saturation, double lightness) {
  const double c = (1.0 - std::abs(2.0 * lightness - 1.0)) * saturation;
  const double h = std::fmod(hue, 360.0) / 60.0;
  const double x = c * (1.0 - std::abs(std::fmod(h, 2.0) - 1.0));
  double r = 0, g = 0, b = 0;
  if (h < 1) { r = c; g = x; }
  else if (h < 2) { r = x; g = c; }
  else if (h < 3) { g = c; b = x; }
  else if (h < 4) { g = x; b = c; }
  else if (h < 5) { r = x; b = c; }
  else { r = c; b = x; }
  const double m = lightness - c / 2.0;
  auto channel = [m](double v) { return static_cast<std::uint8_t>(std::lround((v + m) * 255.0)); };
  return {channel(r), channel(g), channel(b)};
}

namespace {

constexpr double kHues[] = {210, 120, 30, 280, 0, 180, 50, 330};
constexpr double kSaturation = 0.6;
constexpr double kBaseLightness = 0.45;
constexpr double kDarkestShade = 0.30;
constexpr double kShadeStep = 0.04;

}  // namespace

Palette Palette::build(std::span<const std::string> type_names, const LayoutGrid& grid) {
  Palette palette;
  std::map<std::string, double> hue;
  for (std::size_t i = 0; i < type_names.size(); ++i) {
    hue[type_names[i]] = kHues[i % std::size(kHues)];
    palette.base[type_names[i]] = hsl_to_rgb(hue[type_names[i]], kSaturation, kBaseLightness);
  }
  std::map<std::string, std::size_t> used;
  for (const Lane& lane : grid.lanes) {
    if (!hue.contains(lane.type)) {
      throw std::invalid_argument("palette has no base color for type '" + lane.type + "'");
    }
    const std::size_t k = used[lane.type]++;
    if (k == kShadesPerType) {
      palette.warnings.push_back("more than " + std::to_string(kShadesPerType) + " objects of type '" +
                                 lane.type + "'; shades repeat");
    }
    const double lightness = kDarkestShade + kShadeStep * static_cast<double>(k % kShadesPerType);
    palette.shade[lane.object_id] = hsl_to_rgb(hue[lane.type], kSaturation, lightness);
  }
  return palette;
}

Palette Palette::build(const LayoutGrid& grid) {
  std::vector<std::string> types;
  for (const Lane& lane : grid.lanes) types.push_back(lane.type);
  std::sort(types.begin(), types.end());
  types.erase(std::unique(types.begin(), types.end()), types.end());
  return build(types, grid);
}

}  // namespace ocvar
