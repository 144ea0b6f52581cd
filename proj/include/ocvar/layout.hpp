#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ocvar/extraction.hpp"
#include "ocvar/projection.hpp"

namespace ocvar {

class CyclicExecution : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Inclusive column range occupied by an event.
struct ColumnSpan {
  std::uint32_t x_start = 0;
  std::uint32_t x_end = 0;

  friend bool operator==(const ColumnSpan&, const ColumnSpan&) = default;
};

/// Column spans of all nodes in O(nodes + edges). A node without
/// predecessors starts at column 0, otherwise one after its latest
/// predecessor; it ends one before its earliest successor, or at its own
/// start when it has none. Throws CyclicExecution.
std::vector<ColumnSpan> horizontal_positions(const ProjectedExecution& p);

std::uint32_t x_start(const ProjectedExecution& p, std::size_t node);
std::uint32_t x_end(const ProjectedExecution& p, std::size_t node);

struct Lane {
  ObjectIndex object = 0;
  std::string object_id;
  std::string type;
};

struct Cell {
  std::size_t node = 0;  // position in the projected execution
  std::string event_id;
  ColumnSpan span;
  std::vector<std::uint32_t> lanes;  // ascending lane indices
};

/// Lanes top to bottom (grouped by type name, then first event, then id);
/// cells ordered by (x_start, event id).
struct LayoutGrid {
  std::vector<Lane> lanes;
  std::vector<Cell> cells;
  std::uint32_t width = 0;
};

/// `p` must be the projection of `exec`.
LayoutGrid layout_variant(const EventLog& log, const ProjectedExecution& p, const ProcessExecution& exec);

struct Rgb {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;

  std::string hex() const;
  friend bool operator==(const Rgb&, const Rgb&) = default;
};

/// Hue (degrees) and lightness/saturation in [0, 1].
Rgb hsl_to_rgb(double hue, double saturation, double lightness);

inline constexpr std::size_t kShadesPerType = 12;

struct Palette {
  std::map<std::string, Rgb> base;   // by type name
  std::map<std::string, Rgb> shade;  // by object id
  std::vector<std::string> warnings;

  /// Base hues follow the order of `type_names`; shades follow lane order
  /// within each type and repeat after kShadesPerType objects.
  static Palette build(std::span<const std::string> type_names, const LayoutGrid& grid);
  /// Uses the types present in the grid.
  static Palette build(const LayoutGrid& grid);
};

struct ChevronGeometry {
  int cell_width = 96;
  int cell_height = 28;
  int arrow_depth = 10;
  int lane_gap = 4;
  int margin = 8;
};

/// SVG 1.1 document: one chevron polygon and one text per (event, lane).
std::string render_svg(const LayoutGrid& grid, const std::map<std::string, std::string>& labels,
                       const Palette& palette, const ChevronGeometry& geometry = {});

}  // namespace ocvar
