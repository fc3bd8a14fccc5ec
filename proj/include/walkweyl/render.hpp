#ifndef WALKWEYL_RENDER_HPP
#define WALKWEYL_RENDER_HPP

#include <string>
#include <vector>

#include "walkweyl/chamber.hpp"
#include "walkweyl/enumerate.hpp"

namespace walkweyl {

/// Presentation options for slice rendering. CSV/JSON outputs are bit-exact;
/// ascii and svg are presentational only.
struct RenderSpec {
  enum class Format { Csv, Json, Ascii, Svg };
  Format format = Format::Csv;
  bool overlay = false;  // draw reflection lines (svg)
  int scale = 24;        // svg cell size in px
  bool log_bucket = true;  // shade by log-bucket; false labels exact values
};

/// Lattice cells shaded by count, one rect per endpoint, with optional
/// reflection-line overlay. Floats are fixed to 6 decimals and never parsed
/// back.
std::string render_slice_svg(const CountTable& table,
                             const std::vector<ReflectionLine>& overlay_lines,
                             const RenderSpec& spec);

std::string render_slice_ascii(const CountTable& table);

}  // namespace walkweyl

#endif  // WALKWEYL_RENDER_HPP
