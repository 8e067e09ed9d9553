#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "strkit/geometry.hpp"

namespace strkit::reading_order {

struct Word {
  std::string text;
  geometry::RotatedBox box;
  double confidence = 1.0;
};

enum class IouMode { rotated, axis_aligned };

struct GroupingParams {
  double r_v = 0.5;
  double r_h = 1.0;
  double iou_threshold = 0.01;
  IouMode iou_mode = IouMode::rotated;
  // Fraction of the median box height within which center-y values count as
  // the same text line; 0 reproduces the plain (y, x) sort.
  double line_tolerance = 0.5;
};

struct Paragraph {
  std::vector<Word> words;  // reading order
  geometry::AxisRect rect;
  geometry::RotatedBox rbox;
};

// Square symmetric 0/1 matrix.
class BoolMatrix {
 public:
  BoolMatrix() = default;
  explicit BoolMatrix(std::size_t n) : n_(n), cells_(n * n, 0) {}

  std::size_t size() const { return n_; }
  bool at(std::size_t i, std::size_t j) const { return cells_[i * n_ + j] != 0; }
  void set(std::size_t i, std::size_t j, bool v) { cells_[i * n_ + j] = v ? 1 : 0; }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint8_t> cells_;
};

// IoU of the two words' boxes after expansion, in the configured mode.
double pair_iou(const Word& a, const Word& b, const GroupingParams& params);

// a[i][j] = 1 iff iou(expand(b_i), expand(b_j)) >= t for i != j; diagonal 1.
BoolMatrix adjacency(const std::vector<Word>& words, const GroupingParams& params);

// Partition of {0..n-1} into connected components, each sorted ascending,
// components ordered by smallest member. Throws if the matrix is asymmetric.
std::vector<std::vector<std::size_t>> connected_components(const BoolMatrix& adj);

// Reading order within one group: stable sort by (line index, center x,
// original index), where lines cluster center-y values closer than
// line_tolerance * median box height. Returns indices into `words`.
std::vector<std::size_t> raster_order(const std::vector<Word>& words, double line_tolerance);

// Algorithm: expand boxes, link pairs whose expanded IoU clears the
// threshold, take connected components as paragraphs, raster-scan each, and
// wrap each in the minimum-area rectangle of its unexpanded corner points.
// Paragraphs come out sorted by (rect.top, rect.left).
std::vector<Paragraph> reconstruct(const std::vector<Word>& words, const GroupingParams& params);

}  // namespace strkit::reading_order
