#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "strkit/geometry.hpp"

namespace strkit::recognition {

// Symbol inventory for CTC decoding. The blank is not a text symbol; it
// occupies the last posterior column (index symbols.size()).
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<char32_t> symbols);

  const std::vector<char32_t>& symbols() const { return symbols_; }
  std::size_t size() const { return symbols_.size(); }
  std::size_t blank_index() const { return symbols_.size(); }
  std::size_t num_classes() const { return symbols_.size() + 1; }

  char32_t symbol(std::size_t index) const;
  std::optional<std::size_t> lookup(char32_t symbol) const;

 private:
  std::vector<char32_t> symbols_;
};

// Per-frame probabilities over symbols + blank, row-major. The recognizer
// contract is 40 frames (CropSpec::max_chars); smaller shapes are accepted
// so short sequences can be decoded too.
struct Posterior {
  std::size_t rows = 0;  // frames
  std::size_t cols = 0;  // |symbols| + 1
  std::vector<float> probs;

  float at(std::size_t r, std::size_t c) const { return probs[r * cols + c]; }
};

// Checks shape consistency, entries in [0,1], and rows summing to 1 +- tol.
void validate(const Posterior& p, double row_sum_tolerance = 1e-5);

struct CropSpec {
  int height = 48;
  int width = 320;
  int char_width = 8;

  int max_chars() const { return width / char_width; }
};

// Row-major 2x3 affine map.
struct Affine {
  std::array<double, 6> m{1, 0, 0, 0, 1, 0};

  geometry::Point apply(geometry::Point p) const {
    return {m[0] * p.x + m[1] * p.y + m[2], m[3] * p.x + m[4] * p.y + m[5]};
  }
  Affine inverse() const;
};

// The k most frequent codepoints in the corpus, ties broken by codepoint
// ascending. Throws when the corpus contains no characters.
Alphabet build_alphabet(const std::vector<std::string>& corpus, std::size_t k);

// Map from image coordinates into the crop frame: the box corners land on
// the crop rectangle corners (rotation removed, anisotropic scale to
// width x height). Throws on a degenerate box.
Affine crop_transform(const geometry::RotatedBox& box, const CropSpec& spec = {});

// Per-frame argmax (ties to the lowest index), collapse repeats, drop
// blanks.
std::string ctc_greedy_decode(const Posterior& p, const Alphabet& a);

// Probability of the greedy path (product of the per-frame maxima).
double ctc_greedy_path_prob(const Posterior& p);

struct BeamResult {
  std::string text;
  double score = 0.0;  // summed probability of all paths collapsing to text
};

// CTC prefix beam search over label sequences. Monotone in the beam width:
// a wider beam never returns a lower score.
BeamResult ctc_beam_decode(const Posterior& p, const Alphabet& a, std::size_t beam);

// ---- file formats ----

// Alphabet file: one symbol per line, UTF-8. Blank lines are rejected
// except for a single trailing newline.
Alphabet parse_alphabet(const std::string& bytes);
std::string format_alphabet(const Alphabet& a);

// Posterior files: either a JSON object {"rows":R,"cols":C,"probs":[...]}
// or the packed binary layout: magic "CTCP", uint16 rows, uint16 cols
// (little-endian), then rows*cols float32 little-endian, row-major.
Posterior parse_posterior(const std::string& bytes);
std::string format_posterior_binary(const Posterior& p);
std::string format_posterior_json(const Posterior& p);

}  // namespace strkit::recognition
