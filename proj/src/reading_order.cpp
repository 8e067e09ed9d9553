#include "strkit/reading_order.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_map>

#include "strkit/error.hpp"

namespace strkit::reading_order {

namespace geo = strkit::geometry;

double pair_iou(const Word& a, const Word& b, const GroupingParams& params) {
  const geo::RotatedBox ea = geo::expand(a.box, params.r_v, params.r_h);
  const geo::RotatedBox eb = geo::expand(b.box, params.r_v, params.r_h);
  if (params.iou_mode == IouMode::axis_aligned) {
    return geo::iou(geo::aabb(ea), geo::aabb(eb));
  }
  return geo::iou(ea, eb);
}

BoolMatrix adjacency(const std::vector<Word>& words, const GroupingParams& params) {
  const std::size_t n = words.size();
  BoolMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    m.set(i, i, true);
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool linked = pair_iou(words[i], words[j], params) >= params.iou_threshold;
      m.set(i, j, linked);
      m.set(j, i, linked);
    }
  }
  return m;
}

std::vector<std::vector<std::size_t>> connected_components(const BoolMatrix& adj) {
  const std::size_t n = adj.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (adj.at(i, j) != adj.at(j, i)) {
        throw invariant_error("adjacency matrix is not symmetric");
      }
    }
  }
  std::vector<int> label(n, -1);
  std::vector<std::vector<std::size_t>> components;
  std::vector<std::size_t> stack;
  for (std::size_t start = 0; start < n; ++start) {
    if (label[start] >= 0) continue;
    const int id = static_cast<int>(components.size());
    components.emplace_back();
    stack.push_back(start);
    label[start] = id;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      components[id].push_back(v);
      for (std::size_t u = 0; u < n; ++u) {
        if (u != v && adj.at(v, u) && label[u] < 0) {
          label[u] = id;
          stack.push_back(u);
        }
      }
    }
    std::sort(components[id].begin(), components[id].end());
  }
  // Scan order already yields components sorted by smallest member.
  return components;
}

namespace {

double median_height(const std::vector<Word>& words, const std::vector<std::size_t>& idx) {
  std::vector<double> hs;
  hs.reserve(idx.size());
  for (std::size_t i : idx) hs.push_back(words[i].box.h);
  std::sort(hs.begin(), hs.end());
  const std::size_t n = hs.size();
  if (n % 2 == 1) return hs[n / 2];
  return (hs[n / 2 - 1] + hs[n / 2]) / 2.0;
}

// Assigns a line index to each word: sort by center y, start a new line
// whenever the gap to the previous center exceeds the tolerance band.
std::vector<std::size_t> line_indices(const std::vector<Word>& words,
                                      const std::vector<std::size_t>& idx,
                                      double line_tolerance) {
  std::vector<std::size_t> by_y(idx.begin(), idx.end());
  std::stable_sort(by_y.begin(), by_y.end(), [&](std::size_t a, std::size_t b) {
    return words[a].box.cy < words[b].box.cy;
  });
  const double band = line_tolerance * median_height(words, idx);
  std::vector<std::size_t> line_of(words.size(), 0);
  std::size_t line = 0;
  for (std::size_t k = 0; k < by_y.size(); ++k) {
    if (k > 0) {
      const double gap = words[by_y[k]].box.cy - words[by_y[k - 1]].box.cy;
      // band == 0 degenerates to the plain (y, x) sort: any positive gap
      // starts a new line, equal centers still share one.
      if (gap > 0.0 && gap >= band) ++line;
    }
    line_of[by_y[k]] = line;
  }
  return line_of;
}

}  // namespace

std::vector<std::size_t> raster_order(const std::vector<Word>& words, double line_tolerance) {
  if (words.empty()) return {};
  std::vector<std::size_t> idx(words.size());
  std::iota(idx.begin(), idx.end(), 0);
  const std::vector<std::size_t> line_of = line_indices(words, idx, line_tolerance);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (line_of[a] != line_of[b]) return line_of[a] < line_of[b];
    if (words[a].box.cx != words[b].box.cx) return words[a].box.cx < words[b].box.cx;
    return a < b;
  });
  return idx;
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);  // smallest index stays the root
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

// Candidate pruning for the pairwise-IoU step: overlapping expanded boxes
// necessarily have overlapping axis-aligned hulls, so hash those hulls into
// a uniform grid and only test pairs sharing a cell. Exact IoU still decides
// every link; skipped when the pair is already connected.
void link_components(const std::vector<Word>& words, const GroupingParams& params,
                     UnionFind& uf) {
  const std::size_t n = words.size();
  if (params.iou_threshold <= 0.0) {
    // iou >= 0 always holds, so everything is one component.
    for (std::size_t i = 1; i < n; ++i) uf.unite(0, i);
    return;
  }

  std::vector<geo::AxisRect> hulls(n);
  double sum_w = 0.0, sum_h = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    hulls[i] = geo::aabb(geo::expand(words[i].box, params.r_v, params.r_h));
    sum_w += hulls[i].width;
    sum_h += hulls[i].height;
  }
  const double cell_w = std::max(sum_w / static_cast<double>(n), 1e-9);
  const double cell_h = std::max(sum_h / static_cast<double>(n), 1e-9);

  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> grid;
  grid.reserve(n * 2);
  const auto key = [](std::int64_t gx, std::int64_t gy) {
    return (static_cast<std::uint64_t>(gx) << 32) ^ (static_cast<std::uint64_t>(gy) & 0xffffffffULL);
  };

  std::vector<std::uint32_t> last_seen(n, UINT32_MAX);
  for (std::uint32_t i = 0; i < n; ++i) {
    const geo::AxisRect& r = hulls[i];
    const auto gx0 = static_cast<std::int64_t>(std::floor(r.left / cell_w));
    const auto gx1 = static_cast<std::int64_t>(std::floor(r.right() / cell_w));
    const auto gy0 = static_cast<std::int64_t>(std::floor(r.top / cell_h));
    const auto gy1 = static_cast<std::int64_t>(std::floor(r.bottom() / cell_h));
    for (std::int64_t gx = gx0; gx <= gx1; ++gx) {
      for (std::int64_t gy = gy0; gy <= gy1; ++gy) {
        auto& bucket = grid[key(gx, gy)];
        for (std::uint32_t j : bucket) {
          if (last_seen[j] == i) continue;  // pair already visited via another cell
          last_seen[j] = i;
          const geo::AxisRect& s = hulls[j];
          if (s.left > r.right() || r.left > s.right() || s.top > r.bottom() ||
              r.top > s.bottom()) {
            continue;
          }
          if (uf.find(i) == uf.find(j)) continue;
          if (pair_iou(words[i], words[j], params) >= params.iou_threshold) {
            uf.unite(i, j);
          }
        }
        bucket.push_back(i);
      }
    }
  }
}

}  // namespace

std::vector<Paragraph> reconstruct(const std::vector<Word>& words, const GroupingParams& params) {
  const std::size_t n = words.size();
  if (n == 0) return {};

  UnionFind uf(n);
  link_components(words, params, uf);

  // Group members by root, keeping components ordered by smallest index.
  std::unordered_map<std::size_t, std::size_t> root_to_slot;
  std::vector<std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t root = uf.find(i);
    auto it = root_to_slot.find(root);
    if (it == root_to_slot.end()) {
      it = root_to_slot.emplace(root, groups.size()).first;
      groups.emplace_back();
    }
    groups[it->second].push_back(i);
  }

  std::vector<Paragraph> paragraphs;
  paragraphs.reserve(groups.size());
  for (const auto& group : groups) {
    std::vector<Word> members;
    members.reserve(group.size());
    for (std::size_t i : group) members.push_back(words[i]);
    const std::vector<std::size_t> order = raster_order(members, params.line_tolerance);

    Paragraph para;
    para.words.reserve(group.size());
    for (std::size_t k : order) para.words.push_back(members[k]);

    std::vector<geo::Point> pts;
    pts.reserve(group.size() * 4);
    for (const Word& w : para.words) {
      for (const geo::Point& c : geo::corners(w.box)) pts.push_back(c);
    }
    para.rbox = geo::min_area_rect(pts);
    para.rect = geo::aabb(para.rbox);
    paragraphs.push_back(std::move(para));
  }

  std::stable_sort(paragraphs.begin(), paragraphs.end(),
                   [](const Paragraph& a, const Paragraph& b) {
                     if (a.rect.top != b.rect.top) return a.rect.top < b.rect.top;
                     return a.rect.left < b.rect.left;
                   });
  return paragraphs;
}

}  // namespace strkit::reading_order
