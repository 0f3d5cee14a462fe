#include "wobetti/simplicial.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

namespace wobetti {

namespace {

std::vector<int> mask_to_labels(std::uint32_t mask,
                                const std::vector<int>& universe) {
  std::vector<int> out;
  for (std::size_t i = 0; i < universe.size(); ++i) {
    if (mask & (1u << i)) out.push_back(universe[i]);
  }
  return out;
}

}  // namespace

SimplicialComplex SimplicialComplex::void_complex(std::vector<int> universe) {
  std::sort(universe.begin(), universe.end());
  universe.erase(std::unique(universe.begin(), universe.end()),
                 universe.end());
  SimplicialComplex cx;
  cx.universe_ = std::move(universe);
  cx.void_ = true;
  return cx;
}

SimplicialComplex SimplicialComplex::from_faces(
    std::vector<int> universe, const std::vector<std::vector<int>>& faces) {
  SimplicialComplex cx = void_complex(std::move(universe));
  if (cx.universe_.size() > 31) {
    throw std::invalid_argument("universe too large (limit 31 vertices)");
  }
  if (faces.empty()) return cx;

  std::vector<std::uint32_t> masks;
  masks.reserve(faces.size());
  for (const auto& face : faces) {
    std::uint32_t mask = 0;
    for (int v : face) {
      auto it = std::lower_bound(cx.universe_.begin(), cx.universe_.end(), v);
      if (it == cx.universe_.end() || *it != v) {
        throw std::invalid_argument("face vertex " + std::to_string(v) +
                                    " outside universe");
      }
      mask |= 1u << (it - cx.universe_.begin());
    }
    masks.push_back(mask);
  }
  // Keep inclusion-maximal masks only.
  std::sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
    return std::popcount(a) > std::popcount(b);
  });
  for (std::uint32_t m : masks) {
    bool contained = std::any_of(
        cx.facet_masks_.begin(), cx.facet_masks_.end(),
        [m](std::uint32_t f) { return (m & f) == m; });
    if (!contained) cx.facet_masks_.push_back(m);
  }
  std::sort(cx.facet_masks_.begin(), cx.facet_masks_.end());
  cx.void_ = false;
  return cx;
}

bool SimplicialComplex::is_irrelevant() const {
  return !void_ && facet_masks_.size() == 1 && facet_masks_[0] == 0;
}

int SimplicialComplex::dim() const {
  if (void_) return -2;
  int d = -1;
  for (std::uint32_t m : facet_masks_) d = std::max(d, std::popcount(m) - 1);
  return d;
}

std::vector<std::vector<int>> SimplicialComplex::facets() const {
  std::vector<std::vector<int>> out;
  out.reserve(facet_masks_.size());
  for (std::uint32_t m : facet_masks_) out.push_back(mask_to_labels(m, universe_));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint32_t> SimplicialComplex::face_masks_of_card(
    int card) const {
  if (void_ || card < 0) return {};
  std::set<std::uint32_t> found;
  for (std::uint32_t facet : facet_masks_) {
    if (std::popcount(facet) < card) continue;
    // Enumerate card-subsets of the facet's bit positions.
    std::vector<int> bits;
    for (std::size_t i = 0; i < universe_.size(); ++i) {
      if (facet & (1u << i)) bits.push_back(static_cast<int>(i));
    }
    const int k = static_cast<int>(bits.size());
    std::vector<int> idx(static_cast<std::size_t>(card));
    for (int i = 0; i < card; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
      std::uint32_t sub = 0;
      for (int i : idx) sub |= 1u << bits[static_cast<std::size_t>(i)];
      found.insert(sub);
      int pos = card - 1;
      while (pos >= 0 &&
             idx[static_cast<std::size_t>(pos)] == k - card + pos) {
        --pos;
      }
      if (pos < 0) break;
      ++idx[static_cast<std::size_t>(pos)];
      for (int j = pos + 1; j < card; ++j) {
        idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
      }
    }
  }
  return {found.begin(), found.end()};
}

std::vector<std::vector<int>> SimplicialComplex::faces_of_dim(int d) const {
  if (void_) return {};
  if (d == -1) return {std::vector<int>{}};
  if (d < -1) return {};
  std::vector<std::vector<int>> out;
  for (std::uint32_t m : face_masks_of_card(d + 1)) {
    out.push_back(mask_to_labels(m, universe_));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<int> SimplicialComplex::cone_apex() const {
  if (void_ || is_irrelevant()) return std::nullopt;
  std::uint32_t common = facet_masks_.front();
  for (std::uint32_t m : facet_masks_) common &= m;
  if (common == 0) return std::nullopt;
  return universe_[static_cast<std::size_t>(std::countr_zero(common))];
}

GfMatrix boundary_matrix(const SimplicialComplex& cx, int d, FieldSpec field) {
  if (d < 0) throw std::invalid_argument("boundary dimension must be >= 0");
  auto rows = cx.faces_of_dim(d - 1);
  auto cols = cx.faces_of_dim(d);
  std::map<std::vector<int>, std::size_t> row_index;
  for (std::size_t i = 0; i < rows.size(); ++i) row_index[rows[i]] = i;

  GfMatrix m(rows.size(), cols.size(), field);
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const std::vector<int>& face = cols[c];
    for (std::size_t k = 0; k < face.size(); ++k) {
      std::vector<int> sub = face;
      sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(k));
      m.set(row_index.at(sub), c, k % 2 == 0 ? 1 : -1);
    }
  }
  return m;
}

std::map<int, int> reduced_homology_dims(const SimplicialComplex& cx,
                                         FieldSpec field) {
  std::map<int, int> out;
  if (cx.is_void()) return out;
  const int top = cx.dim();

  std::vector<std::size_t> face_count(static_cast<std::size_t>(top + 2), 0);
  std::vector<std::size_t> rank(static_cast<std::size_t>(top + 3), 0);
  for (int d = -1; d <= top; ++d) {
    face_count[static_cast<std::size_t>(d + 1)] = cx.faces_of_dim(d).size();
  }
  for (int d = 0; d <= top + 1; ++d) {
    rank[static_cast<std::size_t>(d)] =
        d <= top ? boundary_matrix(cx, d, field).rank() : 0;
  }

  // dim H~_{-1} = f_{-1} - rank ∂_0; dim H~_d = (f_d - rank ∂_d) - rank ∂_{d+1}.
  {
    int h = 1 - static_cast<int>(rank[0]);
    if (h != 0) out[-1] = h;
  }
  for (int d = 0; d <= top; ++d) {
    int h = static_cast<int>(face_count[static_cast<std::size_t>(d + 1)]) -
            static_cast<int>(rank[static_cast<std::size_t>(d)]) -
            static_cast<int>(rank[static_cast<std::size_t>(d + 1)]);
    if (h != 0) out[d] = h;
  }
  return out;
}

}  // namespace wobetti
