#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "wobetti/gfmatrix.hpp"

namespace wobetti {

// Simplicial complex over a vertex label set, stored by its facets. The
// void complex (no faces at all) and the irrelevant complex (only the empty
// face) are distinct: the former has zero reduced homology everywhere, the
// latter has dim H~_{-1} = 1.
class SimplicialComplex {
 public:
  static SimplicialComplex void_complex(std::vector<int> universe);

  // Faces need not be closed downward; closure is implicit. An empty face
  // list gives the void complex, {∅} the irrelevant one.
  static SimplicialComplex from_faces(std::vector<int> universe,
                                      const std::vector<std::vector<int>>& faces);

  bool is_void() const { return void_; }
  bool is_irrelevant() const;

  const std::vector<int>& universe() const { return universe_; }

  // -1 for the irrelevant complex, -2 for the void complex.
  int dim() const;

  std::vector<std::vector<int>> facets() const;

  // All faces of cardinality d+1, lexicographically ordered as sorted
  // label lists. d = -1 yields [∅] unless void.
  std::vector<std::vector<int>> faces_of_dim(int d) const;

  // Smallest vertex contained in every facet, if any.
  std::optional<int> cone_apex() const;

 private:
  std::vector<int> universe_;               // sorted labels
  std::vector<std::uint32_t> facet_masks_;  // bits index into universe_
  bool void_ = true;

  friend GfMatrix boundary_matrix(const SimplicialComplex&, int, FieldSpec);
  friend std::map<int, int> reduced_homology_dims(const SimplicialComplex&,
                                                  FieldSpec);
  std::vector<std::uint32_t> face_masks_of_card(int card) const;
};

// Simplicial boundary ∂_d : C_d -> C_{d-1} with reduced augmentation at
// d = 0 (every vertex maps to ∅ with coefficient 1). Rows are indexed by
// faces_of_dim(d-1), columns by faces_of_dim(d).
GfMatrix boundary_matrix(const SimplicialComplex& cx, int d, FieldSpec field);

// Nonzero reduced homology dimensions over GF(p), keyed by degree.
std::map<int, int> reduced_homology_dims(const SimplicialComplex& cx,
                                         FieldSpec field);

}  // namespace wobetti
