#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "arimat/arimatroid.hpp"

// Centred toric arrangement of the characters given by the columns of X.
//
// A point of the torus is written exp(2πi q) with q ∈ (Q/Z)^d; the character
// of column λ is trivial at that point iff λ·q ∈ Z. The intersection of the
// kernels of a set S of characters is the closed subgroup
//   H_S = { q : X_S^T q ∈ Z^|S| },
// whose connected components are cosets of the subtorus spanned by the real
// kernel of X_S^T.
namespace arimat {

using RationalVector = std::vector<Rational>;

struct Flat {
  IndexSet elements;
  std::size_t rank = 0;

  friend bool operator==(const Flat&, const Flat&) = default;
};

/// A connected component of an intersection of character kernels.
///
/// `characters` lists every character that is trivial on the whole layer; the
/// layer is a component of H_characters. It is a flat of the matroid for the
/// layers of H_F with F closed, but can be a non-closed set in general (e.g.
/// the point -1 for X = (2 1) is cut out by the first character alone).
struct Layer {
  IndexSet characters;
  std::size_t rank = 0;  // codimension
  RationalVector point;  // entries reduced into [0, 1)
};

struct LayerPoset {
  std::vector<Layer> layers;  // sorted by (rank, characters, point)
  /// Strict relations (a, b): layer b is contained in layer a, i.e. a < b.
  std::vector<std::pair<std::size_t, std::size_t>> relations;
  std::size_t bottom = 0;

  bool less(std::size_t a, std::size_t b) const;
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;
  std::vector<std::size_t> maximal() const;
};

inline constexpr std::size_t kDefaultFlatCap = 16;
inline constexpr std::size_t kDefaultLayerCap = 20000;

/// All closed sets ordered by (rank, lexicographic). Throws TooLarge above
/// `cap` elements.
std::vector<Flat> flats(const Representation& x, std::size_t cap = kDefaultFlatCap);

/// Components of the intersection of the characters in `subset`, one
/// representative each, sorted by point. There are m(subset) of them.
std::vector<Layer> layers_of_flat(const Representation& x, const IndexSet& subset);

/// λ·q ∈ Z for every column λ in `subset`.
bool on_intersection(const Representation& x, const IndexSet& subset, const RationalVector& q);

/// Whether q and q2 lie in the same component of H_subset. Throws NotOnFlat
/// if either point is not on H_subset.
bool same_component(const Representation& x, const IndexSet& subset, const RationalVector& q, const RationalVector& q2);

/// Every layer of the arrangement with the reverse-inclusion order. Throws
/// TooLarge above `cap` elements or `layer_cap` layers.
LayerPoset layer_poset(const Representation& x, std::size_t cap = kDefaultFlatCap,
                       std::size_t layer_cap = kDefaultLayerCap);

/// A basis I whose intersection has as many components as the product of the
/// component counts of its single characters, counted by enumerating
/// component representatives. Requires full row rank. Throws TooLarge if no
/// witness is found and some basis has more than a million points.
std::optional<IndexSet> geometric_weak_multiplicativity(const Representation& x);

}  // namespace arimat
