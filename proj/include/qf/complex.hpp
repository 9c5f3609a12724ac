#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <span>
#include <string>
#include <vector>

#include "qf/canonical.hpp"
#include "qf/error.hpp"
#include "qf/vertex_set.hpp"

namespace qf {

/// Face counts by dimension: counts[k] = number of k-dimensional faces.
/// The empty face is never counted.
struct FVector {
  std::vector<std::int64_t> counts;

  std::size_t size() const noexcept { return counts.size(); }
  std::int64_t operator[](std::size_t k) const { return counts.at(k); }

  friend bool operator==(const FVector&, const FVector&) = default;
};

inline std::string to_string(const FVector& f) {
  std::string out = "(";
  for (std::size_t i = 0; i < f.counts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(f.counts[i]);
  }
  return out + ")";
}

namespace detail {

// table[S] != 0 iff S is contained in one of `generators`; subsets of
// {1..n}. Downward closure, n * 2^n.
inline std::vector<std::uint8_t> downward_closure(std::span<const VertexSet> generators, int n) {
  std::vector<std::uint8_t> table(std::size_t{1} << n, 0);
  for (VertexSet g : generators) table[g.mask()] = 1;
  for (int bit = 0; bit < n; ++bit) {
    const Mask b = Mask{1} << bit;
    for (Mask s = 0; s < table.size(); ++s) {
      if ((s & b) && table[s]) table[s ^ b] = 1;
    }
  }
  return table;
}

// table[S] != 0 iff S contains one of `generators`. Upward closure.
inline std::vector<std::uint8_t> upward_closure(std::span<const VertexSet> generators, int n) {
  std::vector<std::uint8_t> table(std::size_t{1} << n, 0);
  for (VertexSet g : generators) table[g.mask()] = 1;
  for (int bit = 0; bit < n; ++bit) {
    const Mask b = Mask{1} << bit;
    for (Mask s = 0; s < table.size(); ++s) {
      if ((s & b) && table[s ^ b]) table[s] = 1;
    }
  }
  return table;
}

// f-vector from a face-indicator table, empty face excluded.
inline FVector count_faces(const std::vector<std::uint8_t>& is_face) {
  std::vector<std::int64_t> by_size(kMaxVertices + 2, 0);
  for (Mask s = 1; s < is_face.size(); ++s) {
    if (is_face[s]) ++by_size[std::popcount(s)];
  }
  FVector f;
  int top = static_cast<int>(by_size.size()) - 1;
  while (top > 0 && by_size[top] == 0) --top;
  for (int size = 1; size <= top; ++size) f.counts.push_back(by_size[size]);
  return f;
}

}  // namespace detail

/// A simplicial complex stored by its facets. Vertices are exactly the
/// union of the facets.
class SimplicialComplex {
public:
  const VertexSet& vertices() const noexcept { return vertices_; }

  /// Facets in (size, lexicographic) order.
  std::span<const VertexSet> facets() const noexcept { return facets_; }

  int dimension() const noexcept {
    int top = 0;
    for (VertexSet f : facets_) top = std::max(top, f.size());
    return top - 1;
  }

  bool is_pure() const noexcept {
    return std::all_of(facets_.begin(), facets_.end(),
                       [&](VertexSet f) { return f.size() == facets_.front().size(); });
  }

  bool contains(VertexSet face) const noexcept {
    return std::any_of(facets_.begin(), facets_.end(),
                       [&](VertexSet f) { return face.subset_of(f); });
  }

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

  friend SimplicialComplex build_complex(std::vector<VertexSet> facets);

private:
  SimplicialComplex() = default;

  VertexSet vertices_;
  std::vector<VertexSet> facets_;
};

/// Keeps the inclusion-maximal members of `facets`.
inline SimplicialComplex build_complex(std::vector<VertexSet> facets) {
  if (facets.empty()) throw Error(Errc::EmptyInput, "a complex needs at least one facet");
  for (VertexSet f : facets) {
    if (f.empty()) throw Error(Errc::EmptyFacet, "facets must be non-empty");
  }
  sort_faces(facets);
  SimplicialComplex c;
  // Larger faces come last; a face is maximal iff no later face contains it.
  for (std::size_t i = 0; i < facets.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = i + 1; j < facets.size() && maximal; ++j) {
      if (facets[i].subset_of(facets[j])) maximal = false;
    }
    if (maximal) {
      c.facets_.push_back(facets[i]);
      c.vertices_ = c.vertices_ | facets[i];
    }
  }
  return c;
}

/// Same as build_complex, but rejects facet lists that leave any of the
/// declared vertices {1..declared_vertices} uncovered.
inline SimplicialComplex build_complex(std::vector<VertexSet> facets, int declared_vertices) {
  SimplicialComplex c = build_complex(std::move(facets));
  if (c.vertices() != VertexSet::range(declared_vertices)) {
    if (c.vertices().max_label() > declared_vertices) {
      throw Error(Errc::InvalidLabel, "facet uses a label above the declared vertex count " +
                                          std::to_string(declared_vertices));
    }
    throw Error(Errc::IsolatedVertexDeclared,
                "declared vertices not covered by any facet: " +
                    to_string(VertexSet::range(declared_vertices) - c.vertices()));
  }
  return c;
}

inline std::vector<std::uint8_t> face_table(const SimplicialComplex& complex) {
  return detail::downward_closure(complex.facets(), complex.vertices().max_label());
}

/// All faces of dimension k.
inline std::vector<VertexSet> faces(const SimplicialComplex& complex, int k) {
  if (k < 0 || k > complex.dimension()) {
    throw Error(Errc::DimensionOutOfRange, "dimension " + std::to_string(k) + " outside 0.." +
                                               std::to_string(complex.dimension()));
  }
  const auto table = face_table(complex);
  std::vector<VertexSet> out;
  for (Mask s = 0; s < table.size(); ++s) {
    if (table[s] && std::popcount(s) == k + 1) out.push_back(VertexSet::from_mask(s));
  }
  sort_faces(out);
  return out;
}

inline FVector f_vector(const SimplicialComplex& complex) {
  return detail::count_faces(face_table(complex));
}

inline int dimension(const SimplicialComplex& complex) { return complex.dimension(); }
inline bool is_pure(const SimplicialComplex& complex) { return complex.is_pure(); }

/// Facets F, F' are linked when they share a vertex; connected iff the
/// resulting facet graph has a single component.
inline bool is_connected(const SimplicialComplex& complex) {
  const auto facets = complex.facets();
  VertexSet reached = facets.front();
  std::vector<char> used(facets.size(), 0);
  used[0] = 1;
  for (bool grew = true; grew;) {
    grew = false;
    for (std::size_t i = 0; i < facets.size(); ++i) {
      if (!used[i] && facets[i].intersects(reached)) {
        used[i] = 1;
        reached = reached | facets[i];
        grew = true;
      }
    }
  }
  return std::all_of(used.begin(), used.end(), [](char u) { return u != 0; });
}

/// Inclusion-minimal subsets of {1..ambient} that are not faces.
inline std::vector<VertexSet> minimal_nonfaces(const SimplicialComplex& complex, int ambient) {
  if (ambient < complex.vertices().max_label()) {
    throw Error(Errc::AmbientTooSmall, "ambient " + std::to_string(ambient) +
                                           " below largest vertex label");
  }
  if (ambient > kMaxVertices) throw Error(Errc::TooLarge, "ambient above vertex limit");
  const auto table = detail::downward_closure(complex.facets(), ambient);
  std::vector<VertexSet> out;
  for (Mask s = 1; s < table.size(); ++s) {
    if (table[s]) continue;
    bool minimal = true;
    for (Mask t = s; t != 0 && minimal; t &= t - 1) {
      if (!table[s & ~(t & (~t + 1))]) minimal = false;
    }
    if (minimal) out.push_back(VertexSet::from_mask(s));
  }
  sort_faces(out);
  return out;
}

/// Minimal non-faces relative to the complex's own vertex set.
inline std::vector<VertexSet> minimal_nonfaces(const SimplicialComplex& complex) {
  const VertexSet support = complex.vertices();
  auto all = minimal_nonfaces(complex, support.max_label());
  std::erase_if(all, [&](VertexSet s) { return !s.subset_of(support); });
  return all;
}

/// Default cap on the number of vertices for permutation-based work
/// (canonical forms, enumeration). Overridden by the QF_CAP environment
/// variable; the override is clamped to [2, 10].
inline int enumeration_cap() {
  constexpr int kDefault = 8;
  if (const char* env = std::getenv("QF_CAP")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0') return static_cast<int>(std::clamp(v, 2L, 10L));
  }
  return kDefault;
}

inline constexpr int kCanonicalCap = 10;

/// Relabels the complex onto {1..|V|} so that isomorphic complexes map to
/// the same value.
inline SimplicialComplex canonical_complex(const SimplicialComplex& complex,
                                           int cap = kCanonicalCap) {
  const auto labels = complex.vertices().labels();
  const int n = static_cast<int>(labels.size());
  if (n > cap || cap > kMaxVertices) {
    throw Error(Errc::TooLarge, std::to_string(n) + " vertices exceeds canonicalization cap " +
                                    std::to_string(cap));
  }
  std::vector<int> compact(kMaxVertices + 1, -1);
  for (int i = 0; i < n; ++i) compact[labels[i]] = i;
  std::vector<Mask> sets;
  for (VertexSet f : complex.facets()) {
    Mask m = 0;
    for (int v : f.labels()) m |= Mask{1} << compact[v];
    sets.push_back(m);
  }
  const auto canon = canonical_labeling(n, sets);
  std::vector<VertexSet> facets;
  for (Mask m : canon.sets) facets.push_back(VertexSet::from_mask(m));
  return build_complex(std::move(facets));
}

}  // namespace qf
