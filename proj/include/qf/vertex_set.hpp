#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "qf/error.hpp"

namespace qf {

/// Hard storage limit on vertex labels. Every set of vertices fits in one
/// machine word and every face table fits in 2^16 bytes.
inline constexpr int kMaxVertices = 16;

using Mask = std::uint32_t;

/// A set of 1-based vertex labels stored as a bitmask (label i <-> bit i-1).
///
/// Comparison is by the underlying mask, i.e. colexicographic order on the
/// label sets. Use `face_order` for the (size, lexicographic) order used in
/// serialized output.
class VertexSet {
public:
  constexpr VertexSet() = default;

  VertexSet(std::initializer_list<int> labels) {
    for (int v : labels) *this = with(v);
  }

  static constexpr VertexSet from_mask(Mask m) noexcept {
    VertexSet s;
    s.bits_ = m;
    return s;
  }

  static VertexSet from_labels(std::span<const int> labels) {
    VertexSet s;
    for (int v : labels) s = s.with(v);
    return s;
  }

  /// {1, ..., n}
  static constexpr VertexSet range(int n) noexcept {
    return from_mask(n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1);
  }

  constexpr Mask mask() const noexcept { return bits_; }
  constexpr int size() const noexcept { return std::popcount(bits_); }
  constexpr bool empty() const noexcept { return bits_ == 0; }

  constexpr bool contains(int label) const noexcept {
    return label >= 1 && label <= kMaxVertices && (bits_ >> (label - 1)) & 1U;
  }

  constexpr bool subset_of(VertexSet other) const noexcept {
    return (bits_ & ~other.bits_) == 0;
  }

  constexpr bool intersects(VertexSet other) const noexcept {
    return (bits_ & other.bits_) != 0;
  }

  /// Largest label in the set, 0 when empty.
  constexpr int max_label() const noexcept { return 32 - std::countl_zero(bits_); }

  /// Smallest label in the set, 0 when empty.
  constexpr int min_label() const noexcept {
    return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1;
  }

  VertexSet with(int label) const {
    if (label < 1 || label > kMaxVertices) {
      throw Error(Errc::InvalidLabel, "vertex label " + std::to_string(label) +
                                          " outside 1.." + std::to_string(kMaxVertices));
    }
    return from_mask(bits_ | (Mask{1} << (label - 1)));
  }

  constexpr VertexSet without(int label) const noexcept {
    if (label < 1 || label > kMaxVertices) return *this;
    return from_mask(bits_ & ~(Mask{1} << (label - 1)));
  }

  std::vector<int> labels() const {
    std::vector<int> out;
    out.reserve(size());
    for (Mask m = bits_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
    return out;
  }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) noexcept {
    return from_mask(a.bits_ | b.bits_);
  }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) noexcept {
    return from_mask(a.bits_ & b.bits_);
  }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) noexcept {
    return from_mask(a.bits_ & ~b.bits_);
  }

  friend constexpr bool operator==(VertexSet, VertexSet) = default;
  friend constexpr auto operator<=>(VertexSet, VertexSet) = default;

private:
  Mask bits_ = 0;
};

using Face = VertexSet;

/// (size, lexicographic members) order used when facets are written out.
inline bool face_order(VertexSet a, VertexSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  const auto la = a.labels();
  const auto lb = b.labels();
  return std::lexicographical_compare(la.begin(), la.end(), lb.begin(), lb.end());
}

inline void sort_faces(std::vector<VertexSet>& faces) {
  std::sort(faces.begin(), faces.end(), face_order);
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
}

inline std::string to_string(VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (int v : s.labels()) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

constexpr std::int64_t binomial(int n, int k) noexcept {
  if (k < 0 || n < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// All k-subsets of {1..n} as masks, in increasing mask order.
inline std::vector<Mask> level_masks(int n, int k) {
  std::vector<Mask> out;
  if (k < 0 || k > n) return out;
  if (k == 0) return {0};
  Mask m = (Mask{1} << k) - 1;
  const Mask limit = Mask{1} << n;
  while (m < limit) {
    out.push_back(m);
    // Gosper's hack: next mask with the same popcount.
    const Mask c = m & (~m + 1);
    const Mask r = m + c;
    m = (((r ^ m) >> 2) / c) | r;
  }
  return out;
}

}  // namespace qf
