#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qf/complex.hpp"
#include "qf/error.hpp"
#include "qf/vertex_set.hpp"

namespace qf {

/// Square-free monomial ideal in k[x_1..x_n], stored by the supports of its
/// minimal generators. The zero ideal (no generators) is representable but
/// rejected by the complex constructions.
class SquarefreeIdeal {
public:
  /// Non-minimal supports are dropped: the ideal they generate is the same.
  SquarefreeIdeal(int ambient, std::vector<VertexSet> supports) : n_(ambient) {
    if (ambient < 1 || ambient > kMaxVertices) {
      throw Error(Errc::TooLarge, "ambient variable count " + std::to_string(ambient) +
                                      " outside 1.." + std::to_string(kMaxVertices));
    }
    for (VertexSet s : supports) {
      if (s.empty()) throw Error(Errc::EmptyFacet, "generator supports must be non-empty");
      if (!s.subset_of(VertexSet::range(ambient))) {
        throw Error(Errc::AmbientTooSmall,
                    "generator " + to_string(s) + " outside 1.." + std::to_string(ambient));
      }
    }
    sort_faces(supports);
    for (std::size_t i = 0; i < supports.size(); ++i) {
      bool minimal = true;
      for (std::size_t j = 0; j < i && minimal; ++j) {
        if (supports[j].subset_of(supports[i])) minimal = false;
      }
      if (minimal) gens_.push_back(supports[i]);
    }
  }

  int ambient() const noexcept { return n_; }
  std::span<const VertexSet> generators() const noexcept { return gens_; }
  bool is_zero() const noexcept { return gens_.empty(); }

  /// Common generator degree, if all generators have the same degree.
  std::optional<int> degree() const {
    if (gens_.empty()) return std::nullopt;
    const int d = gens_.front().size();
    for (VertexSet g : gens_) {
      if (g.size() != d) return std::nullopt;
    }
    return d;
  }

  VertexSet support() const noexcept {
    VertexSet s;
    for (VertexSet g : gens_) s = s | g;
    return s;
  }

  bool contains_monomial(VertexSet monomial) const noexcept {
    return std::any_of(gens_.begin(), gens_.end(),
                       [&](VertexSet g) { return g.subset_of(monomial); });
  }

  friend bool operator==(const SquarefreeIdeal&, const SquarefreeIdeal&) = default;

private:
  int n_;
  std::vector<VertexSet> gens_;
};

inline SimplicialComplex facet_complex(const SquarefreeIdeal& ideal) {
  if (ideal.is_zero()) throw Error(Errc::EmptyIdeal, "the zero ideal has no facet complex");
  const auto gens = ideal.generators();
  return build_complex({gens.begin(), gens.end()});
}

/// Complex of all subsets of {1..n} whose monomial is not in the ideal.
inline SimplicialComplex nonface_complex(const SquarefreeIdeal& ideal) {
  if (ideal.is_zero()) throw Error(Errc::EmptyIdeal, "the zero ideal has no non-face complex");
  const int n = ideal.ambient();
  const auto in_ideal = detail::upward_closure(ideal.generators(), n);
  std::vector<VertexSet> facets;
  for (Mask s = 1; s < in_ideal.size(); ++s) {
    if (in_ideal[s]) continue;
    bool maximal = true;
    for (int bit = 0; bit < n && maximal; ++bit) {
      const Mask b = Mask{1} << bit;
      if (!(s & b) && !in_ideal[s | b]) maximal = false;
    }
    if (maximal) facets.push_back(VertexSet::from_mask(s));
  }
  if (facets.empty()) {
    throw Error(Errc::VoidComplex,
                "every variable lies in the ideal; the non-face complex has no vertices");
  }
  return build_complex(std::move(facets));
}

inline SquarefreeIdeal facet_ideal(const SimplicialComplex& complex, int ambient) {
  if (ambient < complex.vertices().max_label()) {
    throw Error(Errc::AmbientTooSmall, "ambient " + std::to_string(ambient) +
                                           " below largest vertex label");
  }
  const auto facets = complex.facets();
  return SquarefreeIdeal(ambient, {facets.begin(), facets.end()});
}

/// Non-face ideal: generated by the minimal non-faces relative to {1..n}.
inline SquarefreeIdeal stanley_reisner_ideal(const SimplicialComplex& complex, int ambient) {
  return SquarefreeIdeal(ambient, minimal_nonfaces(complex, ambient));
}

enum class FailureReason {
  /// The two f-vectors have different lengths, so no type is defined.
  DimensionMismatch,
  /// Graph case: the type is not of the form (0, b).
  TypeShape,
};

constexpr std::string_view to_string(FailureReason r) noexcept {
  switch (r) {
    case FailureReason::DimensionMismatch: return "DimensionMismatch";
    case FailureReason::TypeShape: return "TypeShape";
  }
  return "Unknown";
}

using TypeVector = std::vector<std::int64_t>;

struct QuasiFReport {
  bool is_quasi_f = false;
  std::optional<TypeVector> type;
  FVector f_facet;
  FVector f_nonface;
  std::optional<FailureReason> failure_reason;

  /// All-zero type: both f-vectors coincide.
  bool is_f_ideal() const {
    return type && std::all_of(type->begin(), type->end(), [](auto a) { return a == 0; });
  }
};

/// f-vector of the facet complex (empty for the zero ideal).
inline FVector facet_f_vector(const SquarefreeIdeal& ideal) {
  if (ideal.is_zero()) return {};
  return detail::count_faces(detail::downward_closure(ideal.generators(), ideal.ambient()));
}

/// f-vector of the non-face complex relative to {1..n} (empty when every
/// variable lies in the ideal).
inline FVector nonface_f_vector(const SquarefreeIdeal& ideal) {
  auto table = detail::upward_closure(ideal.generators(), ideal.ambient());
  for (auto& t : table) t = !t;
  return detail::count_faces(table);
}

inline QuasiFReport quasi_f_report(const SquarefreeIdeal& ideal) {
  QuasiFReport r;
  r.f_facet = facet_f_vector(ideal);
  r.f_nonface = nonface_f_vector(ideal);
  if (r.f_facet.size() != r.f_nonface.size()) {
    r.failure_reason = FailureReason::DimensionMismatch;
    return r;
  }
  TypeVector t(r.f_facet.size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = r.f_nonface.counts[i] - r.f_facet.counts[i];
  r.is_quasi_f = true;
  r.type = std::move(t);
  return r;
}

// ---------------------------------------------------------------------------
// Shadows and perfect sets.

namespace detail {

inline int uniform_degree(std::span<const VertexSet> family) {
  if (family.empty()) throw Error(Errc::EmptyInput, "shadow of an empty family");
  const int d = family.front().size();
  for (VertexSet f : family) {
    if (f.size() != d) throw Error(Errc::MixedDegrees, "family mixes degrees");
  }
  return d;
}

inline void check_ambient(std::span<const VertexSet> family, int n) {
  if (n < 1 || n > kMaxVertices) throw Error(Errc::TooLarge, "ambient outside vertex limit");
  for (VertexSet f : family) {
    if (!f.subset_of(VertexSet::range(n))) {
      throw Error(Errc::AmbientTooSmall, to_string(f) + " outside 1.." + std::to_string(n));
    }
  }
}

}  // namespace detail

/// Degree-(d+1) sets obtained by adding one variable from {1..n}.
inline std::vector<VertexSet> upper_shadow(std::span<const VertexSet> family, int n) {
  detail::uniform_degree(family);
  detail::check_ambient(family, n);
  std::vector<VertexSet> out;
  for (VertexSet g : family) {
    for (int v = 1; v <= n; ++v) {
      if (!g.contains(v)) out.push_back(g.with(v));
    }
  }
  sort_faces(out);
  return out;
}

/// Degree-(d-1) sets obtained by removing one variable.
inline std::vector<VertexSet> lower_shadow(std::span<const VertexSet> family) {
  detail::uniform_degree(family);
  std::vector<VertexSet> out;
  for (VertexSet g : family) {
    for (int v : g.labels()) out.push_back(g.without(v));
  }
  sort_faces(out);
  return out;
}

inline bool is_upper_perfect(std::span<const VertexSet> family, int n) {
  const int d = detail::uniform_degree(family);
  return static_cast<std::int64_t>(upper_shadow(family, n).size()) == binomial(n, d + 1);
}

inline bool is_lower_perfect(std::span<const VertexSet> family, int n) {
  const int d = detail::uniform_degree(family);
  detail::check_ambient(family, n);
  return static_cast<std::int64_t>(lower_shadow(family).size()) == binomial(n, d - 1);
}

inline bool is_perfect(std::span<const VertexSet> family, int n) {
  return is_upper_perfect(family, n) && is_lower_perfect(family, n);
}

/// Closed form of the smallest perfect set of degree-2 monomials, valid
/// for n >= 4: t^2 - t when n = 2t, t^2 when n = 2t + 1.
inline std::int64_t perfect_number_d2(int n) {
  if (n < 4) {
    throw Error(Errc::OutOfValidatedRange, "closed form only stated for n >= 4");
  }
  const std::int64_t t = n / 2;
  return n % 2 == 0 ? t * t - t : t * t;
}

inline constexpr int kPerfectSearchMaxN = 7;
inline constexpr int kPerfectSearchMaxD = 3;

namespace detail {

// Exact minimum cover: choose d-subsets so that every (d+1)-subset contains
// one and every (d-1)-subset lies in one. Iterative deepening over the
// budget, branching on the uncovered target with fewest candidates.
class PerfectSetSearch {
public:
  PerfectSetSearch(int n, int d) : n_(n), d_(d) {
    cands_ = level_masks(n, d);
    for (Mask m : level_masks(n, d + 1)) targets_.push_back(m);
    for (Mask m : level_masks(n, d - 1)) targets_.push_back(m);
    upper_count_ = static_cast<int>(level_masks(n, d + 1).size());
    covered_.assign(targets_.size(), 0);
    covers_.resize(cands_.size());
    covered_by_.resize(targets_.size());
    for (std::size_t c = 0; c < cands_.size(); ++c) {
      for (std::size_t t = 0; t < targets_.size(); ++t) {
        const bool hit = static_cast<int>(t) < upper_count_ ? (cands_[c] & ~targets_[t]) == 0
                                                            : (targets_[t] & ~cands_[c]) == 0;
        if (hit) {
          covers_[c].push_back(static_cast<int>(t));
          covered_by_[t].push_back(static_cast<int>(c));
        }
      }
    }
  }

  std::int64_t run() {
    for (int budget = 0; budget <= static_cast<int>(cands_.size()); ++budget) {
      if (dfs(budget)) return budget;
    }
    return static_cast<std::int64_t>(cands_.size());
  }

private:
  bool dfs(int budget) {
    int pick = -1;
    std::size_t fewest = SIZE_MAX;
    int uncovered_upper = 0, uncovered_lower = 0;
    for (std::size_t t = 0; t < targets_.size(); ++t) {
      if (covered_[t]) continue;
      (static_cast<int>(t) < upper_count_ ? uncovered_upper : uncovered_lower)++;
      if (covered_by_[t].size() < fewest) {
        fewest = covered_by_[t].size();
        pick = static_cast<int>(t);
      }
    }
    if (pick < 0) return true;
    // A d-set covers n-d upper targets and d lower targets.
    const int need_upper = (uncovered_upper + (n_ - d_) - 1) / std::max(1, n_ - d_);
    const int need_lower = (uncovered_lower + d_ - 1) / std::max(1, d_);
    if (std::max(need_upper, need_lower) > budget) return false;
    for (int c : covered_by_[pick]) {
      for (int t : covers_[c]) ++covered_[t];
      const bool ok = dfs(budget - 1);
      for (int t : covers_[c]) --covered_[t];
      if (ok) return true;
    }
    return false;
  }

  int n_, d_;
  int upper_count_ = 0;
  std::vector<Mask> cands_;
  std::vector<Mask> targets_;
  std::vector<int> covered_;
  std::vector<std::vector<int>> covers_;
  std::vector<std::vector<int>> covered_by_;
};

}  // namespace detail

/// Smallest perfect family of degree-d subsets of {1..n}, by exhaustive
/// search. Limited to n <= 7, d <= 3.
inline std::int64_t perfect_number_bruteforce(int n, int d) {
  if (n < 2 || n > kPerfectSearchMaxN || d < 1 || d > kPerfectSearchMaxD || d >= n) {
    throw Error(Errc::OutOfValidatedRange,
                "exhaustive perfect-set search limited to 1 <= d < n <= 7, d <= 3");
  }
  return detail::PerfectSetSearch(n, d).run();
}

struct TypeBounds {
  std::int64_t lower;
  std::int64_t upper;
};

/// Range of b for a degree-2 quasi f-ideal of type (0, b) on n >= 4
/// variables: [-C(n,2) + 2, C(n,2) - 2 N(n,2)].
inline TypeBounds type_bounds_d2(int n) {
  if (n < 4) throw Error(Errc::OutOfValidatedRange, "bounds only stated for n >= 4");
  const std::int64_t pairs = binomial(n, 2);
  return {-pairs + 2, pairs - 2 * perfect_number_d2(n)};
}

}  // namespace qf
