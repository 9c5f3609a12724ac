#include <cstdlib>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qf/complex.hpp"

using qf::VertexSet;

namespace {

std::vector<qf::Mask> masks(std::span<const VertexSet> sets) {
  std::vector<qf::Mask> out;
  for (auto s : sets) out.push_back(s.mask());
  return out;
}

qf::SimplicialComplex random_complex(int n, std::mt19937& rng) {
  std::uniform_int_distribution<qf::Mask> pick(1, (qf::Mask{1} << n) - 1);
  std::vector<VertexSet> facets;
  const int count = 1 + static_cast<int>(rng() % 6);
  for (int i = 0; i < count; ++i) facets.push_back(VertexSet::from_mask(pick(rng)));
  return qf::build_complex(facets);
}

}  // namespace

TEST(Complex, KeepsMaximalFacetsInOrder) {
  const auto c = qf::build_complex({{1, 2, 3}, {1, 2}, {4}, {3, 4}, {1, 2, 3}});
  const std::vector<VertexSet> expected{{3, 4}, {1, 2, 3}};
  EXPECT_EQ(std::vector<VertexSet>(c.facets().begin(), c.facets().end()), expected);
  EXPECT_EQ(c.vertices(), (VertexSet{1, 2, 3, 4}));
  EXPECT_EQ(qf::dimension(c), 2);
  EXPECT_FALSE(qf::is_pure(c));
}

TEST(Complex, InputErrors) {
  EXPECT_ERRC(qf::build_complex({}), qf::Errc::EmptyInput);
  EXPECT_ERRC(qf::build_complex({{1, 2}, {}}), qf::Errc::EmptyFacet);
  EXPECT_ERRC(qf::build_complex({{1, 2}}, 3), qf::Errc::IsolatedVertexDeclared);
  EXPECT_ERRC(qf::build_complex({{1, 4}}, 3), qf::Errc::InvalidLabel);
  const auto c = qf::build_complex({{1, 2}});
  EXPECT_ERRC(qf::faces(c, 2), qf::Errc::DimensionOutOfRange);
  EXPECT_ERRC(qf::faces(c, -1), qf::Errc::DimensionOutOfRange);
}

TEST(Complex, FVectorMatchesSubsetEnumeration) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 8;
    const auto c = random_complex(n, rng);
    EXPECT_EQ(qf::f_vector(c).counts, oracle::f_vector(n, masks(c.facets()))) << "trial " << trial;
  }
}

TEST(Complex, FacesByDimension) {
  const auto c = qf::build_complex({{1, 2, 3}, {3, 4}});
  const std::vector<VertexSet> edges{{1, 2}, {1, 3}, {2, 3}, {3, 4}};
  EXPECT_EQ(qf::faces(c, 1), edges);
  EXPECT_EQ(qf::faces(c, 0).size(), 4u);
  EXPECT_EQ(qf::faces(c, 2), std::vector<VertexSet>{VertexSet({1, 2, 3})});
}

// f_0 counts vertices; double counting between consecutive levels bounds
// f_{i+1} by f_i.
TEST(Complex, FVectorProperties) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 7;
    const auto c = random_complex(n, rng);
    const auto f = qf::f_vector(c);
    EXPECT_EQ(f[0], c.vertices().size());
    EXPECT_EQ(static_cast<int>(f.size()), c.dimension() + 1);
    for (std::size_t i = 0; i + 1 < f.size(); ++i) {
      EXPECT_LE(f[i + 1] * static_cast<std::int64_t>(i + 2),
                f[i] * static_cast<std::int64_t>(n - static_cast<int>(i) - 1));
    }
  }
}

TEST(Complex, Connectivity) {
  EXPECT_TRUE(qf::is_connected(qf::build_complex({{1, 2}, {2, 3}, {3, 4}})));
  EXPECT_FALSE(qf::is_connected(qf::build_complex({{1, 2}, {3, 4}})));
  EXPECT_TRUE(qf::is_connected(qf::build_complex({{5}})));
  std::mt19937 rng(9);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 7;
    const auto c = random_complex(n, rng);
    EXPECT_EQ(qf::is_connected(c), oracle::connected(n, masks(c.facets()), c.vertices().mask()));
  }
}

TEST(Complex, MinimalNonfacesAgainstBruteForce) {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 7;
    const auto c = random_complex(n, rng);
    const auto faces = masks(c.facets());
    std::vector<VertexSet> expected;
    for (qf::Mask s = 1; s < (qf::Mask{1} << n); ++s) {
      auto is_face = [&](qf::Mask t) {
        return std::any_of(faces.begin(), faces.end(), [&](qf::Mask F) { return (t & ~F) == 0; });
      };
      if (is_face(s)) continue;
      bool minimal = true;
      for (int i = 0; i < n; ++i) {
        if ((s >> i & 1U) && !is_face(s & ~(qf::Mask{1} << i))) minimal = false;
      }
      if (minimal) expected.push_back(VertexSet::from_mask(s));
    }
    qf::sort_faces(expected);
    EXPECT_EQ(qf::minimal_nonfaces(c, n), expected);
  }
}

TEST(Complex, MinimalNonfacesRelativeToOwnVertices) {
  const auto c = qf::build_complex({{1, 3}, {3, 5}});
  const std::vector<VertexSet> own{{1, 5}};
  EXPECT_EQ(qf::minimal_nonfaces(c), own);
  const std::vector<VertexSet> ambient{{2}, {4}, {1, 5}};
  EXPECT_EQ(qf::minimal_nonfaces(c, 5), ambient);
  EXPECT_ERRC(qf::minimal_nonfaces(c, 4), qf::Errc::AmbientTooSmall);
}

TEST(Complex, EnumerationCapFromEnvironment) {
  ::unsetenv("QF_CAP");
  EXPECT_EQ(qf::enumeration_cap(), 8);
  ::setenv("QF_CAP", "6", 1);
  EXPECT_EQ(qf::enumeration_cap(), 6);
  ::setenv("QF_CAP", "40", 1);
  EXPECT_EQ(qf::enumeration_cap(), 10);
  ::setenv("QF_CAP", "junk", 1);
  EXPECT_EQ(qf::enumeration_cap(), 8);
  ::unsetenv("QF_CAP");
}
