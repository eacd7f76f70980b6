#include "hassett/errors.hpp"
#include "hassett/exact_linalg.hpp"
#include "hassett/hassett.hpp"
#include "hassett/quadform.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

namespace hassett {
namespace {

using L = AmbientLattice;

IntMatrix form(std::initializer_list<std::initializer_list<long long>> rows) {
  IntMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.size()));
  Eigen::Index i = 0;
  for (const auto& r : rows) {
    Eigen::Index j = 0;
    for (long long v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

std::vector<std::vector<long long>> coords_of(const ShortVectorList& list) {
  std::vector<std::vector<long long>> out;
  for (const auto& v : list.vectors) {
    std::vector<long long> c;
    for (Eigen::Index i = 0; i < v.coords.size(); ++i) c.push_back(v.coords(i).to_int64());
    out.push_back(c);
  }
  return out;
}

TEST(ShortVectors, Examples) {
  const auto diag = short_vectors(form({{3, 0}, {0, 2}}), 2);
  ASSERT_EQ(diag.vectors.size(), 1u);
  EXPECT_EQ(coords_of(diag), (std::vector<std::vector<long long>>{{0, 1}}));
  EXPECT_EQ(diag.vectors[0].norm, Integer(2));

  // 3x^2 + 2xy + y^2 = 2x^2 + (x+y)^2 <= 2
  const auto k2 = short_vectors(k2_gram(), 2);
  EXPECT_EQ(coords_of(k2), (std::vector<std::vector<long long>>{{0, 1}, {1, -1}}));
  EXPECT_EQ(k2.vectors[0].norm, Integer(1));
  EXPECT_EQ(k2.vectors[1].norm, Integer(2));

  EXPECT_TRUE(short_vectors(pair_witness(14, 26).lattice.gram(), 2).vectors.empty());
}

TEST(ShortVectors, Errors) {
  EXPECT_THROW(short_vectors(form({{0, 1}, {1, 0}}), 2), DefinitenessError);
  EXPECT_THROW(short_vectors(form({{2}}), 0), PreconditionError);
}

TEST(ShortVectors, AgreesWithBoxSearch) {
  std::mt19937_64 rng(101);
  std::uniform_int_distribution<int> bound_dist(1, 12);
  for (int trial = 0; trial < 150; ++trial) {
    const Eigen::Index n = 1 + trial % 4;
    const auto g = oracle::random_positive_definite(rng, n, 10);
    const long long bound = bound_dist(rng);
    const auto expected = oracle::brute_force_short_vectors(g, bound);
    const auto got = short_vectors(oracle::to_int(g), bound);
    oracle::CoordSet actual;
    for (const auto& v : got.vectors) {
      std::vector<long long> c;
      for (Eigen::Index i = 0; i < n; ++i) c.push_back(v.coords(i).to_int64());
      actual[c] = v.norm.to_int64();
    }
    ASSERT_EQ(actual.size(), got.vectors.size()) << "duplicate vectors";
    ASSERT_EQ(actual, expected) << g << "\nbound " << bound;
  }
}

TEST(MinNorm, Examples) {
  EXPECT_EQ(min_norm(form({{3}})), Integer(3));
  EXPECT_EQ(min_norm(k2_gram()), Integer(1));
  EXPECT_EQ(min_norm(pair_witness(12, 18).lattice.gram()), Integer(3));
  // Off-diagonal mass pushes the minimum below every diagonal entry.
  EXPECT_EQ(min_norm(form({{5, 4}, {4, 5}})), Integer(2));
  EXPECT_THROW(min_norm(form({{1, 2}, {2, 1}})), DefinitenessError);
}

TEST(Represents, Examples) {
  EXPECT_TRUE(represents(k2_gram(), 2));
  EXPECT_TRUE(represents(k6_gram(), 2));
  EXPECT_FALSE(represents(pair_witness(12, 14).lattice.gram(), 2));
  EXPECT_FALSE(represents(form({{3}}), 2));
}

TEST(Represents, MatchesShortVectorNorms) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = oracle::to_int(oracle::random_positive_definite(rng, 1 + trial % 3, 8));
    for (int n = 1; n <= 6; ++n) {
      const auto list = short_vectors(g, n);
      const bool any = std::any_of(list.vectors.begin(), list.vectors.end(),
                                   [&](const ShortVector& v) { return v.norm == Integer(n); });
      EXPECT_EQ(represents(g, n), any);
    }
  }
}

// Some P in GL2(Z) with |p_ij| <= 3 and P^T G P == target.
bool equivalent_by_search(const IntMatrix& g, const IntMatrix& target) {
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b)
      for (int c = -3; c <= 3; ++c)
        for (int d = -3; d <= 3; ++d) {
          if (std::abs(a * d - b * c) != 1) continue;
          IntMatrix p(2, 2);
          p << a, b, c, d;
          if (IntMatrix(p.transpose() * g * p) == target) return true;
        }
  return false;
}

TEST(ReduceBinary, Examples) {
  EXPECT_EQ(reduce_binary(form({{3, 1}, {1, 1}})), form({{1, 0}, {0, 2}}));
  EXPECT_TRUE(equivalent_by_search(form({{3, 1}, {1, 1}}), form({{1, 0}, {0, 2}})));
  EXPECT_EQ(reduce_binary(form({{3, 0}, {0, 2}})), form({{2, 0}, {0, 3}}));
  EXPECT_EQ(reduce_binary(form({{2, 1}, {1, 2}})), form({{2, 1}, {1, 2}}));
  EXPECT_THROW(reduce_binary(form({{0, 1}, {1, 0}})), DefinitenessError);
  EXPECT_THROW(reduce_binary(form({{1}})), ShapeError);
}

TEST(ReduceBinary, ReducedAndInvariant) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 200; ++trial) {
    const IntMatrix g = oracle::to_int(oracle::random_positive_definite(rng, 2, 10));
    const IntMatrix r = reduce_binary(g);
    EXPECT_LE(Integer(0), r(0, 1));
    EXPECT_LE(2 * r(0, 1), r(0, 0));
    EXPECT_LE(r(0, 0), r(1, 1));
    EXPECT_EQ(det_exact(r), det_exact(g));
    EXPECT_EQ(min_norm(r), min_norm(g));
    EXPECT_EQ(reduce_binary(r), r);
  }
}

TEST(FindK2OrK6, Examples) {
  // diag(3,2) realized as <h^2, (1,-1,0)>.
  const auto k6 = sublattice_from_basis({L::h_squared(), LatticeVector(L::i3_unit(0) - L::i3_unit(1))});
  ASSERT_EQ(k6.gram(), k6_gram());
  const auto hit6 = find_k2_or_k6(k6);
  ASSERT_TRUE(hit6.has_value());
  EXPECT_EQ(hit6->kind, Obstruction::K6);

  // [[3,1],[1,1]] realized as <h^2, (1,0,0)>.
  const auto k2 = sublattice_from_basis({L::h_squared(), L::i3_unit(0)});
  ASSERT_EQ(k2.gram(), k2_gram());
  const auto hit2 = find_k2_or_k6(k2);
  ASSERT_TRUE(hit2.has_value());
  EXPECT_EQ(hit2->kind, Obstruction::K2);
  EXPECT_LE(Integer(0), hit2->gram(0, 1));

  EXPECT_FALSE(find_k2_or_k6(pair_witness(12, 18).lattice).has_value());
}

TEST(FindK2OrK6, Preconditions) {
  EXPECT_THROW(find_k2_or_k6(sublattice_from_basis({L::nu()})), PreconditionError);
  EXPECT_THROW(find_k2_or_k6(sublattice_from_basis({L::h_squared(), L::e1()})), DefinitenessError);
}

TEST(KeyObservation, ThreeConditionsAgreeOnRandomExtensions) {
  std::mt19937_64 rng(2024);
  int obstructed = 0, clean = 0;
  for (const auto& m : oracle::random_h2_extensions(rng, 120)) {
    const bool no_k = !find_k2_or_k6(m).has_value();
    const bool no_two = !represents(m.gram(), 2);
    const bool min_three = Integer(3) <= min_norm(m.gram());
    ASSERT_EQ(no_k, no_two) << m.gram();
    ASSERT_EQ(no_two, min_three) << m.gram();
    (no_k ? clean : obstructed)++;
  }
  EXPECT_GT(obstructed, 0);
  EXPECT_GT(clean, 0);
}

}  // namespace
}  // namespace hassett
