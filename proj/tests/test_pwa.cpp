#include <random>
#include <set>

#include "doctest.h"
#include "mpl/error.hpp"
#include "mpl/pwa.hpp"
#include "support.hpp"

using namespace mpl;
using mpl::testing::worked_matrix;

namespace {

std::set<FiniteCoefficient> coefficients(const PwaSystem& p) {
  std::set<FiniteCoefficient> s;
  for (const auto& r : p.regions()) s.insert(r.coefficient);
  return s;
}

std::size_t count_members(const PwaSystem& p, const std::vector<double>& x) {
  std::size_t hits = 0;
  for (const auto& r : p.regions()) hits += contains_point(r.zone, x);
  return hits;
}

// True if the zone pins some difference x_i - x_j to a single value.
bool has_equality(const Dbm& d) {
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = 0; j < d.size(); ++j)
      if (i != j && d.bound(i, j).is_finite() && d.bound(j, i).is_finite() &&
          d.bound(i, j).value() + d.bound(j, i).value() == 0)
        return true;
  return false;
}

}  // namespace

TEST_CASE("region zones") {
  const Matrix aug = augment_zero(worked_matrix());
  const Dbm r1 = canonical_form(region_zone(aug, with_dummy({2, 1, 1})));
  CHECK(r1.bound(1, 2) == Scalar{1});
  CHECK(r1.bound(1, 3) == Scalar{3});
  CHECK(r1.bound(2, 3) == Scalar{2});
  CHECK(r1.bound(2, 1) == eps);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (r1.bound(i, j).is_finite()) CHECK_FALSE(r1.is_strict(i, j));

  CHECK(is_empty(region_zone(aug, with_dummy({2, 3, 1}))));
  CHECK(canonical_form(region_zone(augment_zero(Matrix{{5}}), with_dummy({1}))) == Dbm::full_space(1));
  CHECK_THROWS_AS(region_zone(aug, with_dummy({1, 1, 1})), InvalidCoefficientError);
  CHECK_THROWS_AS(region_zone(worked_matrix(), FiniteCoefficient{{1, 0, 0}}), InvalidCoefficientError);
}

TEST_CASE("region zones equal the direct double intersection") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 1 + rng() % 6;
    const Matrix aug = augment_zero(testing::random_system(rng, n, 1 + rng() % std::min<std::size_t>(n, 3)));
    for (const auto& g : enumerate_finite_coefficients(aug)) {
      const Dbm z = region_zone(aug, g);
      CHECK(z.bounds() == mat_oplus(row_definite(aug, g), Matrix::identity(n + 1)));
      CHECK(z.bounds() == testing::region_by_intersection(aug, g));
    }
  }
}

TEST_CASE("sign rule") {
  const Matrix aug = augment_zero(worked_matrix());
  const Dbm raw = region_zone(aug, with_dummy({2, 1, 2}));
  const Dbm s = sign_rule(raw);
  CHECK(raw.bound(2, 1) == Scalar{-1});
  CHECK(s.is_strict(2, 1));
  for (std::size_t i = 0; i < 4; ++i) CHECK(s.sign(i, i) == 1);

  const Constraint zeros[] = {{1, 2, 0, false}, {2, 1, 0, false}, {1, 0, 3, false}, {0, 2, -3, false}};
  const Dbm z = sign_rule(Dbm::from_constraints(2, zeros));
  CHECK_FALSE(z.is_strict(1, 2));
  CHECK(z.is_strict(2, 1));
  CHECK_FALSE(z.is_strict(1, 0));
  CHECK(z.is_strict(0, 2));
  CHECK(z.bound(2, 0) == eps);
  CHECK(z.sign(2, 0) == 0);
}

TEST_CASE("the worked example partitions into the seven listed states") {
  const PwaSystem p = generate_partition(worked_matrix());
  CHECK(p.partitioned());
  CHECK(p.dim() == 3);
  const auto expected = testing::worked_states();
  REQUIRE(p.size() == expected.size());
  for (std::size_t k = 0; k < expected.size(); ++k) {
    INFO("state r" << k + 1);
    CHECK(p[k].variable_coefficient() == expected[k].first);
    CHECK(p[k].zone == expected[k].second);
    CHECK(p[k].zone.is_canonical());
    CHECK(p[k].dynamics == region_matrix(augment_zero(worked_matrix()), p[k].coefficient));
  }
  CHECK_FALSE(p.find(with_dummy({2, 3, 1})));
  CHECK(p.find(with_dummy({3, 1, 2})) == 4u);

  const std::vector<double> origin{0, 0, 0};
  CHECK(count_members(p, origin) == 1);
  CHECK(locate(origin, p) == 4);
  const std::vector<double> x{10, 0, 0};
  CHECK(locate(x, p) == 3);
}

TEST_CASE("generate_pwa") {
  const PwaSystem p = generate_pwa(worked_matrix());
  CHECK_FALSE(p.partitioned());
  CHECK(coefficients(p) == coefficients(generate_partition(worked_matrix())));
  for (const auto& r : p.regions()) {
    CHECK_FALSE(is_empty(r.zone));
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        if (r.zone.bound(i, j).is_finite()) CHECK_FALSE(r.zone.is_strict(i, j));
  }

  const PwaSystem diag = generate_pwa(Matrix{{2, eps}, {eps, 3}});
  REQUIRE(diag.size() == 1);
  CHECK(diag[0].zone == Dbm::full_space(2));
  CHECK(generate_partition(Matrix{{2, eps}, {eps, 3}})[0].zone == Dbm::full_space(2));

  CHECK_THROWS_AS(generate_pwa(Matrix{{1, eps}, {eps, eps}}), NotRowFiniteError);
  CHECK_THROWS_AS(generate_partition(Matrix{{eps}}), NotRowFiniteError);
  const std::vector<double> origin{0, 0, 0};
  CHECK_THROWS_AS(locate(origin, p), ContractError);
}

TEST_CASE("adjacency") {
  const PwaSystem p = generate_partition(worked_matrix());
  CHECK(are_adjacent(with_dummy({2, 1, 2}), with_dummy({2, 1, 1}), p));
  CHECK_FALSE(are_adjacent(with_dummy({2, 1, 1}), with_dummy({2, 1, 2}), p));
  CHECK_FALSE(are_adjacent(with_dummy({2, 1, 1}), with_dummy({2, 1, 1}), p));
  CHECK_FALSE(are_adjacent(with_dummy({3, 3, 2}), with_dummy({2, 1, 1}), p));
  CHECK_THROWS_AS(are_adjacent(with_dummy({2, 3, 1}), with_dummy({2, 1, 1}), p), InvalidCoefficientError);
}

TEST_CASE("partitions are disjoint and cover the space") {
  std::mt19937_64 rng(32);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 1 + rng() % 6;
    const Matrix a = testing::random_system(rng, n, 1 + rng() % std::min<std::size_t>(n, 3));
    const PwaSystem p = generate_partition(a);
    std::size_t bad = 0;
    // Integer points hit region boundaries often since the data is integral.
    for (int k = 0; k < 1000; ++k) {
      const auto x = testing::random_point(rng, n, 50);
      bad += count_members(p, x) != 1;
    }
    for (const auto& r : p.regions()) {
      for (int k = 0; k < 30; ++k) bad += count_members(p, testing::sample_point(rng, r.zone)) != 1;
    }
    CHECK(bad == 0);
  }
}

TEST_CASE("both generators find the same regions up to lower-dimensional pieces") {
  std::mt19937_64 rng(33);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng() % 6;
    const Matrix a = testing::random_system(rng, n, 1 + rng() % std::min<std::size_t>(n, 3), 1, 10);
    const PwaSystem closed = generate_pwa(a);
    const auto strict = coefficients(generate_partition(a));
    for (const auto& g : strict) CHECK(closed.find(g));
    for (const auto& r : closed.regions()) {
      // A closed region dropped by the sign rule has no interior.
      if (!strict.count(r.coefficient)) CHECK(has_equality(r.zone));
    }
  }
}

TEST_CASE("inside a region the system acts by its region matrix") {
  std::mt19937_64 rng(34);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + rng() % 6;
    const Matrix a = testing::random_system(rng, n, 2 <= n ? 2 : 1);
    const PwaSystem p = generate_partition(a);
    for (const auto& r : p.regions()) {
      Matrix ag(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) ag(i, j) = r.dynamics(i + 1, j + 1);
      for (int k = 0; k < 20; ++k) {
        const auto x = testing::sample_point(rng, r.zone);
        CHECK(testing::simulate(a, x) == testing::simulate(ag, x));
      }
    }
  }
}

TEST_CASE("parallel generation is deterministic") {
  std::mt19937_64 rng(35);
  const Matrix a = testing::random_system(rng, 9, 2);
  const PwaSystem one = generate_partition(a, 1);
  const PwaSystem four = generate_partition(a, 4);
  REQUIRE(one.size() == four.size());
  for (std::size_t k = 0; k < one.size(); ++k) {
    CHECK(one[k].coefficient == four[k].coefficient);
    CHECK(one[k].zone == four[k].zone);
  }
}
