#include <doctest.h>

#include <cmath>

#include "vrda/rng.hpp"
#include "vrda/sparse_vector.hpp"

using vrda::Rng;
using vrda::SparseVector;

namespace {

SparseVector random_vector(Rng& rng, std::size_t dim, std::size_t max_nnz) {
  SparseVector v(dim);
  std::size_t n = rng.bounded(max_nnz + 1);
  for (std::size_t j = 0; j < n; ++j)
    v.set(rng.bounded(dim), rng.uniform(-5.0, 5.0));
  return v;
}

}  // namespace

TEST_CASE("dot: overlapping, empty, disjoint supports") {
  SparseVector a(3, {{0, 1.0}, {2, 3.0}});
  SparseVector b(3, {{2, 2.0}});
  CHECK(a.dot(b) == 6.0);

  SparseVector empty(3);
  CHECK(empty.dot(a) == 0.0);
  CHECK(a.dot(empty) == 0.0);

  SparseVector c(3, {{0, 1.0}});
  SparseVector d(3, {{1, 1.0}});
  CHECK(c.dot(d) == 0.0);
}

TEST_CASE("dot: dimension mismatch throws") {
  SparseVector a(3, {{0, 1.0}});
  SparseVector b(4, {{0, 1.0}});
  CHECK_THROWS_AS(a.dot(b), std::invalid_argument);
}

TEST_CASE("add_scaled: cancellation, merge, empty base") {
  SparseVector a(2, {{0, 1.0}});
  SparseVector b(2, {{0, -1.0}});
  SparseVector cancelled = a.add_scaled(b, 1.0);
  CHECK(cancelled.nnz() == 0);

  SparseVector c(2, {{1, 2.0}});
  SparseVector merged = a.add_scaled(c, 0.5);
  CHECK(merged == SparseVector(2, {{0, 1.0}, {1, 1.0}}));

  SparseVector empty(4);
  SparseVector d(4, {{3, 2.0}});
  CHECK(empty.add_scaled(d, -1.0) == SparseVector(4, {{3, -2.0}}));
}

TEST_CASE("l2_norm and nnz") {
  SparseVector a(2, {{0, 3.0}, {1, 4.0}});
  CHECK(a.l2_norm() == 5.0);
  CHECK(a.nnz() == 2);

  SparseVector empty(2);
  CHECK(empty.l2_norm() == 0.0);
  CHECK(empty.nnz() == 0);

  SparseVector b(6, {{5, -2.0}});
  CHECK(b.l2_norm() == 2.0);
  CHECK(b.nnz() == 1);
}

TEST_CASE("l1_norm") {
  CHECK(SparseVector(3, {{0, 1.0}, {1, -2.0}}).l1_norm() == 3.0);
  CHECK(SparseVector(3).l1_norm() == 0.0);
}

TEST_CASE("construction canonicalizes") {
  SparseVector v(5, {{1, 2.0}, {1, 3.0}, {0, 0.0}, {4, 1.0}});
  CHECK(v.nnz() == 2);
  CHECK(v.at(1) == 5.0);
  CHECK(v.at(4) == 1.0);
  CHECK(v.at(0) == 0.0);

  SparseVector summed_to_zero(2, {{0, 1.0}, {0, -1.0}});
  CHECK(summed_to_zero.nnz() == 0);

  CHECK_THROWS_AS(SparseVector(2, {{2, 1.0}}), std::invalid_argument);
}

TEST_CASE("set erases on exact zero") {
  SparseVector v(3);
  v.set(1, 2.5);
  CHECK(v.nnz() == 1);
  v.set(1, 0.0);
  CHECK(v.nnz() == 0);
  CHECK_THROWS_AS(v.set(3, 1.0), std::invalid_argument);
}

TEST_CASE("scaled: zero alpha empties, scaling is exact") {
  SparseVector v(3, {{0, 2.0}, {2, -4.0}});
  CHECK(v.scaled(0.0).nnz() == 0);
  CHECK(v.scaled(-0.5) == SparseVector(3, {{0, -1.0}, {2, 2.0}}));
}

TEST_CASE("property: dot is symmetric and bilinear") {
  Rng rng(101);
  for (int trial = 0; trial < 200; ++trial) {
    SparseVector a = random_vector(rng, 30, 10);
    SparseVector b = random_vector(rng, 30, 10);
    SparseVector c = random_vector(rng, 30, 10);
    double alpha = rng.uniform(-3.0, 3.0);

    CHECK(a.dot(b) == b.dot(a));
    double lhs = a.add_scaled(b, alpha).dot(c);
    double rhs = a.dot(c) + alpha * b.dot(c);
    CHECK(std::fabs(lhs - rhs) <=
          1e-12 * std::max(1.0, std::max(std::fabs(lhs), std::fabs(rhs))));
  }
}

TEST_CASE("property: l2_norm squared equals self dot") {
  Rng rng(102);
  for (int trial = 0; trial < 200; ++trial) {
    SparseVector a = random_vector(rng, 30, 12);
    double n2 = a.l2_norm() * a.l2_norm();
    double dd = a.dot(a);
    CHECK(std::fabs(n2 - dd) <= 1e-12 * std::max(1.0, dd));
  }
}

TEST_CASE("property: add_scaled output is canonical") {
  Rng rng(103);
  for (int trial = 0; trial < 200; ++trial) {
    SparseVector a = random_vector(rng, 20, 8);
    SparseVector out = a.add_scaled(a, -1.0);
    CHECK(out.nnz() == 0);
    SparseVector b = random_vector(rng, 20, 8);
    SparseVector sum = a.add_scaled(b, rng.uniform(-2.0, 2.0));
    for (const auto& [idx, val] : sum.entries()) {
      CHECK(val != 0.0);
      CHECK(idx < 20);
    }
  }
}
