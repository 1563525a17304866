#include <doctest.h>

#include "hmds/linalg.hpp"
#include "hmds/random.hpp"
#include "oracles.hpp"

using namespace hmds;
using hmds::gf::Field;
using linalg::Matrix;

namespace {

Matrix random_matrix(const Field& f, std::size_t r, std::size_t c, SplitMix64& rng, int zero_bias = 0) {
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      m(i, j) = rng.below(4) < static_cast<unsigned>(zero_bias) ? 0 : static_cast<gf::Elem>(rng.below(f.q()));
  return m;
}

}  // namespace

TEST_CASE("determinant examples") {
  const auto f5 = Field::make(5);
  CHECK(linalg::det(Matrix::from_rows(f5, {{1, 1}, {2, 3}})) == 1);
  CHECK(linalg::det(Matrix::identity(f5, 4)) == 1);
  CHECK(linalg::det(Matrix::from_rows(f5, {{1, 2}, {2, 4}})) == 0);
  CHECK_THROWS_AS(linalg::det(Matrix(f5, 2, 3)), std::invalid_argument);
  // Row swap flips the sign.
  CHECK(linalg::det(Matrix::from_rows(f5, {{0, 1}, {1, 0}})) == 4);
}

TEST_CASE("determinant and rank agree with brute force") {
  SplitMix64 rng(11);
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
    const auto f = Field::of_order(q);
    CAPTURE(q);
    for (int t = 0; t < 60; ++t) {
      const std::size_t n = 1 + rng.below(4);
      const auto m = random_matrix(f, n, n, rng, t % 3);
      REQUIRE(linalg::det(m) == oracle::leibniz_det(m));
      const auto r = random_matrix(f, 1 + rng.below(3), 1 + rng.below(4), rng, t % 3);
      REQUIRE(linalg::rank(r) == oracle::brute_rank(r));
    }
  }
}

TEST_CASE("determinant is multiplicative") {
  SplitMix64 rng(3);
  const auto f = Field::of_order(16);
  for (int t = 0; t < 50; ++t) {
    const auto a = random_matrix(f, 4, 4, rng);
    const auto b = random_matrix(f, 4, 4, rng);
    CHECK(linalg::det(a * b) == f.mul(linalg::det(a), linalg::det(b)));
  }
}

TEST_CASE("nullspace and dual") {
  SplitMix64 rng(7);
  const auto f = Field::of_order(7);
  for (int t = 0; t < 50; ++t) {
    const auto g = random_matrix(f, 1 + rng.below(3), 5, rng, t % 2);
    const auto ns = linalg::nullspace(g);
    CHECK(ns.rows() + linalg::rank(g) == g.cols());
    const auto prod = g * ns.transpose();
    for (auto e : prod.entries()) CHECK(e == 0);
    if (linalg::rank(g) == g.rows()) {
      const auto h = linalg::dual(g);
      CHECK(h.rows() == g.cols() - g.rows());
      CHECK(linalg::rank(h) == h.rows());
    } else {
      CHECK_THROWS_AS(linalg::dual(g), std::invalid_argument);
    }
  }
}

TEST_CASE("rref has unit pivots and preserves the row space") {
  SplitMix64 rng(9);
  const auto f = Field::of_order(9);
  for (int t = 0; t < 30; ++t) {
    const auto m = random_matrix(f, 3, 4, rng, 1);
    const auto [r, pivots] = linalg::rref(m);
    for (std::size_t i = 0; i < pivots.size(); ++i) CHECK(r(i, pivots[i]) == 1);
    CHECK(oracle::span_vectors(r.transpose(), 0b111) == oracle::span_vectors(m.transpose(), 0b111));
  }
}

TEST_CASE("intersection dimensions agree with vector counting") {
  SplitMix64 rng(21);
  for (std::uint64_t q : {2, 3, 4, 5}) {
    const auto f = Field::of_order(q);
    CAPTURE(q);
    for (int t = 0; t < 80; ++t) {
      const std::size_t k = 2 + rng.below(2), n = 4 + rng.below(2);
      const auto v = random_matrix(f, k, n, rng, t % 3);
      std::vector<SubsetMask> sets;
      const int ell = 1 + static_cast<int>(rng.below(3));
      for (int i = 0; i < ell; ++i) sets.push_back(rng.below(std::uint64_t{1} << n));
      const SubsetCollection c(static_cast<int>(n), sets);
      REQUIRE(linalg::intersect_dim(v, c) == oracle::brute_intersect_dim(v, sets));
    }
  }
}

TEST_CASE("subspace membership") {
  const auto f = Field::make(5);
  const auto v = Matrix::from_rows(f, {{1, 0, 1}, {0, 1, 1}});
  const auto s = linalg::span(v, 0b011);
  CHECK(s.dim() == 2);
  CHECK(s.contains(std::vector<gf::Elem>{1, 1}));
  CHECK(linalg::span(v, 0).dim() == 0);
  const auto line = linalg::span(v, 0b100);
  CHECK(line.contains(std::vector<gf::Elem>{2, 2}));
  CHECK_FALSE(line.contains(std::vector<gf::Elem>{1, 2}));
  CHECK(linalg::intersect(line, linalg::span(v, 0b001)).dim() == 0);
}

TEST_CASE("block matrix layout") {
  const auto f = Field::make(7);
  const auto v = Matrix::from_rows(f, {{1, 1, 1, 1}, {0, 1, 2, 3}});
  const std::vector<SubsetMask> sets = {0b0001, 0b0010};
  const auto b = linalg::block_matrix(v, sets);
  CHECK(b.rows() == 4);
  CHECK(b.cols() == 4);
  CHECK(b.to_rows() == std::vector<std::vector<std::uint64_t>>{{1, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 1}, {0, 1, 0, 1}});
  const std::vector<SubsetMask> bad = {0b0011, 0b0100};
  CHECK_THROWS_AS(linalg::block_matrix(v, bad), std::invalid_argument);
}

TEST_CASE("matrix construction checks") {
  const auto f = Field::make(3);
  CHECK_THROWS_AS(Matrix::from_rows(f, {{1, 2}, {1}}), std::invalid_argument);
  CHECK_THROWS_AS(Matrix::from_rows(f, {{3}}), std::out_of_range);
  const auto m = Matrix::from_rows(f, {{1, 2, 0}, {0, 1, 2}});
  CHECK(m.transpose().transpose() == m);
  const std::vector<std::size_t> idx = {2, 0};
  CHECK(m.columns(idx).to_rows() == std::vector<std::vector<std::uint64_t>>{{0, 1}, {2, 0}});
}
