#include <doctest.h>

#include "hmds/listdec.hpp"
#include "hmds/random.hpp"
#include "hmds/rs.hpp"

using namespace hmds;
using gf::Field;
using listdec::Word;
using linalg::Matrix;

namespace {

Matrix random_full_rank(const Field& f, std::size_t k, std::size_t n, SplitMix64& rng) {
  while (true) {
    Matrix m(f, k, n);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = static_cast<gf::Elem>(rng.below(f.q()));
    if (linalg::rank(m) == k) return m;
  }
}

// Every word of F_q^n.
std::vector<Word> all_words(const Field& f, std::size_t n) {
  std::vector<Word> out;
  Word w(n, 0);
  while (true) {
    out.push_back(w);
    std::size_t i = 0;
    while (i < n && ++w[i] == f.q()) w[i++] = 0;
    if (i == n) break;
  }
  return out;
}

}  // namespace

TEST_CASE("optimal centre examples") {
  const std::vector<Word> same = {{1, 2, 0}, {1, 2, 0}};
  CHECK(listdec::optimal_center(same) == Word{1, 2, 0});
  CHECK(listdec::total_distance(same, listdec::optimal_center(same)) == 0);
  const std::vector<Word> two = {{0, 1, 1, 0}, {1, 1, 0, 0}};
  CHECK(listdec::total_distance(two, listdec::optimal_center(two)) == listdec::hamming_distance(two[0], two[1]));
  const std::vector<Word> three = {{0}, {0}, {1}};
  CHECK(listdec::optimal_center(three) == Word{0});
  CHECK_THROWS_AS(listdec::optimal_center(std::vector<Word>{}), std::invalid_argument);
}

TEST_CASE("plurality centre is optimal over every centre") {
  SplitMix64 rng(1);
  for (std::uint64_t q : {2, 3}) {
    const auto f = Field::of_order(q);
    for (std::size_t n = 2; n <= 5; ++n) {
      const auto space = all_words(f, n);
      for (int t = 0; t < 15; ++t) {
        std::vector<Word> words;
        const std::size_t m = 2 + rng.below(3);
        for (std::size_t i = 0; i < m; ++i) words.push_back(space[rng.below(space.size())]);
        std::size_t best = ~std::size_t{0};
        for (const auto& y : space) best = std::min(best, listdec::total_distance(words, y));
        REQUIRE(listdec::total_distance(words, listdec::optimal_center(words)) == best);
      }
    }
  }
}

TEST_CASE("translation reduction keeps the minimum total weight") {
  SplitMix64 rng(2);
  for (std::uint64_t q : {2, 3, 4, 5}) {
    const auto f = Field::of_order(q);
    for (std::size_t n = 3; n <= 5; ++n)
      for (std::size_t k = 1; k <= 2; ++k) {
        const auto g = random_full_rank(f, k, n, rng);
        const auto book = listdec::codewords(g);
        for (int L = 1; L <= 2; ++L) {
          if (q == 5 && k == 2 && L == 2) continue;  // keeps the unreduced search small
          CHECK(listdec::min_total_weight(book, L, true) == listdec::min_total_weight(book, L, false));
        }
      }
  }
}

TEST_CASE("budget search matches exhaustive minimum") {
  SplitMix64 rng(3);
  for (std::uint64_t q : {3, 4, 5}) {
    const auto f = Field::of_order(q);
    for (int t = 0; t < 10; ++t) {
      const std::size_t n = 4 + rng.below(2), k = 1 + rng.below(2);
      const auto g = random_full_rank(f, k, n, rng);
      const auto book = listdec::codewords(g);
      for (int L = 1; L <= 2; ++L) {
        const auto min = *listdec::min_total_weight(book, L, true);
        for (std::uint64_t budget = 0; budget <= n * 2; ++budget) {
          const auto r = listdec::check_budget(g, L, budget);
          REQUIRE(r.report.holds == (budget < min));
          if (r.witness) {
            CHECK(r.witness->total_weight <= budget);
            CHECK(r.witness->codewords.size() == static_cast<std::size_t>(L) + 1);
          }
        }
      }
    }
  }
}

TEST_CASE("LD-MDS(1) is the MDS property") {
  SplitMix64 rng(4);
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8}) {
    const auto f = Field::of_order(q);
    for (std::size_t n = 2; n <= 6; ++n)
      for (std::size_t k = 1; k <= std::min<std::size_t>(3, n); ++k)
        for (int t = 0; t < 3; ++t) {
          const auto g = random_full_rank(f, k, n, rng);
          REQUIRE(listdec::is_ld_mds(g, 1).report.holds == verifier::is_mds(g).holds);
        }
  }
}

TEST_CASE("list size must stay below q") {
  const auto f = Field::make(3);
  const auto g = Matrix::from_rows(f, {{1, 1, 1}});
  CHECK_NOTHROW(listdec::is_ld_mds(g, 2));
  CHECK_THROWS_AS(listdec::is_ld_mds(g, 3), std::invalid_argument);
}

TEST_CASE("zero-dimension and full-space edges") {
  const auto f = Field::make(5);
  const Matrix empty(f, 0, 4);
  CHECK(listdec::codewords(empty).size() == 1);
  CHECK(listdec::is_ld_mds(empty, 2).report.holds);
  // n = k: budget 0, and distinct codewords cannot share a centre at cost 0.
  CHECK(listdec::is_ld_mds(Matrix::identity(f, 2), 1).report.holds);
  CHECK(listdec::is_ld_mds(Matrix::identity(f, 2), 3).report.holds);
}

TEST_CASE("size refusal") {
  const auto f = Field::of_order(256);
  SplitMix64 rng(5);
  const auto g = random_full_rank(f, 4, 6, rng);
  try {
    listdec::codewords(g);
    FAIL("expected a refusal");
  } catch (const listdec::CodeTooLarge& e) {
    CHECK(e.estimate() == std::uint64_t{1} << 32);
  }
}

TEST_CASE("average radius implies a small list in every sampled ball") {
  SplitMix64 rng(6);
  int instances = 0;
  for (std::uint64_t q : {5, 7}) {
    const auto f = Field::of_order(q);
    for (int t = 0; t < 8; ++t) {
      const int n = 5, k = 2;
      std::vector<gf::Elem> pts;
      while (static_cast<int>(pts.size()) < n) {
        auto x = static_cast<gf::Elem>(rng.below(q));
        if (std::find(pts.begin(), pts.end(), x) == pts.end()) pts.push_back(x);
      }
      const auto g = rs::vandermonde(rs::RSCode(f, pts, k));
      const auto book = listdec::codewords(g);
      for (int L = 1; L <= 3; ++L) {
        if (!listdec::is_ld_mds(g, L).report.holds) continue;
        ++instances;
        // rho n = L (n - k) / (L + 1).
        const std::size_t radius = static_cast<std::size_t>(L * (n - k) / (L + 1));
        for (int s = 0; s < 200; ++s) {
          Word y(n);
          for (auto& x : y) x = static_cast<gf::Elem>(rng.below(q));
          CHECK(listdec::ball_count(book, y, radius) <= static_cast<std::size_t>(L));
        }
      }
    }
  }
  CHECK(instances > 0);
}

TEST_CASE("real-valued radius query") {
  const auto f = Field::make(5);
  const auto g = rs::vandermonde(rs::RSCode(f, {0, 1, 2, 3, 4}, 2));
  // rho = (L/(L+1))(1 - k/n) reproduces the LD-MDS budget.
  for (int L = 1; L <= 3; ++L) {
    const auto a = listdec::check_average_radius(g, L, static_cast<std::uint64_t>(L) * 3, (L + 1) * 5);
    CHECK(a.report.holds == listdec::is_ld_mds(g, L).report.holds);
  }
  CHECK(listdec::singleton_exponent(5, 1, 3, 10) == 2);
}

TEST_CASE("duality on a known code") {
  const auto bad = rs::vandermonde(rs::RSCode(Field::make(7), {0, 1, 2, 3, 4, 5}, 3));
  const auto r = listdec::duality_check(bad, 2);
  CHECK(r.holds);
  CHECK(r.notes.front() == "MDS(3): fails");
  const auto nonmds = Matrix::from_rows(Field::make(7), {{1, 0, 1, 1}, {0, 1, 0, 1}});
  const auto d = listdec::duality_check(nonmds, 1);
  CHECK(d.holds);
  CHECK(d.notes.front() == "MDS(2): fails");
}
