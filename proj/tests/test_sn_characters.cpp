#include <numeric>

#include "doctest.h"
#include "origami/errors.hpp"
#include "origami/sn.hpp"

using namespace origami::sn;

TEST_CASE("partition generation and conjugation") {
  CHECK(partitions(4).size() == 5);
  CHECK(partitions(6).size() == 11);
  CHECK(partitions(7).size() == 15);
  CHECK(partitions(4).front() == Partition{4});
  CHECK(partitions(4).back() == Partition{1, 1, 1, 1});
  CHECK(conjugate({3, 1}) == Partition{2, 1, 1});
  CHECK(conjugate({2, 2}) == Partition{2, 2});
  CHECK(conjugate(conjugate({4, 2, 1})) == Partition{4, 2, 1});
  CHECK(to_string({3, 1}) == "(3,1)");
}

TEST_CASE("hook length dimensions") {
  CHECK(dimension({4}) == 1);
  CHECK(dimension({3, 1}) == 3);
  CHECK(dimension({2, 2}) == 2);
  CHECK(dimension({2, 1, 1}) == 3);
  CHECK(dimension({1, 1, 1, 1}) == 1);
  CHECK(dimension({3, 2}) == 5);
  CHECK(dimension({4, 1}) == 4);
  CHECK(dimension({3, 2, 1}) == 16);
  CHECK(dimension({3, 3}) == 5);
  for (int n = 2; n <= 7; ++n) {
    long long sum = 0;
    for (const auto& p : partitions(n)) sum += dimension(p) * dimension(p);
    long long fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    CHECK(sum == fact);
  }
}

TEST_CASE("murnaghan-nakayama matches the known S4 table") {
  // classes: 1^4, (2,1,1), (2,2), (3,1), (4)
  const std::vector<Partition> cls{{1, 1, 1, 1}, {2, 1, 1}, {2, 2}, {3, 1}, {4}};
  const std::vector<Partition> irr{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
  const long long table[5][5] = {
      {1, 1, 1, 1, 1},
      {3, 1, -1, 0, -1},
      {2, 0, 2, -1, 0},
      {3, -1, -1, 0, 1},
      {1, -1, 1, 1, -1},
  };
  for (int a = 0; a < 5; ++a)
    for (int k = 0; k < 5; ++k) CHECK(character(irr[a], cls[k]) == table[a][k]);
}

TEST_CASE("identity column equals dimension") {
  for (int n = 2; n <= 7; ++n) {
    const Partition id(n, 1);
    for (const auto& p : partitions(n)) CHECK(character(p, id) == dimension(p));
  }
}

TEST_CASE("transposition values match the frobenius formula") {
  for (int n = 2; n <= 7; ++n) {
    Partition transposition{2};
    for (int i = 0; i < n - 2; ++i) transposition.push_back(1);
    for (const auto& p : partitions(n)) {
      const long long lhs = character(p, transposition) * n * (n - 1);
      CHECK(lhs == dimension(p) * p2(p));
    }
  }
}

TEST_CASE("p2 flips sign under conjugation") {
  for (int n = 2; n <= 7; ++n)
    for (const auto& p : partitions(n)) CHECK(p2(conjugate(p)) == -p2(p));
  CHECK(p2({3, 3}) == 6);
  CHECK(p2({4, 1}) == 4 * 3 + 1 * (-2));  // n(n-3) with n=5
}

TEST_CASE("row orthogonality of the murnaghan-nakayama table") {
  for (int n = 4; n <= 6; ++n) {
    const auto cls = partitions(n);
    const auto irr = partitions(n);
    long long fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    for (std::size_t a = 0; a < irr.size(); ++a)
      for (std::size_t b = a; b < irr.size(); ++b) {
        long long dot = 0;
        for (const auto& mu : cls) {
          const long long size = fact / centralizer_order(mu);
          dot += size * character(irr[a], mu) * character(irr[b], mu);
        }
        CHECK(dot == (a == b ? fact : 0));
      }
  }
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(character({2, 3}, {5}), origami::InputError);
  CHECK_THROWS_AS(character({3, 1}, {3, 2}), origami::InputError);
  CHECK(is_valid_partition({3, 1}, 4));
  CHECK_FALSE(is_valid_partition({1, 3}, 4));
  CHECK_FALSE(is_valid_partition({3, 0}, 3));
}
