#include "doctest.h"
#include "origami/errors.hpp"
#include "origami/exactmat.hpp"

using namespace origami;

namespace {
ZMat zm(std::vector<std::vector<long>> rows) {
  ZMat m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (long v : rows[i]) m[i].emplace_back(v);
  return m;
}
}

TEST_CASE("integer rank") {
  CHECK(rank_z(zm({{1, 2}, {2, 4}})) == 1);
  CHECK(rank_z(zm({{1, 2}, {3, 4}})) == 2);
  CHECK(rank_z(zm({{0, 0}, {0, 0}})) == 0);
  CHECK(rank_z(zm({{0, 1, 0}, {0, 0, 1}, {0, 1, 1}})) == 2);
  CHECK(rank_z(zm({{2, 4, 6}, {1, 2, 3}, {0, 1, 1}})) == 2);
}

TEST_CASE("rational rank clears denominators") {
  QMat m = qmat(2, 2);
  m[0][0] = mpq_class(1, 2);
  m[0][1] = mpq_class(1, 3);
  m[1][0] = mpq_class(3, 2);
  m[1][1] = mpq_class(1, 1);
  CHECK(rank_q(m) == 1);
  m[1][1] = mpq_class(2, 1);
  CHECK(rank_q(m) == 2);
}

TEST_CASE("determinant") {
  CHECK(det_z(zm({{0, 1}, {-1, 0}})) == 1);
  CHECK(det_z(zm({{2, 0}, {0, 3}})) == 6);
  CHECK(det_z(zm({{0, 2}, {3, 0}})) == -6);
  CHECK(det_z(zm({{1, 2}, {2, 4}})) == 0);
  CHECK(det_z(zm({{2, -3, 1}, {2, 0, -1}, {1, 4, 5}})) == 49);
  CHECK(det_z(ZMat{}) == 1);
}

TEST_CASE("column echelon with pivots") {
  auto e = column_echelon(zm({{2, 1}, {0, 1}}));
  REQUIRE(e.pivot_rows.size() == 2);
  CHECK(e.pivot_rows[0] == 0);
  CHECK(e.pivot_values[0] == 1);  // gcd(2,1)
  CHECK(e.pivot_rows[1] == 1);

  auto f = column_echelon(zm({{4, 6}, {0, 0}, {2, 3}}));
  REQUIRE(f.pivot_rows.size() == 1);
  CHECK(f.pivot_rows[0] == 0);
  CHECK(f.pivot_values[0] == 2);
}

TEST_CASE("integer kernel") {
  const auto a = zm({{1, 1, 1}});
  auto k = integer_kernel(a);
  REQUIRE(k.size() == 3);
  REQUIRE(k[0].size() == 2);
  // both kernel columns satisfy a x = 0
  for (int j = 0; j < 2; ++j) CHECK(k[0][j] + k[1][j] + k[2][j] == 0);
  // and they span a rank-2 lattice
  CHECK(rank_z(ztranspose(k)) == 2);

  const auto full = zm({{1, 0}, {0, 1}});
  CHECK(integer_kernel(full)[0].empty());
}

TEST_CASE("reduction modulo a unit-pivot lattice") {
  // lattice spanned by (1,0,2) and (0,1,3) inside Z^3
  auto e = column_echelon(zm({{1, 0}, {0, 1}, {2, 3}}));
  REQUIRE(e.pivot_values.size() == 2);
  ZVec v{mpz_class(5), mpz_class(-1), mpz_class(4)};
  auto r = reduce_by_echelon(e, v);
  CHECK(r[0] == 0);
  CHECK(r[1] == 0);
  CHECK(r[2] == 4 - 5 * 2 - (-1) * 3);  // -3

  auto bad = column_echelon(zm({{2}, {0}}));
  CHECK_THROWS_AS(reduce_by_echelon(bad, ZVec{mpz_class(1), mpz_class(0)}),
                  InvariantViolation);
}

TEST_CASE("matrix product and transpose") {
  const auto a = zm({{1, 2}, {3, 4}});
  const auto b = zm({{0, 1}, {1, 0}});
  const auto ab = zmul(a, b);
  CHECK(ab[0][0] == 2);
  CHECK(ab[0][1] == 1);
  CHECK(ab[1][0] == 4);
  CHECK(ab[1][1] == 3);
  CHECK(ztranspose(a)[0][1] == 3);
  CHECK_FALSE(is_zero(a));
  CHECK(is_zero(zmat(3, 3)));
}
