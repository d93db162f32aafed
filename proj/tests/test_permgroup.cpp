#include <algorithm>

#include "doctest.h"
#include "origami/errors.hpp"
#include "origami/permgroup.hpp"
#include "origami/permutation.hpp"

using namespace origami;

namespace {
Permutation pc(const std::string& s, int deg) { return Permutation::from_cycles(s, deg); }
}

TEST_CASE("composition convention applies the right factor first") {
  const auto a = pc("(0 1 2)", 3);
  const auto b = pc("(0 1)", 3);
  CHECK(compose(a, b) == pc("(0 2)", 3));
  CHECK(compose(Permutation::identity(3), a) == a);
  CHECK(compose(b, b).is_identity());
}

TEST_CASE("cycle parsing, printing, order, powers") {
  const auto p = pc("(0 1)(4 5)(2 3 6 7)", 8);
  CHECK(p.cycle_string() == "(0 1)(2 3 6 7)(4 5)");
  CHECK(p.order() == 4);
  CHECK(p.power(4).is_identity());
  CHECK(p.power(-1) == p.inverse());
  CHECK(compose(p, p.inverse()).is_identity());
  CHECK(Permutation::from_cycles("()", 3).is_identity());
  CHECK_THROWS_AS(Permutation::from_cycles("(0 9)", 3), InputError);
  CHECK_THROWS_AS(Permutation::from_cycles("(0 1 0)", 3), InputError);
  CHECK_THROWS_AS(Permutation(std::vector<int>{0, 0}), InputError);
}

TEST_CASE("commutator conventions") {
  const auto a = pc("(0 1 2 3)", 4);
  CHECK(commutator(a, a).is_identity());
  const auto gr = pc("(0 1 2 3)", 4);  // full shift on four points
  const auto gu = pc("(1 3)", 4);
  // a^-1 b^-1 a b form:
  CHECK(commutator(gr, gu, CommutatorConvention::inverse_grgu) == pc("(0 2)(1 3)", 4));
  // the two conventions give conjugate elements, hence the same cycle type
  const auto c1 = commutator(gr, gu, CommutatorConvention::grgu);
  const auto c2 = commutator(gr, gu, CommutatorConvention::inverse_grgu);
  CHECK(c1.order() == c2.order());
  const auto x = pc("(0 2 1)", 5);
  const auto y = pc("(3 4)", 5);
  CHECK(commutator(x, y).is_identity());  // disjoint supports commute
}

TEST_CASE("closure enumerates small groups deterministically") {
  const auto c5 = GeneratedPermGroup::closure(5, {pc("(0 1 2 3 4)", 5)});
  CHECK(c5.order() == 5);
  CHECK(c5.element(0).is_identity());

  const auto s4 = GeneratedPermGroup::closure(4, {pc("(0 1 2 3)", 4), pc("(0 1)", 4)});
  CHECK(s4.order() == 24);
  CHECK(s4.is_transitive());
  CHECK_FALSE(s4.is_abelian());

  // two one-square shift generators on 2n = 4 points: order 2 (n!)^2 = 8
  const auto g = GeneratedPermGroup::closure(4, {pc("(0 1 2 3)", 4), pc("(1 3)", 4)});
  CHECK(g.order() == 8);

  const auto again = GeneratedPermGroup::closure(4, {pc("(0 1 2 3)", 4), pc("(0 1)", 4)});
  for (std::uint64_t i = 0; i < s4.order(); ++i) CHECK(s4.element(i) == again.element(i));
}

TEST_CASE("element cap is a hard error") {
  CHECK_THROWS_AS(
      GeneratedPermGroup::closure(6, {pc("(0 1 2 3 4 5)", 6), pc("(0 1)", 6)}, 100),
      CapExceeded);
}

TEST_CASE("conjugacy classes of S4") {
  const auto s4 = GeneratedPermGroup::closure(4, {pc("(0 1 2 3)", 4), pc("(0 1)", 4)});
  auto cs = conjugacy_classes(s4);
  REQUIRE(cs.count() == 5);
  std::vector<std::uint64_t> sizes(cs.sizes);
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::uint64_t>{1, 3, 6, 6, 8});
  CHECK(cs.representatives[0].is_identity());
  const auto abelian = GeneratedPermGroup::closure(5, {pc("(0 1 2 3 4)", 5)});
  CHECK(conjugacy_classes(abelian).count() == 5);
}

TEST_CASE("lagrange and orbit-stabilizer on S4") {
  const auto s4 = GeneratedPermGroup::closure(4, {pc("(0 1 2 3)", 4), pc("(0 1)", 4)});
  const auto stab = point_stabilizer(s4, 0);
  CHECK(stab.order() == 6);
  CHECK(s4.order() % stab.order() == 0);
  CHECK(orbit_of(0, s4.generators()).size() * stab.order() == s4.order());
}

TEST_CASE("normalizer and core") {
  const auto s4 = GeneratedPermGroup::closure(4, {pc("(0 1 2 3)", 4), pc("(0 1)", 4)});
  const auto h = GeneratedPermGroup::closure(4, {pc("(0 1)", 4)});
  const auto n = normalizer(s4, h);
  CHECK(n.order() == 4);  // {id, (01), (23), (01)(23)}
  CHECK(n.contains(pc("(2 3)", 4)));
  CHECK(is_core_free(s4, h));

  const auto triv = GeneratedPermGroup::trivial(4);
  CHECK(normalizer(s4, triv).order() == 24);
  CHECK(is_core_free(s4, triv));

  const auto v4 = GeneratedPermGroup::closure(4, {pc("(0 1)(2 3)", 4), pc("(0 2)(1 3)", 4)});
  CHECK_FALSE(is_core_free(s4, v4));  // Klein four-group is normal in S4
  CHECK(is_normal_in(v4, s4));
  CHECK_FALSE(is_normal_in(h, s4));
}

TEST_CASE("coset space and quotient action") {
  const auto s3 = GeneratedPermGroup::closure(3, {pc("(0 1 2)", 3), pc("(0 1)", 3)});
  const auto h = GeneratedPermGroup::closure(3, {pc("(0 1)", 3)});
  CosetSpace cosets(s3, h);
  REQUIRE(cosets.count() == 3);
  CHECK(cosets.coset_of(Permutation::identity(3)) == 0);
  CHECK(cosets.coset_of(pc("(0 1)", 3)) == 0);

  // right translation by a product applies the factors in order:
  // action_of(ab) = action_of(b) . action_of(a) as functions
  const auto a = pc("(0 1 2)", 3), b = pc("(0 1)", 3);
  CHECK(cosets.action_of(mul(a, b)) ==
        compose(cosets.action_of(b), cosets.action_of(a)));
  CHECK(mul(a, b) == compose(b, a));
  CHECK(conjugate(b, a) == compose(compose(b.inverse(), a), b));

  // N(h) = h here, so the automorphism group of the 3-coset action is trivial
  const auto n = normalizer(s3, h);
  CHECK(n.order() == 2);
  const auto gamma = quotient_as_perm_group(n, h, cosets);
  CHECK(gamma.order() == 1);
}

TEST_CASE("quotient of the 2n=4 shift group is S2 on four squares") {
  const int deg = 4;
  const auto gr = pc("(0 1 2 3)", deg);
  const auto gu = pc("(1 3)", deg);
  const auto g = GeneratedPermGroup::closure(deg, {gr, gu});
  REQUIRE(g.order() == 8);
  const auto h = GeneratedPermGroup::closure(deg, {pc("(0 2)", deg)});
  CHECK(is_core_free(g, h));
  const auto n = normalizer(g, h);
  CHECK(n.order() == 4);  // index 2
  CosetSpace cosets(g, h);
  REQUIRE(cosets.count() == 4);
  const auto gamma = quotient_as_perm_group(n, h, cosets);
  CHECK(gamma.order() == 2);
  for (std::uint64_t i = 1; i < gamma.order(); ++i)
    CHECK(gamma.element(i).fixed_points() == 0);
}

TEST_CASE("from_elements validates closure") {
  std::vector<Permutation> not_closed{Permutation::identity(3), pc("(0 1 2)", 3)};
  CHECK_THROWS_AS(GeneratedPermGroup::from_elements(3, not_closed), InputError);
  std::vector<Permutation> closed{Permutation::identity(3), pc("(0 1 2)", 3),
                                  pc("(0 2 1)", 3)};
  const auto g = GeneratedPermGroup::from_elements(3, closed);
  CHECK(g.order() == 3);
  CHECK(g.is_abelian());
}
