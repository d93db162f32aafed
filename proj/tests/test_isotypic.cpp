#include <numeric>

#include "doctest.h"
#include "origami/errors.hpp"
#include "origami/isotypic.hpp"

using namespace origami;

namespace {

Permutation pc(const std::string& s, int deg) { return Permutation::from_cycles(s, deg); }

GroupDataOrigami s3_witness() {
  auto g = GeneratedPermGroup::closure(3, {pc("(0 1)", 3), pc("(1 2)", 3)});
  auto h = GeneratedPermGroup::closure(3, {pc("(0 1)", 3)});
  return from_group_data(std::move(g), pc("(0 1)", 3), pc("(1 2)", 3), std::move(h));
}

GroupDataOrigami s3_regular() {
  auto g = GeneratedPermGroup::closure(3, {pc("(0 1)", 3), pc("(1 2)", 3)});
  return from_group_data(std::move(g), pc("(0 1)", 3), pc("(1 2)", 3),
                         GeneratedPermGroup::trivial(3));
}

Origami klein_pair(CommutatorConvention conv = CommutatorConvention::grgu) {
  return Origami::from_pair(pc("(0 1)(4 5)(2 3 6 7)", 8), pc("(0 2)(4 6)(1 3 5 7)", 8), conv);
}

}  // namespace

TEST_CASE("trivial automorphism group sees one copy of everything") {
  const auto gd = s3_witness();
  const auto rep = multiplicity_report(gd);
  REQUIRE(rep.m.size() == 1);
  CHECK(rep.m[0] == 1);
  CHECK(rep.l[0] == 2);
  CHECK(rep.l0 == 2);
  CHECK(rep.r == 3);
  CHECK(rep.genus == 2);
  CHECK_FALSE(rep.quasiregular);
  CHECK(rep.real_classes.size() == 1);
  CHECK(rep.real_classes[0].sp_descriptor == "Sp(2, R)");
}

TEST_CASE("regular origami of S3") {
  const auto gd = s3_regular();
  const auto t = character_table(*gd.Gamma);
  REQUIRE(t.n_rows() == 3);
  CHECK(t.dims == std::vector<int>{1, 1, 2});

  const auto m = multiplicity_m(gd, t);
  const auto l = multiplicity_l(gd, t);
  CHECK(m == std::vector<long long>{1, 1, 0});
  CHECK(l == std::vector<long long>{0, 0, 2});

  const auto rep = multiplicity_report(gd);
  CHECK(rep.genus == 3);
  CHECK(rep.sigma_star_count == 2);
  CHECK(rep.l0 == 0);
  CHECK(rep.quasiregular);
  CHECK(rep.r == 1);
  // S3 has only real irreducibles
  for (const auto& rc : rep.real_classes) {
    CHECK(rc.type == "real");
    CHECK(rc.m_a == 1);
    CHECK(rc.l_a % 2 == 0);
  }
}

TEST_CASE("pair pipeline agrees with the group-data pipeline on the regular origami") {
  const auto gd = s3_regular();
  const auto pair_rep = multiplicity_report(gd.o);
  const auto gd_rep = multiplicity_report(gd);
  CHECK(pair_rep.m == gd_rep.m);
  CHECK(pair_rep.l == gd_rep.l);
  CHECK(pair_rep.genus == gd_rep.genus);
  CHECK(pair_rep.r == gd_rep.r);
}

TEST_CASE("quasiregular eight-square example multiplicities") {
  const auto o = klein_pair();
  const auto rep = multiplicity_report(o);
  REQUIRE(rep.m.size() == 2);
  CHECK(rep.gamma_order == 2);
  CHECK(rep.m == std::vector<long long>{4, 2});
  CHECK(rep.l == std::vector<long long>{0, 2});
  CHECK(rep.r == 4);
  CHECK(rep.quasiregular);
  CHECK(rep.l0 == 0);
  CHECK(rep.genus == 2);
  CHECK(rep.sigma_star_count == 6);

  // the group-data route reproduces it through the coset sum
  const auto gd = group_data_from_pair(o);
  const auto gd_rep = multiplicity_report(gd);
  CHECK(gd_rep.m == rep.m);
  CHECK(gd_rep.l == rep.l);
}

TEST_CASE("multiplicities are convention independent") {
  const auto a = multiplicity_report(group_data_from_pair(klein_pair()));
  const auto b = multiplicity_report(
      group_data_from_pair(klein_pair(CommutatorConvention::inverse_grgu)));
  CHECK(a.m == b.m);
  CHECK(a.l == b.l);
  CHECK(a.genus == b.genus);
  CHECK(a.quasiregular == b.quasiregular);
}

TEST_CASE("two-square cylinder splits into two line bundles") {
  const auto o = Origami::from_pair(pc("(0 1)", 2), Permutation::identity(2));
  const auto rep = multiplicity_report(o);
  CHECK(rep.genus == 1);
  CHECK(rep.m == std::vector<long long>{1, 1});
  CHECK(rep.l == std::vector<long long>{0, 0});
  CHECK(rep.quasiregular);
}

TEST_CASE("complex pairs and signature hints on the order-21 regular origami") {
  // G = Z/7 x| Z/3 has a conjugate pair of 3-dimensional irreducibles; its
  // regular origami puts l = 3 on each of them.
  const auto a = pc("(0 1 2 3 4 5 6)", 7);
  const auto b = pc("(1 2 4)(3 6 5)", 7);  // doubling map mod 7
  auto g = GeneratedPermGroup::closure(7, {a, b});
  REQUIRE(g.order() == 21);
  const auto gd = from_group_data(std::move(g), a, b, GeneratedPermGroup::trivial(7));
  CHECK(gd.c().order() == 7);
  CHECK(singularity_data(gd.o).genus == 10);

  const auto rep = multiplicity_report(gd);
  CHECK(rep.dims == std::vector<int>{1, 1, 1, 3, 3});
  CHECK(rep.m == std::vector<long long>{1, 1, 1, 0, 0});
  CHECK(rep.l == std::vector<long long>{0, 0, 0, 3, 3});
  REQUIRE(rep.real_classes.size() == 3);
  CHECK(rep.real_classes[1].type == "complex");
  CHECK(rep.real_classes[2].type == "complex");
  CHECK(rep.real_classes[2].l_a == 3);
  CHECK(rep.real_classes[2].dim_r == 6);
  CHECK(rep.real_classes[2].sp_descriptor == "U(p,q), p+q = 3, (p,q) unknown");
  CHECK_FALSE(rep.real_classes[2].zero_exponent_bound.has_value());

  SignatureHints hints(3);
  hints[2] = std::make_pair(2, 1);
  const auto hinted = multiplicity_report(gd, hints);
  REQUIRE(hinted.real_classes[2].zero_exponent_bound.has_value());
  CHECK(*hinted.real_classes[2].zero_exponent_bound == 6);
  CHECK(hinted.real_classes[2].sp_descriptor == "U(2,1)");
  CHECK_FALSE(hinted.real_classes[0].zero_exponent_bound.has_value());

  SignatureHints bad(3);
  bad[2] = std::make_pair(3, 1);
  CHECK_THROWS_AS(multiplicity_report(gd, bad), InputError);
}

TEST_CASE("closed form for partitions against hand values") {
  using sn::closed_form_l;
  CHECK(closed_form_l(4, {4}) == 0);
  CHECK(closed_form_l(4, {1, 1, 1, 1}) == 2);
  CHECK(closed_form_l(4, {3, 1}) == 2);
  CHECK(closed_form_l(4, {2, 1, 1}) == 4);
  CHECK(closed_form_l(4, {2, 2}) == 2);
  for (int n = 4; n <= 8; ++n) CHECK(closed_form_l(n, {n - 2, 2}) == 2 * (n - 3));
  for (int n = 2; n <= 8; ++n) {
    CHECK(closed_form_l(n, {n}) == 0);
    CHECK(closed_form_l(n, sn::Partition(n, 1)) == 2);
  }
  // self-conjugate diagram of size 6: dim 16, zero trace on transpositions
  CHECK(closed_form_l(6, {3, 2, 1}) == 16);
  CHECK_THROWS_AS(closed_form_l(4, {3, 2}), InputError);
  CHECK_THROWS_AS(closed_form_l(1, {1}), InputError);

  // never 1, never negative, duality built in
  for (int n = 2; n <= 7; ++n)
    for (const auto& lam : sn::partitions(n)) {
      const auto v = closed_form_l(n, lam);
      CHECK(v >= 0);
      CHECK(v != 1);
    }
}

TEST_CASE("sum rules hold across a small corpus") {
  const auto torus = Origami::from_pair(Permutation::identity(1), Permutation::identity(1));
  const auto column = Origami::from_pair(Permutation::identity(4), pc("(0 1 2 3)", 4));
  const auto ell = Origami::from_pair(pc("(0 1 2)", 3), pc("(0 1)", 3));
  for (const auto& o : {torus, column, ell, klein_pair()}) {
    const auto rep = multiplicity_report(o);
    long long m_total = 0, l_total = 0;
    for (std::size_t i = 0; i < rep.m.size(); ++i) {
      m_total += rep.m[i] * rep.dims[i];
      l_total += rep.l[i] * rep.dims[i];
    }
    CHECK(m_total == rep.sigma_star_count);
    CHECK(l_total == 2 * rep.genus - 2);
    CHECK((rep.l0 == 0) == rep.quasiregular);
  }
}
