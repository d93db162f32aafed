#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "doctest.h"
#include "origami/errors.hpp"
#include "origami/isotypic.hpp"
#include "origami/origami.hpp"
#include "origami/sl2p.hpp"

using namespace origami;
using namespace origami::sl2;

namespace {

GroupDataOrigami elementary_pair_origami(int p, int a, int b) {
  GeneratedPermGroup g = special_linear_group(p, a, b);
  const Permutation gr = vector_action({1, a, 0, 1}, p);
  const Permutation gu = vector_action({1, 0, b, 1}, p);
  return from_group_data(std::move(g), gr, gu, GeneratedPermGroup::trivial(p * p - 1),
                         CommutatorConvention::inverse_grgu);
}

long long closed_sum_rule(int p, const CommutatorClass& cc, const LabeledTable& lt) {
  long long s = 0;
  for (std::size_t r = 0; r < lt.t.n_rows(); ++r)
    s += closed_form_l(p, cc, lt.kinds[r]) * lt.t.dims[r];
  return s;
}

}  // namespace

TEST_CASE("prime field helpers") {
  CHECK(least_primitive_root(5) == 2);
  CHECK(least_primitive_root(7) == 3);
  CHECK(least_primitive_root(11) == 2);
  CHECK(least_primitive_root(13) == 2);
  CHECK(legendre(2, 5) == -1);
  CHECK(legendre(4, 5) == 1);
  CHECK(legendre(5, 5) == 0);
  CHECK(legendre(3, 7) == -1);
  CHECK(inv_mod(3, 7) == 5);
  CHECK(sqrt_mod(4, 13) == 2);
  CHECK_THROWS_AS(sqrt_mod(5, 13), InputError);
  CHECK_THROWS_AS(least_primitive_root(9), InputError);
}

TEST_CASE("matrix carrier round trip") {
  const int p = 5;
  const Mat m{1, 2, 3, 2};  // det = 2 - 6 = -4 = 1 mod 5
  const Permutation g = vector_action(m, p);
  CHECK(g.degree() == 24);
  CHECK(matrix_of(g, p) == m);
  const Mat mi = mat_inv(m, p);
  CHECK(mat_mul(m, mi, p) == Mat{1, 0, 0, 1});
  CHECK(vector_action(mi, p) == g.inverse());
  // composition matches the matrix product read as functions
  const Mat n{2, 1, 1, 1};
  CHECK(vector_action(mat_mul(m, n, p), p) == compose(vector_action(m, p), vector_action(n, p)));
}

TEST_CASE("elementary pairs generate the whole group") {
  CHECK(special_linear_group(5, 1, 1).order() == 120);
  CHECK(special_linear_group(5, 2, 3).order() == 120);
  CHECK(special_linear_group(7, 1, 1).order() == 336);
  CHECK_THROWS_AS(special_linear_group(5, 0, 1), InputError);
  CHECK_THROWS_AS(special_linear_group(4, 1, 1), InputError);
}

TEST_CASE("commutator order tables from the trace recursion") {
  // p = 5
  CHECK(ord_by_trace(5, 1) == 10);   // pi^2 = 1, parabolic
  CHECK(ord_by_trace(5, 2) == 6);    // pi^2 = 4
  CHECK(ord_by_trace(5, 3) == 6);    // pi^2 = 4
  CHECK(ord_by_trace(5, 4) == 10);   // pi^2 = 1
  // p = 7: pi^2 = 1 -> 8, 4 -> 3, 2 -> 8
  CHECK(ord_by_trace(7, 1) == 8);
  CHECK(ord_by_trace(7, 2) == 3);
  CHECK(ord_by_trace(7, 3) == 8);    // 3^2 = 2
  // p = 11: 1 -> 5, 4 -> 12, 9 -> 4, 5 -> 5, 3 -> 12
  CHECK(ord_by_trace(11, 1) == 5);
  CHECK(ord_by_trace(11, 2) == 12);
  CHECK(ord_by_trace(11, 3) == 4);
  CHECK(ord_by_trace(11, 4) == 5);   // 4^2 = 5
  CHECK(ord_by_trace(11, 5) == 12);  // 5^2 = 3
  // p = 13: 1 -> 14, 4 -> 14, 9 -> 26, 3 -> 14, 12 -> 6, 10 -> 3
  CHECK(ord_by_trace(13, 1) == 14);
  CHECK(ord_by_trace(13, 2) == 14);
  CHECK(ord_by_trace(13, 3) == 26);  // 3^2 = 9 and 9 + 4 = 0 mod 13
  CHECK(ord_by_trace(13, 4) == 14);  // 4^2 = 3
  CHECK(ord_by_trace(13, 5) == 6);   // 5^2 = 12
  CHECK(ord_by_trace(13, 6) == 3);   // 6^2 = 10
  CHECK_THROWS_AS(ord_by_trace(5, 0), InputError);
}

TEST_CASE("trace recursion order equals the permutation order") {
  for (int p : {5, 7}) {
    for (int a = 1; a < p; ++a)
      for (int b = 1; b < p; ++b) {
        const Permutation gr = vector_action({1, a, 0, 1}, p);
        const Permutation gu = vector_action({1, 0, b, 1}, p);
        const Permutation c =
            commutator(gr, gu, CommutatorConvention::inverse_grgu);
        CHECK(c.order() == ord_by_trace(p, (a * b) % p));
      }
  }
}

TEST_CASE("commutator case classification") {
  // parabolic only at pi^2 = -4, which needs p = 1 mod 4
  const CommutatorClass c5 = classify_commutator(5, 1);
  CHECK(c5.kind == CaseKind::parabolic);
  CHECK(c5.ord == 10);
  CHECK(c5.trace == 3);

  const CommutatorClass e5 = classify_commutator(5, 2);
  CHECK(e5.kind == CaseKind::elliptic);
  CHECK(e5.ord == 6);
  CHECK(e5.j0 == 1);

  const CommutatorClass h7 = classify_commutator(7, 2);  // pi^2 = 4, ord 3
  CHECK(h7.kind == CaseKind::hyperbolic);
  CHECK(h7.ord == 3);
  CHECK(h7.j0 == 2);

  const CommutatorClass h11 = classify_commutator(11, 1);  // ord 5, odd
  CHECK(h11.kind == CaseKind::hyperbolic);
  CHECK(h11.ord == 5);

  const CommutatorClass h13 = classify_commutator(13, 5);  // pi^2 = 12, ord 6, even
  CHECK(h13.kind == CaseKind::hyperbolic);
  CHECK(h13.ord == 6);

  CHECK(classify_commutator(13, 3).kind == CaseKind::parabolic);
  CHECK(classify_commutator(13, 3).ord == 26);
}

TEST_CASE("case census matches the closed counts") {
  for (int p : {5, 7, 11, 13, 17, 19}) {
    const CaseCensus n = case_census(p);
    CHECK(n.parabolic + n.hyperbolic + n.elliptic == (p - 1) / 2);
    if (p % 4 == 1) CHECK(n.parabolic == 1);
    if (p % 4 == 3) CHECK(n.parabolic == 0);
  }
  CHECK(case_census(13).hyperbolic == 2);
  CHECK(case_census(13).elliptic == 3);
  CHECK(case_census(11).hyperbolic == 2);
  CHECK(case_census(11).elliptic == 3);
}

TEST_CASE("labeled table identifies every irreducible, p = 5") {
  const GeneratedPermGroup g = special_linear_group(5, 1, 1);
  const LabeledTable lt = labeled_table(g, 5);
  CHECK(lt.t.n_rows() == 9);
  std::multiset<std::string> names(lt.names.begin(), lt.names.end());
  const std::multiset<std::string> expect{"U",        "V",  "W_tau(1)", "W'", "W''",
                                          "X_phi(1)", "X_phi(2)", "X'", "X''"};
  CHECK(names == expect);
  for (std::size_t r = 0; r < lt.t.n_rows(); ++r) {
    if (lt.names[r] == "V") CHECK(lt.t.dims[r] == 5);
    if (lt.names[r] == "W_tau(1)") CHECK(lt.t.dims[r] == 6);
    if (lt.names[r] == "X'") CHECK(lt.t.dims[r] == 2);
  }
}

TEST_CASE("labeled table identifies every irreducible, p = 7") {
  const GeneratedPermGroup g = special_linear_group(7, 1, 1);
  const LabeledTable lt = labeled_table(g, 7);
  CHECK(lt.t.n_rows() == 11);
  int wt = 0, xp = 0;
  for (const RowKind& rk : lt.kinds) {
    if (rk.kind == RowKind::W_tau) ++wt;
    if (rk.kind == RowKind::X_phi) ++xp;
  }
  CHECK(wt == 2);
  CHECK(xp == 3);
}

TEST_CASE("real, complex and quaternionic counts per residue class") {
  for (int p : {5, 7}) {
    const GeneratedPermGroup g = special_linear_group(p, 1, 1);
    const LabeledTable lt = labeled_table(g, p);
    const TypeCounts got = table_type_counts(g, lt.t);
    const TypeCounts want = expected_type_counts(p);
    CHECK(got.real_count == want.real_count);
    CHECK(got.complex_count == want.complex_count);
    CHECK(got.quaternionic_count == want.quaternionic_count);
  }
  CHECK(expected_type_counts(13).real_count == 9);
  CHECK(expected_type_counts(13).quaternionic_count == 8);
  CHECK(expected_type_counts(13).complex_count == 0);
  CHECK(expected_type_counts(11).real_count == 6);
  CHECK(expected_type_counts(11).quaternionic_count == 5);
  CHECK(expected_type_counts(11).complex_count == 4);
}

TEST_CASE("closed-form multiplicities, parabolic p = 5") {
  const CommutatorClass cc = classify_commutator(5, 1);
  std::map<std::string, long long> l;
  l["U"] = closed_form_l(5, cc, {RowKind::U, 0});
  l["V"] = closed_form_l(5, cc, {RowKind::V, 0});
  l["W_tau(1)"] = closed_form_l(5, cc, {RowKind::W_tau, 1});
  l["W'"] = closed_form_l(5, cc, {RowKind::W_prime, 0});
  l["W''"] = closed_form_l(5, cc, {RowKind::W_second, 0});
  l["X_phi(1)"] = closed_form_l(5, cc, {RowKind::X_phi, 1});
  l["X_phi(2)"] = closed_form_l(5, cc, {RowKind::X_phi, 2});
  l["X'"] = closed_form_l(5, cc, {RowKind::X_prime, 0});
  l["X''"] = closed_form_l(5, cc, {RowKind::X_second, 0});
  CHECK(l["U"] == 0);
  CHECK(l["V"] == 4);
  CHECK(l["W_tau(1)"] == 6);  // tau(-1) = -1 for the odd index
  CHECK(l["W'"] == 2);
  CHECK(l["W''"] == 2);
  CHECK(l["X_phi(1)"] == 4);
  CHECK(l["X_phi(2)"] == 4);
  CHECK(l["X'"] == 2);
  CHECK(l["X''"] == 2);
  // sum over rows of l * dim equals 2g - 2 with g from the genus formula
  long long s = 0 * 1 + 4 * 5 + 6 * 6 + 2 * 3 + 2 * 3 + 4 * 4 + 4 * 4 + 2 * 2 + 2 * 2;
  CHECK(s == 108);
  CHECK(s == 2 * (1 + 120 / 2 * (1 - 0.1)) - 2);  // ord 10, |G| = 120
}

TEST_CASE("closed forms agree with the generic pipeline, p = 5") {
  for (int ab : {1, 2}) {  // parabolic and elliptic commutators
    const GroupDataOrigami gd = elementary_pair_origami(5, 1, ab);
    const LabeledTable lt = labeled_table(gd, 5);
    const std::vector<long long> l = multiplicity_l(gd, lt.t);
    const CommutatorClass cc = classify_commutator(5, ab);
    CHECK(gd.c().order() == cc.ord);
    for (std::size_t r = 0; r < lt.t.n_rows(); ++r)
      CHECK(l[r] == closed_form_l(5, cc, lt.kinds[r]));
    CHECK(closed_sum_rule(5, cc, lt) == 2 * singularity_data(gd.o).genus - 2);
  }
}

TEST_CASE("closed forms agree with the generic pipeline, p = 7 hyperbolic odd order") {
  // ab = 2: pi^2 = 4, commutator order 3; exercises the odd-order split torus
  // rows, including the non-trivial tau value 2 + (p-1)(1 - 1/ord)
  const GroupDataOrigami gd = elementary_pair_origami(7, 1, 2);
  const LabeledTable lt = labeled_table(gd, 7);
  const std::vector<long long> l = multiplicity_l(gd, lt.t);
  const CommutatorClass cc = classify_commutator(7, 2);
  CHECK(cc.ord == 3);
  for (std::size_t r = 0; r < lt.t.n_rows(); ++r) {
    CHECK(l[r] == closed_form_l(7, cc, lt.kinds[r]));
    if (lt.kinds[r].kind == RowKind::W_tau) CHECK(l[r] == 6);
    if (lt.kinds[r].kind == RowKind::V) CHECK(l[r] == 4);
    if (lt.kinds[r].kind == RowKind::X_prime) CHECK(l[r] == 2);
  }
  // genus formula: g = 1 + |G| (1 - 1/ord) / 2
  CHECK(singularity_data(gd.o).genus == 1 + 336 / 2 * 2 / 3);
  CHECK(closed_sum_rule(7, cc, lt) == 2 * 113 - 2);
}

TEST_CASE("closed-form values are never one and match the sum rule, p = 11 and 13") {
  // no group enumeration here: the sum over irreducibles of l * dim must
  // equal 2g - 2 = |G| (1 - 1/ord) for every commutator case
  for (int p : {11, 13}) {
    std::vector<RowKind> kinds;
    kinds.push_back({RowKind::U, 0});
    kinds.push_back({RowKind::V, 0});
    for (int j = 1; j < (p - 1) / 2; ++j) kinds.push_back({RowKind::W_tau, j});
    kinds.push_back({RowKind::W_prime, 0});
    kinds.push_back({RowKind::W_second, 0});
    for (int j = 1; j < (p + 1) / 2; ++j) kinds.push_back({RowKind::X_phi, j});
    kinds.push_back({RowKind::X_prime, 0});
    kinds.push_back({RowKind::X_second, 0});
    const auto dim = [&](const RowKind& rk) {
      switch (rk.kind) {
        case RowKind::U: return 1;
        case RowKind::V: return p;
        case RowKind::W_tau: return p + 1;
        case RowKind::W_prime:
        case RowKind::W_second: return (p + 1) / 2;
        case RowKind::X_phi: return p - 1;
        case RowKind::X_prime:
        case RowKind::X_second: return (p - 1) / 2;
      }
      return 0;
    };
    for (int pi = 1; pi < p; ++pi) {
      const CommutatorClass cc = classify_commutator(p, pi);
      long long s = 0;
      for (const RowKind& rk : kinds) {
        const long long v = closed_form_l(p, cc, rk);
        CHECK(v != 1);
        CHECK(v >= 0);
        s += v * dim(rk);
      }
      const long long order = 1LL * p * (p * p - 1);
      CHECK(s == order - order / cc.ord);
    }
  }
}
