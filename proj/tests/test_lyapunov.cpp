#include <cmath>
#include <string>
#include <vector>

#include "doctest.h"
#include "origami/errors.hpp"
#include "origami/families.hpp"
#include "origami/isotypic.hpp"
#include "origami/lyapunov.hpp"

using namespace origami;
using namespace origami::families;

namespace {

Permutation pc(const std::string& s, int deg) { return Permutation::from_cycles(s, deg); }

struct Setup {
  H1Model m;
  GeneratedPermGroup gamma;
  CharacterTable t;
  std::vector<ZMat> rho;
  std::vector<long long> l;
};

Setup make_setup(const Origami& o) {
  H1Model m = h1_model(build_complex(o));
  GeneratedPermGroup gamma = automorphism_group(o);
  CharacterTable t = character_table(gamma);
  std::vector<ZMat> rho = gamma_h1_matrices(m, gamma);
  std::vector<long long> l = multiplicity_l(o, gamma, t);
  return Setup{std::move(m), std::move(gamma), std::move(t), std::move(rho),
               std::move(l)};
}

Setup make_setup(const FamilyInstance& fi) {
  H1Model m = h1_model(build_complex(fi.gd.o));
  GeneratedPermGroup gamma = *fi.gd.Gamma;
  std::vector<ZMat> rho = gamma_h1_matrices(m, gamma);
  return Setup{std::move(m), std::move(gamma), fi.table, std::move(rho), fi.l};
}

BlockSpectrum run(const Setup& s, const std::vector<AffineHomologyAction>& gens,
                  std::uint64_t seed, long long steps, int replicas = 1,
                  int threads = 1) {
  RandomProductConfig cfg;
  cfg.seed = seed;
  cfg.steps = steps;
  cfg.replicas = replicas;
  cfg.generators = gens;
  return estimate(s.m, s.gamma, s.t, s.rho, s.l, cfg, threads);
}

}  // namespace

TEST_CASE("torus random products report plus and minus one on the st plane") {
  const auto o = Origami::from_pair(Permutation::identity(1), Permutation::identity(1));
  const auto s = make_setup(o);
  const auto gens = default_lyapunov_generators(s.m, s.gamma, s.t, s.rho);
  REQUIRE(gens.size() == 4);
  CHECK(gens[0].k == 1);
  CHECK(gens[1].k == -1);
  CHECK(gens[2].k == 1);
  CHECK(gens[3].k == -1);
  for (const auto& g : gens) CHECK(g.in_aff_star_star);

  const auto spec = run(s, gens, 7, 20000);
  CHECK(spec.rng == "splitmix64 v1");
  CHECK(spec.st_top_rate > 0.0);
  CHECK(spec.generators_all_star_star);
  REQUIRE(spec.st.dim_w == 2);
  CHECK(spec.st.exponents[0] == 1.0);
  CHECK(spec.st.exponents[1] == doctest::Approx(-1.0).epsilon(1e-9));
  CHECK(spec.st.symmetric_within_3se);
  CHECK(spec.whole.dim_w == 0);
  CHECK(spec.blocks.empty());
  CHECK(spec.union_matches_whole);
}

TEST_CASE("same seed gives bit-identical estimates") {
  const auto ell = Origami::from_pair(pc("(0 1)", 3), pc("(0 2)", 3));
  const auto s = make_setup(ell);
  const auto gens = default_lyapunov_generators(s.m, s.gamma, s.t, s.rho);

  const auto a = run(s, gens, 11, 8000);
  const auto b = run(s, gens, 11, 8000);
  CHECK(a.st.exponents == b.st.exponents);
  CHECK(a.whole.exponents == b.whole.exponents);
  CHECK(a.whole.stderrs == b.whole.stderrs);
  REQUIRE(a.blocks.size() == 1);
  REQUIRE(b.blocks.size() == 1);
  CHECK(a.blocks[0].exponents == b.blocks[0].exponents);
  CHECK(a.blocks[0].batch_rates == b.blocks[0].batch_rates);

  const auto c = run(s, gens, 12, 8000);
  CHECK(a.whole.exponents != c.whole.exponents);
}

TEST_CASE("genus-two blocks are symmetric and match the whole run") {
  const auto ell = Origami::from_pair(pc("(0 1)", 3), pc("(0 2)", 3));
  const auto s = make_setup(ell);
  const auto gens = default_lyapunov_generators(s.m, s.gamma, s.t, s.rho);
  auto spec = run(s, gens, 1, 40000);

  CHECK(spec.whole.dim_w == 2);
  REQUIRE(spec.blocks.size() == 1);
  CHECK(spec.blocks[0].type == "real");
  CHECK(spec.blocks[0].dim_w == 2);
  CHECK(spec.blocks[0].dim_r_va == 1);
  CHECK(spec.blocks[0].symmetric_within_3se);
  CHECK(spec.whole.symmetric_within_3se);
  CHECK(spec.union_matches_whole);

  const auto v = divisibility_check(spec);
  CHECK(v.applicable);
  CHECK(v.all_divisible);
  REQUIRE(spec.blocks[0].cluster.size() == 2);
  CHECK(spec.blocks[0].cluster_sizes.size() >= 1);
}

TEST_CASE("replicas merge deterministically across thread counts") {
  const auto ell = Origami::from_pair(pc("(0 1)", 3), pc("(0 2)", 3));
  const auto s = make_setup(ell);
  const auto gens = default_lyapunov_generators(s.m, s.gamma, s.t, s.rho);

  const auto seq = run(s, gens, 5, 4000, 3, 1);
  const auto par = run(s, gens, 5, 4000, 3, 2);
  CHECK(seq.whole.exponents == par.whole.exponents);
  CHECK(seq.whole.stderrs == par.whole.stderrs);
  CHECK(seq.whole.batch_rates == par.whole.batch_rates);
  CHECK(seq.whole.batch_rates.size() == 60);
  CHECK(seq.replicas == 3);

  const auto single = run(s, gens, 5, 4000, 1, 1);
  CHECK(single.whole.exponents != seq.whole.exponents);
}

TEST_CASE("regular heisenberg commuting powers sit at the group exponent") {
  const auto fi = heisenberg_regular(3);
  const auto s = make_setup(fi);
  const auto gens = default_lyapunov_generators(s.m, s.gamma, s.t, s.rho);
  REQUIRE(gens.size() == 4);
  CHECK(gens[0].k == 3);
  CHECK(gens[2].k == 3);
  for (const auto& g : gens) CHECK(g.in_aff_star_star);

  auto spec = run(s, gens, 1, 60000);
  CHECK(spec.whole.dim_w == 18);
  REQUIRE(spec.blocks.size() == 1);
  CHECK(spec.blocks[0].type == "complex");
  CHECK(spec.blocks[0].dim_w == 18);
  CHECK(spec.blocks[0].dim_r_va == 6);
  CHECK(spec.st.exponents[0] == 1.0);
  CHECK(spec.st.exponents[1] == doctest::Approx(-1.0).epsilon(1e-9));
  CHECK(spec.blocks[0].symmetric_within_3se);
  CHECK(spec.union_matches_whole);

  const auto v = divisibility_check(spec);
  CHECK(v.applicable);
  CHECK(v.all_divisible);
  for (int size : spec.blocks[0].cluster_sizes) CHECK(size % 6 == 0);
}

TEST_CASE("quasiregular heisenberg splits into an even complex block") {
  const auto fi = heisenberg_quasiregular(3);
  const auto s = make_setup(fi);
  const auto gens = default_lyapunov_generators(s.m, s.gamma, s.t, s.rho);
  auto spec = run(s, gens, 1, 60000);

  CHECK(spec.whole.dim_w == 6);
  REQUIRE(spec.blocks.size() == 1);
  CHECK(spec.blocks[0].type == "complex");
  CHECK(spec.blocks[0].dim_w == 6);
  CHECK(spec.blocks[0].dim_r_va == 2);
  CHECK(spec.blocks[0].symmetric_within_3se);
  CHECK(spec.union_matches_whole);

  const auto v = divisibility_check(spec);
  CHECK(v.all_divisible);
  for (int size : spec.blocks[0].cluster_sizes) CHECK(size % 2 == 0);
}

TEST_CASE("exponents are stable under the relabeling choice") {
  const auto fi = heisenberg_quasiregular(3);
  const auto s = make_setup(fi);
  const auto gens = default_lyapunov_generators(s.m, s.gamma, s.t, s.rho);

  auto variants = affine_action_variants(s.m, Shear::horizontal, gens[0].k);
  REQUIRE(variants.size() >= 2);
  classify_affine(variants[1], s.m, s.gamma, s.t, s.rho);
  CHECK(variants[1].in_aff_star_star);
  std::vector<AffineHomologyAction> alt = gens;
  alt[0] = variants[1];
  alt[1] = inverse_action(s.m, variants[1]);

  const auto base = run(s, gens, 3, 40000);
  const auto moved = run(s, alt, 3, 40000);
  REQUIRE(base.blocks.size() == 1);
  REQUIRE(moved.blocks.size() == 1);
  for (std::size_t i = 0; i < base.blocks[0].exponents.size(); ++i) {
    const double tol = 3.0 * std::hypot(base.blocks[0].stderrs[i],
                                        moved.blocks[0].stderrs[i]) + 1e-9;
    CHECK(std::abs(base.blocks[0].exponents[i] - moved.blocks[0].exponents[i]) <= tol);
  }
}

TEST_CASE("non-commuting generators downgrade to an unsplit run") {
  const auto fi = heisenberg_regular(3);
  const auto s = make_setup(fi);
  auto ah = affine_generator_action(s.m, Shear::horizontal, 1);
  auto av = affine_generator_action(s.m, Shear::vertical, 1);
  classify_affine(ah, s.m, s.gamma, s.t, s.rho);
  classify_affine(av, s.m, s.gamma, s.t, s.rho);
  CHECK_FALSE(ah.in_aff_star_star);
  CHECK_FALSE(av.in_aff_star_star);
  const std::vector<AffineHomologyAction> gens = {ah, inverse_action(s.m, ah), av,
                                                  inverse_action(s.m, av)};

  auto spec = run(s, gens, 2, 20000);
  CHECK_FALSE(spec.generators_all_star_star);
  CHECK(spec.blocks.empty());
  CHECK(spec.whole.dim_w == 18);
  CHECK(spec.scope_note.find("not split") != std::string::npos);
  CHECK_FALSE(spec.union_matches_whole);

  const auto v = divisibility_check(spec);
  CHECK_FALSE(v.applicable);
  CHECK_FALSE(v.all_divisible);
}

TEST_CASE("degenerate generator sets are rejected with a diagnostic") {
  const auto o = Origami::from_pair(Permutation::identity(1), Permutation::identity(1));
  const auto s = make_setup(o);
  const auto gens = default_lyapunov_generators(s.m, s.gamma, s.t, s.rho);

  RandomProductConfig cfg;
  cfg.seed = 1;
  cfg.steps = 20000;
  cfg.generators = {gens[0]};  // a single parabolic: no exponential growth
  CHECK_THROWS_WITH_AS(estimate(s.m, s.gamma, s.t, s.rho, s.l, cfg),
                       doctest::Contains("st plane"), InvariantViolation);
}

TEST_CASE("configuration errors are rejected up front") {
  const auto o = Origami::from_pair(Permutation::identity(1), Permutation::identity(1));
  const auto s = make_setup(o);
  const auto gens = default_lyapunov_generators(s.m, s.gamma, s.t, s.rho);

  RandomProductConfig cfg;
  cfg.generators = gens;
  cfg.steps = 0;
  CHECK_THROWS_AS(estimate(s.m, s.gamma, s.t, s.rho, s.l, cfg), InputError);
  cfg.steps = 100;  // below 20 batches x renormalization period
  CHECK_THROWS_AS(estimate(s.m, s.gamma, s.t, s.rho, s.l, cfg), InputError);
  cfg.steps = 20000;
  cfg.weights = {0.5, 0.5};
  CHECK_THROWS_AS(estimate(s.m, s.gamma, s.t, s.rho, s.l, cfg), InputError);
  cfg.weights = {0.3, 0.3, 0.3, 0.3};
  CHECK_THROWS_WITH_AS(estimate(s.m, s.gamma, s.t, s.rho, s.l, cfg),
                       doctest::Contains("sum to one"), InputError);
  cfg.weights.clear();
  cfg.generators.clear();
  CHECK_THROWS_AS(estimate(s.m, s.gamma, s.t, s.rho, s.l, cfg), InputError);
  cfg.generators = gens;
  CHECK_THROWS_AS(estimate(s.m, s.gamma, s.t, s.rho, {}, cfg), InputError);
}

TEST_CASE("divisibility verdicts on fabricated spectra") {
  BlockSpectrum spec;
  spec.generators_all_star_star = true;
  ExponentBlock eb;
  eb.label = "x";
  eb.type = "complex";
  eb.dim_w = 6;
  eb.dim_r_va = 2;
  eb.exponents = {0.8, 0.8, 0.0, 0.0, -0.8, -0.8};
  eb.stderrs.assign(6, 0.01);
  spec.blocks.push_back(eb);

  SUBCASE("even clusters pass") {
    auto v = divisibility_check(spec, 0.1);
    CHECK(v.applicable);
    CHECK(v.all_divisible);
    CHECK(v.conclusive);
    CHECK(spec.blocks[0].cluster_sizes == std::vector<int>{2, 2, 2});
    CHECK(v.min_inter_cluster_gap == doctest::Approx(0.8));
  }
  SUBCASE("an odd cluster is flagged") {
    spec.blocks[0].exponents = {0.8, 0.8, 0.5, -0.5, -0.8, -0.8};
    auto v = divisibility_check(spec, 0.1);
    CHECK_FALSE(v.all_divisible);
    CHECK(v.per_block[0].find("violated") != std::string::npos);
  }
  SUBCASE("zero bound satisfied and violated") {
    spec.blocks[0].zero_bound = 2;
    auto ok = divisibility_check(spec, 0.1);
    CHECK(ok.all_divisible);
    spec.blocks[0].zero_bound = 4;
    auto bad = divisibility_check(spec, 0.1);
    CHECK_FALSE(bad.all_divisible);
    CHECK(bad.per_block[0].find("zero cluster") != std::string::npos);
  }
  SUBCASE("a missing zero cluster violates a positive bound") {
    spec.blocks[0].exponents = {0.8, 0.8, 0.6, 0.6, -0.6, -0.6};
    spec.blocks[0].zero_bound = 2;
    auto v = divisibility_check(spec, 0.1);
    CHECK_FALSE(v.all_divisible);
    CHECK(v.per_block[0].find("no cluster at zero") != std::string::npos);
  }
  SUBCASE("weakly separated clusters are labeled inconclusive") {
    spec.blocks[0].exponents = {0.30, 0.30, 0.15, -0.15, -0.30, -0.30};
    spec.blocks[0].dim_r_va = 1;
    auto v = divisibility_check(spec, 0.12);
    CHECK(v.all_divisible);
    CHECK_FALSE(v.conclusive);
    CHECK(v.per_block[0].find("inconclusive") != std::string::npos);
  }
}
