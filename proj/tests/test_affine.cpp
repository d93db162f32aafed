#include <array>
#include <string>
#include <vector>

#include "doctest.h"
#include "origami/affine.hpp"
#include "origami/errors.hpp"
#include "origami/families.hpp"

using namespace origami;

namespace {

Permutation pc(const std::string& s, int deg) { return Permutation::from_cycles(s, deg); }

ZVec apply(const ZMat& m, const ZVec& v) {
  ZVec out(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  return out;
}

ZVec combine(long a, const ZVec& x, long b, const ZVec& y) {
  ZVec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = a * x[i] + b * y[i];
  return out;
}

H1Model model_of(const Origami& o) { return h1_model(build_complex(o)); }

}  // namespace

TEST_CASE("torus shears act by their derivative") {
  const auto o = Origami::from_pair(Permutation::identity(1), Permutation::identity(1));
  CHECK(minimal_veech_power(o, Shear::horizontal) == 1);
  CHECK(minimal_veech_power(o, Shear::vertical) == 1);
  const auto m = model_of(o);
  const auto a = affine_generator_action(m, Shear::horizontal, 1);
  CHECK(a.h1_matrix == ZMat{{1, 1}, {0, 1}});
  const auto b = affine_generator_action(m, Shear::vertical, 1);
  CHECK(b.h1_matrix == ZMat{{1, 0}, {1, 1}});
  const auto a2 = affine_generator_action(m, Shear::horizontal, 2);
  CHECK(a2.h1_matrix == ZMat{{1, 2}, {0, 1}});
}

TEST_CASE("minimal shear powers follow the cylinder widths") {
  // one horizontal cylinder of width 3, height 1
  const auto cyl = Origami::from_pair(pc("(0 1 2)", 3), Permutation::identity(3));
  CHECK(minimal_veech_power(cyl, Shear::horizontal) == 3);
  CHECK(minimal_veech_power(cyl, Shear::vertical) == 1);

  // widths 2 and 1 in both directions
  const auto ell = Origami::from_pair(pc("(0 1)", 3), pc("(0 2)", 3));
  CHECK(minimal_veech_power(ell, Shear::horizontal) == 2);
  CHECK(minimal_veech_power(ell, Shear::vertical) == 2);
}

TEST_CASE("non-stabilizing powers name the minimal one") {
  const auto ell = Origami::from_pair(pc("(0 1)", 3), pc("(0 2)", 3));
  const auto m = model_of(ell);
  CHECK_THROWS_WITH_AS((void)affine_generator_action(m, Shear::horizontal, 1),
                       doctest::Contains("minimal valid power is 2"), InputError);
  CHECK_THROWS_AS((void)sheared_origami(ell, Shear::horizontal, 0), InputError);
}

TEST_CASE("genus-two actions pass both gates and compose with derivatives") {
  const auto ell = Origami::from_pair(pc("(0 1)", 3), pc("(0 2)", 3));
  const auto m = model_of(ell);
  const auto a = affine_generator_action(m, Shear::horizontal, 2);
  const auto b = affine_generator_action(m, Shear::vertical, 2);
  CHECK(a.derivative == std::array<long long, 4>{1, 2, 0, 1});
  CHECK(b.derivative == std::array<long long, 4>{1, 0, 2, 1});

  const ZMat p = zmul(a.h1_matrix, b.h1_matrix);
  CHECK(zmul(ztranspose(p), zmul(m.intersection, p)) == m.intersection);
  // derivative product [[1,2],[0,1]] [[1,0],[2,1]] = [[5,2],[2,1]]
  CHECK(apply(p, m.st_sigma) == combine(5, m.st_sigma, 2, m.st_zeta));
  CHECK(apply(p, m.st_zeta) == combine(2, m.st_sigma, 1, m.st_zeta));
}

TEST_CASE("relabeling variants differ by automorphisms") {
  const auto o = Origami::from_pair(pc("(0 1 2)", 3), Permutation::identity(3));
  const auto m = model_of(o);
  const auto variants = affine_action_variants(m, Shear::vertical, 1);
  REQUIRE(variants.size() == 3);  // automorphism group of the cylinder
  CHECK(variants[0].relabeling.is_identity());
  for (const auto& v : variants) {
    const auto gmat = h1_matrix_of_square_map(m, v.relabeling);
    CHECK(zmul(gmat, variants[0].h1_matrix) == v.h1_matrix);
  }
}

TEST_CASE("classification on the torus and the cylinder") {
  const auto t = model_of(Origami::from_pair(Permutation::identity(1), Permutation::identity(1)));
  auto a = affine_generator_action(t, Shear::horizontal, 1);
  const auto gamma = GeneratedPermGroup::trivial(1);
  const auto tab = character_table(gamma);
  const auto rho = gamma_h1_matrices(t, gamma);
  const auto cls = classify_affine(a, t, gamma, tab, rho);
  CHECK(cls.in_aff_star);
  CHECK(cls.in_aff_star_star);
  CHECK(a.in_aff_star);
  CHECK(a.in_aff_star_star);
  CHECK(cls.label_action == std::vector<int>{0});

  const auto cyl = Origami::from_pair(pc("(0 1 2)", 3), Permutation::identity(3));
  const auto m = model_of(cyl);
  const auto g = automorphism_group(cyl);
  REQUIRE(g.order() == 3);
  const auto tab2 = character_table(g);
  const auto rho2 = gamma_h1_matrices(m, g);
  auto b = affine_generator_action(m, Shear::vertical, 1);
  const auto cls2 = classify_affine(b, m, g, tab2, rho2);
  CHECK(cls2.in_aff_star);  // identity relabeling conjugates trivially
  for (std::size_t i = 0; i < cls2.label_action.size(); ++i)
    CHECK(cls2.label_action[i] == static_cast<int>(i));
}

TEST_CASE("heisenberg veech elements move labels by the reduced derivative") {
  const auto fi = families::heisenberg_regular(3);
  const auto& o = fi.gd.o;
  // the full modular group stabilizes this origami
  CHECK(minimal_veech_power(o, Shear::horizontal) == 1);
  CHECK(minimal_veech_power(o, Shear::vertical) == 1);

  const auto m = model_of(o);
  CHECK(m.dim == 20);
  const auto& gamma = *fi.gd.Gamma;
  const auto rho = gamma_h1_matrices(m, gamma);

  const auto row_of_linear = [&](std::pair<int, int> mn) {
    for (std::size_t row = 0; row < fi.table.n_rows(); ++row)
      if (fi.linear_labels[row] && *fi.linear_labels[row] == mn) return static_cast<int>(row);
    FAIL("missing linear label");
    return -1;
  };

  for (const Shear which : {Shear::horizontal, Shear::vertical}) {
    for (const long long k : {1LL, 3LL}) {
      auto a = affine_generator_action(m, which, k);
      const auto cls = classify_affine(a, m, gamma, fi.table, rho);
      for (std::size_t row = 0; row < fi.table.n_rows(); ++row) {
        const int img = cls.label_action[row];
        if (fi.linear_labels[row]) {
          const auto expect =
              families::heisenberg_linear_label_action(*fi.linear_labels[row], a.derivative, 3);
          CHECK(img == row_of_linear(expect));
        } else if (fi.central_exponents[row]) {
          // det = 1, so every positive-multiplicity label stays put
          CHECK(*fi.central_exponents[img] ==
                families::heisenberg_central_label_action(*fi.central_exponents[row],
                                                          a.derivative, 3));
          CHECK(img == static_cast<int>(row));
        } else {
          CHECK(img == static_cast<int>(row));  // trivial character
        }
      }
      if (k == 3) {
        // derivative congruent to the identity: nothing moves at all
        for (std::size_t row = 0; row < fi.table.n_rows(); ++row)
          CHECK(cls.label_action[row] == static_cast<int>(row));
      } else {
        CHECK_FALSE(cls.in_aff_star);  // linear labels move, so the action is outer
        CHECK_FALSE(cls.in_aff_star_star);
      }
    }
  }
}

TEST_CASE("holonomy lattice detects the unreduced double cover") {
  const auto torus = Origami::from_pair(Permutation::identity(1), Permutation::identity(1));
  CHECK(holonomy_is_full(model_of(torus)));
  const auto ell = Origami::from_pair(pc("(0 1)", 3), pc("(0 2)", 3));
  CHECK(holonomy_is_full(model_of(ell)));

  const auto doubled = Origami::from_pair(pc("(0 1)", 2), pc("(0 1)", 2));
  CHECK_FALSE(holonomy_is_full(model_of(doubled)));
}
