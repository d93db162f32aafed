#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "origami/homology.hpp"

// The action of affine self-maps on H1. Generators are powers of the two
// standard shears; the induced edge-path map is rederived here from the
// cut-and-paste of sheared squares and is never trusted bare: every returned
// matrix has passed the two hard gates (symplectic form preservation and
// restriction to the stable plane equal to the derivative).
namespace origami {

enum class Shear { horizontal, vertical };  // T = [[1,1],[0,1]], T' = [[1,0],[1,1]]

struct AffineHomologyAction {
  Shear which = Shear::horizontal;
  long long k = 0;                        // shear power
  std::array<long long, 4> derivative{};  // row-major 2x2, T^k or T'^k
  Permutation relabeling;                 // sheared squares -> original squares
  ZMat h1_matrix;                         // 2g x 2g, gated

  // filled by classify_affine
  bool in_aff_star = false;
  bool in_aff_star_star = false;
};

// The sheared pair: T^k sends (r, u) to (r, u r^-k) and T'^k sends it to
// (r u^-k, u), composition read right to left.
Origami sheared_origami(const Origami& o, Shear which, long long k);

// Least k >= 1 with the k-fold shear isomorphic to the original; searches up
// to 4 n^2 and throws InputError past the bound.
long long minimal_veech_power(const Origami& o, Shear which);

// The generator action at power k. The relabeling is the lexicographically
// least isomorphism; variant selects another one (index into the isomorphism
// list) when the automorphism group is nontrivial. Throws InputError naming
// the minimal valid power when k does not stabilize the origami.
AffineHomologyAction affine_generator_action(const H1Model& m, Shear which,
                                             long long k, int variant = 0);

// One action per available relabeling, in isomorphism-list order.
std::vector<AffineHomologyAction> affine_action_variants(const H1Model& m,
                                                         Shear which, long long k);

struct AffineClassification {
  bool in_aff_star_star = false;  // h1_matrix commutes with every Gamma matrix
  bool in_aff_star = false;       // conjugation by the relabeling is inner
  std::optional<std::uint64_t> inner_witness;  // gamma index realizing it
  // right action on characters: label_action[row] names the row whose
  // character is chi_row precomposed with the conjugation automorphism, so
  // the h1 matrix carries block label_action[row] onto block row
  std::vector<int> label_action;
};

// Decides membership in the two special affine subgroups and computes the
// induced permutation of isotypic labels. Always asserts, exactly over the
// integers, that the action maps each Galois-orbit isotypic block onto the
// block of the image labels; rho must be aligned with gamma.element.
AffineClassification classify_affine(AffineHomologyAction& a, const H1Model& m,
                                     const GeneratedPermGroup& gamma,
                                     const CharacterTable& t,
                                     const std::vector<ZMat>& rho);

// Necessary condition for reducedness: the total (sigma, zeta) coordinates of
// closed curves fill the integer lattice. Not sufficient; callers assert the
// hypothesis itself.
bool holonomy_is_full(const H1Model& m);

}  // namespace origami
