#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "origami/permgroup.hpp"
#include "origami/permutation.hpp"

namespace origami {

// A square-tiled surface given by its right and up permutations on squares.
// Squares are points 0..n-1; square 0 is the canonical basepoint.
struct Origami {
  int n_squares = 0;
  Permutation r, u;
  CommutatorConvention convention = CommutatorConvention::grgu;

  // Validates that <r,u> moves every square (connected surface).
  static Origami from_pair(Permutation r, Permutation u,
                           CommutatorConvention conv = CommutatorConvention::grgu);

  // The geometric corner rotation: walking counterclockwise around the vertex
  // at the bottom-left corner of each square visits squares along
  // u . r . u^-1 . r^-1. Independent of the commutator convention.
  Permutation vertex_permutation() const;

  // Right multiplication by the commutator element of the active convention,
  // as a permutation of squares. Conjugate to the vertex permutation, so all
  // orbit-length data agree.
  Permutation commutator_action() const;

  std::uint64_t input_hash() const;
};

struct SingularityData {
  std::vector<std::vector<int>> orbits;  // vertex = orbit of the corner rotation
  std::vector<int> cone_orders;          // orbit lengths, sorted descending
  int sigma_star_count = 0;
  long long genus = 0;
  std::vector<int> stratum;  // (length - 1) entries, zeros dropped
};

SingularityData singularity_data(const Origami& o);

// All relabelings of squares commuting with r and u: the automorphism group,
// computed square-level (no monodromy enumeration), acting freely.
GeneratedPermGroup automorphism_group(const Origami& o);

// Square relabelings phi with phi a.r = b.r phi and phi a.u = b.u phi.
std::vector<Permutation> origami_isomorphisms(const Origami& a, const Origami& b);

bool is_regular(const Origami& o);
// Square-level criterion: the automorphism orbits on vertices number
// n_squares/|Aut|. For group data the two group-theoretic criteria are also
// evaluated and all answers cross-checked.
bool is_quasiregular(const Origami& o);

// An origami built from (G, g_r, g_u, H): squares are the right cosets of H.
struct GroupDataOrigami {
  std::shared_ptr<const GeneratedPermGroup> G, H, N;
  Permutation g_r, g_u;
  std::shared_ptr<const CosetSpace> cosets;   // H\G
  std::shared_ptr<const GeneratedPermGroup> Gamma;  // N/H on squares
  Origami o;

  // Commutator element of G in the active convention.
  Permutation c() const { return commutator(g_r, g_u, o.convention); }
};

// Validates generation and core-freeness; derives N, the coset action and
// Gamma = N/H acting on the left. Regular case asserts the genus closed form.
GroupDataOrigami from_group_data(GeneratedPermGroup g, const Permutation& g_r,
                                 const Permutation& g_u, GeneratedPermGroup h,
                                 CommutatorConvention conv = CommutatorConvention::grgu);

// Monodromy recovery for a pair origami: G = <r,u>, H = Stab(square 0).
// Subject to the element cap.
GroupDataOrigami group_data_from_pair(const Origami& o);

bool is_quasiregular(const GroupDataOrigami& gd);

struct CosetInvariants {
  // One entry per coset Ng of N in G, indexed like the N\G coset space.
  std::vector<int> n_of;  // least n >= 1 with g c^n g^-1 in N
  std::vector<int> h_of;  // least h >= 1 with g c^h g^-1 in H
  std::vector<std::vector<int>> rho_cycles;  // cycles of Ng -> Ngc
  long long commutator_order = 0;            // kappa
};

// Also verifies the orbit-size bookkeeping: the number of vertices lying over
// a rho-cycle is (n(g)/h(g)) |N/H| for every coset in the cycle.
CosetInvariants coset_invariants(const GroupDataOrigami& gd);

}  // namespace origami
