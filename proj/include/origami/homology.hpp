#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "origami/characters.hpp"
#include "origami/exactmat.hpp"
#include "origami/origami.hpp"

// Cellular homology of the square decomposition, over exact integers: one
// face per square, edges sigma_s (bottom side, id s) and zeta_s (left side,
// id n + s), vertices the corner-rotation orbits. H1 carries the integral
// intersection form, the automorphism action and the isotypic projectors,
// giving an oracle for the multiplicity formulas that shares no code with
// the character-theoretic route.
namespace origami {

struct ChainComplex {
  int n = 0;           // squares
  int n_vertices = 0;  // corner rotation orbits
  Permutation r, u;
  std::vector<int> vert;  // square -> vertex class of its bottom-left corner
  ZMat boundary2;         // 2n x n, column s = box relation of square s
  ZMat boundary1;         // n_vertices x 2n
  long long genus = 0;
};

// Builds and gates the complex: boundary1 . boundary2 = 0, the rank-nullity
// count dim ker d1 - rank d2 = 2g, and dim H1(M, Sigma*) = n + 1.
ChainComplex build_complex(const Origami& o);

// A closed walk in the 1-skeleton: (edge id, +1 forward / -1 backward).
using Walk = std::vector<std::pair<int, int>>;

struct H1Model {
  ChainComplex cc;
  int dim = 0;  // 2g

  std::vector<Walk> basis_walks;  // reduced closed walk per basis class
  ZMat basis;                     // 2n x 2g, column j = edge vector of walk j
  ZMat intersection;              // 2g x 2g, antisymmetric, |det| = 1

  ZVec st_sigma, st_zeta;  // coordinates of sum_s sigma_s and sum_s zeta_s
  ZMat zero_basis;         // 2g x (2g - 2), integer kernel of pi_*

  // quotient bookkeeping (fundamental-cycle coordinates and the echelonized
  // boundary lattice); internal but kept visible so coordinates of new cycles
  // can be computed after construction
  std::vector<int> cotree_edges;       // edge id per fundamental cycle
  std::vector<Walk> fundamental;       // closed walk per cotree edge
  ColumnEchelon boundary_lattice;      // boxes in fundamental coordinates
  std::vector<int> quotient_rows;      // non-pivot fundamental rows, size 2g
  ZMat quotient_map;                   // 2g x (number of fundamental cycles)

  // ribbon structure: position of each edge germ in the counterclockwise
  // order around its vertex, as (vertex, index)
  std::vector<std::pair<int, int>> germ_out, germ_in;  // indexed by edge id
};

// Builds the model and gates it: unit pivots in the boundary echelon,
// dim H1 = 2g, the form antisymmetric and integrally unimodular, the form
// vanishing against every box boundary, and pi_* of rank two.
H1Model h1_model(const ChainComplex& cc);

// Coordinates of an edge cycle in the H1 basis. Throws InputError when the
// chain is not a cycle.
ZVec h1_coords(const H1Model& m, const ZVec& edge_chain);

// Algebraic intersection number of two closed walks, computed from signed
// corner crossings of the left-pushed second walk around each vertex.
long long pair_walks(const H1Model& m, const Walk& x, const Walk& y);

// H1 matrix of a square relabeling commuting with r and u. Gated to preserve
// the intersection form exactly.
ZMat h1_matrix_of_square_map(const H1Model& m, const Permutation& gamma);

// One H1 matrix per group element, aligned with gamma.element(i). The action
// must be free and commute with r and u (both checked).
std::vector<ZMat> gamma_h1_matrices(const H1Model& m, const GeneratedPermGroup& gamma);

struct OrbitRank {
  std::vector<int> rows;   // character table rows in the Galois orbit
  long long rank = 0;      // rank of the orbit projector restricted to H1^0
  long long expected = 0;  // sum over the orbit of l_alpha dim chi_alpha
};

struct IsotypicRankReport {
  std::vector<OrbitRank> orbits;
  bool all_match = false;
};

// The independent multiplicity oracle: rational Galois-orbit projectors
// applied to the zero part, ranks computed exactly and compared with
// l_alpha dim chi_alpha. Also gates projector idempotence, completeness and
// commutation with the group action.
IsotypicRankReport isotypic_rank_oracle(const H1Model& m,
                                        const GeneratedPermGroup& gamma,
                                        const CharacterTable& t,
                                        const std::vector<ZMat>& rho,
                                        const std::vector<long long>& l);

}  // namespace origami
