#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "origami/characters.hpp"
#include "origami/origami.hpp"

// Built-in example families. Every instance carries its predicted data
// (automorphism group size, quasiregularity, commutator order, genus and the
// per-row multiplicities where a closed form exists) and the constructor
// verifies each prediction against the generic pipeline before returning.
namespace origami::families {

struct ExpectedRow {
  std::string label;  // family naming for the irreducible behind this table row
  int dim = 0;
  long long l = 0;
};

struct FamilyInstance {
  std::string family;  // sn | klein | sl2p | heisenberg | heisenberg-qr
  std::string params;  // "n=4" or "p=5 a=1 b=1"
  GroupDataOrigami gd;

  CharacterTable table;                // table of Gamma, rows aligned with the fields below
  std::vector<ExpectedRow> expected;   // closed-form l per row (label, dim, l)
  std::vector<long long> m, l;         // generic-pipeline values; equal expected l by construction

  std::uint64_t gamma_order = 0;
  bool quasiregular = false;
  bool regular = false;
  long long commutator_order = 0;
  long long genus = 0;
  int sigma_star_count = 0;

  // Heisenberg label metadata, empty for the other families: linear rows carry
  // (m, n) with chi(M(a,b,c)) = e(ma + nb), dimension-p rows carry the central
  // exponent k with chi(M(0,0,1)) = p e(k), where e(x) = exp(2 pi i x / p).
  std::vector<std::optional<std::pair<int, int>>> linear_labels;
  std::vector<std::optional<int>> central_exponents;

  std::string convention_note;
};

// Quasiregular family on 2 n! squares with automorphism group S_n: G is the
// parity-preserving-or-swapping subgroup of the symmetric group on 2n points,
// g_r the full cycle, g_u one transposition of marked points.
FamilyInstance sn_family(int n);

// Eight-square quasiregular, non-regular example whose G/N is the Klein
// four-group (the smallest noncyclic case).
FamilyInstance klein_example();

// Regular origami of SL(2, F_p) on the (p-1)p(p+1) group elements, built from
// the two elementary matrices with parameters a, b (ab != 0 mod p).
FamilyInstance sl2p_family(int p, int a, int b);

// Regular origami of the Heisenberg group mod p on p^3 squares.
FamilyInstance heisenberg_regular(int p);

// Quasiregular, non-regular sibling with H = <g_u>, p^2 squares, Gamma = Z/p.
FamilyInstance heisenberg_quasiregular(int p);

FamilyInstance family_by_name(const std::string& name, int n, int p, int a, int b);

// Label transport under a derivative matrix [[d0,d1],[d2,d3]]: linear labels
// map by right multiplication, central exponents by the determinant.
std::pair<int, int> heisenberg_linear_label_action(std::pair<int, int> mn,
                                                   const std::array<long long, 4>& d,
                                                   int p);
int heisenberg_central_label_action(int k, const std::array<long long, 4>& d, int p);

}  // namespace origami::families
