#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "origami/characters.hpp"
#include "origami/origami.hpp"
#include "origami/permgroup.hpp"

// SL(2, F_p) realized as permutations of the p^2 - 1 nonzero column vectors,
// plus the closed-form multiplicity tables for the regular origamis built
// from a pair of elementary matrices.
namespace origami::sl2 {

int pow_mod(long long base, long long e, int p);
int inv_mod(int x, int p);
int legendre(int x, int p);  // -1, 0, +1
int least_primitive_root(int p);
int sqrt_mod(int x, int p);  // a square root of a quadratic residue

using Mat = std::array<int, 4>;  // row-major [[m0 m1],[m2 m3]] over F_p

Mat mat_mul(const Mat& a, const Mat& b, int p);
Mat mat_inv(const Mat& m, int p);

// vector (x, y) != (0, 0) <-> carrier point x + p y - 1
int vec_index(int x, int y, int p);
std::pair<int, int> vec_of_index(int idx, int p);

Permutation vector_action(const Mat& m, int p);
Mat matrix_of(const Permutation& g, int p);  // images of the basis vectors

// <[[1,a],[0,1]], [[1,0],[b,1]]>; full group of order p(p^2-1), asserted
GeneratedPermGroup special_linear_group(int p, int a, int b);

enum class CaseKind { parabolic, hyperbolic, elliptic };

// Conjugacy data of the commutator of the elementary pair: its trace is
// 2 + pi^2 with pi = ab, and the case follows the square class of pi^2 + 4.
struct CommutatorClass {
  CaseKind kind = CaseKind::parabolic;
  long long ord = 0;
  int trace = 0;
  // torus exponent: the commutator is conjugate to diag(eps^j0, eps^-j0)
  // (hyperbolic) or to the j0-th power of the norm-one generator (elliptic)
  int j0 = 0;
};

// Trace recursion t_{n+1} = t_1 t_n - t_{n-1} from t_0 = 2, t_1 = 2 + pi^2;
// the order is the first n with t_n = 2. The parabolic case returns 2p.
long long ord_by_trace(int p, int pi);

CommutatorClass classify_commutator(int p, int pi);

struct RowKind {
  enum Kind { U, V, W_tau, W_prime, W_second, X_phi, X_prime, X_second } kind = U;
  int j = 0;  // character index for W_tau (mod p-1) and X_phi (mod p+1)
};

struct LabeledTable {
  CharacterTable t;
  std::vector<RowKind> kinds;  // aligned with t rows
  std::vector<std::string> names;
};

// Computes the generic character table of g and identifies every row with
// its closed-form counterpart, a bijection (hard error otherwise). This
// pins the numeric table against the known character values exactly.
LabeledTable labeled_table(const GeneratedPermGroup& g, int p);

// Same, for the automorphism group of the regular quotient realization:
// each class representative (a left translation on squares) is pulled back
// to its matrix through the square of the identity coset.
LabeledTable labeled_table(const GroupDataOrigami& gd, int p);

// Closed-form multiplicity of the row's irreducible in H1^(0) of the regular
// origami whose commutator has class cc. Exact integer, >= 0 and never 1.
long long closed_form_l(int p, const CommutatorClass& cc, const RowKind& row);

// Case census over the (p-1)/2 possible values of pi^2, brute forced and
// checked against the closed counts.
struct CaseCensus {
  int parabolic = 0, hyperbolic = 0, elliptic = 0;
};
CaseCensus case_census(int p);

struct TypeCounts {
  int real_count = 0, complex_count = 0, quaternionic_count = 0;
};
TypeCounts expected_type_counts(int p);
TypeCounts table_type_counts(const GeneratedPermGroup& g, const CharacterTable& t);

}  // namespace origami::sl2
