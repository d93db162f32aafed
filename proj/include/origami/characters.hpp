#pragma once

#include <complex>
#include <string>
#include <vector>

#include "origami/permgroup.hpp"

namespace origami {

using cplx = std::complex<double>;

// Complex irreducible character table. Rows are irreducibles, columns are the
// classes of `classes` in their discovery order; row 0 is always the trivial
// character and the remaining rows are sorted by (dimension, value list), so
// the table layout is deterministic for a given group.
struct CharacterTable {
  ConjugacyClassSet classes;
  std::vector<std::vector<cplx>> values;
  std::vector<int> dims;
  std::vector<std::string> labels;  // one per row

  std::size_t n_rows() const { return values.size(); }
  std::size_t n_classes() const { return classes.count(); }
};

// Generic algorithm (class-matrix eigenvector method with validated numerics
// and deterministic retries). Hard error if validation cannot be met.
CharacterTable character_table(const GeneratedPermGroup& g);

// Orthogonality, dimension and layout checks shared by the generic path and
// the hard-coded family tables. Throws InvariantViolation.
void validate_character_table(const GeneratedPermGroup& g, const CharacterTable& t);

int class_of_element(const GeneratedPermGroup& g, const CharacterTable& t,
                     const Permutation& x);

// (1/ord x) sum_j chi(x^j): the fixed-space dimension of x in the irreducible
// `row`. Gated to be a nonnegative integer.
int dim_fix(const GeneratedPermGroup& g, const CharacterTable& t, std::size_t row,
            const Permutation& x);

// Frobenius-Schur indicator (1/|G|) sum_g chi(g^2), in {-1, 0, +1}.
int fs_indicator(const GeneratedPermGroup& g, const CharacterTable& t, std::size_t row);

enum class IrrType { real, complex_pair, quaternionic };

struct RealTypeInfo {
  std::vector<int> fs;                 // per irreducible row
  std::vector<IrrType> type;           // per irreducible row
  std::vector<int> conjugate_partner;  // row index; self for real/quaternionic
  std::vector<int> schur_index;        // m_a: 2 for quaternionic, else 1

  // A real class is a conjugation orbit of rows: {a} or {a, conj a}.
  struct RealClass {
    std::vector<int> members;
    long long dim_r;  // dim over R of the real irreducible V_a
    int schur_index;
  };
  std::vector<RealClass> real_classes;
  std::vector<int> real_class_of;  // row -> real class id
};

RealTypeInfo real_classification(const GeneratedPermGroup& g, const CharacterTable& t);

// Orbits of rows under chi -> (g -> chi(g^t)), t ranging over units modulo the
// group exponent. These are the rationality (Galois) orbits; summing the
// isotypic projectors over one orbit gives a projector with rational entries.
std::vector<std::vector<int>> galois_orbits(const GeneratedPermGroup& g,
                                            const CharacterTable& t);

}  // namespace origami
