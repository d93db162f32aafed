#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "origami/characters.hpp"
#include "origami/origami.hpp"
#include "origami/sn.hpp"

namespace origami {

// Multiplicity of each Gamma-irreducible in H0 of the vertex set, read off the
// permutation character of gamma on the corner-rotation orbits. Needs nothing
// beyond the square action, so it also serves as the independent oracle for
// the coset-sum route below.
std::vector<long long> multiplicity_m(const Origami& o, const GeneratedPermGroup& gamma,
                                      const CharacterTable& t);

// Coset-representative sum: m_alpha = sum over representatives g of N\G of
// n(g)^-1 dim Fix_alpha(g c^{n(g)} g^-1 mod H). The term is constant along
// each cycle of Ng -> Ngc (asserted), so every cycle contributes an integer.
// The result is cross-checked against the permutation-character route.
std::vector<long long> multiplicity_m(const GroupDataOrigami& gd, const CharacterTable& t);

// l_alpha = r dim chi_alpha - m_alpha with r = n_squares / |Gamma|. When the
// origami is regular this must equal the fixed-space codimension of the
// commutator in Gamma; both paths are computed and compared.
std::vector<long long> multiplicity_l(const Origami& o, const GeneratedPermGroup& gamma,
                                      const CharacterTable& t);
std::vector<long long> multiplicity_l(const GroupDataOrigami& gd, const CharacterTable& t);

struct RealClassReport {
  std::vector<int> members;  // rows of the complex table in this real class
  std::string type;          // "real" | "complex" | "quaternionic"
  int m_a = 1;
  long long l_a = 0;
  long long dim_r = 0;  // real dimension of the real irreducible
  std::string sp_descriptor;
  // |q - p| dim_R V_a, present only when a signature (p, q) was supplied
  std::optional<long long> zero_exponent_bound;
};

struct MultiplicityReport {
  // per complex irreducible, aligned with the character table rows
  std::vector<std::string> labels;
  std::vector<int> dims;
  std::vector<long long> m, l;

  std::vector<RealClassReport> real_classes;

  long long genus = 0;
  int sigma_star_count = 0;
  int n_squares = 0;
  long long l0 = 0;
  long long r = 0;  // n_squares / |Gamma|
  std::uint64_t gamma_order = 0;
  bool quasiregular = false;
};

// Optional externally known signature (p, q) of the invariant Hermitian form
// on a complex or quaternionic real class; never inferred.
using SignatureHints = std::vector<std::optional<std::pair<int, int>>>;

// Assembles the per-real-class bookkeeping and enforces every structural
// constraint: the two sum rules, l != 1, l >= l0, l0 = 0 iff quasiregular,
// parity of l on real and quaternionic classes, and equality of l across
// conjugate rows. Throws InvariantViolation when any of them fails.
MultiplicityReport real_report(const Origami& o, const GeneratedPermGroup& gamma,
                               const CharacterTable& t, const std::vector<long long>& m,
                               const std::vector<long long>& l, bool quasiregular,
                               const SignatureHints& signatures = {});

// One-call pipelines: automorphisms, character table, multiplicities, report.
MultiplicityReport multiplicity_report(const Origami& o, const SignatureHints& signatures = {});
MultiplicityReport multiplicity_report(const GroupDataOrigami& gd,
                                       const SignatureHints& signatures = {});

namespace sn {

// Multiplicity of the S_n irreducible lambda in H1^(0) for the family whose
// reduced commutator is a transposition: dim V_lambda - chi_lambda(transposition),
// which equals twice the codimension of the transposition's fixed space. The
// duality l(lambda) + l(conjugate lambda) = 2 dim V_lambda is asserted.
long long closed_form_l(int n, const Partition& lambda);

}  // namespace sn

}  // namespace origami
