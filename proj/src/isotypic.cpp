#include "origami/isotypic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "origami/config.hpp"
#include "origami/errors.hpp"

namespace origami {

namespace {

// vertex index of every square under the corner rotation
std::vector<int> vertex_map(const SingularityData& sd, int n_squares) {
  std::vector<int> vertex_of(n_squares, -1);
  for (std::size_t v = 0; v < sd.orbits.size(); ++v)
    for (int s : sd.orbits[v]) vertex_of[s] = static_cast<int>(v);
  return vertex_of;
}

long long gated_integer(double x, const char* what) {
  const double rounded = std::round(x);
  if (std::abs(x - rounded) > config().integrality_tol)
    throw InvariantViolation(std::string(what) + " is not an integer");
  return static_cast<long long>(rounded);
}

long long count_vertex_orbits(const SingularityData& sd, const std::vector<int>& vertex_of,
                              const GeneratedPermGroup& gamma) {
  std::vector<Permutation> vgens;
  for (const auto& g : gamma.generators()) {
    std::vector<int> img(sd.orbits.size());
    for (std::size_t v = 0; v < sd.orbits.size(); ++v)
      img[v] = vertex_of[g(sd.orbits[v][0])];
    vgens.emplace_back(std::move(img));
  }
  std::vector<char> seen(sd.orbits.size(), 0);
  long long orbits = 0;
  for (std::size_t v = 0; v < sd.orbits.size(); ++v) {
    if (seen[v]) continue;
    ++orbits;
    for (int w : orbit_of(static_cast<int>(v), vgens)) seen[w] = 1;
  }
  return orbits;
}

}  // namespace

std::vector<long long> multiplicity_m(const Origami& o, const GeneratedPermGroup& gamma,
                                      const CharacterTable& t) {
  const auto sd = singularity_data(o);
  const auto vertex_of = vertex_map(sd, o.n_squares);

  // fixed vertices of one representative per class
  std::vector<long long> fix(t.n_classes(), 0);
  for (std::size_t k = 0; k < t.n_classes(); ++k) {
    const Permutation& rep = t.classes.representatives[k];
    for (std::size_t v = 0; v < sd.orbits.size(); ++v)
      if (vertex_of[rep(sd.orbits[v][0])] == static_cast<int>(v)) ++fix[k];
  }

  const double order = static_cast<double>(gamma.order());
  std::vector<long long> m(t.n_rows());
  for (std::size_t row = 0; row < t.n_rows(); ++row) {
    cplx acc = 0.0;
    for (std::size_t k = 0; k < t.n_classes(); ++k)
      acc += static_cast<double>(t.classes.sizes[k]) * std::conj(t.values[row][k]) *
             static_cast<double>(fix[k]);
    acc /= order;
    if (std::abs(acc.imag()) > config().integrality_tol)
      throw InvariantViolation("vertex multiplicity has a nonreal inner product");
    m[row] = gated_integer(acc.real(), "vertex multiplicity");
    if (m[row] < 0) throw InvariantViolation("vertex multiplicity is negative");
  }
  return m;
}

std::vector<long long> multiplicity_m(const GroupDataOrigami& gd, const CharacterTable& t) {
  const Permutation c = gd.c();
  CosetSpace mod_n(*gd.G, *gd.N);
  const Permutation rho = mod_n.action_of(c);

  std::vector<long long> m(t.n_rows(), 0);
  for (const auto& cycle : rho.cycles(true)) {
    const auto n = static_cast<long long>(cycle.size());
    const Permutation cn = c.power(n);
    std::vector<int> first;
    for (std::size_t j = 0; j < cycle.size(); ++j) {
      const Permutation w = conjugate(mod_n.representative(cycle[j]), cn);
      if (!gd.N->contains(w))
        throw InvariantViolation("g c^n(g) g^-1 escaped the normalizer");
      const Permutation wbar = gd.cosets->left_action_of(w);
      std::vector<int> fixes(t.n_rows());
      for (std::size_t row = 0; row < t.n_rows(); ++row)
        fixes[row] = dim_fix(*gd.Gamma, t, row, wbar);
      if (j == 0)
        first = std::move(fixes);
      else if (fixes != first)
        throw InvariantViolation("coset-sum term varies along a commutator cycle");
    }
    for (std::size_t row = 0; row < t.n_rows(); ++row) m[row] += first[row];
  }

  const auto oracle = multiplicity_m(gd.o, *gd.Gamma, t);
  if (m != oracle)
    throw InvariantViolation(
        "coset-sum multiplicities disagree with the permutation character");
  return m;
}

namespace {

std::vector<long long> l_from_m(const std::vector<long long>& m, const CharacterTable& t,
                                long long r) {
  std::vector<long long> l(t.n_rows());
  for (std::size_t row = 0; row < t.n_rows(); ++row) {
    l[row] = r * t.dims[row] - m[row];
    if (l[row] < 0) throw InvariantViolation("negative homology multiplicity");
  }
  return l;
}

void check_regular_codim(const std::vector<long long>& l, const CharacterTable& t,
                         const GeneratedPermGroup& gamma, const Permutation& cbar) {
  for (std::size_t row = 0; row < t.n_rows(); ++row)
    if (l[row] != t.dims[row] - dim_fix(gamma, t, row, cbar))
      throw InvariantViolation(
          "regular origami multiplicity differs from the fixed-space codimension");
}

}  // namespace

std::vector<long long> multiplicity_l(const Origami& o, const GeneratedPermGroup& gamma,
                                      const CharacterTable& t) {
  const auto m = multiplicity_m(o, gamma, t);
  if (gamma.order() == 0 || o.n_squares % gamma.order() != 0)
    throw InvariantViolation("automorphism order does not divide the square count");
  const auto r = static_cast<long long>(o.n_squares / gamma.order());
  const auto l = l_from_m(m, t, r);

  if (gamma.order() == static_cast<std::uint64_t>(o.n_squares)) {
    // regular case: the commutator acts as the unique automorphism sending
    // the basepoint to its image under the right-translation word
    const int target = o.commutator_action()(0);
    int hits = 0;
    Permutation cbar;
    for (std::uint64_t i = 0; i < gamma.order(); ++i)
      if (gamma.element(i)(0) == target) {
        cbar = gamma.element(i);
        ++hits;
      }
    if (hits != 1)
      throw InvariantViolation("automorphism action on a regular origami is not free");
    check_regular_codim(l, t, gamma, cbar);
  }
  return l;
}

std::vector<long long> multiplicity_l(const GroupDataOrigami& gd, const CharacterTable& t) {
  const auto m = multiplicity_m(gd, t);
  const auto r = static_cast<long long>(gd.G->order() / gd.N->order());
  const auto l = l_from_m(m, t, r);
  if (gd.N->order() == gd.G->order())
    check_regular_codim(l, t, *gd.Gamma, gd.cosets->left_action_of(gd.c()));
  return l;
}

MultiplicityReport real_report(const Origami& o, const GeneratedPermGroup& gamma,
                               const CharacterTable& t, const std::vector<long long>& m,
                               const std::vector<long long>& l, bool quasiregular,
                               const SignatureHints& signatures) {
  if (m.size() != t.n_rows() || l.size() != t.n_rows())
    throw InputError("multiplicity vectors do not match the character table");

  MultiplicityReport rep;
  rep.labels = t.labels;
  rep.dims = t.dims;
  rep.m = m;
  rep.l = l;
  rep.n_squares = o.n_squares;
  rep.gamma_order = gamma.order();
  rep.quasiregular = quasiregular;

  const auto sd = singularity_data(o);
  rep.genus = sd.genus;
  rep.sigma_star_count = sd.sigma_star_count;
  rep.l0 = l[0];
  if (o.n_squares % gamma.order() != 0)
    throw InvariantViolation("automorphism order does not divide the square count");
  rep.r = static_cast<long long>(o.n_squares / gamma.order());

  // sum rules: H0 of the vertices and H1 of the punctured surface
  long long m_total = 0, l_total = 0;
  for (std::size_t row = 0; row < t.n_rows(); ++row) {
    m_total += m[row] * t.dims[row];
    l_total += l[row] * t.dims[row];
  }
  if (m_total != sd.sigma_star_count)
    throw InvariantViolation("vertex multiplicities do not add up to the vertex count");
  if (l_total != 2 * rep.genus - 2)
    throw InvariantViolation("homology multiplicities do not add up to 2g - 2");

  // trivial-row multiplicity is the orbit count of the vertex action
  const auto vertex_of = vertex_map(sd, o.n_squares);
  if (m[0] != count_vertex_orbits(sd, vertex_of, gamma))
    throw InvariantViolation("trivial multiplicity differs from the vertex orbit count");

  // structural theorems on the l values
  if ((rep.l0 == 0) != quasiregular)
    throw InvariantViolation("l0 vanishing disagrees with quasiregularity");
  for (std::size_t row = 0; row < t.n_rows(); ++row) {
    if (l[row] == 1) throw InvariantViolation("a homology multiplicity equals 1");
    if (l[row] < rep.l0)
      throw InvariantViolation("a homology multiplicity drops below l0");
    if (!quasiregular && l[row] < 2)
      throw InvariantViolation("non-quasiregular multiplicities must be at least 2");
  }

  const auto info = real_classification(gamma, t);
  for (std::size_t row = 0; row < t.n_rows(); ++row)
    if (l[row] != l[info.conjugate_partner[row]])
      throw InvariantViolation("conjugate irreducibles were assigned different l");

  if (!signatures.empty() && signatures.size() != info.real_classes.size())
    throw InputError("signature hints do not match the real class count");

  for (std::size_t a = 0; a < info.real_classes.size(); ++a) {
    const auto& rc = info.real_classes[a];
    RealClassReport row;
    row.members = rc.members;
    row.m_a = rc.schur_index;
    row.dim_r = rc.dim_r;
    const long long l_alpha = l[rc.members[0]];
    switch (info.type[rc.members[0]]) {
      case IrrType::real:
        row.type = "real";
        if (l_alpha % 2 != 0)
          throw InvariantViolation("real-type multiplicity must be even");
        row.l_a = l_alpha;
        row.sp_descriptor = "Sp(" + std::to_string(row.l_a) + ", R)";
        break;
      case IrrType::complex_pair:
        row.type = "complex";
        row.l_a = l_alpha;
        row.sp_descriptor =
            "U(p,q), p+q = " + std::to_string(row.l_a) + ", (p,q) unknown";
        break;
      case IrrType::quaternionic:
        row.type = "quaternionic";
        if (l_alpha % 2 != 0)
          throw InvariantViolation("quaternionic multiplicity must be even");
        row.l_a = l_alpha / 2;
        row.sp_descriptor =
            "U_H(p,q), p+q = " + std::to_string(row.l_a) + ", (p,q) unknown";
        break;
    }
    if (!signatures.empty() && signatures[a]) {
      const auto [p, q] = *signatures[a];
      if (row.type == "real") throw InputError("real classes carry no signature");
      if (p < 0 || q < 0 || p + q != row.l_a)
        throw InputError("signature does not add up to the class multiplicity");
      row.sp_descriptor = (row.type == "complex" ? "U(" : "U_H(") + std::to_string(p) +
                          "," + std::to_string(q) + ")";
      row.zero_exponent_bound = static_cast<long long>(std::abs(p - q)) * rc.dim_r;
    }
    rep.real_classes.push_back(std::move(row));
  }
  return rep;
}

MultiplicityReport multiplicity_report(const Origami& o, const SignatureHints& signatures) {
  const auto gamma = automorphism_group(o);
  const auto t = character_table(gamma);
  const auto m = multiplicity_m(o, gamma, t);
  const auto l = multiplicity_l(o, gamma, t);
  return real_report(o, gamma, t, m, l, is_quasiregular(o), signatures);
}

MultiplicityReport multiplicity_report(const GroupDataOrigami& gd,
                                       const SignatureHints& signatures) {
  const auto t = character_table(*gd.Gamma);
  const auto m = multiplicity_m(gd, t);
  const auto l = multiplicity_l(gd, t);
  return real_report(gd.o, *gd.Gamma, t, m, l, is_quasiregular(gd), signatures);
}

namespace sn {

long long closed_form_l(int n, const Partition& lambda) {
  if (n < 2) throw InputError("closed form needs n >= 2");
  if (!is_valid_partition(lambda, n)) throw InputError("partition does not have size n");

  Partition transposition{2};
  for (int i = 0; i < n - 2; ++i) transposition.push_back(1);

  const auto eval = [&](const Partition& lam) {
    const long long dim = dimension(lam);
    const long long chi = character(lam, transposition);
    const long long l = dim - chi;
    // same number via the fixed-space codimension of an involution
    if ((dim + chi) % 2 != 0 || l != 2 * (dim - (dim + chi) / 2))
      throw InvariantViolation("transposition fixed space has broken parity");
    return l;
  };

  const long long l = eval(lambda);
  if (l + eval(conjugate(lambda)) != 2 * dimension(lambda))
    throw InvariantViolation("conjugate partitions break the duality identity");
  return l;
}

}  // namespace sn

}  // namespace origami
