#include "origami/families.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <set>

#include "origami/config.hpp"
#include "origami/errors.hpp"
#include "origami/isotypic.hpp"
#include "origami/sl2p.hpp"
#include "origami/sn.hpp"

namespace origami::families {

namespace {

constexpr auto kInverseWord = CommutatorConvention::inverse_grgu;
const char* kConventionNote =
    "commutator read as g_r^-1 g_u^-1 g_r g_u; every multiplicity is "
    "convention-independent";

void fill_common(FamilyInstance& fi) {
  fi.gamma_order = fi.gd.Gamma->order();
  fi.quasiregular = is_quasiregular(fi.gd);
  fi.regular = is_regular(fi.gd.o);
  fi.commutator_order = fi.gd.c().order();
  const SingularityData sd = singularity_data(fi.gd.o);
  fi.genus = sd.genus;
  fi.sigma_star_count = sd.sigma_star_count;
  fi.convention_note = kConventionNote;
}

void verify_expected_l(const FamilyInstance& fi) {
  if (fi.expected.size() != fi.l.size())
    throw InvariantViolation("expected table size mismatch");
  for (std::size_t r = 0; r < fi.l.size(); ++r) {
    if (fi.expected[r].dim != fi.table.dims[r])
      throw InvariantViolation("family dimension prediction failed at row " +
                               fi.expected[r].label);
    if (fi.expected[r].l != fi.l[r])
      throw InvariantViolation("family multiplicity prediction failed at row " +
                               fi.expected[r].label);
  }
}

long long exact_genus(long long order, long long ord_c) {
  // regular origami: 2g - 2 = |G| (1 - 1/ord(c))
  const long long twice = order - order / ord_c;
  if (order % ord_c != 0 || twice % 2 != 0)
    throw InvariantViolation("genus formula does not divide");
  return 1 + twice / 2;
}

// index in {0..p^3-1} <-> upper unitriangular M(a,b,c) over F_p
int heis_index(int a, int b, int c, int p) { return a + p * b + p * p * c; }

std::array<int, 3> heis_of_index(int i, int p) {
  return {i % p, (i / p) % p, i / (p * p)};
}

std::array<int, 3> heis_mul(const std::array<int, 3>& x, const std::array<int, 3>& y,
                            int p) {
  return {(x[0] + y[0]) % p, (x[1] + y[1]) % p,
          (x[2] + y[2] + x[0] * y[1]) % p};
}

// right translation by g on the group carrier, a product-preserving assignment
Permutation heis_right(const std::array<int, 3>& g, int p) {
  std::vector<int> img(static_cast<std::size_t>(p) * p * p);
  for (int i = 0; i < p * p * p; ++i) {
    const auto x = heis_of_index(i, p);
    const auto y = heis_mul(x, g, p);
    img[static_cast<std::size_t>(i)] = heis_index(y[0], y[1], y[2], p);
  }
  return Permutation(std::move(img));
}

void require_prime(int p) {
  if (p < 2) throw InputError("p must be prime");
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) throw InputError("p must be prime");
}

int mod_pos(long long x, int p) { return static_cast<int>(((x % p) + p) % p); }

// nearest residue k mod p with v close to exp(2 pi i k / p), gated
int root_of_unity_exponent(cplx v, int p) {
  const double two_pi = 2.0 * std::numbers::pi;
  int k = mod_pos(std::llround(std::arg(v) * p / two_pi), p);
  const cplx want = std::polar(1.0, two_pi * k / p);
  if (std::abs(v - want) > config().char_match_tol * 10)
    throw InvariantViolation("character value is not a p-th root of unity");
  return k;
}

}  // namespace

FamilyInstance sn_family(int n) {
  if (n < 2) throw InputError("the symmetric family needs n >= 2");
  const int deg = 2 * n;
  // 0-based: the paper-even points {2,4,...,2n} become the odd positions here;
  // call those marked. g_r is the full cycle, g_u swaps the first two marked.
  std::vector<int> cyc(static_cast<std::size_t>(deg));
  for (int i = 0; i < deg; ++i) cyc[static_cast<std::size_t>(i)] = (i + 1) % deg;
  const Permutation gr{std::move(cyc)};
  const Permutation gu = Permutation::from_cycles("(1 3)", deg);

  GeneratedPermGroup g = GeneratedPermGroup::closure(deg, {gr, gu});
  long long fact = 1;
  for (int i = 2; i <= n; ++i) fact *= i;
  if (g.order() != static_cast<std::uint64_t>(2 * fact * fact))
    throw InvariantViolation("parity-partition group has the wrong order");

  // H: identity on the marked points, arbitrary on the rest
  std::vector<Permutation> hgens;
  for (int i = 0; i + 2 < deg; i += 2)
    hgens.push_back(Permutation::from_cycles(
        "(" + std::to_string(i) + " " + std::to_string(i + 2) + ")", deg));
  if (n == 2) hgens.resize(1);
  GeneratedPermGroup h = GeneratedPermGroup::closure(deg, hgens);
  if (h.order() != static_cast<std::uint64_t>(fact))
    throw InvariantViolation("marked-point stabilizer has the wrong order");

  FamilyInstance fi;
  fi.family = "sn";
  fi.params = "n=" + std::to_string(n);
  fi.gd = from_group_data(std::move(g), gr, gu, std::move(h), kInverseWord);
  fill_common(fi);

  // H and its g_r-conjugate intersect trivially
  {
    int common = 0;
    for (std::uint64_t i = 0; i < fi.gd.H->order(); ++i) {
      const Permutation x = conjugate(gr, fi.gd.H->element(i));
      if (fi.gd.H->contains(x)) ++common;
    }
    if (common != 1)
      throw InvariantViolation("H meets its g_r-conjugate beyond the identity");
  }
  if (fi.gd.G->order() != 2 * fi.gd.N->order() ||
      !is_normal_in(*fi.gd.N, *fi.gd.G))
    throw InvariantViolation("marked-set stabilizer is not normal of index 2");
  if (fi.gamma_order != static_cast<std::uint64_t>(fact) || !fi.quasiregular ||
      fi.regular)
    throw InvariantViolation("symmetric family structure check failed");

  // pull a quotient element back to its permutation of the n marked pairs
  const auto label_perm = [&](const Permutation& gamma_elem) {
    const Permutation rep = fi.gd.cosets->representative(gamma_elem(0));
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
      const int to = rep(2 * k + 1);
      if (to % 2 == 0) throw InvariantViolation("quotient element moves a marked point off the marked set");
      img[static_cast<std::size_t>(k)] = (to - 1) / 2;
    }
    return Permutation(std::move(img));
  };

  // the reduced commutator is the transposition of the first two labels
  {
    const Permutation cbar = label_perm(fi.gd.cosets->left_action_of(fi.gd.c()));
    if (cbar != Permutation::from_cycles("(0 1)", n))
      throw InvariantViolation("reduced commutator is not the expected transposition");
  }

  fi.table = character_table(*fi.gd.Gamma);
  // identify each table row with its partition through the class cycle types
  std::vector<sn::Partition> class_type;
  for (const Permutation& rep : fi.table.classes.representatives) {
    const Permutation q = label_perm(rep);
    sn::Partition mu;
    for (const auto& cycle : q.cycles(true)) mu.push_back(static_cast<int>(cycle.size()));
    std::sort(mu.rbegin(), mu.rend());
    class_type.push_back(mu);
  }
  const std::vector<sn::Partition> parts = sn::partitions(n);
  std::vector<int> row_of(parts.size(), -1);
  std::vector<bool> used(fi.table.n_rows(), false);
  for (std::size_t w = 0; w < parts.size(); ++w) {
    for (std::size_t r = 0; r < fi.table.n_rows(); ++r) {
      if (used[r]) continue;
      bool ok = true;
      for (std::size_t k = 0; k < fi.table.n_classes() && ok; ++k) {
        const double want = static_cast<double>(sn::character(parts[w], class_type[k]));
        ok = std::abs(fi.table.values[r][k] - want) <= config().char_match_tol;
      }
      if (ok) {
        row_of[w] = static_cast<int>(r);
        used[r] = true;
        break;
      }
    }
    if (row_of[w] < 0)
      throw InvariantViolation("partition character not found in the quotient table");
  }

  fi.m = multiplicity_m(fi.gd, fi.table);
  fi.l = multiplicity_l(fi.gd, fi.table);
  fi.expected.resize(fi.table.n_rows());
  for (std::size_t w = 0; w < parts.size(); ++w) {
    ExpectedRow row;
    row.label = sn::to_string(parts[w]);
    row.dim = static_cast<int>(sn::dimension(parts[w]));
    row.l = sn::closed_form_l(n, parts[w]);
    fi.expected[static_cast<std::size_t>(row_of[w])] = std::move(row);
  }
  verify_expected_l(fi);
  return fi;
}

FamilyInstance klein_example() {
  const int deg = 8;
  const Permutation gr = Permutation::from_cycles("(0 1)(4 5)(2 3 6 7)", deg);
  const Permutation gu = Permutation::from_cycles("(0 2)(4 6)(1 3 5 7)", deg);
  GeneratedPermGroup g = GeneratedPermGroup::closure(deg, {gr, gu});

  // H fixes the residue class {0, 4} pointwise
  GeneratedPermGroup h = point_stabilizer(point_stabilizer(g, 0), 4);

  FamilyInstance fi;
  fi.family = "klein";
  fi.params = "";
  fi.gd = from_group_data(std::move(g), gr, gu, std::move(h), kInverseWord);
  fill_common(fi);

  const Permutation gr2 = mul(gr, gr);
  const Permutation gu2 = mul(gu, gu);
  if (gr2 != Permutation::from_cycles("(2 6)(3 7)", deg) ||
      gu2 != Permutation::from_cycles("(1 5)(3 7)", deg))
    throw InvariantViolation("generator squares are not the expected involutions");
  if (!fi.gd.H->contains(gr2) || !fi.gd.H->contains(gu2))
    throw InvariantViolation("generator squares must lie in H");
  if (!fi.quasiregular || fi.regular || fi.gamma_order != 2)
    throw InvariantViolation("Klein example structure check failed");

  // G/N is the Klein four-group: order four, noncyclic
  {
    const CosetSpace gn(*fi.gd.G, *fi.gd.N);
    const GeneratedPermGroup q = quotient_as_perm_group(*fi.gd.G, *fi.gd.N, gn);
    if (q.order() != 4) throw InvariantViolation("G/N must have order four");
    for (std::uint64_t i = 0; i < q.order(); ++i)
      if (q.element(i).order() > 2)
        throw InvariantViolation("G/N must be noncyclic of exponent two");
  }

  fi.table = character_table(*fi.gd.Gamma);
  fi.m = multiplicity_m(fi.gd, fi.table);
  fi.l = multiplicity_l(fi.gd, fi.table);
  fi.expected = {{"trivial", 1, 0}, {"sign", 1, 2}};
  if (fi.genus != 2 || fi.commutator_order != 2)
    throw InvariantViolation("Klein example geometry check failed");
  verify_expected_l(fi);
  return fi;
}

FamilyInstance sl2p_family(int p, int a, int b) {
  GeneratedPermGroup g = sl2::special_linear_group(p, a, b);
  const Permutation gr = sl2::vector_action({1, mod_pos(a, p), 0, 1}, p);
  const Permutation gu = sl2::vector_action({1, 0, mod_pos(b, p), 1}, p);

  FamilyInstance fi;
  fi.family = "sl2p";
  fi.params = "p=" + std::to_string(p) + " a=" + std::to_string(a) +
              " b=" + std::to_string(b);
  fi.gd = from_group_data(std::move(g), gr, gu,
                          GeneratedPermGroup::trivial(p * p - 1), kInverseWord);
  fill_common(fi);

  const sl2::CommutatorClass cc = sl2::classify_commutator(p, mod_pos(1LL * a * b, p));
  if (cc.ord != fi.commutator_order)
    throw InvariantViolation("trace-recursion order disagrees with the permutation order");
  if (!fi.regular || !fi.quasiregular ||
      fi.gamma_order != fi.gd.G->order())
    throw InvariantViolation("special linear family must be regular");
  if (fi.genus != exact_genus(static_cast<long long>(fi.gd.G->order()), cc.ord))
    throw InvariantViolation("genus closed form failed");

  const sl2::LabeledTable lt = sl2::labeled_table(fi.gd, p);
  fi.table = lt.t;
  fi.m = multiplicity_m(fi.gd, fi.table);
  fi.l = multiplicity_l(fi.gd, fi.table);
  fi.expected.resize(fi.table.n_rows());
  for (std::size_t r = 0; r < fi.table.n_rows(); ++r)
    fi.expected[r] = {lt.names[r], fi.table.dims[r],
                      sl2::closed_form_l(p, cc, lt.kinds[r])};
  verify_expected_l(fi);

  const sl2::TypeCounts got = sl2::table_type_counts(*fi.gd.Gamma, fi.table);
  const sl2::TypeCounts want = sl2::expected_type_counts(p);
  if (got.real_count != want.real_count || got.complex_count != want.complex_count ||
      got.quaternionic_count != want.quaternionic_count)
    throw InvariantViolation("Frobenius-Schur type counts failed");
  sl2::case_census(p);  // self-checking against the closed counts
  return fi;
}

FamilyInstance heisenberg_regular(int p) {
  require_prime(p);
  const Permutation gr = heis_right({1, 0, 0}, p);
  const Permutation gu = heis_right({0, 1, 0}, p);
  GeneratedPermGroup g = GeneratedPermGroup::closure(p * p * p, {gr, gu});
  if (g.order() != static_cast<std::uint64_t>(p) * p * p)
    throw InvariantViolation("Heisenberg carrier has the wrong order");

  FamilyInstance fi;
  fi.family = "heisenberg";
  fi.params = "p=" + std::to_string(p);
  fi.gd = from_group_data(std::move(g), gr, gu,
                          GeneratedPermGroup::trivial(p * p * p), kInverseWord);
  fill_common(fi);
  if (!fi.regular || fi.commutator_order != p)
    throw InvariantViolation("Heisenberg family must be regular with central commutator");
  if (fi.genus != exact_genus(1LL * p * p * p, p))
    throw InvariantViolation("Heisenberg genus closed form failed");

  fi.table = character_table(*fi.gd.Gamma);
  fi.m = multiplicity_m(fi.gd, fi.table);
  fi.l = multiplicity_l(fi.gd, fi.table);

  // name rows by their labels: linear rows by (m, n) via the generator images,
  // dimension-p rows by the central exponent
  const Permutation im_gr = fi.gd.cosets->left_action_of(fi.gd.g_r);
  const Permutation im_gu = fi.gd.cosets->left_action_of(fi.gd.g_u);
  const Permutation im_c = fi.gd.cosets->left_action_of(fi.gd.c());
  const int cl_gr = class_of_element(*fi.gd.Gamma, fi.table, im_gr);
  const int cl_gu = class_of_element(*fi.gd.Gamma, fi.table, im_gu);
  const int cl_c = class_of_element(*fi.gd.Gamma, fi.table, im_c);

  fi.expected.resize(fi.table.n_rows());
  fi.linear_labels.assign(fi.table.n_rows(), std::nullopt);
  fi.central_exponents.assign(fi.table.n_rows(), std::nullopt);
  std::set<std::pair<int, int>> seen_mn;
  std::set<int> seen_k;
  for (std::size_t r = 0; r < fi.table.n_rows(); ++r) {
    if (fi.table.dims[r] == 1) {
      const int mm = root_of_unity_exponent(fi.table.values[r][static_cast<std::size_t>(cl_gr)], p);
      const int nn = root_of_unity_exponent(fi.table.values[r][static_cast<std::size_t>(cl_gu)], p);
      fi.linear_labels[r] = {mm, nn};
      seen_mn.insert({mm, nn});
      fi.expected[r] = {"chi(" + std::to_string(mm) + "," + std::to_string(nn) + ")", 1, 0};
    } else if (fi.table.dims[r] == p) {
      const int k = root_of_unity_exponent(
          fi.table.values[r][static_cast<std::size_t>(cl_c)] / static_cast<double>(p), p);
      if (k == 0) throw InvariantViolation("central exponent must be nonzero");
      fi.central_exponents[r] = k;
      seen_k.insert(k);
      fi.expected[r] = {"rho(" + std::to_string(k) + ")", p, p};
    } else {
      throw InvariantViolation("unexpected irreducible dimension for the Heisenberg group");
    }
  }
  if (seen_mn.size() != static_cast<std::size_t>(p) * p ||
      seen_k.size() != static_cast<std::size_t>(p - 1))
    throw InvariantViolation("Heisenberg labels must be distinct and complete");
  verify_expected_l(fi);

  // orientation-preserving derivatives fix every conjugate pair {k, -k}:
  // det = 1 keeps each exponent, det = -1 swaps k and -k
  for (int det : {1, p - 1})
    for (int k = 1; k < p; ++k) {
      const int to = mod_pos(1LL * k * det, p);
      if (to != k && to != mod_pos(-k, p))
        throw InvariantViolation("conjugate-pair label orbit is not preserved");
    }
  return fi;
}

FamilyInstance heisenberg_quasiregular(int p) {
  require_prime(p);
  const Permutation gr = heis_right({1, 0, 0}, p);
  const Permutation gu = heis_right({0, 1, 0}, p);
  GeneratedPermGroup g = GeneratedPermGroup::closure(p * p * p, {gr, gu});
  GeneratedPermGroup h = GeneratedPermGroup::closure(p * p * p, {gu});
  if (h.order() != static_cast<std::uint64_t>(p))
    throw InvariantViolation("<g_u> must have order p");

  FamilyInstance fi;
  fi.family = "heisenberg-qr";
  fi.params = "p=" + std::to_string(p);
  fi.gd = from_group_data(std::move(g), gr, gu, std::move(h), kInverseWord);
  fill_common(fi);
  if (fi.gd.o.n_squares != p * p || fi.regular || !fi.quasiregular)
    throw InvariantViolation("Heisenberg quotient structure check failed");
  if (fi.gamma_order != static_cast<std::uint64_t>(p) || !fi.gd.Gamma->is_abelian())
    throw InvariantViolation("automorphism group must be cyclic of order p");
  if (fi.genus != 1 + 1LL * p * (p - 1) / 2 || fi.commutator_order != p)
    throw InvariantViolation("Heisenberg quotient geometry check failed");

  fi.table = character_table(*fi.gd.Gamma);
  fi.m = multiplicity_m(fi.gd, fi.table);
  fi.l = multiplicity_l(fi.gd, fi.table);
  fi.expected.resize(fi.table.n_rows());
  for (std::size_t r = 0; r < fi.table.n_rows(); ++r)
    fi.expected[r] = {r == 0 ? "trivial" : "character " + std::to_string(r), 1,
                      r == 0 ? 0LL : p};
  verify_expected_l(fi);
  return fi;
}

FamilyInstance family_by_name(const std::string& name, int n, int p, int a, int b) {
  if (name == "sn") return sn_family(n);
  if (name == "klein") return klein_example();
  if (name == "sl2p") return sl2p_family(p, a, b);
  if (name == "heisenberg") return heisenberg_regular(p);
  if (name == "heisenberg-qr") return heisenberg_quasiregular(p);
  throw InputError("unknown family: " + name);
}

std::pair<int, int> heisenberg_linear_label_action(std::pair<int, int> mn,
                                                   const std::array<long long, 4>& d,
                                                   int p) {
  return {mod_pos(mn.first * d[0] + mn.second * d[2], p),
          mod_pos(mn.first * d[1] + mn.second * d[3], p)};
}

int heisenberg_central_label_action(int k, const std::array<long long, 4>& d, int p) {
  return mod_pos(k * (d[0] * d[3] - d[1] * d[2]), p);
}

}  // namespace origami::families
