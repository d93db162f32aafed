#include "origami/origami.hpp"

#include <algorithm>
#include <numeric>

#include "origami/errors.hpp"

namespace origami {

Origami Origami::from_pair(Permutation r, Permutation u, CommutatorConvention conv) {
  if (r.degree() != u.degree()) throw InputError("origami: r and u degree mismatch");
  if (r.degree() == 0) throw InputError("origami: needs at least one square");
  Origami o;
  o.n_squares = r.degree();
  o.r = std::move(r);
  o.u = std::move(u);
  o.convention = conv;
  if (static_cast<int>(orbit_of(0, {o.r, o.u}).size()) != o.n_squares)
    throw InputError("disconnected surface: <r,u> is not transitive on squares");
  return o;
}

Permutation Origami::vertex_permutation() const {
  return compose(compose(u, r), compose(u.inverse(), r.inverse()));
}

Permutation Origami::commutator_action() const {
  // Right translation by a product applies its factors left to right, so
  // c = g_r g_u g_r^-1 g_u^-1 moves squares along r, u, r^-1, u^-1 in turn:
  // the function u^-1 . r^-1 . u . r. The inverse convention gives
  // u . r . u^-1 . r^-1.
  if (convention == CommutatorConvention::grgu)
    return compose(compose(u.inverse(), r.inverse()), compose(u, r));
  return vertex_permutation();
}

std::uint64_t Origami::input_hash() const {
  std::vector<int> data;
  data.push_back(n_squares);
  data.insert(data.end(), r.images().begin(), r.images().end());
  data.insert(data.end(), u.images().begin(), u.images().end());
  data.push_back(convention == CommutatorConvention::grgu ? 0 : 1);
  return fnv1a64(data.data(), data.size() * sizeof(int));
}

SingularityData singularity_data(const Origami& o) {
  SingularityData sd;
  const auto v = o.vertex_permutation();
  sd.orbits = v.cycles(true);
  sd.sigma_star_count = static_cast<int>(sd.orbits.size());
  for (const auto& orb : sd.orbits) sd.cone_orders.push_back(static_cast<int>(orb.size()));
  std::sort(sd.cone_orders.rbegin(), sd.cone_orders.rend());
  const int excess = o.n_squares - sd.sigma_star_count;
  if (excess < 0 || excess % 2 != 0)
    throw InvariantViolation("vertex count exceeds squares or breaks genus parity");
  sd.genus = 1 + excess / 2;
  for (int len : sd.cone_orders)
    if (len > 1) sd.stratum.push_back(len - 1);
  long long check = 0;
  for (int len : sd.cone_orders) check += len - 1;
  if (check != excess)
    throw InvariantViolation("cone order bookkeeping disagrees with the euler count");
  return sd;
}

std::vector<Permutation> origami_isomorphisms(const Origami& a, const Origami& b) {
  std::vector<Permutation> out;
  if (a.n_squares != b.n_squares) return out;
  const int n = a.n_squares;
  for (int target = 0; target < n; ++target) {
    std::vector<int> phi(n, -1);
    phi[0] = target;
    std::vector<int> stack{0};
    bool ok = true;
    while (!stack.empty() && ok) {
      const int s = stack.back();
      stack.pop_back();
      const int pairs[2][2] = {{a.r(s), b.r(phi[s])}, {a.u(s), b.u(phi[s])}};
      for (const auto& pr : pairs) {
        const int from = pr[0], to = pr[1];
        if (phi[from] == -1) {
          phi[from] = to;
          stack.push_back(from);
        } else if (phi[from] != to) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;
    // transitivity fills phi completely; verify it is a bijection that
    // intertwines both permutations everywhere
    std::vector<char> hit(n, 0);
    for (int s = 0; s < n; ++s) {
      if (phi[s] < 0 || hit[phi[s]]) {
        ok = false;
        break;
      }
      hit[phi[s]] = 1;
    }
    if (!ok) continue;
    for (int s = 0; s < n && ok; ++s)
      if (phi[a.r(s)] != b.r(phi[s]) || phi[a.u(s)] != b.u(phi[s])) ok = false;
    if (ok) out.emplace_back(std::vector<int>(phi.begin(), phi.end()));
  }
  return out;
}

GeneratedPermGroup automorphism_group(const Origami& o) {
  return GeneratedPermGroup::from_elements(o.n_squares, origami_isomorphisms(o, o));
}

bool is_regular(const Origami& o) {
  return automorphism_group(o).order() == static_cast<std::uint64_t>(o.n_squares);
}

namespace {

// Number of automorphism orbits on vertices vs the index [G:N] = n/|Gamma|.
bool quasiregular_square_level(const Origami& o, const GeneratedPermGroup& gamma) {
  const auto sd = singularity_data(o);
  std::vector<int> vertex_of(o.n_squares, -1);
  for (std::size_t v = 0; v < sd.orbits.size(); ++v)
    for (int s : sd.orbits[v]) vertex_of[s] = static_cast<int>(v);
  // push the gamma generators down to vertex permutations
  std::vector<Permutation> vgens;
  for (const auto& g : gamma.generators()) {
    std::vector<int> img(sd.orbits.size());
    for (std::size_t v = 0; v < sd.orbits.size(); ++v)
      img[v] = vertex_of[g(sd.orbits[v][0])];
    vgens.emplace_back(std::move(img));
  }
  std::vector<char> seen(sd.orbits.size(), 0);
  int orbit_count = 0;
  for (std::size_t v = 0; v < sd.orbits.size(); ++v) {
    if (seen[v]) continue;
    ++orbit_count;
    for (int w : orbit_of(static_cast<int>(v), vgens)) seen[w] = 1;
  }
  if (o.n_squares % gamma.order() != 0)
    throw InvariantViolation("automorphism order does not divide the square count");
  return orbit_count == o.n_squares / static_cast<int>(gamma.order());
}

}  // namespace

bool is_quasiregular(const Origami& o) {
  return quasiregular_square_level(o, automorphism_group(o));
}

GroupDataOrigami from_group_data(GeneratedPermGroup g, const Permutation& g_r,
                                 const Permutation& g_u, GeneratedPermGroup h,
                                 CommutatorConvention conv) {
  if (!g.contains(g_r) || !g.contains(g_u))
    throw InputError("group data: g_r or g_u is not in G");
  // <g_r, g_u> must be all of G; skip the re-enumeration when G was visibly
  // built from this very pair
  const bool g_is_pair_closure =
      g.generators().size() == 2 && g.generators()[0] == g_r && g.generators()[1] == g_u;
  if (!g_is_pair_closure) {
    const auto span = GeneratedPermGroup::closure(g.degree(), {g_r, g_u});
    if (span.order() != g.order())
      throw InputError("group data: g_r and g_u do not generate G");
  }
  if (!is_core_free(g, h)) throw InputError("group data: H is not core-free in G");

  GroupDataOrigami gd;
  gd.G = std::make_shared<GeneratedPermGroup>(std::move(g));
  gd.H = std::make_shared<GeneratedPermGroup>(std::move(h));
  gd.N = std::make_shared<GeneratedPermGroup>(normalizer(*gd.G, *gd.H));
  gd.g_r = g_r;
  gd.g_u = g_u;
  gd.cosets = std::make_shared<CosetSpace>(*gd.G, *gd.H);
  gd.o = Origami::from_pair(gd.cosets->action_of(g_r), gd.cosets->action_of(g_u), conv);
  gd.Gamma = std::make_shared<GeneratedPermGroup>(
      quotient_as_perm_group(*gd.N, *gd.H, *gd.cosets));

  // regular origami genus closed form: g = 1 + |G|(1 - 1/ord(c))/2
  if (gd.Gamma->order() == static_cast<std::uint64_t>(gd.o.n_squares)) {
    const long long kappa = gd.c().order();
    const long long n = gd.o.n_squares;
    if (n % kappa != 0 || (n - n / kappa) % 2 != 0)
      throw InvariantViolation("regular origami genus formula does not apply");
    const long long expected = 1 + (n - n / kappa) / 2;
    if (singularity_data(gd.o).genus != expected)
      throw InvariantViolation("regular origami genus disagrees with the closed form");
  }
  return gd;
}

GroupDataOrigami group_data_from_pair(const Origami& o) {
  auto g = GeneratedPermGroup::closure(o.n_squares, {o.r, o.u});
  auto h = point_stabilizer(g, 0);
  return from_group_data(std::move(g), o.r, o.u, std::move(h), o.convention);
}

bool is_quasiregular(const GroupDataOrigami& gd) {
  // way 1: every conjugate of c lies in N. The scan runs over all of G, so
  // the direction of each individual conjugation does not matter.
  const Permutation c = gd.c();
  bool way1 = true;
  const int deg = gd.G->degree();
  std::vector<int> scratch(deg);
  for (std::uint64_t i = 0; i < gd.G->order() && way1; ++i) {
    const std::int32_t* gi = gd.G->element_images(i);
    const auto& ci = c.images();
    for (int t = 0; t < deg; ++t) scratch[gi[t]] = gi[ci[t]];
    if (!gd.N->contains(Permutation(scratch))) way1 = false;
  }
  // way 2: N normal in G with abelian quotient
  bool way2 = false;
  if (is_normal_in(*gd.N, *gd.G)) {
    CosetSpace mod_n(*gd.G, *gd.N);
    const auto qr = mod_n.action_of(gd.g_r);
    const auto qu = mod_n.action_of(gd.g_u);
    way2 = compose(qr, qu) == compose(qu, qr);
  }
  if (way1 != way2)
    throw InvariantViolation("quasiregularity criteria disagree (normal closure of c vs "
                             "abelian G/N)");
  // square-level criterion must agree as well
  if (way1 != quasiregular_square_level(gd.o, *gd.Gamma))
    throw InvariantViolation("quasiregularity criteria disagree (group level vs vertex "
                             "orbit count)");
  return way1;
}

CosetInvariants coset_invariants(const GroupDataOrigami& gd) {
  CosetInvariants ci;
  const Permutation c = gd.c();
  ci.commutator_order = c.order();
  CosetSpace mod_n(*gd.G, *gd.N);
  const int r = mod_n.count();
  const Permutation rho = mod_n.action_of(c);
  ci.rho_cycles = rho.cycles(true);

  ci.n_of.assign(r, 0);
  ci.h_of.assign(r, 0);
  for (int i = 0; i < r; ++i) {
    const Permutation& rep = mod_n.representative(i);
    const Permutation w = conjugate(rep, c);
    Permutation p = w;
    for (long long k = 1; k <= ci.commutator_order; ++k) {
      if (ci.n_of[i] == 0 && gd.N->contains(p)) ci.n_of[i] = static_cast<int>(k);
      if (ci.h_of[i] == 0 && gd.H->contains(p)) ci.h_of[i] = static_cast<int>(k);
      if (ci.n_of[i] && ci.h_of[i]) break;
      p = mul(p, w);
    }
    if (!ci.n_of[i] || !ci.h_of[i])
      throw InvariantViolation("coset invariants: no power of the conjugated commutator "
                               "reached the subgroup");
    if (ci.h_of[i] % ci.n_of[i] != 0 || ci.commutator_order % ci.h_of[i] != 0)
      throw InvariantViolation("coset invariants break the divisibility chain");
  }
  // n(g) is also the rho-cycle length through Ng
  for (const auto& cyc : ci.rho_cycles)
    for (int coset : cyc)
      if (ci.n_of[coset] != static_cast<int>(cyc.size()))
        throw InvariantViolation("n(g) differs from its rho-cycle length");

  // vertex count over each rho-cycle: (n(g)/h(g)) |N/H|
  const auto rc = gd.o.commutator_action();
  const auto vertex_orbits = rc.cycles(true);
  const long long nh = static_cast<long long>(gd.N->order() / gd.H->order());
  std::vector<long long> vertices_over(r, 0);
  for (const auto& orb : vertex_orbits) {
    const int coset_n = mod_n.coset_of(gd.cosets->representative(orb[0]));
    // the whole orbit projects into one rho-cycle; count it once at its root
    vertices_over[coset_n] += 1;
  }
  for (const auto& cyc : ci.rho_cycles) {
    long long total = 0;
    for (int coset : cyc) total += vertices_over[coset];
    const int i = cyc[0];
    if (total * ci.h_of[i] != nh * ci.n_of[i])
      throw InvariantViolation("vertex count over a rho-cycle disagrees with "
                               "(n/h)|N/H|");
  }
  return ci;
}

}  // namespace origami
