#include "origami/homology.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <deque>
#include <map>

#include "origami/config.hpp"
#include "origami/errors.hpp"

namespace origami {

namespace {

bool zequal(const ZMat& a, const ZMat& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

ZMat zadd(ZMat a, const ZMat& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) a[i][j] += b[i][j];
  return a;
}

ZMat zscale(ZMat a, const mpz_class& c) {
  for (auto& row : a)
    for (auto& x : row) x *= c;
  return a;
}

ZMat zidentity(std::size_t n) {
  ZMat m = zmat(n, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

int sigma_id(int s) { return s; }
int zeta_id(const ChainComplex& cc, int s) { return cc.n + s; }

int edge_start(const ChainComplex& cc, int e) {
  return e < cc.n ? cc.vert[e] : cc.vert[e - cc.n];
}

int edge_end(const ChainComplex& cc, int e) {
  return e < cc.n ? cc.vert[cc.r(e)] : cc.vert[cc.u(e - cc.n)];
}

// The relation bounding square s, as an edge vector.
ZVec box_vector(const ChainComplex& cc, int s) {
  ZVec v(2 * static_cast<std::size_t>(cc.n), 0);
  v[static_cast<std::size_t>(sigma_id(s))] += 1;
  v[static_cast<std::size_t>(zeta_id(cc, cc.r(s)))] += 1;
  v[static_cast<std::size_t>(sigma_id(cc.u(s)))] -= 1;
  v[static_cast<std::size_t>(zeta_id(cc, s))] -= 1;
  return v;
}

Walk box_walk(const ChainComplex& cc, int s) {
  return {{sigma_id(s), 1},
          {zeta_id(cc, cc.r(s)), 1},
          {sigma_id(cc.u(s)), -1},
          {zeta_id(cc, s), -1}};
}

Walk reduce_walk(Walk w) {
  bool changed = true;
  while (changed && w.size() >= 2) {
    changed = false;
    const std::size_t len = w.size();
    for (std::size_t i = 0; i < len; ++i) {
      const std::size_t j = (i + 1) % len;
      if (w[i].first == w[j].first && w[i].second == -w[j].second) {
        if (j > i) {
          w.erase(w.begin() + static_cast<std::ptrdiff_t>(i),
                  w.begin() + static_cast<std::ptrdiff_t>(j + 1));
        } else {  // wrap-around pair
          w.pop_back();
          w.erase(w.begin());
        }
        changed = true;
        break;
      }
    }
  }
  return w;
}

struct Chord {
  int vertex;
  long long a, b;  // germ positions scaled by 4, a = arrival, b = departure
};

// Splits a reduced closed walk into one chord per vertex passage. Pushed
// walks sit a quarter-slot off their germs (inward before, outward after),
// realizing the left-pushed copy of the cycle.
std::vector<Chord> walk_chords(const H1Model& m, const Walk& w, bool pushed) {
  std::vector<Chord> out;
  const std::size_t len = w.size();
  for (std::size_t i = 0; i < len; ++i) {
    const auto [e, d] = w[i];
    const auto [f, d2] = w[(i + 1) % len];
    const auto arr = d > 0 ? m.germ_in[static_cast<std::size_t>(e)]
                           : m.germ_out[static_cast<std::size_t>(e)];
    const auto dep = d2 > 0 ? m.germ_out[static_cast<std::size_t>(f)]
                            : m.germ_in[static_cast<std::size_t>(f)];
    if (arr.first != dep.first)
      throw InvariantViolation("walk steps do not chain through a common vertex");
    long long a = 4LL * arr.second, b = 4LL * dep.second;
    if (pushed) {
      a -= 1;
      b += 1;
    }
    out.push_back({arr.first, a, b});
  }
  return out;
}

}  // namespace

ChainComplex build_complex(const Origami& o) {
  ChainComplex cc;
  cc.n = o.n_squares;
  cc.r = o.r;
  cc.u = o.u;
  const int n = cc.n;
  const Permutation vp = o.vertex_permutation();

  cc.vert.assign(static_cast<std::size_t>(n), -1);
  int nv = 0;
  for (int s0 = 0; s0 < n; ++s0) {
    if (cc.vert[static_cast<std::size_t>(s0)] >= 0) continue;
    for (int a = s0; cc.vert[static_cast<std::size_t>(a)] < 0; a = vp(a))
      cc.vert[static_cast<std::size_t>(a)] = nv;
    ++nv;
  }
  cc.n_vertices = nv;

  cc.boundary2 = zmat(2 * static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s) {
    const ZVec v = box_vector(cc, s);
    for (int e = 0; e < 2 * n; ++e)
      cc.boundary2[static_cast<std::size_t>(e)][static_cast<std::size_t>(s)] =
          v[static_cast<std::size_t>(e)];
  }
  cc.boundary1 = zmat(static_cast<std::size_t>(nv), 2 * static_cast<std::size_t>(n));
  for (int e = 0; e < 2 * n; ++e) {
    cc.boundary1[static_cast<std::size_t>(edge_end(cc, e))][static_cast<std::size_t>(e)] += 1;
    cc.boundary1[static_cast<std::size_t>(edge_start(cc, e))][static_cast<std::size_t>(e)] -= 1;
  }
  if (!is_zero(zmul(cc.boundary1, cc.boundary2)))
    throw InvariantViolation("boundary of a boundary is nonzero");

  // genus from the Euler count, cross-checked against the singularity data
  if ((n - nv) % 2 != 0) throw InvariantViolation("Euler characteristic is odd");
  cc.genus = 1 + (n - nv) / 2;
  const SingularityData sd = singularity_data(o);
  if (sd.genus != cc.genus || sd.sigma_star_count != nv)
    throw InvariantViolation("complex disagrees with the singularity data");

  const auto rank_d2 = static_cast<long long>(rank_z(cc.boundary2));
  const auto rank_d1 = static_cast<long long>(rank_z(cc.boundary1));
  if ((2 * n - rank_d1) - rank_d2 != 2 * cc.genus)
    throw InvariantViolation("rank-nullity count does not give 2g");
  if (2 * n - rank_d2 != n + 1)
    throw InvariantViolation("relative homology dimension is not n + 1");
  return cc;
}

H1Model h1_model(const ChainComplex& cc) {
  H1Model m;
  m.cc = cc;
  const int n = cc.n;
  const int nv = cc.n_vertices;
  const Permutation rinv = cc.r.inverse();
  const Permutation uinv = cc.u.inverse();
  const Permutation vp = compose(compose(cc.u, cc.r), compose(uinv, rinv));

  // ribbon structure: counterclockwise germ order around each vertex; per
  // turn square a the order is east (out sigma_a), north (out zeta_a),
  // west (in sigma of the left neighbor), south (in zeta below)
  m.germ_out.assign(2 * static_cast<std::size_t>(n), {-1, -1});
  m.germ_in.assign(2 * static_cast<std::size_t>(n), {-1, -1});
  {
    const auto put = [](std::vector<std::pair<int, int>>& table, int edge, int v,
                        int pos) {
      auto& slot = table[static_cast<std::size_t>(edge)];
      if (slot.first != -1) throw InvariantViolation("edge germ assigned twice");
      slot = {v, pos};
    };
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int s0 = 0; s0 < n; ++s0) {
      if (seen[static_cast<std::size_t>(s0)]) continue;
      const int v = cc.vert[static_cast<std::size_t>(s0)];
      int pos = 0;
      for (int a = s0; !seen[static_cast<std::size_t>(a)]; a = vp(a)) {
        seen[static_cast<std::size_t>(a)] = 1;
        put(m.germ_out, sigma_id(a), v, pos++);
        put(m.germ_out, zeta_id(cc, a), v, pos++);
        put(m.germ_in, sigma_id(rinv(a)), v, pos++);
        put(m.germ_in, zeta_id(cc, cc.r(uinv(rinv(a)))), v, pos++);
      }
    }
    for (int e = 0; e < 2 * n; ++e) {
      if (m.germ_out[static_cast<std::size_t>(e)].first != edge_start(cc, e) ||
          m.germ_in[static_cast<std::size_t>(e)].first != edge_end(cc, e))
        throw InvariantViolation("germ table disagrees with edge endpoints");
    }
  }

  // spanning tree of the skeleton graph by breadth-first search
  std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(nv));
  for (int e = 0; e < 2 * n; ++e) {
    adj[static_cast<std::size_t>(edge_start(cc, e))].push_back({e, 1});
    adj[static_cast<std::size_t>(edge_end(cc, e))].push_back({e, -1});
  }
  std::vector<int> depth(static_cast<std::size_t>(nv), -1);
  // climbing step from v toward the root: (edge, direction of traversal)
  std::vector<std::pair<int, int>> up(static_cast<std::size_t>(nv), {-1, 0});
  std::vector<char> in_tree(2 * static_cast<std::size_t>(n), 0);
  {
    std::deque<int> q{0};
    depth[0] = 0;
    while (!q.empty()) {
      const int v = q.front();
      q.pop_front();
      for (const auto& [e, d] : adj[static_cast<std::size_t>(v)]) {
        const int w = d > 0 ? edge_end(cc, e) : edge_start(cc, e);
        if (depth[static_cast<std::size_t>(w)] >= 0) continue;
        depth[static_cast<std::size_t>(w)] = depth[static_cast<std::size_t>(v)] + 1;
        up[static_cast<std::size_t>(w)] = {e, -d};  // traverse back toward v
        in_tree[static_cast<std::size_t>(e)] = 1;
        q.push_back(w);
      }
    }
    for (int v = 0; v < nv; ++v)
      if (depth[static_cast<std::size_t>(v)] < 0)
        throw InvariantViolation("skeleton graph is disconnected");
  }

  const auto climb = [&](int v) {
    Walk path;
    while (v != 0) {
      const auto [e, d] = up[static_cast<std::size_t>(v)];
      path.push_back({e, d});
      v = d > 0 ? edge_end(cc, e) : edge_start(cc, e);
    }
    return path;
  };

  for (int e = 0; e < 2 * n; ++e)
    if (!in_tree[static_cast<std::size_t>(e)]) m.cotree_edges.push_back(e);
  const int nfund = static_cast<int>(m.cotree_edges.size());
  if (nfund != 2 * n - (nv - 1))
    throw InvariantViolation("spanning tree has the wrong size");

  for (const int e : m.cotree_edges) {
    Walk w{{e, 1}};
    Walk from_end = climb(edge_end(cc, e));    // end -> root
    Walk from_start = climb(edge_start(cc, e));  // start -> root
    while (!from_end.empty() && !from_start.empty() &&
           from_end.back() == from_start.back()) {
      from_end.pop_back();
      from_start.pop_back();
    }
    w.insert(w.end(), from_end.begin(), from_end.end());
    for (auto it = from_start.rbegin(); it != from_start.rend(); ++it)
      w.push_back({it->first, -it->second});
    m.fundamental.push_back(reduce_walk(std::move(w)));
  }

  const auto walk_vector = [&](const Walk& w) {
    ZVec v(2 * static_cast<std::size_t>(n), 0);
    for (const auto& [e, d] : w) v[static_cast<std::size_t>(e)] += d;
    return v;
  };
  std::vector<ZVec> fund_vec;
  for (const Walk& w : m.fundamental) fund_vec.push_back(walk_vector(w));

  // boxes in fundamental coordinates; the quotient by their column lattice
  // is H1, free because every echelon pivot is a unit
  ZMat bnd = zmat(static_cast<std::size_t>(nfund), static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s) {
    const ZVec bx = box_vector(cc, s);
    for (int i = 0; i < nfund; ++i)
      bnd[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)] =
          bx[static_cast<std::size_t>(m.cotree_edges[static_cast<std::size_t>(i)])];
  }
  m.boundary_lattice = column_echelon(std::move(bnd));
  if (static_cast<int>(m.boundary_lattice.pivot_rows.size()) != n - 1)
    throw InvariantViolation("boundary lattice rank is not n - 1");
  for (const auto& p : m.boundary_lattice.pivot_values)
    if (p != 1 && p != -1)
      throw InvariantViolation("boundary lattice pivot is not a unit");

  {
    std::vector<char> is_pivot(static_cast<std::size_t>(nfund), 0);
    for (const int p : m.boundary_lattice.pivot_rows)
      is_pivot[static_cast<std::size_t>(p)] = 1;
    for (int i = 0; i < nfund; ++i)
      if (!is_pivot[static_cast<std::size_t>(i)]) m.quotient_rows.push_back(i);
  }
  m.dim = static_cast<int>(m.quotient_rows.size());
  if (m.dim != 2 * cc.genus)
    throw InvariantViolation("H1 dimension does not equal 2g");

  // quotient projection, one reduced unit vector per fundamental coordinate
  m.quotient_map = zmat(static_cast<std::size_t>(m.dim), static_cast<std::size_t>(nfund));
  for (int i = 0; i < nfund; ++i) {
    ZVec e(static_cast<std::size_t>(nfund), 0);
    e[static_cast<std::size_t>(i)] = 1;
    const ZVec red = reduce_by_echelon(m.boundary_lattice, std::move(e));
    for (int j = 0; j < m.dim; ++j)
      m.quotient_map[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] =
          red[static_cast<std::size_t>(m.quotient_rows[static_cast<std::size_t>(j)])];
  }

  m.basis = zmat(2 * static_cast<std::size_t>(n), static_cast<std::size_t>(m.dim));
  for (int j = 0; j < m.dim; ++j) {
    const int fi = m.quotient_rows[static_cast<std::size_t>(j)];
    m.basis_walks.push_back(m.fundamental[static_cast<std::size_t>(fi)]);
    for (int e = 0; e < 2 * n; ++e)
      m.basis[static_cast<std::size_t>(e)][static_cast<std::size_t>(j)] =
          fund_vec[static_cast<std::size_t>(fi)][static_cast<std::size_t>(e)];
  }

  // intersection numbers by corner crossings
  m.intersection = zmat(static_cast<std::size_t>(m.dim), static_cast<std::size_t>(m.dim));
  for (int i = 0; i < m.dim; ++i)
    for (int j = 0; j < m.dim; ++j)
      m.intersection[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          static_cast<long>(pair_walks(m, m.basis_walks[static_cast<std::size_t>(i)],
                                       m.basis_walks[static_cast<std::size_t>(j)]));
  for (int i = 0; i < m.dim; ++i)
    for (int j = 0; j <= i; ++j) {
      const auto& a = m.intersection[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      const auto& b = m.intersection[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
      if (a != -b) throw InvariantViolation("intersection form is not antisymmetric");
    }
  {
    mpz_class d = det_z(m.intersection);
    if (d != 1 && d != -1)
      throw InvariantViolation("intersection form is not unimodular");
  }
  for (int s = 0; s < n; ++s) {
    const Walk bw = box_walk(cc, s);
    for (int i = 0; i < m.dim; ++i) {
      if (pair_walks(m, m.basis_walks[static_cast<std::size_t>(i)], bw) != 0 ||
          pair_walks(m, bw, m.basis_walks[static_cast<std::size_t>(i)]) != 0)
        throw InvariantViolation("intersection form does not vanish on boundaries");
    }
  }

  // the stable plane and the kernel of pi_*
  {
    ZVec all_sigma(2 * static_cast<std::size_t>(n), 0),
        all_zeta(2 * static_cast<std::size_t>(n), 0);
    for (int s = 0; s < n; ++s) {
      all_sigma[static_cast<std::size_t>(s)] = 1;
      all_zeta[static_cast<std::size_t>(n + s)] = 1;
    }
    m.st_sigma = h1_coords(m, all_sigma);
    m.st_zeta = h1_coords(m, all_zeta);
  }
  {
    ZMat pi = zmat(2, static_cast<std::size_t>(m.dim));
    for (int j = 0; j < m.dim; ++j)
      for (int e = 0; e < 2 * n; ++e)
        pi[e < n ? 0 : 1][static_cast<std::size_t>(j)] +=
            m.basis[static_cast<std::size_t>(e)][static_cast<std::size_t>(j)];
    m.zero_basis = integer_kernel(pi);
    if (m.zero_basis.empty()) m.zero_basis = zmat(static_cast<std::size_t>(m.dim), 0);
    if (static_cast<int>(m.zero_basis[0].size()) != m.dim - 2)
      throw InvariantViolation("kernel of pi_* does not have dimension 2g - 2");
    ZMat span = zmat(static_cast<std::size_t>(m.dim), static_cast<std::size_t>(m.dim));
    for (int i = 0; i < m.dim; ++i) {
      span[static_cast<std::size_t>(i)][0] = m.st_sigma[static_cast<std::size_t>(i)];
      span[static_cast<std::size_t>(i)][1] = m.st_zeta[static_cast<std::size_t>(i)];
      for (int j = 0; j + 2 < m.dim; ++j)
        span[static_cast<std::size_t>(i)][static_cast<std::size_t>(j + 2)] =
            m.zero_basis[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    if (rank_z(span) != static_cast<std::size_t>(m.dim))
      throw InvariantViolation("stable plane and zero part do not span H1");
  }
  return m;
}

ZVec h1_coords(const H1Model& m, const ZVec& edge_chain) {
  const int n = m.cc.n;
  if (static_cast<int>(edge_chain.size()) != 2 * n)
    throw InputError("edge chain has the wrong length");
  // cycle gate: both endpoints of every edge cancel
  {
    ZVec at(static_cast<std::size_t>(m.cc.n_vertices), 0);
    for (int e = 0; e < 2 * n; ++e) {
      at[static_cast<std::size_t>(edge_end(m.cc, e))] += edge_chain[static_cast<std::size_t>(e)];
      at[static_cast<std::size_t>(edge_start(m.cc, e))] -= edge_chain[static_cast<std::size_t>(e)];
    }
    for (const auto& x : at)
      if (x != 0) throw InputError("edge chain is not a cycle");
  }
  const std::size_t nfund = m.cotree_edges.size();
  ZVec coords(static_cast<std::size_t>(m.dim), 0);
  for (std::size_t i = 0; i < nfund; ++i) {
    const auto& c = edge_chain[static_cast<std::size_t>(m.cotree_edges[i])];
    if (c == 0) continue;
    for (int j = 0; j < m.dim; ++j)
      coords[static_cast<std::size_t>(j)] +=
          c * m.quotient_map[static_cast<std::size_t>(j)][i];
  }
  return coords;
}

long long pair_walks(const H1Model& m, const Walk& x, const Walk& y) {
  const std::vector<Chord> cx = walk_chords(m, reduce_walk(x), false);
  std::vector<Chord> cy = walk_chords(m, reduce_walk(y), true);
  std::map<int, std::vector<const Chord*>> by_vertex;
  for (const Chord& c : cy) by_vertex[c.vertex].push_back(&c);
  long long total = 0;
  for (const Chord& xc : cx) {
    const auto it = by_vertex.find(xc.vertex);
    if (it == by_vertex.end()) continue;
    const long long lo = std::min(xc.a, xc.b), hi = std::max(xc.a, xc.b);
    const long long sgn = xc.b > xc.a ? 1 : -1;
    for (const Chord* yc : it->second) {
      const int in_c = (lo < yc->a && yc->a < hi) ? 1 : 0;
      const int in_d = (lo < yc->b && yc->b < hi) ? 1 : 0;
      total += sgn * (in_c - in_d);
    }
  }
  return total;
}

ZMat h1_matrix_of_square_map(const H1Model& m, const Permutation& gamma) {
  const int n = m.cc.n;
  if (gamma.degree() != n) throw InputError("relabeling degree mismatch");
  if (compose(gamma, m.cc.r) != compose(m.cc.r, gamma) ||
      compose(gamma, m.cc.u) != compose(m.cc.u, gamma))
    throw InputError("relabeling does not commute with the square structure");
  ZMat out = zmat(static_cast<std::size_t>(m.dim), static_cast<std::size_t>(m.dim));
  for (int j = 0; j < m.dim; ++j) {
    ZVec img(2 * static_cast<std::size_t>(n), 0);
    for (int s = 0; s < n; ++s) {
      img[static_cast<std::size_t>(gamma(s))] +=
          m.basis[static_cast<std::size_t>(s)][static_cast<std::size_t>(j)];
      img[static_cast<std::size_t>(n + gamma(s))] +=
          m.basis[static_cast<std::size_t>(n + s)][static_cast<std::size_t>(j)];
    }
    const ZVec c = h1_coords(m, img);
    for (int i = 0; i < m.dim; ++i)
      out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          c[static_cast<std::size_t>(i)];
  }
  const ZMat check = zmul(ztranspose(out), zmul(m.intersection, out));
  if (!zequal(check, m.intersection))
    throw InvariantViolation("relabeling does not preserve the intersection form");
  return out;
}

std::vector<ZMat> gamma_h1_matrices(const H1Model& m, const GeneratedPermGroup& gamma) {
  if (gamma.degree() != m.cc.n) throw InputError("group degree mismatch");
  for (std::uint64_t i = 0; i < gamma.order(); ++i) {
    const Permutation g = gamma.element(i);
    if (!g.is_identity() && g.fixed_points() != 0)
      throw InputError("automorphism action is not free");
  }
  std::vector<ZMat> out;
  out.reserve(gamma.order());
  for (std::uint64_t i = 0; i < gamma.order(); ++i)
    out.push_back(h1_matrix_of_square_map(m, gamma.element(i)));
  return out;
}

IsotypicRankReport isotypic_rank_oracle(const H1Model& m,
                                        const GeneratedPermGroup& gamma,
                                        const CharacterTable& t,
                                        const std::vector<ZMat>& rho,
                                        const std::vector<long long>& l) {
  if (rho.size() != gamma.order())
    throw InputError("need one homology matrix per group element");
  if (l.size() != t.n_rows()) throw InputError("multiplicity list length mismatch");
  const std::size_t dim = static_cast<std::size_t>(m.dim);
  const mpz_class group_order = static_cast<unsigned long>(gamma.order());

  std::vector<ZMat> gen_mats;
  for (const Permutation& g : gamma.generators()) {
    const auto idx = gamma.index_of(g);
    gen_mats.push_back(rho[static_cast<std::size_t>(*idx)]);
  }

  IsotypicRankReport rep;
  rep.all_match = true;
  ZMat sum = zmat(dim, dim);
  long long total_rank = 0;
  for (const std::vector<int>& orbit : galois_orbits(gamma, t)) {
    // integer class coefficients of |Gamma| times the orbit projector
    std::vector<mpz_class> w(t.n_classes());
    for (std::size_t k = 0; k < t.n_classes(); ++k) {
      cplx acc = 0;
      for (const int row : orbit)
        acc += static_cast<double>(t.dims[static_cast<std::size_t>(row)]) *
               std::conj(t.values[static_cast<std::size_t>(row)][k]);
      const double rounded = std::round(acc.real());
      if (std::abs(acc.imag()) > config().integrality_tol ||
          std::abs(acc.real() - rounded) > config().integrality_tol)
        throw InvariantViolation("orbit projector coefficient is not an integer");
      w[k] = static_cast<long>(rounded);
    }
    ZMat p = zmat(dim, dim);
    for (std::uint64_t i = 0; i < gamma.order(); ++i) {
      const auto k = static_cast<std::size_t>(t.classes.class_of[i]);
      if (w[k] == 0) continue;
      for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = 0; b < dim; ++b)
          p[a][b] += w[k] * rho[i][a][b];
    }
    if (!zequal(zmul(p, p), zscale(p, group_order)))
      throw InvariantViolation("orbit projector is not idempotent");
    for (const ZMat& r : gen_mats)
      if (!zequal(zmul(p, r), zmul(r, p)))
        throw InvariantViolation("orbit projector does not commute with the action");

    OrbitRank row;
    row.rows = orbit;
    row.rank = static_cast<long long>(rank_z(zmul(p, m.zero_basis)));
    for (const int r : orbit)
      row.expected +=
          l[static_cast<std::size_t>(r)] * t.dims[static_cast<std::size_t>(r)];
    rep.all_match = rep.all_match && row.rank == row.expected;
    total_rank += row.rank;
    sum = zadd(std::move(sum), p);
    rep.orbits.push_back(std::move(row));
  }
  if (!zequal(sum, zscale(zidentity(dim), group_order)))
    throw InvariantViolation("orbit projectors do not sum to the identity");
  if (rep.all_match && total_rank != m.dim - 2)
    throw InvariantViolation("projector ranks do not fill the zero part");
  return rep;
}

}  // namespace origami
