#include "origami/affine.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

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

ZVec zcombine(const mpz_class& c1, const ZVec& v1, const mpz_class& c2, const ZVec& v2) {
  ZVec out(v1.size());
  for (std::size_t i = 0; i < v1.size(); ++i) out[i] = c1 * v1[i] + c2 * v2[i];
  return out;
}

ZVec matvec(const ZMat& m, const ZVec& v) {
  ZVec out(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      if (v[j] != 0) out[i] += m[i][j] * v[j];
  return out;
}

// Image of a single edge under the k-fold shear followed by the relabeling,
// accumulated into an edge chain. For the horizontal shear the image of a
// vertical edge is the staircase path over k squares to the right; sigma
// edges are only relabeled. The vertical shear is the mirror statement.
void accumulate_edge_image(ZVec& chain, int edge, const mpz_class& coeff, int n,
                           const Permutation& r, const Permutation& u,
                           const Permutation& pi, Shear which, long long k) {
  if (which == Shear::horizontal) {
    if (edge < n) {
      chain[static_cast<std::size_t>(pi(edge))] += coeff;
    } else {
      int s = edge - n;
      for (long long j = 0; j < k; ++j) {
        chain[static_cast<std::size_t>(pi(s))] += coeff;
        s = r(s);
      }
      chain[static_cast<std::size_t>(n + pi(s))] += coeff;
    }
  } else {
    if (edge >= n) {
      chain[static_cast<std::size_t>(n + pi(edge - n))] += coeff;
    } else {
      int s = edge;
      for (long long j = 0; j < k; ++j) {
        chain[static_cast<std::size_t>(n + pi(s))] += coeff;
        s = u(s);
      }
      chain[static_cast<std::size_t>(pi(s))] += coeff;
    }
  }
}

std::vector<Permutation> shear_isomorphisms(const Origami& o, Shear which, long long k) {
  return origami_isomorphisms(sheared_origami(o, which, k), o);
}

Origami origami_of(const H1Model& m) {
  return Origami::from_pair(m.cc.r, m.cc.u);
}

std::complex<double> centry(const ZMat& m, std::size_t i, std::size_t j) {
  return {m[i][j].get_d(), 0.0};
}

}  // namespace

Origami sheared_origami(const Origami& o, Shear which, long long k) {
  if (k < 1) throw InputError("shear power must be positive");
  if (which == Shear::horizontal)
    return Origami::from_pair(o.r, compose(o.u, o.r.inverse().power(k)), o.convention);
  return Origami::from_pair(compose(o.r, o.u.inverse().power(k)), o.u, o.convention);
}

long long minimal_veech_power(const Origami& o, Shear which) {
  const long long bound = 4LL * o.n_squares * o.n_squares;
  for (long long k = 1; k <= bound; ++k)
    if (!shear_isomorphisms(o, which, k).empty()) return k;
  throw InputError("no stabilizing shear power up to 4 n^2");
}

std::vector<AffineHomologyAction> affine_action_variants(const H1Model& m,
                                                         Shear which, long long k) {
  const Origami o = origami_of(m);
  const auto isos = shear_isomorphisms(o, which, k);
  if (isos.empty()) {
    const long long least = minimal_veech_power(o, which);
    throw InputError("shear power does not stabilize the origami; minimal valid power is " +
                     std::to_string(least));
  }
  const int n = m.cc.n;

  std::vector<AffineHomologyAction> out;
  for (const Permutation& pi : isos) {
    AffineHomologyAction a;
    a.which = which;
    a.k = k;
    a.derivative = which == Shear::horizontal ? std::array<long long, 4>{1, k, 0, 1}
                                              : std::array<long long, 4>{1, 0, k, 1};
    a.relabeling = pi;

    a.h1_matrix = zmat(static_cast<std::size_t>(m.dim), static_cast<std::size_t>(m.dim));
    for (int j = 0; j < m.dim; ++j) {
      ZVec img(2 * static_cast<std::size_t>(n), 0);
      for (int e = 0; e < 2 * n; ++e) {
        const auto& c = m.basis[static_cast<std::size_t>(e)][static_cast<std::size_t>(j)];
        if (c != 0) accumulate_edge_image(img, e, c, n, m.cc.r, m.cc.u, pi, which, k);
      }
      const ZVec coords = h1_coords(m, img);
      for (int i = 0; i < m.dim; ++i)
        a.h1_matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            coords[static_cast<std::size_t>(i)];
    }

    // gate 1: the form is preserved exactly
    if (!zequal(zmul(ztranspose(a.h1_matrix), zmul(m.intersection, a.h1_matrix)),
                m.intersection))
      throw InvariantViolation("affine action does not preserve the intersection form");
    // gate 2: the stable plane restriction is the derivative
    const auto& d = a.derivative;
    if (matvec(a.h1_matrix, m.st_sigma) !=
            zcombine(static_cast<long>(d[0]), m.st_sigma, static_cast<long>(d[2]), m.st_zeta) ||
        matvec(a.h1_matrix, m.st_zeta) !=
            zcombine(static_cast<long>(d[1]), m.st_sigma, static_cast<long>(d[3]), m.st_zeta))
      throw InvariantViolation("affine action does not restrict to its derivative");

    out.push_back(std::move(a));
  }
  return out;
}

AffineHomologyAction affine_generator_action(const H1Model& m, Shear which,
                                             long long k, int variant) {
  auto all = affine_action_variants(m, which, k);
  if (variant < 0 || variant >= static_cast<int>(all.size()))
    throw InputError("relabeling variant out of range");
  return std::move(all[static_cast<std::size_t>(variant)]);
}

AffineClassification classify_affine(AffineHomologyAction& a, const H1Model& m,
                                     const GeneratedPermGroup& gamma,
                                     const CharacterTable& t,
                                     const std::vector<ZMat>& rho) {
  if (rho.size() != gamma.order()) throw InputError("need one matrix per group element");
  AffineClassification res;

  res.in_aff_star_star = true;
  for (const ZMat& g : rho)
    if (!zequal(zmul(g, a.h1_matrix), zmul(a.h1_matrix, g))) {
      res.in_aff_star_star = false;
      break;
    }

  // the induced automorphism gamma -> pi gamma pi^-1
  const Permutation pi_inv = a.relabeling.inverse();
  std::vector<std::uint64_t> theta(gamma.order());
  for (std::uint64_t i = 0; i < gamma.order(); ++i) {
    const Permutation image = compose(compose(a.relabeling, gamma.element(i)), pi_inv);
    const auto idx = gamma.index_of(image);
    if (!idx)
      throw InputError(
          "conjugation by the relabeling leaves the group; pass the full automorphism group");
    theta[i] = *idx;
  }

  res.in_aff_star = false;
  for (std::uint64_t c = 0; c < gamma.order() && !res.in_aff_star; ++c) {
    const Permutation g0 = gamma.element(c);
    const Permutation g0i = g0.inverse();
    bool inner = true;
    for (std::uint64_t i = 0; i < gamma.order() && inner; ++i)
      inner = compose(compose(g0, gamma.element(i)), g0i) == gamma.element(theta[i]);
    if (inner) {
      res.in_aff_star = true;
      res.inner_witness = c;
    }
  }

  // label action as the right action chi -> chi . theta, matched against the
  // table rows; equivalently the action carries block label_action[row] onto
  // block row
  const std::size_t ncl = t.n_classes();
  res.label_action.assign(t.n_rows(), -1);
  for (std::size_t row = 0; row < t.n_rows(); ++row) {
    std::vector<cplx> moved(ncl);
    for (std::size_t kc = 0; kc < ncl; ++kc) {
      const std::uint64_t img = theta[t.classes.rep_indices[kc]];
      moved[kc] = t.values[row][static_cast<std::size_t>(t.classes.class_of[img])];
    }
    int found = -1;
    for (std::size_t cand = 0; cand < t.n_rows(); ++cand) {
      double err = 0;
      for (std::size_t kc = 0; kc < ncl; ++kc)
        err = std::max(err, std::abs(moved[kc] - t.values[cand][kc]));
      if (err <= 10 * config().char_match_tol) {
        if (found >= 0) throw InvariantViolation("moved character matches two rows");
        found = static_cast<int>(cand);
      }
    }
    if (found < 0) throw InvariantViolation("moved character matches no row");
    res.label_action[row] = found;
  }
  if (res.in_aff_star)
    for (std::size_t row = 0; row < t.n_rows(); ++row)
      if (res.label_action[row] != static_cast<int>(row))
        throw InvariantViolation("inner conjugation moved an irreducible label");

  // exact transport check: the action carries each Galois-orbit projector to
  // the projector of the image labels
  const auto orbits = galois_orbits(gamma, t);
  const std::size_t dim = static_cast<std::size_t>(m.dim);
  const auto scaled_projector = [&](const std::vector<int>& orbit) {
    std::vector<mpz_class> w(ncl);
    for (std::size_t kc = 0; kc < ncl; ++kc) {
      cplx acc = 0;
      for (const int row : orbit)
        acc += static_cast<double>(t.dims[static_cast<std::size_t>(row)]) *
               std::conj(t.values[static_cast<std::size_t>(row)][kc]);
      const double rounded = std::round(acc.real());
      if (std::abs(acc.imag()) > config().integrality_tol ||
          std::abs(acc.real() - rounded) > config().integrality_tol)
        throw InvariantViolation("orbit projector coefficient is not an integer");
      w[kc] = static_cast<long>(rounded);
    }
    ZMat p = zmat(dim, dim);
    for (std::uint64_t i = 0; i < gamma.order(); ++i) {
      const auto& wk = w[static_cast<std::size_t>(t.classes.class_of[i])];
      if (wk == 0) continue;
      for (std::size_t x = 0; x < dim; ++x)
        for (std::size_t y = 0; y < dim; ++y) p[x][y] += wk * rho[i][x][y];
    }
    return p;
  };
  const auto orbit_of_row = [&](int row) {
    for (std::size_t oi = 0; oi < orbits.size(); ++oi)
      for (const int r : orbits[oi])
        if (r == row) return oi;
    throw InvariantViolation("row missing from the Galois orbits");
  };
  std::vector<ZMat> orbit_proj;
  for (const auto& orbit : orbits) orbit_proj.push_back(scaled_projector(orbit));
  for (std::size_t src = 0; src < orbits.size(); ++src) {
    std::vector<int> image;
    for (const int row : orbits[src])
      image.push_back(res.label_action[static_cast<std::size_t>(row)]);
    const std::size_t oi = orbit_of_row(image[0]);
    std::vector<int> target = orbits[oi], sorted_image = image;
    std::sort(target.begin(), target.end());
    std::sort(sorted_image.begin(), sorted_image.end());
    if (target != sorted_image)
      throw InvariantViolation("label action does not permute a Galois orbit onto another");
    if (!zequal(zmul(a.h1_matrix, orbit_proj[oi]), zmul(orbit_proj[src], a.h1_matrix)))
      throw InvariantViolation("action does not transport the isotypic block to its image");
  }

  // the same statement per complex irreducible, floating point
  {
    const double go = static_cast<double>(gamma.order());
    std::vector<std::vector<std::vector<cplx>>> proj(t.n_rows());
    for (std::size_t row = 0; row < t.n_rows(); ++row) {
      auto& p = proj[row];
      p.assign(dim, std::vector<cplx>(dim, 0));
      for (std::uint64_t i = 0; i < gamma.order(); ++i) {
        const cplx c = static_cast<double>(t.dims[row]) / go *
                       std::conj(t.values[row][static_cast<std::size_t>(t.classes.class_of[i])]);
        if (std::abs(c) == 0.0) continue;
        for (std::size_t x = 0; x < dim; ++x)
          for (std::size_t y = 0; y < dim; ++y) p[x][y] += c * centry(rho[i], x, y);
      }
    }
    double scale = 1;
    for (std::size_t x = 0; x < dim; ++x)
      for (std::size_t y = 0; y < dim; ++y)
        scale = std::max(scale, std::abs(a.h1_matrix[x][y].get_d()));
    for (std::size_t row = 0; row < t.n_rows(); ++row) {
      const auto& pre = proj[static_cast<std::size_t>(res.label_action[row])];
      const auto& post = proj[row];
      for (std::size_t x = 0; x < dim; ++x)
        for (std::size_t y = 0; y < dim; ++y) {
          cplx lhs = 0, rhs = 0;
          for (std::size_t z = 0; z < dim; ++z) {
            lhs += centry(a.h1_matrix, x, z) * pre[z][y];
            rhs += post[x][z] * centry(a.h1_matrix, z, y);
          }
          if (std::abs(lhs - rhs) > 1e-6 * scale * static_cast<double>(dim))
            throw InvariantViolation("per-irreducible block transport differs numerically");
        }
    }
  }

  a.in_aff_star = res.in_aff_star;
  a.in_aff_star_star = res.in_aff_star_star;
  return res;
}

bool holonomy_is_full(const H1Model& m) {
  const int n = m.cc.n;
  ZMat pi = zmat(2, static_cast<std::size_t>(m.dim));
  for (int j = 0; j < m.dim; ++j)
    for (int e = 0; e < 2 * n; ++e)
      pi[e < n ? 0 : 1][static_cast<std::size_t>(j)] +=
          m.basis[static_cast<std::size_t>(e)][static_cast<std::size_t>(j)];
  const auto ech = column_echelon(std::move(pi));
  return ech.pivot_values.size() == 2 && ech.pivot_values[0] == 1 && ech.pivot_values[1] == 1;
}

}  // namespace origami
