#include "origami/sl2p.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <optional>

#include "origami/config.hpp"
#include "origami/errors.hpp"

namespace origami::sl2 {

namespace {

void require_odd_prime(int p) {
  if (p < 3) throw InputError("p must be an odd prime");
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) throw InputError("p must be an odd prime");
}

int norm(long long x, int p) { return static_cast<int>(((x % p) + p) % p); }

}  // namespace

int pow_mod(long long base, long long e, int p) {
  long long r = 1, b = ((base % p) + p) % p;
  for (; e > 0; e >>= 1) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
  }
  return static_cast<int>(r);
}

int inv_mod(int x, int p) {
  x = norm(x, p);
  if (x == 0) throw InputError("division by zero mod p");
  return pow_mod(x, p - 2, p);
}

int legendre(int x, int p) {
  x = norm(x, p);
  if (x == 0) return 0;
  const int e = pow_mod(x, (p - 1) / 2, p);
  return e == 1 ? 1 : -1;
}

int least_primitive_root(int p) {
  require_odd_prime(p);
  std::vector<int> prime_factors;
  int m = p - 1;
  for (int d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      prime_factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  if (m > 1) prime_factors.push_back(m);
  for (int g = 2; g < p; ++g) {
    bool ok = true;
    for (int q : prime_factors)
      if (pow_mod(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw InvariantViolation("no primitive root found");
}

int sqrt_mod(int x, int p) {
  x = norm(x, p);
  for (int s = 0; s <= p / 2; ++s)
    if (1LL * s * s % p == x) return s;
  throw InputError("not a quadratic residue");
}

Mat mat_mul(const Mat& a, const Mat& b, int p) {
  return {norm(1LL * a[0] * b[0] + 1LL * a[1] * b[2], p),
          norm(1LL * a[0] * b[1] + 1LL * a[1] * b[3], p),
          norm(1LL * a[2] * b[0] + 1LL * a[3] * b[2], p),
          norm(1LL * a[2] * b[1] + 1LL * a[3] * b[3], p)};
}

Mat mat_inv(const Mat& m, int p) {
  const int det = norm(1LL * m[0] * m[3] - 1LL * m[1] * m[2], p);
  const int d = inv_mod(det, p);
  return {norm(1LL * m[3] * d, p), norm(-1LL * m[1] * d, p),
          norm(-1LL * m[2] * d, p), norm(1LL * m[0] * d, p)};
}

int vec_index(int x, int y, int p) {
  x = norm(x, p);
  y = norm(y, p);
  if (x == 0 && y == 0) throw InputError("the zero vector is not a carrier point");
  return x + p * y - 1;
}

std::pair<int, int> vec_of_index(int idx, int p) {
  if (idx < 0 || idx >= p * p - 1) throw InputError("carrier index out of range");
  const int v = idx + 1;
  return {v % p, v / p};
}

Permutation vector_action(const Mat& m, int p) {
  std::vector<int> img(static_cast<std::size_t>(p) * p - 1);
  for (int y = 0; y < p; ++y)
    for (int x = 0; x < p; ++x) {
      if (x == 0 && y == 0) continue;
      img[static_cast<std::size_t>(vec_index(x, y, p))] =
          vec_index(norm(1LL * m[0] * x + 1LL * m[1] * y, p),
                    norm(1LL * m[2] * x + 1LL * m[3] * y, p), p);
    }
  return Permutation(std::move(img));
}

Mat matrix_of(const Permutation& g, int p) {
  if (g.degree() != p * p - 1)
    throw InputError("permutation degree does not match the vector carrier");
  const auto c1 = vec_of_index(g(vec_index(1, 0, p)), p);
  const auto c2 = vec_of_index(g(vec_index(0, 1, p)), p);
  const Mat m{c1.first, c2.first, c1.second, c2.second};
  if (vector_action(m, p) != g)
    throw InputError("permutation is not induced by a linear map");
  return m;
}

GeneratedPermGroup special_linear_group(int p, int a, int b) {
  require_odd_prime(p);
  a = norm(a, p);
  b = norm(b, p);
  if (a == 0 || b == 0)
    throw InputError("elementary pair needs a and b nonzero mod p");
  const Permutation gr = vector_action({1, a, 0, 1}, p);
  const Permutation gu = vector_action({1, 0, b, 1}, p);
  GeneratedPermGroup g = GeneratedPermGroup::closure(p * p - 1, {gr, gu});
  const std::uint64_t expect =
      static_cast<std::uint64_t>(p) * (static_cast<std::uint64_t>(p) * p - 1);
  if (g.order() != expect)
    throw InvariantViolation("elementary pair does not generate the full group");
  return g;
}

long long ord_by_trace(int p, int pi) {
  require_odd_prime(p);
  pi = norm(pi, p);
  if (pi == 0) throw InputError("trace recursion needs pi nonzero mod p");
  const int pi2 = norm(1LL * pi * pi, p);
  if ((pi2 + 4) % p == 0) return 2LL * p;
  const int t1 = norm(2 + pi2, p);
  int prev = 2, cur = t1;
  for (long long n = 1; n <= 2LL * p + 1; ++n) {
    if (cur == 2) return n;
    const int next = norm(1LL * t1 * cur - prev, p);
    prev = cur;
    cur = next;
  }
  throw InvariantViolation("trace recursion did not close");
}

namespace {

// F_p[x]/(x^2 - eps) element (a, b) = a + b sqrt(eps)
struct Quad {
  int a = 0, b = 0;
  bool operator==(const Quad&) const = default;
};

Quad quad_mul(const Quad& u, const Quad& v, int eps, int p) {
  return {norm(1LL * u.a * v.a + 1LL * eps * u.b * v.b, p),
          norm(1LL * u.a * v.b + 1LL * u.b * v.a, p)};
}

// first norm-one element of multiplicative order p + 1, in lexicographic scan
Quad norm_one_generator(int eps, int p) {
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b) {
      if (norm(1LL * a * a - 1LL * eps * b * b, p) != 1) continue;
      Quad q{a, b}, acc{1, 0};
      int ord = 0;
      do {
        acc = quad_mul(acc, q, eps, p);
        ++ord;
      } while (!(acc == Quad{1, 0}));
      if (ord == p + 1) return q;
    }
  throw InvariantViolation("norm-one group has no generator");
}

}  // namespace

CommutatorClass classify_commutator(int p, int pi) {
  require_odd_prime(p);
  pi = norm(pi, p);
  if (pi == 0) throw InputError("commutator classification needs ab nonzero mod p");
  const int pi2 = norm(1LL * pi * pi, p);
  CommutatorClass cc;
  cc.trace = norm(2 + pi2, p);
  if ((pi2 + 4) % p == 0) {
    if (p % 4 != 1)
      throw InvariantViolation("parabolic commutator with -1 a nonresidue");
    cc.kind = CaseKind::parabolic;
    cc.ord = 2LL * p;
    cc.j0 = 0;
    return cc;
  }
  cc.ord = ord_by_trace(p, pi);
  const int disc = norm(1LL * cc.trace * cc.trace - 4, p);
  const int eps = least_primitive_root(p);
  if (legendre(disc, p) == 1) {
    cc.kind = CaseKind::hyperbolic;
    const int lam = norm(1LL * (cc.trace + sqrt_mod(disc, p)) * inv_mod(2, p), p);
    int j = -1;
    int pw = 1;
    for (int k = 1; k < p - 1; ++k) {
      pw = norm(1LL * pw * eps, p);
      if (pw == lam) {
        j = k;
        break;
      }
    }
    if (j < 0) throw InvariantViolation("hyperbolic eigenvalue has no discrete log");
    cc.j0 = std::min(j, p - 1 - j);
    if (cc.j0 % 2 != 0)
      throw InvariantViolation("hyperbolic commutator exponent must be even");
    if ((p - 1) / std::gcd(cc.j0, p - 1) != cc.ord)
      throw InvariantViolation("hyperbolic order disagrees with the exponent");
    if (cc.ord <= 2 || ((p - 1) / 2) % cc.ord != 0)
      throw InvariantViolation("hyperbolic order must divide (p-1)/2 and exceed 2");
    if (cc.ord % 2 == 0 && p % 4 != 1)
      throw InvariantViolation("even hyperbolic order forces p = 1 mod 4");
  } else {
    cc.kind = CaseKind::elliptic;
    // eigenvalue in the quadratic extension: (trace + w sqrt(eps)) / 2 with
    // w^2 eps = trace^2 - 4
    const int w = sqrt_mod(norm(1LL * disc * inv_mod(eps, p), p), p);
    const int inv2 = inv_mod(2, p);
    const Quad lam{norm(1LL * cc.trace * inv2, p), norm(1LL * w * inv2, p)};
    const Quad eta = norm_one_generator(eps, p);
    int j = -1;
    Quad pw{1, 0};
    for (int k = 1; k <= p + 1; ++k) {
      pw = quad_mul(pw, eta, eps, p);
      if (pw == lam) {
        j = k;
        break;
      }
    }
    if (j < 0) throw InvariantViolation("elliptic eigenvalue is not norm one");
    cc.j0 = std::min(j, p + 1 - j);
    if (cc.j0 % 2 != 1)
      throw InvariantViolation("elliptic commutator exponent must be odd");
    if ((p + 1) / std::gcd(cc.j0, p + 1) != cc.ord)
      throw InvariantViolation("elliptic order disagrees with the exponent");
    if (cc.ord <= 2 || cc.ord % 2 != 0 || (p + 1) % cc.ord != 0)
      throw InvariantViolation("elliptic order must be even, > 2, dividing p+1");
  }
  return cc;
}

namespace {

struct ClassId {
  enum Tag { one, minus_one, unip, minus_unip, hyp, ell } tag = one;
  int usq = 0;  // legendre class of the unipotent offset, +1 or -1
  int j = 0;    // torus exponent for hyp / ell
};

ClassId identify_class(const Mat& m, int p, const std::vector<int>& hyp_trace,
                       const std::vector<int>& ell_trace) {
  const int tr = norm(m[0] + m[3], p);
  const Mat id{1, 0, 0, 1};
  const Mat mid{p - 1, 0, 0, p - 1};
  if (m == id) return {ClassId::one, 0, 0};
  if (m == mid) return {ClassId::minus_one, 0, 0};
  if (tr == 2 || tr == p - 2) {
    const bool plus = (tr == 2);
    const Mat um = plus ? m : mat_mul(mid, m, p);
    // n = um - 1 has rank one; det(v, n v) lands in the square class of -u
    // for um ~ [[1,u],[0,1]]
    const Mat n{norm(um[0] - 1, p), um[1], um[2], norm(um[3] - 1, p)};
    int usq = 0;
    for (int y = 0; y < p && usq == 0; ++y)
      for (int x = (y == 0 ? 1 : 0); x < p; ++x) {
        const int nx = norm(1LL * n[0] * x + 1LL * n[1] * y, p);
        const int ny = norm(1LL * n[2] * x + 1LL * n[3] * y, p);
        if (nx == 0 && ny == 0) continue;
        const int d = norm(1LL * x * ny - 1LL * y * nx, p);
        usq = legendre(norm(-d, p), p);
        break;
      }
    if (usq == 0) throw InvariantViolation("unipotent class with zero offset");
    return {plus ? ClassId::unip : ClassId::minus_unip, usq, 0};
  }
  const int disc = norm(1LL * tr * tr - 4, p);
  if (legendre(disc, p) == 1) {
    for (int j = 1; j <= static_cast<int>(hyp_trace.size()); ++j)
      if (hyp_trace[static_cast<std::size_t>(j - 1)] == tr)
        return {ClassId::hyp, 0, j};
    throw InvariantViolation("split torus trace not found");
  }
  for (int j = 1; j <= static_cast<int>(ell_trace.size()); ++j)
    if (ell_trace[static_cast<std::size_t>(j - 1)] == tr) return {ClassId::ell, 0, j};
  throw InvariantViolation("nonsplit torus trace not found");
}

// closed-form character value of the row kind at the identified class
cplx row_value(int p, const RowKind& rk, const ClassId& cid) {
  const double pi_const = std::numbers::pi;
  const bool p1 = (p % 4 == 1);
  const double rp = std::sqrt(static_cast<double>(p));
  const double sgn = (rk.kind == RowKind::W_prime || rk.kind == RowKind::X_prime)
                         ? 1.0
                         : -1.0;
  const auto tau_pm = [&](int j) { return j % 2 == 0 ? 1.0 : -1.0; };
  switch (rk.kind) {
    case RowKind::U:
      return 1.0;
    case RowKind::V:
      switch (cid.tag) {
        case ClassId::one:
        case ClassId::minus_one:
          return static_cast<double>(p);
        case ClassId::unip:
        case ClassId::minus_unip:
          return 0.0;
        case ClassId::hyp:
          return 1.0;
        case ClassId::ell:
          return -1.0;
      }
      break;
    case RowKind::W_tau:
      switch (cid.tag) {
        case ClassId::one:
          return static_cast<double>(p + 1);
        case ClassId::minus_one:
          return (p + 1) * tau_pm(rk.j);
        case ClassId::unip:
          return 1.0;
        case ClassId::minus_unip:
          return tau_pm(rk.j);
        case ClassId::hyp:
          return 2.0 * std::cos(2.0 * pi_const * rk.j * cid.j / (p - 1));
        case ClassId::ell:
          return 0.0;
      }
      break;
    case RowKind::W_prime:
    case RowKind::W_second:
      switch (cid.tag) {
        case ClassId::one:
          return (p + 1) / 2.0;
        case ClassId::minus_one:
          return p1 ? (p + 1) / 2.0 : -(p + 1) / 2.0;
        case ClassId::unip: {
          // (1 + u sqrt(p*)) / 2 with p* = (-1)^((p-1)/2) p
          const double u = (cid.usq == 1) ? 1.0 : -1.0;
          if (p1) return (1.0 + u * sgn * rp) / 2.0;
          return cplx(0.5, u * sgn * rp / 2.0);
        }
        case ClassId::minus_unip: {
          const double u = (cid.usq == 1) ? 1.0 : -1.0;
          if (p1) return (1.0 + u * sgn * rp) / 2.0;
          return cplx(-0.5, -u * sgn * rp / 2.0);
        }
        case ClassId::hyp:
          return tau_pm(cid.j);
        case ClassId::ell:
          return 0.0;
      }
      break;
    case RowKind::X_phi:
      switch (cid.tag) {
        case ClassId::one:
          return static_cast<double>(p - 1);
        case ClassId::minus_one:
          return (p - 1) * tau_pm(rk.j);
        case ClassId::unip:
          return -1.0;
        case ClassId::minus_unip:
          return -tau_pm(rk.j);
        case ClassId::hyp:
          return 0.0;
        case ClassId::ell:
          return -2.0 * std::cos(2.0 * pi_const * rk.j * cid.j / (p + 1));
      }
      break;
    case RowKind::X_prime:
    case RowKind::X_second:
      switch (cid.tag) {
        case ClassId::one:
          return (p - 1) / 2.0;
        case ClassId::minus_one:
          return p1 ? -(p - 1) / 2.0 : (p - 1) / 2.0;
        case ClassId::unip: {
          const double u = (cid.usq == 1) ? 1.0 : -1.0;
          if (p1) return (-1.0 + u * sgn * rp) / 2.0;
          return cplx(-0.5, u * sgn * rp / 2.0);
        }
        case ClassId::minus_unip: {
          // the central character is trivial here for p = 3 mod 4, so the
          // negative unipotent values repeat the positive ones
          const double u = (cid.usq == 1) ? 1.0 : -1.0;
          if (p1) return (1.0 - u * sgn * rp) / 2.0;
          return cplx(-0.5, u * sgn * rp / 2.0);
        }
        case ClassId::hyp:
          return 0.0;
        case ClassId::ell:
          return cid.j % 2 == 0 ? -1.0 : 1.0;
      }
      break;
  }
  throw InvariantViolation("unhandled class tag");
}

std::string row_name(const RowKind& rk) {
  switch (rk.kind) {
    case RowKind::U:
      return "U";
    case RowKind::V:
      return "V";
    case RowKind::W_tau:
      return "W_tau(" + std::to_string(rk.j) + ")";
    case RowKind::W_prime:
      return "W'";
    case RowKind::W_second:
      return "W''";
    case RowKind::X_phi:
      return "X_phi(" + std::to_string(rk.j) + ")";
    case RowKind::X_prime:
      return "X'";
    case RowKind::X_second:
      return "X''";
  }
  return "?";
}

int row_dim(int p, const RowKind& rk) {
  switch (rk.kind) {
    case RowKind::U:
      return 1;
    case RowKind::V:
      return p;
    case RowKind::W_tau:
      return p + 1;
    case RowKind::W_prime:
    case RowKind::W_second:
      return (p + 1) / 2;
    case RowKind::X_phi:
      return p - 1;
    case RowKind::X_prime:
    case RowKind::X_second:
      return (p - 1) / 2;
  }
  return 0;
}

}  // namespace

namespace {

LabeledTable label_rows(CharacterTable t, const std::vector<Mat>& class_mats, int p) {
  LabeledTable lt;
  lt.t = std::move(t);
  const std::size_t nc = lt.t.n_classes();
  if (static_cast<int>(nc) != p + 4)
    throw InvariantViolation("class count must be p + 4");

  const int eps = least_primitive_root(p);
  std::vector<int> hyp_trace;
  for (int j = 1; j <= (p - 3) / 2; ++j)
    hyp_trace.push_back(norm(pow_mod(eps, j, p) + pow_mod(eps, p - 1 - j, p), p));
  std::vector<int> ell_trace;
  {
    const Quad eta = norm_one_generator(eps, p);
    Quad pw{1, 0};
    for (int j = 1; j <= (p - 1) / 2; ++j) {
      pw = quad_mul(pw, eta, eps, p);
      ell_trace.push_back(norm(2LL * pw.a, p));
    }
  }

  std::vector<ClassId> cid(nc);
  for (std::size_t k = 0; k < nc; ++k)
    cid[k] = identify_class(class_mats[k], p, hyp_trace, ell_trace);

  std::vector<RowKind> wanted;
  wanted.push_back({RowKind::U, 0});
  wanted.push_back({RowKind::V, 0});
  for (int j = 1; j < (p - 1) / 2; ++j) wanted.push_back({RowKind::W_tau, j});
  wanted.push_back({RowKind::W_prime, 0});
  wanted.push_back({RowKind::W_second, 0});
  for (int j = 1; j < (p + 1) / 2; ++j) wanted.push_back({RowKind::X_phi, j});
  wanted.push_back({RowKind::X_prime, 0});
  wanted.push_back({RowKind::X_second, 0});
  if (wanted.size() != lt.t.n_rows())
    throw InvariantViolation("irreducible count must be p + 4");

  const double tol = config().char_match_tol;
  std::vector<int> row_of(wanted.size(), -1);
  std::vector<bool> used(lt.t.n_rows(), false);
  for (std::size_t w = 0; w < wanted.size(); ++w) {
    for (std::size_t r = 0; r < lt.t.n_rows(); ++r) {
      if (used[r] || lt.t.dims[r] != row_dim(p, wanted[w])) continue;
      double worst = 0.0;
      for (std::size_t k = 0; k < nc; ++k)
        worst = std::max(worst,
                         std::abs(lt.t.values[r][k] - row_value(p, wanted[w], cid[k])));
      if (worst <= tol) {
        row_of[w] = static_cast<int>(r);
        used[r] = true;
        break;
      }
    }
    if (row_of[w] < 0)
      throw InvariantViolation("closed-form character " + row_name(wanted[w]) +
                               " not found in the computed table");
  }

  lt.kinds.resize(lt.t.n_rows());
  lt.names.resize(lt.t.n_rows());
  for (std::size_t w = 0; w < wanted.size(); ++w) {
    lt.kinds[static_cast<std::size_t>(row_of[w])] = wanted[w];
    lt.names[static_cast<std::size_t>(row_of[w])] = row_name(wanted[w]);
  }
  return lt;
}

}  // namespace

LabeledTable labeled_table(const GeneratedPermGroup& g, int p) {
  require_odd_prime(p);
  CharacterTable t = character_table(g);
  std::vector<Mat> mats;
  mats.reserve(t.n_classes());
  for (const Permutation& rep : t.classes.representatives)
    mats.push_back(matrix_of(rep, p));
  return label_rows(std::move(t), mats, p);
}

LabeledTable labeled_table(const GroupDataOrigami& gd, int p) {
  require_odd_prime(p);
  if (gd.H->order() != 1)
    throw InputError("quotient labeling needs the regular realization");
  if (gd.G->degree() != p * p - 1)
    throw InputError("group does not act on the vector carrier");
  CharacterTable t = character_table(*gd.Gamma);
  std::vector<Mat> mats;
  mats.reserve(t.n_classes());
  for (const Permutation& rep : t.classes.representatives)
    mats.push_back(matrix_of(gd.cosets->representative(rep(0)), p));
  return label_rows(std::move(t), mats, p);
}

long long closed_form_l(int p, const CommutatorClass& cc, const RowKind& row) {
  require_odd_prime(p);
  const long long m = cc.ord;
  const auto exact = [](long long num, long long den) {
    if (num % den != 0) throw InvariantViolation("multiplicity is not an integer");
    return num / den;
  };
  long long l = -1;
  switch (cc.kind) {
    case CaseKind::parabolic: {
      switch (row.kind) {
        case RowKind::U:
          l = 0;
          break;
        case RowKind::V:
        case RowKind::X_phi:
          l = p - 1;
          break;
        case RowKind::W_prime:
        case RowKind::W_second:
        case RowKind::X_prime:
        case RowKind::X_second:
          l = (p - 1) / 2;
          break;
        case RowKind::W_tau:
          // p - tau(-1) with tau(-1) = (-1)^j
          l = p - (row.j % 2 == 0 ? 1 : -1);
          break;
      }
      break;
    }
    case CaseKind::hyperbolic: {
      const long long base = p - 1;
      const bool even = (m % 2 == 0);
      const long long per = exact(base, m);  // (p-1)/ord
      switch (row.kind) {
        case RowKind::U:
          l = 0;
          break;
        case RowKind::V:
          l = base - (even ? 2 : 1) * per;
          break;
        case RowKind::W_tau: {
          const bool tau_triv = (1LL * row.j * cc.j0) % (p - 1) == 0;
          const int tau_m1 = row.j % 2 == 0 ? 1 : -1;
          if (even)
            l = tau_triv ? base - 2 * per : 2 + base - (1 + tau_m1) * per;
          else
            l = tau_triv ? base - per : 2 + base - per;
          break;
        }
        case RowKind::W_prime:
        case RowKind::W_second:
          l = even ? base / 2 - per : exact(base / 2 * (m - 1), m);
          break;
        case RowKind::X_phi: {
          const int phi_m1 = row.j % 2 == 0 ? 1 : -1;
          l = even ? base - (1 + phi_m1) * per : base - per;
          break;
        }
        case RowKind::X_prime:
        case RowKind::X_second:
          l = even ? (p - 1) / 2 : exact(base / 2 * (m - 1), m);
          break;
      }
      break;
    }
    case CaseKind::elliptic: {
      const long long base = p + 1;
      const long long per = exact(base, m);  // (p+1)/ord
      const bool p1 = (p % 4 == 1);
      switch (row.kind) {
        case RowKind::U:
          l = 0;
          break;
        case RowKind::V:
          l = base - 2 * per;
          break;
        case RowKind::W_tau: {
          const int tau_m1 = row.j % 2 == 0 ? 1 : -1;
          l = base - (1 + tau_m1) * per;
          break;
        }
        case RowKind::W_prime:
        case RowKind::W_second:
          l = p1 ? base / 2 - per : base / 2;
          break;
        case RowKind::X_phi: {
          const bool phi_triv = (1LL * row.j * cc.j0) % (p + 1) == 0;
          const int phi_m1 = row.j % 2 == 0 ? 1 : -1;
          l = phi_triv ? base - 2 * per : -2 + base - (1 + phi_m1) * per;
          break;
        }
        case RowKind::X_prime:
        case RowKind::X_second:
          l = p1 ? (p - 1) / 2 : -1 + base / 2 - per;
          break;
      }
      break;
    }
  }
  if (l < 0 || l == 1)
    throw InvariantViolation("closed-form multiplicity must be a nonnegative integer, never 1");
  return l;
}

CaseCensus case_census(int p) {
  require_odd_prime(p);
  CaseCensus n;
  std::vector<bool> seen(static_cast<std::size_t>(p), false);
  for (int pi = 1; pi < p; ++pi) {
    const int pi2 = norm(1LL * pi * pi, p);
    if (seen[static_cast<std::size_t>(pi2)]) continue;
    seen[static_cast<std::size_t>(pi2)] = true;
    const int disc = (pi2 + 4) % p;
    if (disc == 0)
      ++n.parabolic;
    else if (legendre(disc, p) == 1)
      ++n.hyperbolic;
    else
      ++n.elliptic;
  }
  const bool p1 = (p % 4 == 1);
  const int ep = p1 ? 1 : 0;
  const int eh = p1 ? (p - 5) / 4 : (p - 3) / 4;
  const int ee = p1 ? (p - 1) / 4 : (p + 1) / 4;
  if (n.parabolic != ep || n.hyperbolic != eh || n.elliptic != ee)
    throw InvariantViolation("case census disagrees with the closed counts");
  if (n.parabolic + n.hyperbolic + n.elliptic != (p - 1) / 2)
    throw InvariantViolation("case census does not cover every pi^2");
  return n;
}

TypeCounts expected_type_counts(int p) {
  require_odd_prime(p);
  if (p % 4 == 1) return {(p + 5) / 2, 0, (p + 3) / 2};
  return {(p + 1) / 2, 4, (p - 1) / 2};
}

TypeCounts table_type_counts(const GeneratedPermGroup& g, const CharacterTable& t) {
  const RealTypeInfo info = real_classification(g, t);
  TypeCounts n;
  for (IrrType ty : info.type) {
    if (ty == IrrType::real)
      ++n.real_count;
    else if (ty == IrrType::complex_pair)
      ++n.complex_count;
    else
      ++n.quaternionic_count;
  }
  return n;
}

}  // namespace origami::sl2
