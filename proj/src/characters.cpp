#include "origami/characters.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "origami/config.hpp"
#include "origami/errors.hpp"

namespace origami {

namespace {

long long round_gated(double x, double tol, const char* what) {
  const double r = std::round(x);
  if (std::abs(x - r) > tol * std::max(1.0, std::abs(x)))
    throw InvariantViolation(std::string(what) + " is not an integer: " + std::to_string(x));
  return static_cast<long long>(r);
}

// Class multiplication tensor a[i][j][k] = #{x in C_i : x^-1 z_k in C_j}.
std::vector<std::vector<std::vector<std::int64_t>>> class_tensor(
    const GeneratedPermGroup& g, const ConjugacyClassSet& cs) {
  const std::size_t r = cs.count();
  const int deg = g.degree();
  std::vector tensor(r, std::vector(r, std::vector<std::int64_t>(r, 0)));
  std::vector<std::int32_t> inv(deg), w(deg);
  for (std::uint64_t e = 0; e < g.order(); ++e) {
    const std::int32_t* x = g.element_images(e);
    for (int t = 0; t < deg; ++t) inv[x[t]] = t;
    const int i = cs.class_of[e];
    for (std::size_t k = 0; k < r; ++k) {
      const auto& zk = cs.representatives[k].images();
      for (int t = 0; t < deg; ++t) w[t] = inv[zk[t]];
      const auto widx = g.index_of(Permutation(std::vector<int>(w.begin(), w.end())));
      if (!widx) throw InvariantViolation("class tensor product left the group");
      ++tensor[i][cs.class_of[*widx]][k];
    }
  }
  return tensor;
}

struct Candidate {
  std::vector<cplx> row;
  int dim;
};

}  // namespace

int class_of_element(const GeneratedPermGroup& g, const CharacterTable& t,
                     const Permutation& x) {
  const auto idx = g.index_of(x);
  if (!idx) throw InputError("element does not belong to the table's group");
  return t.classes.class_of[*idx];
}

void validate_character_table(const GeneratedPermGroup& g, const CharacterTable& t) {
  const double tol = config().orthogonality_tol;
  const std::size_t r = t.n_classes();
  if (t.n_rows() != r)
    throw InvariantViolation("character table is not square");
  if (t.classes.class_of.size() != g.order())
    throw InvariantViolation("character table classes do not match the group");
  long long dimsq = 0;
  for (std::size_t a = 0; a < r; ++a) {
    if (t.dims[a] <= 0) throw InvariantViolation("nonpositive character dimension");
    dimsq += static_cast<long long>(t.dims[a]) * t.dims[a];
    if (std::abs(t.values[a][0] - cplx(t.dims[a], 0)) > 1e-6 * std::max(1, t.dims[a]))
      throw InvariantViolation("identity column disagrees with dims");
  }
  if (dimsq != static_cast<long long>(g.order()))
    throw InvariantViolation("sum of squared dimensions differs from group order");
  for (std::size_t k = 0; k < r; ++k)
    if (std::abs(t.values[0][k] - cplx(1, 0)) > tol)
      throw InvariantViolation("first row is not the trivial character");
  const double n = static_cast<double>(g.order());
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = a; b < r; ++b) {
      cplx s(0, 0);
      for (std::size_t k = 0; k < r; ++k)
        s += static_cast<double>(t.classes.sizes[k]) * t.values[a][k] *
             std::conj(t.values[b][k]);
      s /= n;
      const double want = a == b ? 1.0 : 0.0;
      if (std::abs(s - cplx(want, 0)) > tol)
        throw InvariantViolation("row orthogonality residual too large");
    }
  // column orthogonality comes for free from row orthogonality of a square
  // table, but it is cheap and catches transcription bugs in built-in tables
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t l = k; l < r; ++l) {
      cplx s(0, 0);
      for (std::size_t a = 0; a < r; ++a) s += t.values[a][k] * std::conj(t.values[a][l]);
      const double want = k == l ? n / static_cast<double>(t.classes.sizes[k]) : 0.0;
      if (std::abs(s - cplx(want, 0)) > tol * std::max(1.0, n))
        throw InvariantViolation("column orthogonality residual too large");
    }
}

CharacterTable character_table(const GeneratedPermGroup& g) {
  auto cs = conjugacy_classes(g);
  const std::size_t r = cs.count();
  if (static_cast<int>(r) > config().class_cap)
    throw CapExceeded("class count exceeds table cap");
  const auto tensor = class_tensor(g, cs);
  const double order = static_cast<double>(g.order());

  std::string last_failure = "no attempt made";
  for (int attempt = 0; attempt < config().burnside_retries; ++attempt) {
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(attempt));
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    std::vector<double> coeff(r);
    for (auto& c : coeff) c = unif(rng);

    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(r, r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j)
        for (std::size_t k = 0; k < r; ++k)
          m(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) +=
              coeff[i] * static_cast<double>(tensor[i][j][k]);

    Eigen::EigenSolver<Eigen::MatrixXd> es(m);
    if (es.info() != Eigen::Success) {
      last_failure = "eigensolver did not converge";
      continue;
    }
    try {
      std::vector<Candidate> rows;
      for (std::size_t v = 0; v < r; ++v) {
        Eigen::VectorXcd vec = es.eigenvectors().col(static_cast<Eigen::Index>(v));
        if (std::abs(vec(0)) < 1e-12)
          throw InvariantViolation("eigenvector vanishes on the identity class");
        vec /= vec(0);  // omega(identity) = 1
        double norm = 0;
        for (std::size_t k = 0; k < r; ++k)
          norm += std::norm(vec(static_cast<Eigen::Index>(k))) /
                  static_cast<double>(cs.sizes[k]);
        const double dim_f = std::sqrt(order / norm);
        const auto dim = round_gated(dim_f, 1e-5, "character dimension");
        if (dim <= 0) throw InvariantViolation("nonpositive dimension");
        Candidate c;
        c.dim = static_cast<int>(dim);
        c.row.resize(r);
        for (std::size_t k = 0; k < r; ++k)
          c.row[k] = static_cast<double>(dim) * vec(static_cast<Eigen::Index>(k)) /
                     static_cast<double>(cs.sizes[k]);
        rows.push_back(std::move(c));
      }
      // deterministic layout: trivial row first, the rest by (dim, rounded values)
      auto rounded = [](const std::vector<cplx>& row) {
        std::vector<std::pair<long long, long long>> key;
        key.reserve(row.size());
        for (auto v : row)
          key.emplace_back(std::llround(v.real() * 1e6), std::llround(v.imag() * 1e6));
        return key;
      };
      std::stable_sort(rows.begin(), rows.end(), [&](const Candidate& a, const Candidate& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        return rounded(a.row) < rounded(b.row);
      });
      const auto trivial = std::find_if(rows.begin(), rows.end(), [&](const Candidate& c) {
        if (c.dim != 1) return false;
        for (auto v : c.row)
          if (std::abs(v - cplx(1, 0)) > 1e-6) return false;
        return true;
      });
      if (trivial == rows.end()) throw InvariantViolation("trivial character missing");
      std::rotate(rows.begin(), trivial, trivial + 1);

      CharacterTable t;
      t.classes = cs;
      for (auto& c : rows) {
        t.values.push_back(std::move(c.row));
        t.dims.push_back(c.dim);
      }
      for (std::size_t a = 0; a < r; ++a) t.labels.push_back("chi" + std::to_string(a));
      validate_character_table(g, t);
      return t;
    } catch (const InvariantViolation& e) {
      last_failure = e.what();
    }
  }
  throw InvariantViolation("character table construction failed after retries: " +
                           last_failure);
}

int dim_fix(const GeneratedPermGroup& g, const CharacterTable& t, std::size_t row,
            const Permutation& x) {
  const long long ord = x.order();
  cplx s(0, 0);
  Permutation p = Permutation::identity(x.degree());
  for (long long j = 0; j < ord; ++j) {
    s += t.values[row][class_of_element(g, t, p)];
    p = compose(p, x);
  }
  s /= static_cast<double>(ord);
  if (std::abs(s.imag()) > config().integrality_tol)
    throw InvariantViolation("fixed-space dimension has an imaginary part");
  const auto v = round_gated(s.real(), config().integrality_tol, "fixed-space dimension");
  if (v < 0) throw InvariantViolation("negative fixed-space dimension");
  return static_cast<int>(v);
}

int fs_indicator(const GeneratedPermGroup& g, const CharacterTable& t, std::size_t row) {
  cplx s(0, 0);
  for (std::size_t k = 0; k < t.n_classes(); ++k) {
    const auto& rep = t.classes.representatives[k];
    s += static_cast<double>(t.classes.sizes[k]) *
         t.values[row][class_of_element(g, t, compose(rep, rep))];
  }
  s /= static_cast<double>(g.order());
  if (std::abs(s.imag()) > config().integrality_tol)
    throw InvariantViolation("frobenius-schur sum has an imaginary part");
  const auto v = round_gated(s.real(), config().integrality_tol, "frobenius-schur sum");
  if (v < -1 || v > 1)
    throw InvariantViolation("frobenius-schur indicator outside {-1,0,1}");
  return static_cast<int>(v);
}

RealTypeInfo real_classification(const GeneratedPermGroup& g, const CharacterTable& t) {
  const std::size_t r = t.n_rows();
  const double tol = config().char_match_tol;
  RealTypeInfo info;
  info.fs.resize(r);
  info.type.resize(r);
  info.conjugate_partner.assign(r, -1);
  info.schur_index.assign(r, 1);
  info.real_class_of.assign(r, -1);

  auto rows_match = [&](std::size_t a, std::size_t b, bool conj_b) {
    for (std::size_t k = 0; k < t.n_classes(); ++k) {
      const cplx want = conj_b ? std::conj(t.values[b][k]) : t.values[b][k];
      if (std::abs(t.values[a][k] - want) > tol * std::max(1.0, std::abs(want)))
        return false;
    }
    return true;
  };

  for (std::size_t a = 0; a < r; ++a) {
    info.fs[a] = fs_indicator(g, t, a);
    if (info.fs[a] == 1) {
      info.type[a] = IrrType::real;
    } else if (info.fs[a] == -1) {
      info.type[a] = IrrType::quaternionic;
      info.schur_index[a] = 2;
    } else {
      info.type[a] = IrrType::complex_pair;
    }
    if (info.fs[a] != 0) {
      if (!rows_match(a, a, true))
        throw InvariantViolation("real or quaternionic row has nonreal values");
      info.conjugate_partner[a] = static_cast<int>(a);
    }
  }
  for (std::size_t a = 0; a < r; ++a) {
    if (info.type[a] != IrrType::complex_pair || info.conjugate_partner[a] != -1) continue;
    bool found = false;
    for (std::size_t b = 0; b < r; ++b) {
      if (b == a || info.type[b] != IrrType::complex_pair) continue;
      if (info.conjugate_partner[b] != -1) continue;
      if (rows_match(a, b, true)) {
        info.conjugate_partner[a] = static_cast<int>(b);
        info.conjugate_partner[b] = static_cast<int>(a);
        found = true;
        break;
      }
    }
    if (!found) throw InvariantViolation("complex character row has no conjugate partner");
  }
  for (std::size_t a = 0; a < r; ++a) {
    if (info.real_class_of[a] != -1) continue;
    RealTypeInfo::RealClass rc;
    rc.members.push_back(static_cast<int>(a));
    info.real_class_of[a] = static_cast<int>(info.real_classes.size());
    if (info.type[a] == IrrType::complex_pair) {
      const int b = info.conjugate_partner[a];
      rc.members.push_back(b);
      info.real_class_of[b] = info.real_class_of[a];
    }
    rc.schur_index = info.schur_index[a];
    rc.dim_r = static_cast<long long>(t.dims[a]) *
               (info.type[a] == IrrType::real ? 1 : 2);
    info.real_classes.push_back(std::move(rc));
  }
  return info;
}

std::vector<std::vector<int>> galois_orbits(const GeneratedPermGroup& g,
                                            const CharacterTable& t) {
  const std::size_t r = t.n_rows();
  long long exponent = 1;
  for (const auto& rep : t.classes.representatives)
    exponent = std::lcm(exponent, rep.order());

  const double tol = config().char_match_tol;
  std::vector<int> orbit_of_row(r, -1);
  std::vector<std::vector<int>> orbits;

  // class permutations k -> class(rep_k^u), one per unit u modulo the exponent
  std::vector<std::vector<int>> sigmas;
  for (long long u = 2; u < exponent; ++u) {
    if (std::gcd(u, exponent) != 1) continue;
    std::vector<int> sigma(t.n_classes());
    for (std::size_t k = 0; k < t.n_classes(); ++k)
      sigma[k] = class_of_element(g, t, t.classes.representatives[k].power(u));
    sigmas.push_back(std::move(sigma));
  }

  for (std::size_t a = 0; a < r; ++a) {
    if (orbit_of_row[a] != -1) continue;
    std::vector<int> orbit{static_cast<int>(a)};
    orbit_of_row[a] = static_cast<int>(orbits.size());
    for (const auto& sigma : sigmas) {
      std::vector<cplx> image(t.n_classes());
      for (std::size_t k = 0; k < t.n_classes(); ++k) image[k] = t.values[a][sigma[k]];
      int match = -1;
      for (std::size_t b = 0; b < r; ++b) {
        bool ok = true;
        for (std::size_t k = 0; k < t.n_classes() && ok; ++k)
          if (std::abs(image[k] - t.values[b][k]) > tol * std::max(1.0, std::abs(image[k])))
            ok = false;
        if (ok) {
          match = static_cast<int>(b);
          break;
        }
      }
      if (match == -1)
        throw InvariantViolation("galois image of a character row is not in the table");
      if (orbit_of_row[match] == -1) {
        orbit_of_row[match] = orbit_of_row[a];
        orbit.push_back(match);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

}  // namespace origami
