#include "origami/lyapunov.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <iomanip>
#include <limits>
#include <numeric>
#include <sstream>
#include <thread>
#include <vector>

#include "origami/config.hpp"
#include "origami/errors.hpp"

namespace origami {

namespace {

constexpr const char* kRngTag = "splitmix64 v1";

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double unit_double(std::uint64_t& state) {
  return static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53;
}

Eigen::MatrixXd to_double(const ZMat& a) {
  const Eigen::Index rows = static_cast<Eigen::Index>(a.size());
  const Eigen::Index cols = rows ? static_cast<Eigen::Index>(a[0].size()) : 0;
  Eigen::MatrixXd m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j)
      m(i, j) = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].get_d();
  return m;
}

// Gauss-Jordan over rationals; the result must come out integral, which for
// the affine actions follows from unimodularity of the preserved form.
ZMat zinverse(const ZMat& a, const char* what) {
  const std::size_t n = a.size();
  std::vector<std::vector<mpq_class>> w(n, std::vector<mpq_class>(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw InputError(std::string(what) + ": matrix is not square");
    for (std::size_t j = 0; j < n; ++j) w[i][j] = mpq_class(a[i][j]);
    w[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && w[piv][col] == 0) ++piv;
    if (piv == n) throw InputError(std::string(what) + ": matrix is singular");
    std::swap(w[piv], w[col]);
    const mpq_class inv = 1 / w[col][col];
    for (std::size_t j = 0; j < 2 * n; ++j) w[col][j] *= inv;
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || w[row][col] == 0) continue;
      const mpq_class f = w[row][col];
      for (std::size_t j = col; j < 2 * n; ++j) w[row][j] -= f * w[col][j];
    }
  }
  ZMat res = zmat(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      mpq_class& e = w[i][n + j];
      if (e.get_den() != 1)
        throw InvariantViolation(std::string(what) + ": inverse is not integral");
      res[i][j] = e.get_num();
    }
  return res;
}

std::size_t pick_index(const std::vector<double>& cumulative, double u) {
  const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
  std::size_t i = static_cast<std::size_t>(it - cumulative.begin());
  if (i >= cumulative.size()) i = cumulative.size() - 1;
  return i;
}

// One tracked subspace: square frame, accumulated log norms, batch snapshots.
struct Track {
  const std::vector<Eigen::MatrixXd>* gens = nullptr;
  Eigen::MatrixXd frame;
  Eigen::MatrixXd tmp;
  std::vector<double> cum;
  std::vector<double> prev;
  std::vector<std::vector<double>> batches;
};

void renorm_track(Track& tr, long long step) {
  const Eigen::Index d = tr.frame.cols();
  if (d == 0) return;
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(tr.frame);
  const Eigen::MatrixXd& qrm = qr.matrixQR();
  for (Eigen::Index i = 0; i < d; ++i) {
    const double diag = std::abs(qrm(i, i));
    if (!std::isfinite(diag) || diag < 1e-280) {
      std::ostringstream msg;
      msg << "renormalization collapsed at step " << step << " in direction " << i
          << " (frame column shrank below 1e-280); the generator set is degenerate";
      throw InvariantViolation(msg.str());
    }
    tr.cum[static_cast<std::size_t>(i)] += std::log(diag);
  }
  tr.frame = qr.householderQ() * Eigen::MatrixXd::Identity(tr.frame.rows(), d);
}

void run_replica(std::uint64_t seed, long long steps, int renorm,
                 const std::vector<long long>& bounds,
                 const std::vector<double>& cumulative, std::vector<Track>& tracks) {
  std::uint64_t state = seed;
  std::size_t next_b = 0;
  for (long long t = 0; t < steps; ++t) {
    const std::size_t g = pick_index(cumulative, unit_double(state));
    for (Track& tr : tracks) {
      tr.tmp.noalias() = (*tr.gens)[g] * tr.frame;
      tr.frame.swap(tr.tmp);
    }
    const bool boundary = next_b < bounds.size() && t + 1 == bounds[next_b];
    if ((t + 1) % renorm == 0 || boundary)
      for (Track& tr : tracks) renorm_track(tr, t + 1);
    if (boundary) {
      const long long start = next_b == 0 ? 0 : bounds[next_b - 1];
      const double len = static_cast<double>(bounds[next_b] - start);
      for (Track& tr : tracks) {
        std::vector<double> rate(tr.cum.size());
        for (std::size_t i = 0; i < rate.size(); ++i)
          rate[i] = (tr.cum[i] - tr.prev[i]) / len;
        tr.batches.push_back(std::move(rate));
        tr.prev = tr.cum;
      }
      ++next_b;
    }
  }
}

struct MergedTrack {
  std::vector<double> rate;    // per direction, averaged over replicas
  std::vector<double> se;      // batch-means error of the average
  std::vector<std::vector<double>> batches;  // all replicas' batches
};

MergedTrack merge_track(const std::vector<std::vector<Track>>& replicas, std::size_t j,
                        long long steps) {
  MergedTrack out;
  const std::size_t d = replicas[0][j].cum.size();
  out.rate.assign(d, 0.0);
  for (const auto& rep : replicas) {
    for (std::size_t i = 0; i < d; ++i)
      out.rate[i] += rep[j].cum[i] / static_cast<double>(steps);
    for (const auto& b : rep[j].batches) out.batches.push_back(b);
  }
  for (double& r : out.rate) r /= static_cast<double>(replicas.size());
  out.se.assign(d, 0.0);
  const std::size_t nb = out.batches.size();
  if (nb >= 2) {
    for (std::size_t i = 0; i < d; ++i) {
      double mean = 0.0;
      for (const auto& b : out.batches) mean += b[i];
      mean /= static_cast<double>(nb);
      double var = 0.0;
      for (const auto& b : out.batches) var += (b[i] - mean) * (b[i] - mean);
      var /= static_cast<double>(nb - 1);
      out.se[i] = std::sqrt(var / static_cast<double>(nb));
    }
  }
  return out;
}

// Sort directions by estimated rate, descending, carrying errors and batch
// columns along.
void sort_merged(MergedTrack& t) {
  const std::size_t d = t.rate.size();
  std::vector<std::size_t> idx(d);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return t.rate[a] > t.rate[b]; });
  MergedTrack s;
  s.rate.resize(d);
  s.se.resize(d);
  for (std::size_t i = 0; i < d; ++i) {
    s.rate[i] = t.rate[idx[i]];
    s.se[i] = t.se[idx[i]];
  }
  s.batches.reserve(t.batches.size());
  for (const auto& b : t.batches) {
    std::vector<double> row(d);
    for (std::size_t i = 0; i < d; ++i) row[i] = b[idx[i]];
    s.batches.push_back(std::move(row));
  }
  t = std::move(s);
}

bool symmetric_within(const std::vector<double>& x, const std::vector<double>& se,
                      double factor) {
  const std::size_t d = x.size();
  for (std::size_t i = 0; i < d; ++i) {
    const std::size_t j = d - 1 - i;
    const double tol = factor * std::hypot(se[i], se[j]) + 1e-12;
    if (std::abs(x[i] + x[j]) > tol) return false;
  }
  return true;
}

Eigen::MatrixXd orthonormal_columns(const Eigen::MatrixXd& c, Eigen::Index expect,
                                    const char* what) {
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(c);
  qr.setThreshold(1e-9);
  const Eigen::Index rank = qr.rank();
  if (rank != expect) {
    std::ostringstream msg;
    msg << what << ": numerical span has dimension " << rank << ", expected " << expect;
    throw InvariantViolation(msg.str());
  }
  Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(c.rows(), rank);
  return q;
}

// Restriction of a to the column span of b (b orthonormal); gates that the
// span is actually invariant before trusting the restriction.
Eigen::MatrixXd restrict_to(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b,
                            const char* what) {
  const Eigen::MatrixXd ab = a * b;
  const Eigen::MatrixXd r = b.transpose() * ab;
  const double residual = (ab - b * r).cwiseAbs().maxCoeff();
  const double scale = 1.0 + ab.cwiseAbs().maxCoeff();
  if (residual > 1e-8 * scale)
    throw InvariantViolation(std::string(what) +
                             ": generator does not preserve the subspace");
  return r;
}

std::array<long long, 4> inverse_derivative(const std::array<long long, 4>& d) {
  if (d[0] * d[3] - d[1] * d[2] != 1)
    throw InvariantViolation("generator derivative does not have determinant one");
  return {d[3], -d[1], -d[2], d[0]};
}

}  // namespace

AffineHomologyAction inverse_action(const H1Model& m, const AffineHomologyAction& a) {
  AffineHomologyAction inv;
  inv.which = a.which;
  inv.k = -a.k;
  inv.derivative = inverse_derivative(a.derivative);
  inv.relabeling = a.relabeling.inverse();
  inv.h1_matrix = zinverse(a.h1_matrix, "inverse_action");
  const std::size_t dim = m.dim;
  ZMat id = zmat(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) id[i][i] = 1;
  if (!(zmul(a.h1_matrix, inv.h1_matrix) == id))
    throw InvariantViolation("inverse_action: product with the inverse is not the identity");
  inv.in_aff_star = a.in_aff_star;
  inv.in_aff_star_star = a.in_aff_star_star;
  return inv;
}

std::vector<AffineHomologyAction> default_lyapunov_generators(
    const H1Model& m, const GeneratedPermGroup& gamma, const CharacterTable& t,
    const std::vector<ZMat>& rho) {
  const Origami o = Origami::from_pair(m.cc.r, m.cc.u);
  const long long cap = 4LL * m.cc.n * m.cc.n;
  std::vector<AffineHomologyAction> out;
  for (Shear which : {Shear::horizontal, Shear::vertical}) {
    const long long k0 = minimal_veech_power(o, which);
    bool found = false;
    for (long long k = k0; k <= cap; k += k0) {
      AffineHomologyAction a = affine_generator_action(m, which, k);
      classify_affine(a, m, gamma, t, rho);
      if (a.in_aff_star_star) {
        AffineHomologyAction inv = inverse_action(m, a);
        out.push_back(std::move(a));
        out.push_back(std::move(inv));
        found = true;
        break;
      }
    }
    if (!found)
      throw InputError(
          "no shear power commuting with the deck action was found within the "
          "search bound; pass generators explicitly");
  }
  return out;
}

BlockSpectrum estimate(const H1Model& m, const GeneratedPermGroup& gamma,
                       const CharacterTable& t, const std::vector<ZMat>& rho,
                       const std::vector<long long>& l, const RandomProductConfig& cfg,
                       int threads) {
  const std::size_t dim = m.dim;
  const std::size_t ng = cfg.generators.size();
  if (ng == 0) throw InputError("random product needs at least one generator");
  if (cfg.steps <= 0) throw InputError("step count must be positive");
  if (cfg.replicas < 1) throw InputError("replica count must be positive");
  const int renorm = cfg.renorm_period > 0 ? cfg.renorm_period : config().renorm_period;
  const int nbatch = config().min_batches;
  if (cfg.steps < static_cast<long long>(nbatch) * renorm)
    throw InputError("too few steps for the configured batch count and "
                     "renormalization period");
  if (l.size() != t.n_rows())
    throw InputError("multiplicity vector does not match the character table");
  if (rho.size() != gamma.order())
    throw InputError("need one homology matrix per group element");

  std::vector<double> weights = cfg.weights;
  if (weights.empty()) weights.assign(ng, 1.0 / static_cast<double>(ng));
  if (weights.size() != ng)
    throw InputError("weight list does not match the generator list");
  double wsum = 0.0;
  for (double w : weights) {
    if (w < 0.0) throw InputError("generator weights must be nonnegative");
    wsum += w;
  }
  if (std::abs(wsum - 1.0) > 1e-9)
    throw InputError("generator weights must sum to one");
  std::vector<double> cumulative(ng);
  std::partial_sum(weights.begin(), weights.end(), cumulative.begin());
  cumulative.back() = 1.0;

  bool all_star_star = true;
  std::vector<Eigen::MatrixXd> amb;
  amb.reserve(ng);
  for (const AffineHomologyAction& a : cfg.generators) {
    if (a.h1_matrix.size() != dim)
      throw InputError("generator matrix size does not match the homology model");
    all_star_star = all_star_star && a.in_aff_star_star;
    amb.push_back(to_double(a.h1_matrix));
  }

  // Subspace bases: st plane, whole kernel-of-holonomy part, and (when every
  // generator commutes with the deck action) one block per real class.
  Eigen::MatrixXd st_cols(static_cast<Eigen::Index>(dim), 2);
  for (std::size_t i = 0; i < dim; ++i) {
    st_cols(static_cast<Eigen::Index>(i), 0) = m.st_sigma[i].get_d();
    st_cols(static_cast<Eigen::Index>(i), 1) = m.st_zeta[i].get_d();
  }
  const Eigen::MatrixXd b_st = orthonormal_columns(st_cols, 2, "st plane");
  const Eigen::MatrixXd zero_d = to_double(m.zero_basis);
  const Eigen::Index dim0 = zero_d.cols();
  const Eigen::MatrixXd b_whole =
      dim0 > 0 ? orthonormal_columns(zero_d, dim0, "kernel of holonomy")
               : Eigen::MatrixXd(static_cast<Eigen::Index>(dim), 0);

  const RealTypeInfo info = real_classification(gamma, t);
  struct BlockBase {
    std::size_t real_class;
    Eigen::MatrixXd basis;
    long long dim_w;
  };
  std::vector<BlockBase> bases;
  if (all_star_star && dim0 > 0) {
    const double order = static_cast<double>(gamma.order());
    for (std::size_t a = 0; a < info.real_classes.size(); ++a) {
      const auto& rc = info.real_classes[a];
      long long dw = 0;
      for (int row : rc.members)
        dw += l[static_cast<std::size_t>(row)] * t.dims[static_cast<std::size_t>(row)];
      if (dw == 0) continue;
      Eigen::MatrixXd p = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(dim),
                                                static_cast<Eigen::Index>(dim));
      for (std::size_t i = 0; i < gamma.order(); ++i) {
        const std::size_t cls = t.classes.class_of[i];
        std::complex<double> c{0.0, 0.0};
        for (int row : rc.members)
          c += static_cast<double>(t.dims[static_cast<std::size_t>(row)]) *
               std::conj(t.values[static_cast<std::size_t>(row)][cls]);
        c /= order;
        if (std::abs(c.imag()) > 1e-8)
          throw InvariantViolation("real class projector has a complex part");
        if (std::abs(c.real()) < 1e-15) continue;
        p += c.real() * to_double(rho[i]);
      }
      BlockBase bb;
      bb.real_class = a;
      bb.dim_w = dw;
      bb.basis = orthonormal_columns(p * zero_d, static_cast<Eigen::Index>(dw),
                                     "isotypic block");
      bases.push_back(std::move(bb));
    }
  }

  // Restricted generator matrices, shared across replicas.
  std::vector<std::vector<Eigen::MatrixXd>> rest(2 + bases.size());
  for (std::size_t g = 0; g < ng; ++g) {
    rest[0].push_back(restrict_to(amb[g], b_st, "st plane"));
    rest[1].push_back(dim0 > 0 ? restrict_to(amb[g], b_whole, "kernel of holonomy")
                               : Eigen::MatrixXd(0, 0));
    for (std::size_t b = 0; b < bases.size(); ++b)
      rest[2 + b].push_back(restrict_to(amb[g], bases[b].basis, "isotypic block"));
  }

  std::vector<long long> bounds(static_cast<std::size_t>(nbatch));
  for (int b = 0; b < nbatch; ++b)
    bounds[static_cast<std::size_t>(b)] = cfg.steps * (b + 1) / nbatch;

  const int replicas = cfg.replicas;
  std::uint64_t seed_state = cfg.seed;
  std::vector<std::uint64_t> seeds(static_cast<std::size_t>(replicas));
  for (auto& s : seeds) s = splitmix64(seed_state);

  auto fresh_tracks = [&]() {
    std::vector<Track> tracks(rest.size());
    for (std::size_t j = 0; j < rest.size(); ++j) {
      const Eigen::Index d = j == 1 && dim0 == 0 ? 0 : rest[j][0].rows();
      tracks[j].gens = &rest[j];
      tracks[j].frame = Eigen::MatrixXd::Identity(d, d);
      tracks[j].tmp.resize(d, d);
      tracks[j].cum.assign(static_cast<std::size_t>(d), 0.0);
      tracks[j].prev.assign(static_cast<std::size_t>(d), 0.0);
    }
    return tracks;
  };

  std::vector<std::vector<Track>> runs(static_cast<std::size_t>(replicas));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(replicas));
  const int workers = std::max(1, std::min(threads, replicas));
  if (workers == 1) {
    for (int r = 0; r < replicas; ++r) {
      runs[static_cast<std::size_t>(r)] = fresh_tracks();
      run_replica(seeds[static_cast<std::size_t>(r)], cfg.steps, renorm, bounds,
                  cumulative, runs[static_cast<std::size_t>(r)]);
    }
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&, w]() {
        for (int r = w; r < replicas; r += workers) {
          try {
            runs[static_cast<std::size_t>(r)] = fresh_tracks();
            run_replica(seeds[static_cast<std::size_t>(r)], cfg.steps, renorm, bounds,
                        cumulative, runs[static_cast<std::size_t>(r)]);
          } catch (...) {
            errors[static_cast<std::size_t>(r)] = std::current_exception();
          }
        }
      });
    for (auto& th : pool) th.join();
    for (const auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  std::vector<MergedTrack> merged(rest.size());
  for (std::size_t j = 0; j < rest.size(); ++j) {
    merged[j] = merge_track(runs, j, cfg.steps);
    sort_merged(merged[j]);
  }

  const double top = merged[0].rate[0];
  const double top_se = merged[0].se[0];
  if (!(top > 1e-9) || top <= 10.0 * top_se) {
    std::ostringstream msg;
    msg << "no reliable exponential growth in the st plane (rate " << top
        << ", batch error " << top_se << "); the generator set is too close to "
        << "unipotent for ratio normalization";
    throw InvariantViolation(msg.str());
  }

  auto fill_block = [&](const MergedTrack& mt) {
    ExponentBlock eb;
    eb.dim_w = static_cast<int>(mt.rate.size());
    eb.exponents.resize(mt.rate.size());
    eb.stderrs.resize(mt.rate.size());
    for (std::size_t i = 0; i < mt.rate.size(); ++i) {
      eb.exponents[i] = mt.rate[i] / top;
      eb.stderrs[i] = mt.se[i] / top;
    }
    eb.batch_rates = mt.batches;
    eb.symmetric_within_3se = symmetric_within(eb.exponents, eb.stderrs, 3.0);
    return eb;
  };

  BlockSpectrum spec;
  spec.rng = kRngTag;
  spec.seed = cfg.seed;
  spec.steps = cfg.steps;
  spec.replicas = replicas;
  spec.generators_all_star_star = all_star_star;
  spec.st_top_rate = top;
  spec.scope_note =
      "Exponents of the configured random product of affine homology actions, "
      "normalized by the measured top growth on the st plane. These are not "
      "Teichmueller flow exponents; only symmetry and block multiplicity "
      "structure transfer.";
  if (!all_star_star)
    spec.scope_note += " Generators were not all in the commuting class, so the "
                       "run was not split into isotypic blocks.";

  spec.st = fill_block(merged[0]);
  spec.st.label = "st";
  spec.st.type = "st";
  spec.whole = fill_block(merged[1]);
  spec.whole.label = "whole";
  spec.whole.type = "whole";

  for (std::size_t b = 0; b < bases.size(); ++b) {
    ExponentBlock eb = fill_block(merged[2 + b]);
    const auto& rc = info.real_classes[bases[b].real_class];
    std::string label;
    for (int row : rc.members) {
      if (!label.empty()) label += "+";
      label += t.labels[static_cast<std::size_t>(row)];
    }
    eb.label = label;
    switch (info.type[static_cast<std::size_t>(rc.members[0])]) {
      case IrrType::real: eb.type = "real"; break;
      case IrrType::complex_pair: eb.type = "complex"; break;
      case IrrType::quaternionic: eb.type = "quaternionic"; break;
    }
    eb.dim_r_va = rc.dim_r;
    spec.blocks.push_back(std::move(eb));
  }

  if (all_star_star) {
    std::vector<double> union_exp, union_se;
    for (const ExponentBlock& eb : spec.blocks) {
      union_exp.insert(union_exp.end(), eb.exponents.begin(), eb.exponents.end());
      union_se.insert(union_se.end(), eb.stderrs.begin(), eb.stderrs.end());
    }
    std::vector<std::size_t> idx(union_exp.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      return union_exp[a] > union_exp[b];
    });
    bool ok = union_exp.size() == spec.whole.exponents.size();
    for (std::size_t i = 0; ok && i < idx.size(); ++i) {
      const double tol =
          3.0 * std::hypot(union_se[idx[i]], spec.whole.stderrs[i]) + 1e-12;
      ok = std::abs(union_exp[idx[i]] - spec.whole.exponents[i]) <= tol;
    }
    spec.union_matches_whole = ok;
  }
  return spec;
}

namespace {

struct Clusters {
  std::vector<int> id;
  std::vector<int> sizes;
  std::vector<double> means;
  double min_gap = std::numeric_limits<double>::infinity();
  bool conclusive = true;
};

Clusters cluster_block(const ExponentBlock& eb, double fixed_tol) {
  Clusters c;
  const std::size_t d = eb.exponents.size();
  c.id.assign(d, 0);
  int cur = 0;
  for (std::size_t i = 1; i < d; ++i) {
    const double thr =
        fixed_tol > 0.0
            ? fixed_tol
            : std::max(config().cluster_abs_tol,
                       config().cluster_se_factor *
                           std::hypot(eb.stderrs[i - 1], eb.stderrs[i]));
    const double gap = eb.exponents[i - 1] - eb.exponents[i];
    if (gap > thr) {
      ++cur;
      c.min_gap = std::min(c.min_gap, gap);
      if (gap < 2.0 * thr) c.conclusive = false;
    }
    c.id[i] = cur;
  }
  c.sizes.assign(static_cast<std::size_t>(cur + 1), 0);
  c.means.assign(static_cast<std::size_t>(cur + 1), 0.0);
  for (std::size_t i = 0; i < d; ++i) {
    c.sizes[static_cast<std::size_t>(c.id[i])] += 1;
    c.means[static_cast<std::size_t>(c.id[i])] += eb.exponents[i];
  }
  for (std::size_t k = 0; k < c.means.size(); ++k)
    c.means[k] /= static_cast<double>(c.sizes[k]);
  return c;
}

}  // namespace

DivisibilityVerdict divisibility_check(BlockSpectrum& s, double cluster_tol) {
  DivisibilityVerdict v;
  v.applicable = s.generators_all_star_star;
  v.min_inter_cluster_gap = std::numeric_limits<double>::infinity();
  if (!v.applicable) {
    v.per_block.assign(s.blocks.size(),
                       "skipped: generators were not all in the commuting class");
    if (s.blocks.empty()) v.min_inter_cluster_gap = 0.0;
    return v;
  }
  v.all_divisible = true;
  v.conclusive = true;
  for (ExponentBlock& eb : s.blocks) {
    Clusters c = cluster_block(eb, cluster_tol);
    eb.cluster = c.id;
    eb.cluster_sizes = c.sizes;
    if (std::isfinite(c.min_gap))
      v.min_inter_cluster_gap = std::min(v.min_inter_cluster_gap, c.min_gap);
    v.conclusive = v.conclusive && c.conclusive;
    std::ostringstream verdict;
    bool ok = true;
    for (std::size_t k = 0; k < c.sizes.size(); ++k) {
      if (eb.dim_r_va > 0 && c.sizes[k] % eb.dim_r_va != 0) {
        verdict << "violated: cluster of size " << c.sizes[k]
                << " is not a multiple of " << eb.dim_r_va;
        ok = false;
        break;
      }
    }
    if (ok && eb.zero_bound) {
      std::size_t zk = 0;
      for (std::size_t k = 1; k < c.means.size(); ++k)
        if (std::abs(c.means[k]) < std::abs(c.means[zk])) zk = k;
      double zthr = cluster_tol > 0.0 ? cluster_tol : config().cluster_abs_tol;
      for (std::size_t i = 0; i < eb.cluster.size(); ++i)
        if (eb.cluster[i] == static_cast<int>(zk))
          zthr = std::max(zthr, config().cluster_se_factor * eb.stderrs[i]);
      if (std::abs(c.means[zk]) > zthr) {
        verdict << "violated: no cluster at zero but bound " << *eb.zero_bound;
        ok = false;
      } else if (c.sizes[zk] < *eb.zero_bound) {
        verdict << "violated: zero cluster has size " << c.sizes[zk]
                << ", bound requires " << *eb.zero_bound;
        ok = false;
      }
    }
    if (ok) {
      verdict << "divisible by " << eb.dim_r_va;
      if (!c.conclusive) verdict << " (inconclusive: clusters weakly separated)";
    }
    std::ostringstream gap;
    if (std::isfinite(c.min_gap))
      gap << "; minimal inter-cluster gap " << std::setprecision(3) << c.min_gap;
    else
      gap << "; single cluster";
    v.per_block.push_back(verdict.str() + gap.str());
    v.all_divisible = v.all_divisible && ok;
  }
  if (!std::isfinite(v.min_inter_cluster_gap)) v.min_inter_cluster_gap = 0.0;
  return v;
}

}  // namespace origami
