#include "origami/selftest.hpp"

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <utility>

#include "origami/affine.hpp"
#include "origami/errors.hpp"
#include "origami/families.hpp"
#include "origami/homology.hpp"
#include "origami/isotypic.hpp"
#include "origami/lyapunov.hpp"
#include "origami/sl2p.hpp"
#include "origami/sn.hpp"

namespace origami::selftest {

namespace {

using Clock = std::chrono::steady_clock;

void require(bool ok, const std::string& msg) {
  if (!ok) throw InvariantViolation(msg);
}

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Permutation random_perm(int n, std::uint64_t& state) {
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = i;
  for (int i = n - 1; i > 0; --i) {
    const int j = static_cast<int>(splitmix64(state) % static_cast<std::uint64_t>(i + 1));
    std::swap(img[static_cast<std::size_t>(i)], img[static_cast<std::size_t>(j)]);
  }
  return Permutation(std::move(img));
}

ZVec apply(const ZMat& m, const ZVec& v) {
  ZVec out(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  return out;
}

ZVec combine(long long a, const ZVec& x, long long b, const ZVec& y) {
  ZVec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    out[i] = static_cast<long>(a) * x[i] + static_cast<long>(b) * y[i];
  return out;
}

// ---------------------------------------------------------------------------
// Shared corpus: the named examples plus deterministic randomized transitive
// pairs, each with its automorphism group, character table, multiplicities,
// homology model and group matrices.

struct CorpusEntry {
  std::string name;
  Origami o;
  GeneratedPermGroup gamma;
  CharacterTable t;
  std::vector<long long> m_mult;
  std::vector<long long> l_mult;
  H1Model model;
  std::vector<ZMat> rho;
};

CorpusEntry make_entry(std::string name, Origami o) {
  GeneratedPermGroup gamma = automorphism_group(o);
  CharacterTable t = character_table(gamma);
  std::vector<long long> mm = multiplicity_m(o, gamma, t);
  std::vector<long long> ll = multiplicity_l(o, gamma, t);
  H1Model model = h1_model(build_complex(o));
  std::vector<ZMat> rho = gamma_h1_matrices(model, gamma);
  return CorpusEntry{std::move(name), std::move(o),  std::move(gamma),
                     std::move(t),    std::move(mm), std::move(ll),
                     std::move(model), std::move(rho)};
}

std::vector<CorpusEntry> build_corpus() {
  std::vector<CorpusEntry> c;
  const auto pc = [](const std::string& s, int deg) {
    return Permutation::from_cycles(s, deg);
  };
  c.push_back(make_entry("torus", Origami::from_pair(Permutation::identity(1),
                                                     Permutation::identity(1))));
  c.push_back(make_entry("cylinder-3", Origami::from_pair(pc("(0 1 2)", 3),
                                                          Permutation::identity(3))));
  c.push_back(make_entry("ell-3", Origami::from_pair(pc("(0 1)", 3), pc("(0 2)", 3))));
  c.push_back(make_entry("klein", families::klein_example().gd.o));
  c.push_back(make_entry("heisenberg-3", families::heisenberg_regular(3).gd.o));
  c.push_back(make_entry("heisenberg-qr-3", families::heisenberg_quasiregular(3).gd.o));
  c.push_back(make_entry("heisenberg-qr-5", families::heisenberg_quasiregular(5).gd.o));
  for (int n : {2, 3, 4})
    c.push_back(make_entry("sn-" + std::to_string(n), families::sn_family(n).gd.o));

  std::uint64_t state = 0x5eed5eed5eedULL;
  int made = 0;
  while (made < 15) {
    const int n = 5 + static_cast<int>(splitmix64(state) % 8);
    Permutation r = random_perm(n, state);
    Permutation u = random_perm(n, state);
    try {
      Origami o = Origami::from_pair(std::move(r), std::move(u));
      c.push_back(make_entry("random-" + std::to_string(made), std::move(o)));
      ++made;
    } catch (const InputError&) {
      // not transitive; redraw
    }
  }
  return c;
}

// ---------------------------------------------------------------------------
// Criterion bodies. Each throws on failure and returns a short detail note.

// 1: commutator order tables, trace recursion against the permutation oracle.
std::string crit_order_tables() {
  struct Row {
    int p, pisq;
    long long ord;
  };
  static const Row rows[] = {
      {5, 1, 10},  {5, 4, 6},   {7, 1, 8},   {7, 2, 8},   {7, 4, 3},
      {11, 1, 5},  {11, 3, 12}, {11, 4, 12}, {11, 5, 5},  {11, 9, 4},
      {13, 1, 14}, {13, 3, 14}, {13, 4, 14}, {13, 9, 26}, {13, 10, 3},
      {13, 12, 6}};
  int checked = 0;
  for (const Row& row : rows) {
    int pi = 0;
    for (int x = 1; x < row.p; ++x)
      if (x * x % row.p == row.pisq) pi = x;
    require(pi != 0, "table row has a non-residue entry");
    require(sl2::ord_by_trace(row.p, pi) == row.ord,
            "trace recursion missed a printed commutator order");
    const Permutation pr = sl2::vector_action({1, pi, 0, 1}, row.p);
    const Permutation pu = sl2::vector_action({1, 0, 1, 1}, row.p);
    const Permutation comm =
        compose(compose(pr.inverse(), pu.inverse()), compose(pr, pu));
    require(comm.order() == row.ord,
            "permutation oracle missed a printed commutator order");
    ++checked;
  }
  for (int p : {5, 7, 11, 13}) {
    int cnt = 0;
    for (const Row& row : rows) cnt += row.p == p;
    require(cnt == (p - 1) / 2, "a printed table row is missing");
  }
  return std::to_string(checked) + " table rows, both routes";
}

// 2: the 120-square parabolic example, formula path only.
std::string crit_parabolic_example() {
  const families::FamilyInstance fi = families::sl2p_family(5, 1, 1);
  require(fi.genus == 55, "genus is not 55");
  long long sum = 0;
  for (std::size_t r = 0; r < fi.table.n_rows(); ++r) {
    const std::string& name = fi.expected[r].label;
    long long want = -1;
    if (name == "U") want = 0;
    else if (name == "V") want = 4;
    else if (name.rfind("W_tau", 0) == 0) want = 6;
    else if (name == "W'" || name == "W''") want = 2;
    else if (name.rfind("X_phi", 0) == 0) want = 4;
    else if (name == "X'" || name == "X''") want = 2;
    require(want >= 0, "unrecognized row label " + name);
    require(fi.l[r] == want, "multiplicity of " + name + " is off");
    sum += fi.l[r] * fi.table.dims[r];
  }
  require(sum == 108 && sum == 2 * fi.genus - 2,
          "weighted multiplicity sum is not 108");
  return "9 row kinds, sum 108 = 2g-2, g 55";
}

// 3: symmetric family closed forms and duality.
std::string crit_symmetric_family(bool slow) {
  const auto check_n = [](int n) {
    const families::FamilyInstance fi = families::sn_family(n);
    std::map<std::string, std::size_t> row_by_label;
    for (std::size_t r = 0; r < fi.expected.size(); ++r)
      row_by_label[fi.expected[r].label] = r;
    for (const sn::Partition& part : sn::partitions(n)) {
      const std::size_t r = row_by_label.at(sn::to_string(part));
      require(fi.l[r] == sn::closed_form_l(n, part),
              "closed form missed " + sn::to_string(part) + " at n=" +
                  std::to_string(n));
      const std::size_t rc = row_by_label.at(sn::to_string(sn::conjugate(part)));
      require(fi.l[r] + fi.l[rc] == 2 * sn::dimension(part),
              "conjugate duality failed at " + sn::to_string(part));
    }
  };
  const auto t0 = Clock::now();
  for (int n : {4, 5}) check_n(n);
  const double fast_part = std::chrono::duration<double>(Clock::now() - t0).count();
  require(fast_part < 60.0, "n <= 5 exceeded the 60 s budget");
  if (!slow) return "n in {4,5}; n=6 needs --slow";

  const families::FamilyInstance fi = families::sn_family(6);
  std::map<std::string, std::size_t> row_by_label;
  for (std::size_t r = 0; r < fi.expected.size(); ++r)
    row_by_label[fi.expected[r].label] = r;
  const auto l_of = [&](const sn::Partition& part) {
    return fi.l[row_by_label.at(sn::to_string(part))];
  };
  require(l_of({3, 3}) == 4, "n=6 (3,3) is not 4");
  require(l_of({2, 2, 2}) == 6, "n=6 (2,2,2) is not 6");
  require(l_of({3, 2, 1}) == 8, "n=6 (3,2,1) is not 8");
  for (const sn::Partition& part : sn::partitions(6)) {
    require(l_of(part) == sn::closed_form_l(6, part), "closed form missed a n=6 row");
    require(l_of(part) + l_of(sn::conjugate(part)) == 2 * sn::dimension(part),
            "conjugate duality failed at n=6");
  }
  return "n in {4,5,6} including the three printed n=6 values";
}

// 4: exact projector-rank oracle over the corpus.
std::string crit_rank_oracle(const std::vector<CorpusEntry>& corpus) {
  require(corpus.size() >= 25, "corpus is smaller than 25 origamis");
  for (const CorpusEntry& e : corpus) {
    require(e.o.n_squares <= 200, "corpus entry exceeds 200 squares");
    const IsotypicRankReport rep =
        isotypic_rank_oracle(e.model, e.gamma, e.t, e.rho, e.l_mult);
    require(rep.all_match, "projector rank mismatch on " + e.name);
    long long total = 0;
    for (const OrbitRank& orb : rep.orbits) total += orb.rank;
    require(total == 2 * static_cast<long long>(e.model.cc.genus) - 2,
            "orbit ranks do not fill the kernel of holonomy on " + e.name);
  }
  return std::to_string(corpus.size()) + " origamis, every rank exact";
}

// 5: structural theorems and sum rules over the corpus.
std::string crit_structural(const std::vector<CorpusEntry>& corpus, bool inject) {
  require(!corpus.empty(), "corpus was not built");
  for (const CorpusEntry& e : corpus) {
    std::vector<long long> l = e.l_mult;
    if (inject && e.name == "klein") l[1] += 2;
    const long long l0 = l[0];
    for (std::size_t r = 0; r < l.size(); ++r) {
      require(l[r] != 1, "a multiplicity equals one on " + e.name);
      require(l[r] >= l0, "trivial multiplicity is not minimal on " + e.name);
    }
    require((l0 == 0) == is_quasiregular(e.o),
            "quasiregularity criteria disagree on " + e.name);
    const SingularityData sd = singularity_data(e.o);
    long long msum = 0, lsum = 0;
    for (std::size_t r = 0; r < l.size(); ++r) {
      msum += e.m_mult[r] * e.t.dims[r];
      lsum += l[r] * e.t.dims[r];
    }
    require(msum == sd.sigma_star_count,
            "sum rule over the branch fiber failed on " + e.name);
    require(lsum == 2 * static_cast<long long>(sd.genus) - 2,
            "sum rule against the genus failed on " + e.name);
  }
  return std::to_string(corpus.size()) + " origamis, all five statements";
}

// 7: the intersection form and the affine restrictions over the corpus.
std::string crit_homology_geometry(const std::vector<CorpusEntry>& corpus,
                                   bool inject) {
  require(!corpus.empty(), "corpus was not built");
  int actions = 0;
  for (const CorpusEntry& e : corpus) {
    ZMat j = e.model.intersection;
    if (inject && e.name == "torus") j[0][1] += 1;
    const std::size_t dim = j.size();
    for (std::size_t a = 0; a < dim; ++a)
      for (std::size_t b = 0; b < dim; ++b)
        require(j[a][b] == -j[b][a],
                "intersection form is not antisymmetric on " + e.name);
    const mpz_class det = det_z(j);
    require(det == 1 || det == -1,
            "intersection form is not unimodular on " + e.name);
    for (const ZMat& r : e.rho)
      require(zmul(ztranspose(r), zmul(j, r)) == j,
              "deck action does not preserve the form on " + e.name);
    for (Shear which : {Shear::horizontal, Shear::vertical}) {
      const long long k = minimal_veech_power(e.o, which);
      const AffineHomologyAction a = affine_generator_action(e.model, which, k);
      const ZMat& h = a.h1_matrix;
      require(zmul(ztranspose(h), zmul(j, h)) == j,
              "affine action does not preserve the form on " + e.name);
      const auto& d = a.derivative;
      require(apply(h, e.model.st_sigma) ==
                  combine(d[0], e.model.st_sigma, d[2], e.model.st_zeta),
              "horizontal tautological image is off on " + e.name);
      require(apply(h, e.model.st_zeta) ==
                  combine(d[1], e.model.st_sigma, d[3], e.model.st_zeta),
              "vertical tautological image is off on " + e.name);
      ++actions;
    }
  }
  return std::to_string(corpus.size()) + " forms, " + std::to_string(actions) +
         " affine actions";
}

// 8: the label action of the shear generators on the mod-p families.
std::string crit_label_action() {
  int verified = 0;
  for (int p : {3, 5}) {
    const families::FamilyInstance fi = families::heisenberg_regular(p);
    const H1Model m = h1_model(build_complex(fi.gd.o));
    const GeneratedPermGroup& gamma = *fi.gd.Gamma;
    const std::vector<ZMat> rho = gamma_h1_matrices(m, gamma);

    std::map<std::pair<int, int>, std::size_t> row_of_linear;
    for (std::size_t r = 0; r < fi.table.n_rows(); ++r)
      if (fi.linear_labels[r]) row_of_linear[*fi.linear_labels[r]] = r;

    for (Shear which : {Shear::horizontal, Shear::vertical}) {
      for (long long k : {1LL, static_cast<long long>(p)}) {
        AffineHomologyAction a = affine_generator_action(m, which, k);
        const AffineClassification cls = classify_affine(a, m, gamma, fi.table, rho);
        const long long det =
            a.derivative[0] * a.derivative[3] - a.derivative[1] * a.derivative[2];
        require(det == 1, "shear derivative is not unimodular");
        bool moved = false;
        for (std::size_t r = 0; r < fi.table.n_rows(); ++r) {
          if (fi.linear_labels[r]) {
            const auto want = families::heisenberg_linear_label_action(
                *fi.linear_labels[r], a.derivative, p);
            require(cls.label_action[r] ==
                        static_cast<int>(row_of_linear.at(want)),
                    "linear label moved off the derivative rule at p=" +
                        std::to_string(p));
            moved = moved || cls.label_action[r] != static_cast<int>(r);
          }
          if (fi.central_exponents[r]) {
            require(families::heisenberg_central_label_action(
                        *fi.central_exponents[r], a.derivative, p) ==
                        *fi.central_exponents[r],
                    "central exponent should be fixed by a determinant-one shear");
            require(cls.label_action[r] == static_cast<int>(r),
                    "a positive-multiplicity component moved at p=" +
                        std::to_string(p));
          }
          if (fi.l[r] > 0)
            require(cls.label_action[r] == static_cast<int>(r),
                    "a real isotypic component of the kernel part moved");
        }
        if (k == 1)
          require(moved && !cls.in_aff_star_star,
                  "the unit shear should move linear labels");
        if (k == p)
          require(!moved && cls.in_aff_star_star,
                  "the p-th shear power should fix every label");
        ++verified;
      }
    }
  }
  return std::to_string(verified) + " shear actions at p in {3,5}";
}

// 9: random-product structure on the 27-square mod-3 example.
std::string crit_random_products(int threads) {
  const families::FamilyInstance fi = families::heisenberg_regular(3);
  const H1Model m = h1_model(build_complex(fi.gd.o));
  const GeneratedPermGroup& gamma = *fi.gd.Gamma;
  const std::vector<ZMat> rho = gamma_h1_matrices(m, gamma);
  RandomProductConfig cfg;
  cfg.seed = 1;
  cfg.steps = 1000000;
  cfg.generators = default_lyapunov_generators(m, gamma, fi.table, rho);
  BlockSpectrum spec = estimate(m, gamma, fi.table, rho, fi.l, cfg, threads);

  require(spec.generators_all_star_star, "generators are not all commuting");
  require(spec.st.exponents.size() == 2 && spec.st.exponents[0] == 1.0 &&
              std::abs(spec.st.exponents[1] + 1.0) < 1e-9,
          "tautological exponents are not +1/-1");
  require(spec.blocks.size() == 1 && spec.blocks[0].dim_w == 18 &&
              spec.blocks[0].dim_r_va == 6,
          "expected one 18-dimensional block with real dimension 6");
  require(spec.blocks[0].symmetric_within_3se && spec.whole.symmetric_within_3se,
          "spectrum is not symmetric within three pooled errors");
  require(spec.union_matches_whole,
          "block and whole-space spectra disagree beyond three errors");
  const DivisibilityVerdict v = divisibility_check(spec);
  require(v.applicable && v.all_divisible,
          "cluster sizes are not multiples of the real dimension");
  std::ostringstream detail;
  detail << spec.blocks[0].cluster_sizes.size() << " clusters of sizes";
  for (int s : spec.blocks[0].cluster_sizes) detail << " " << s;
  detail << ", top rate " << spec.st_top_rate;
  return detail.str();
}

// 6: representation type counts for the special linear families.
std::string crit_type_counts() {
  for (int p : {5, 7, 11, 13}) {
    const GeneratedPermGroup g = sl2::special_linear_group(p, 1, 1);
    const CharacterTable t = character_table(g);
    const sl2::TypeCounts got = sl2::table_type_counts(g, t);
    int real = 0, quat = 0, cplx = 0;
    if (p % 4 == 1) {
      real = (p + 5) / 2;
      quat = (p + 3) / 2;
      cplx = 0;
    } else {
      real = (p + 1) / 2;
      quat = (p - 1) / 2;
      cplx = 4;
    }
    require(got.real_count == real && got.quaternionic_count == quat &&
                got.complex_count == cplx,
            "type counts are off at p=" + std::to_string(p));
    const sl2::TypeCounts want = sl2::expected_type_counts(p);
    require(want.real_count == real && want.quaternionic_count == quat &&
                want.complex_count == cplx,
            "closed type counts are off at p=" + std::to_string(p));
    require(static_cast<std::size_t>(real + quat + cplx) == t.n_rows(),
            "type counts do not cover the table at p=" + std::to_string(p));
  }
  return "p in {5,7,11,13}, both parity branches";
}

// 10: the injections must turn exactly the right criteria red.
std::string crit_negative_controls(const std::vector<CorpusEntry>& corpus) {
  bool caught = false;
  try {
    crit_structural(corpus, true);
  } catch (const InvariantViolation& e) {
    caught = std::string(e.what()).find("sum rule") != std::string::npos;
  }
  require(caught, "an injected wrong multiplicity went unnoticed");
  caught = false;
  try {
    crit_homology_geometry(corpus, true);
  } catch (const InvariantViolation& e) {
    caught = std::string(e.what()).find("antisymmetric") != std::string::npos;
  }
  require(caught, "an injected form corruption went unnoticed");
  return "both injections were caught with the right diagnostic";
}

}  // namespace

std::vector<CriterionResult> run_all(const Options& opt) {
  std::vector<CriterionResult> out;
  std::vector<CorpusEntry> corpus;  // built at first use, inside a timing scope

  const auto run = [&out](int number, const std::string& name, double budget,
                          const std::function<std::string()>& body,
                          bool skip = false, const std::string& why = "") {
    CriterionResult r;
    r.number = number;
    r.name = name;
    if (skip) {
      r.status = "skip";
      r.detail = why;
      out.push_back(std::move(r));
      return;
    }
    const auto t0 = Clock::now();
    try {
      r.detail = body();
      r.status = "pass";
    } catch (const std::exception& e) {
      r.status = "fail";
      r.detail = e.what();
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    if (r.status == "pass" && budget > 0.0 && r.seconds >= budget) {
      r.status = "fail";
      r.detail = "exceeded the " + std::to_string(static_cast<int>(budget)) +
                 " s budget";
    }
    out.push_back(std::move(r));
  };

  run(1, "commutator order tables", 1.0, [] { return crit_order_tables(); });
  run(2, "parabolic multiplicities", 10.0, [] { return crit_parabolic_example(); });
  run(3, "symmetric family closed forms", 0.0,
      [&] { return crit_symmetric_family(opt.slow); });
  run(4, "projector rank oracle", 300.0, [&] {
    corpus = build_corpus();
    return crit_rank_oracle(corpus);
  });
  run(5, "structural theorems", 0.0,
      [&] { return crit_structural(corpus, opt.inject_wrong_l); });
  run(6, "representation type counts", 0.0, [] { return crit_type_counts(); });
  run(7, "homology geometry", 0.0,
      [&] { return crit_homology_geometry(corpus, opt.inject_broken_form); });
  run(8, "heisenberg label action", 0.0, [] { return crit_label_action(); });
  run(9, "random product structure", 300.0,
      [&] { return crit_random_products(opt.threads); }, opt.quick,
      "skipped in quick mode");
  run(10, "negative controls", 0.0,
      [&] { return crit_negative_controls(corpus); });
  return out;
}

bool all_passed(const std::vector<CriterionResult>& results) {
  for (const CriterionResult& r : results)
    if (r.status == "fail") return false;
  return true;
}

std::string format_line(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.status == "pass" ? "PASS" : r.status == "skip" ? "SKIP" : "FAIL");
  os << "  criterion " << (r.number < 10 ? " " : "") << r.number << "  ";
  std::string name = r.name;
  name.resize(32, ' ');
  os << name;
  std::ostringstream secs;
  secs.setf(std::ios::fixed);
  secs.precision(2);
  secs << r.seconds;
  std::string st = secs.str();
  if (st.size() < 8) st.insert(0, 8 - st.size(), ' ');
  os << st << " s  " << r.detail;
  return os.str();
}

}  // namespace origami::selftest
