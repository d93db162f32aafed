#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "origami/affine.hpp"
#include "origami/characters.hpp"
#include "origami/homology.hpp"
#include "origami/permgroup.hpp"

namespace origami {

// Random products of affine homology actions, one shared index stream for the
// st plane, the whole kernel-of-holonomy part, and every isotypic block.
// Exponents are reported as ratios against the measured top growth on the st
// plane, so the st block reads {+1, -1} by construction.  These are exponents
// of the chosen random walk, not Teichmueller flow exponents; only the
// structural facts (symmetry, block multiplicities) transfer.
struct RandomProductConfig {
  std::uint64_t seed = 1;
  long long steps = 100000;
  int renorm_period = 0;  // 0 picks up config().renorm_period
  int replicas = 1;
  std::vector<AffineHomologyAction> generators;  // run classify_affine first
  std::vector<double> weights;                   // empty means uniform
};

struct ExponentBlock {
  std::string label;
  std::string type;  // "st", "whole", "real", "complex", "quaternionic"
  int dim_w = 0;
  long long dim_r_va = 1;                 // multiplicity modulus for clusters
  std::optional<long long> zero_bound;    // caller-supplied lower bound on the
                                          // zero cluster, from signature data
  std::vector<double> exponents;          // descending, normalized
  std::vector<double> stderrs;            // batch-means errors, normalized
  std::vector<std::vector<double>> batch_rates;  // [batch][direction], raw
  std::vector<int> cluster;               // filled by divisibility_check
  std::vector<int> cluster_sizes;
  bool symmetric_within_3se = false;
};

struct BlockSpectrum {
  ExponentBlock st;
  ExponentBlock whole;               // kernel of holonomy, unrestricted
  std::vector<ExponentBlock> blocks; // real isotypic classes with dim_w > 0
  double st_top_rate = 0.0;          // raw log growth per step, the normalizer
  std::string rng;                   // generator name + version tag
  std::string scope_note;            // what these numbers are and are not
  bool generators_all_star_star = false;
  bool union_matches_whole = false;  // blocks vs whole within 3 pooled errors
  long long steps = 0;
  int replicas = 1;
  std::uint64_t seed = 0;
};

struct DivisibilityVerdict {
  bool applicable = false;     // generators all carried the commuting flag
  bool all_divisible = false;
  bool conclusive = false;     // every inter-cluster gap clears the threshold
  double min_inter_cluster_gap = 0.0;
  std::vector<std::string> per_block;  // aligned with spectrum.blocks
};

// Least multiple of the minimal stabilizing power whose homology action
// commutes with the whole deck action, for both shear directions, together
// with inverses.  Throws InputError when no such power exists within the
// search bound.
std::vector<AffineHomologyAction> default_lyapunov_generators(
    const H1Model& m, const GeneratedPermGroup& gamma, const CharacterTable& t,
    const std::vector<ZMat>& rho);

// Exact inverse action: inverse derivative, inverse matrix, inverse
// relabeling.  The matrix inverse is integral because the action preserves a
// unimodular form.
AffineHomologyAction inverse_action(const H1Model& m,
                                    const AffineHomologyAction& a);

// Runs the random product.  `l` gives the multiplicity of each irreducible in
// the kernel-of-holonomy part; blocks are only split off when every generator
// carries the commuting flag, otherwise the run degrades to st + whole and is
// labeled accordingly.  Deterministic for a fixed seed; replicas derive
// independent seeds and merge by averaging with pooled variance.
BlockSpectrum estimate(const H1Model& m, const GeneratedPermGroup& gamma,
                       const CharacterTable& t, const std::vector<ZMat>& rho,
                       const std::vector<long long>& l,
                       const RandomProductConfig& cfg, int threads = 1);

// Single-linkage clustering of each block's exponents with gap threshold
// max(cluster_se_factor * local error, cluster_abs_tol), then checks that
// every cluster size is a multiple of dim_r_va (and the zero cluster clears
// zero_bound when one was supplied).  Fills the cluster fields in place.
// cluster_tol = 0 picks the configured threshold.
DivisibilityVerdict divisibility_check(BlockSpectrum& s, double cluster_tol = 0.0);

}  // namespace origami
