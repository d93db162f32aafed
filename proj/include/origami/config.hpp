#pragma once

#include <cstdint>

namespace origami {

// Every numeric gate and size cap lives here; reports echo this block so a
// result can always be traced to the tolerances it was computed under.
struct Config {
  double orthogonality_tol = 1e-8;  // character table row/column orthogonality
  double integrality_tol = 1e-6;    // rounding gate for values that must be integers
  double rank_gap_tol = 1e-6;       // eigenvalue gap for floating rank checks
  double char_match_tol = 1e-8;     // row matching (conjugate rows, Galois images)

  std::uint64_t element_cap = 2'000'000;  // group enumeration hard limit
  int homology_square_cap = 200;          // chain complex oracle disabled above this
  int class_cap = 200;                    // character table class-count limit
  int burnside_retries = 16;              // fresh random combinations before hard error

  int renorm_period = 8;          // Gram-Schmidt cadence in random matrix products
  int min_batches = 20;           // batch-means floor for exponent standard errors
  double cluster_abs_tol = 0.02;  // exponent clustering: absolute gap floor
  double cluster_se_factor = 5.0; // exponent clustering: standard-error multiple

  int report_digits = 12;  // significant digits in serialized reports
};

// Process-wide settings; mutable so the CLI can apply flags once at startup.
Config& config();

}  // namespace origami
