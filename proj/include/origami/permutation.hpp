#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace origami {

// One-line notation: img[x] is the image of point x.
//
// The composition convention is fixed once for the whole library:
// compose(a, b) applies b first, (a*b)(x) = a(b(x)). Right actions by
// generator words (coset translations and the like) are expressed in
// this convention at their point of use.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);
  // Parses cycle notation such as "(0 1)(4 5)(2 3 6 7)". Cycles need not be
  // disjoint; the rightmost cycle acts first. "()" is the identity.
  static Permutation from_cycles(const std::string& text, int degree);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int x) const { return img_[x]; }
  const std::vector<int>& images() const { return img_; }

  bool is_identity() const;
  Permutation inverse() const;
  Permutation power(long long e) const;
  long long order() const;
  int fixed_points() const;

  // Cycle decomposition; fixed points omitted unless keep_fixed.
  std::vector<std::vector<int>> cycles(bool keep_fixed = false) const;
  std::string cycle_string() const;

  bool operator==(const Permutation& o) const { return img_ == o.img_; }
  bool operator!=(const Permutation& o) const { return img_ != o.img_; }
  bool operator<(const Permutation& o) const { return img_ < o.img_; }
  std::uint64_t hash() const;

 private:
  std::vector<int> img_;
};

Permutation compose(const Permutation& a, const Permutation& b);

// Group product: apply a first, then b. When permutations play the role of
// abstract group elements (monodromy words, coset translations, commutators)
// the product ab must mean "do a, then b", otherwise the coset model builds
// the mirror surface. Function composition stays available as compose().
inline Permutation mul(const Permutation& a, const Permutation& b) { return compose(b, a); }

// g x g^-1 in the product convention above.
Permutation conjugate(const Permutation& g, const Permutation& x);

// The two commutator conventions in circulation: "grgu" is a b a^-1 b^-1,
// "inverse" is a^-1 b^-1 a b, both read in the mul() product convention.
// They produce conjugate-inverse elements, so every orbit-length and
// fixed-space quantity downstream agrees; reports record which one was used.
enum class CommutatorConvention { grgu, inverse_grgu };

Permutation commutator(const Permutation& a, const Permutation& b,
                       CommutatorConvention conv = CommutatorConvention::grgu);

const char* convention_name(CommutatorConvention conv);
CommutatorConvention convention_from_name(const std::string& name);

std::uint64_t fnv1a64(const void* data, std::size_t len);
std::uint64_t fnv1a64(const std::string& s);

}  // namespace origami
