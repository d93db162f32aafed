#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "origami/permutation.hpp"

namespace origami {

// A finite permutation group held as an explicitly enumerated element list
// (flat image rows plus a hash index). Element 0 is always the identity and
// the enumeration order is the deterministic BFS order over the generators,
// so identical generators always yield identical element numbering.
class GeneratedPermGroup {
 public:
  GeneratedPermGroup() = default;

  // BFS closure of the generators. element_cap = 0 means config().element_cap.
  // Throws CapExceeded instead of truncating.
  static GeneratedPermGroup closure(int degree, std::vector<Permutation> generators,
                                    std::uint64_t element_cap = 0);
  static GeneratedPermGroup trivial(int degree);
  // Wraps an already-closed element set (must be distinct and include the
  // identity); extracts a small generating set and verifies closure.
  static GeneratedPermGroup from_elements(int degree,
                                          const std::vector<Permutation>& elements);

  int degree() const { return degree_; }
  std::uint64_t order() const { return order_; }
  const std::vector<Permutation>& generators() const { return gens_; }

  Permutation element(std::uint64_t i) const;
  const std::int32_t* element_images(std::uint64_t i) const {
    return flat_.data() + i * degree_;
  }
  std::optional<std::uint64_t> index_of(const Permutation& p) const;
  bool contains(const Permutation& p) const { return index_of(p).has_value(); }
  // True when every generator of h lies in this group.
  bool contains_subgroup(const GeneratedPermGroup& h) const;

  bool is_abelian() const;
  bool is_transitive() const;

 private:
  std::optional<std::uint32_t> lookup_row(const std::int32_t* img) const;
  void append_row(const std::int32_t* img);
  void extend_closure(std::uint64_t cap);

  int degree_ = 0;
  std::vector<Permutation> gens_;
  std::vector<std::int32_t> flat_;
  std::unordered_multimap<std::uint64_t, std::uint32_t> index_;
  std::uint64_t order_ = 0;
  std::uint64_t processed_ = 0;  // closure frontier marker
};

struct ConjugacyClassSet {
  std::vector<std::uint32_t> rep_indices;  // index into the group's element list
  std::vector<Permutation> representatives;
  std::vector<std::uint64_t> sizes;
  std::vector<std::int32_t> class_of;  // element index -> class id
  std::size_t count() const { return sizes.size(); }
};

ConjugacyClassSet conjugacy_classes(const GeneratedPermGroup& g);

// N(h) = { g in g : g h g^-1 = h }, found by scanning all elements of g and
// testing conjugates of h's generators. Requires h <= g.
GeneratedPermGroup normalizer(const GeneratedPermGroup& g, const GeneratedPermGroup& h);

// True iff the largest normal subgroup of g contained in h is trivial.
bool is_core_free(const GeneratedPermGroup& g, const GeneratedPermGroup& h);

// Generator-level normality test: conjugates of sub's generators by big's
// generators all lie in sub. Requires sub <= big.
bool is_normal_in(const GeneratedPermGroup& sub, const GeneratedPermGroup& big);

std::vector<int> orbit_of(int point, const std::vector<Permutation>& gens);

GeneratedPermGroup point_stabilizer(const GeneratedPermGroup& g, int point);

// Right cosets Hx of h in g; coset 0 is H itself and square/coset labels are
// BFS discovery order. Holds pointers to g and h: both must outlive the space.
class CosetSpace {
 public:
  CosetSpace(const GeneratedPermGroup& g, const GeneratedPermGroup& h);

  int count() const { return static_cast<int>(reps_.size()); }
  const Permutation& representative(int i) const { return reps_[i]; }
  int coset_of(const Permutation& x) const;

  // Hx -> Hxg, the right translation action (a homomorphism image for the
  // library's composition convention when applied as words).
  Permutation action_of(const Permutation& g) const;
  // Hx -> Hnx, the left action used for automorphisms.
  Permutation left_action_of(const Permutation& n) const;

  const GeneratedPermGroup& group() const { return *g_; }
  const GeneratedPermGroup& subgroup() const { return *h_; }

 private:
  const GeneratedPermGroup* g_;
  const GeneratedPermGroup* h_;
  std::vector<Permutation> reps_;
  std::vector<std::int32_t> coset_of_;  // by element index in g
};

// Gamma = N/H acting on the cosets of H in G from the left. Requires H normal
// in N; the action is verified free and of order |N|/|H|.
GeneratedPermGroup quotient_as_perm_group(const GeneratedPermGroup& n,
                                          const GeneratedPermGroup& h,
                                          const CosetSpace& cosets);

}  // namespace origami
