#include "origami/permgroup.hpp"

#include <algorithm>
#include <unordered_set>

#include "origami/config.hpp"
#include "origami/errors.hpp"

namespace origami {

Config& config() {
  static Config c;
  return c;
}

namespace {

std::uint64_t row_hash(const std::int32_t* img, int degree) {
  return fnv1a64(img, static_cast<std::size_t>(degree) * sizeof(std::int32_t));
}

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const {
    return fnv1a64(v.data(), v.size() * sizeof(int));
  }
};

}  // namespace

std::optional<std::uint32_t> GeneratedPermGroup::lookup_row(const std::int32_t* img) const {
  auto [lo, hi] = index_.equal_range(row_hash(img, degree_));
  for (auto it = lo; it != hi; ++it) {
    const std::int32_t* row = element_images(it->second);
    if (std::equal(row, row + degree_, img)) return it->second;
  }
  return std::nullopt;
}

void GeneratedPermGroup::append_row(const std::int32_t* img) {
  flat_.insert(flat_.end(), img, img + degree_);
  index_.emplace(row_hash(img, degree_), static_cast<std::uint32_t>(order_));
  ++order_;
}

Permutation GeneratedPermGroup::element(std::uint64_t i) const {
  const std::int32_t* row = element_images(i);
  return Permutation(std::vector<int>(row, row + degree_));
}

std::optional<std::uint64_t> GeneratedPermGroup::index_of(const Permutation& p) const {
  if (p.degree() != degree_) return std::nullopt;
  std::vector<std::int32_t> img(p.images().begin(), p.images().end());
  auto r = lookup_row(img.data());
  if (!r) return std::nullopt;
  return static_cast<std::uint64_t>(*r);
}

bool GeneratedPermGroup::contains_subgroup(const GeneratedPermGroup& h) const {
  for (const auto& g : h.generators())
    if (!contains(g)) return false;
  return true;
}

// Processes every unprocessed element against every generator, appending new
// products, until the element list is closed.
void GeneratedPermGroup::extend_closure(std::uint64_t cap) {
  std::vector<std::int32_t> scratch(degree_);
  while (processed_ < order_) {
    const std::uint64_t i = processed_++;
    for (const auto& g : gens_) {
      const std::int32_t* e = element_images(i);
      const auto& gi = g.images();
      for (int x = 0; x < degree_; ++x) scratch[x] = e[gi[x]];
      if (!lookup_row(scratch.data())) {
        if (order_ >= cap)
          throw CapExceeded("group too large: enumeration exceeds element cap " +
                            std::to_string(cap));
        append_row(scratch.data());
      }
    }
  }
}

GeneratedPermGroup GeneratedPermGroup::closure(int degree,
                                               std::vector<Permutation> generators,
                                               std::uint64_t element_cap) {
  if (degree <= 0) throw InputError("group degree must be positive");
  for (const auto& g : generators)
    if (g.degree() != degree) throw InputError("generator degree mismatch");
  GeneratedPermGroup r;
  r.degree_ = degree;
  r.gens_ = std::move(generators);
  std::vector<std::int32_t> id(degree);
  for (int x = 0; x < degree; ++x) id[x] = x;
  r.append_row(id.data());
  r.extend_closure(element_cap ? element_cap : config().element_cap);
  return r;
}

GeneratedPermGroup GeneratedPermGroup::trivial(int degree) {
  return closure(degree, {});
}

GeneratedPermGroup GeneratedPermGroup::from_elements(
    int degree, const std::vector<Permutation>& elements) {
  if (degree <= 0) throw InputError("group degree must be positive");
  GeneratedPermGroup r;
  r.degree_ = degree;
  std::vector<std::int32_t> id(degree);
  for (int x = 0; x < degree; ++x) id[x] = x;
  r.append_row(id.data());
  const std::uint64_t cap = config().element_cap;
  std::vector<std::int32_t> img(degree);
  for (const auto& e : elements) {
    if (e.degree() != degree) throw InputError("element degree mismatch");
    std::copy(e.images().begin(), e.images().end(), img.begin());
    if (r.lookup_row(img.data())) continue;
    // New generator: multiply all previously closed elements by it, then let
    // the generic sweep close over the fresh frontier with every generator.
    r.gens_.push_back(e);
    const std::uint64_t before = r.order_;
    std::vector<std::int32_t> scratch(degree);
    for (std::uint64_t i = 0; i < before; ++i) {
      const std::int32_t* row = r.element_images(i);
      const auto& gi = e.images();
      for (int x = 0; x < degree; ++x) scratch[x] = row[gi[x]];
      if (!r.lookup_row(scratch.data())) {
        if (r.order_ >= cap) throw CapExceeded("group too large");
        r.append_row(scratch.data());
      }
    }
    r.processed_ = std::min(r.processed_, before);
    r.extend_closure(cap);
  }
  if (r.order_ != elements.size())
    throw InputError("from_elements: element list is not a closed subgroup "
                     "(closure has " + std::to_string(r.order_) + " elements, list has " +
                     std::to_string(elements.size()) + ")");
  return r;
}

bool GeneratedPermGroup::is_abelian() const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    for (std::size_t j = i + 1; j < gens_.size(); ++j)
      if (compose(gens_[i], gens_[j]) != compose(gens_[j], gens_[i])) return false;
  return true;
}

bool GeneratedPermGroup::is_transitive() const {
  return static_cast<int>(orbit_of(0, gens_).size()) == degree_;
}

ConjugacyClassSet conjugacy_classes(const GeneratedPermGroup& g) {
  const int deg = g.degree();
  ConjugacyClassSet cs;
  cs.class_of.assign(g.order(), -1);
  std::vector<std::uint32_t> stack;
  std::vector<std::int32_t> scratch(deg);
  for (std::uint64_t start = 0; start < g.order(); ++start) {
    if (cs.class_of[start] != -1) continue;
    const auto cid = static_cast<std::int32_t>(cs.count());
    cs.rep_indices.push_back(static_cast<std::uint32_t>(start));
    cs.representatives.push_back(g.element(start));
    std::uint64_t size = 0;
    cs.class_of[start] = cid;
    stack.assign(1, static_cast<std::uint32_t>(start));
    while (!stack.empty()) {
      const std::uint32_t x = stack.back();
      stack.pop_back();
      ++size;
      for (const auto& gen : g.generators()) {
        const std::int32_t* xi = g.element_images(x);
        const auto& gi = gen.images();
        // y = gen * x * gen^-1, built as y(gen(t)) = gen(x(t)).
        for (int t = 0; t < deg; ++t) scratch[gi[t]] = gi[xi[t]];
        const auto y = g.index_of(Permutation(std::vector<int>(scratch.begin(), scratch.end())));
        if (!y) throw InvariantViolation("conjugate left the enumerated group");
        if (cs.class_of[*y] == -1) {
          cs.class_of[*y] = cid;
          stack.push_back(static_cast<std::uint32_t>(*y));
        }
      }
    }
    cs.sizes.push_back(size);
    if (g.order() % size != 0)
      throw InvariantViolation("conjugacy class size does not divide group order");
  }
  std::uint64_t total = 0;
  for (auto s : cs.sizes) total += s;
  if (total != g.order())
    throw InvariantViolation("conjugacy classes do not partition the group");
  return cs;
}

GeneratedPermGroup normalizer(const GeneratedPermGroup& g, const GeneratedPermGroup& h) {
  if (g.degree() != h.degree() || !g.contains_subgroup(h))
    throw InputError("normalizer: h is not a subgroup of g");
  const int deg = g.degree();
  std::vector<Permutation> found;
  std::vector<std::int32_t> scratch(deg);
  for (std::uint64_t i = 0; i < g.order(); ++i) {
    const std::int32_t* gi = g.element_images(i);
    bool ok = true;
    for (const auto& hg : h.generators()) {
      const auto& hi = hg.images();
      // w = g hg g^-1 via w(g(t)) = g(hg(t)).
      for (int t = 0; t < deg; ++t) scratch[gi[t]] = gi[hi[t]];
      if (!h.contains(Permutation(std::vector<int>(scratch.begin(), scratch.end())))) {
        ok = false;
        break;
      }
    }
    if (ok) found.push_back(g.element(i));
  }
  return GeneratedPermGroup::from_elements(deg, found);
}

bool is_core_free(const GeneratedPermGroup& g, const GeneratedPermGroup& h) {
  if (g.degree() != h.degree() || !g.contains_subgroup(h))
    throw InputError("is_core_free: h is not a subgroup of g");
  const int deg = g.degree();
  // Largest subset of h stable under conjugation by g's generators; by a
  // fixpoint argument this is the core of h in g.
  std::unordered_set<std::vector<int>, VecHash> live;
  for (std::uint64_t i = 0; i < h.order(); ++i) {
    const std::int32_t* row = h.element_images(i);
    live.insert(std::vector<int>(row, row + deg));
  }
  std::vector<int> scratch(deg);
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto it = live.begin(); it != live.end();) {
      bool keep = true;
      for (const auto& gen : g.generators()) {
        const auto& gi = gen.images();
        for (int t = 0; t < deg; ++t) scratch[gi[t]] = gi[(*it)[t]];
        if (!live.count(scratch)) {
          keep = false;
          break;
        }
      }
      if (keep) {
        ++it;
      } else {
        it = live.erase(it);
        changed = true;
      }
    }
  }
  return live.size() == 1;
}

bool is_normal_in(const GeneratedPermGroup& sub, const GeneratedPermGroup& big) {
  for (const auto& g : big.generators()) {
    const Permutation gi = g.inverse();
    for (const auto& s : sub.generators())
      if (!sub.contains(compose(compose(g, s), gi))) return false;
  }
  return true;
}

std::vector<int> orbit_of(int point, const std::vector<Permutation>& gens) {
  std::vector<int> orb{point};
  std::unordered_set<int> seen{point};
  for (std::size_t i = 0; i < orb.size(); ++i)
    for (const auto& g : gens) {
      const int y = g(orb[i]);
      if (seen.insert(y).second) orb.push_back(y);
    }
  return orb;
}

GeneratedPermGroup point_stabilizer(const GeneratedPermGroup& g, int point) {
  if (point < 0 || point >= g.degree()) throw InputError("point out of range");
  std::vector<Permutation> found;
  for (std::uint64_t i = 0; i < g.order(); ++i)
    if (g.element_images(i)[point] == point) found.push_back(g.element(i));
  return GeneratedPermGroup::from_elements(g.degree(), found);
}

CosetSpace::CosetSpace(const GeneratedPermGroup& g, const GeneratedPermGroup& h)
    : g_(&g), h_(&h) {
  if (g.degree() != h.degree() || !g.contains_subgroup(h))
    throw InputError("coset space: h is not a subgroup of g");
  coset_of_.assign(g.order(), -1);
  const auto mark = [&](const Permutation& rep, std::int32_t label) {
    for (std::uint64_t j = 0; j < h_->order(); ++j) {
      const auto idx = g_->index_of(mul(h_->element(j), rep));
      if (!idx) throw InvariantViolation("coset element missing from group enumeration");
      coset_of_[*idx] = label;
    }
  };
  reps_.push_back(Permutation::identity(g.degree()));
  mark(reps_[0], 0);
  for (std::size_t i = 0; i < reps_.size(); ++i)
    for (const auto& gen : g.generators()) {
      const Permutation next = mul(reps_[i], gen);
      const auto idx = g_->index_of(next);
      if (!idx) throw InvariantViolation("coset walk left the enumerated group");
      if (coset_of_[*idx] == -1) {
        const auto label = static_cast<std::int32_t>(reps_.size());
        reps_.push_back(next);
        mark(next, label);
      }
    }
  if (static_cast<std::uint64_t>(count()) * h.order() != g.order())
    throw InvariantViolation("coset count times subgroup order differs from group order");
}

int CosetSpace::coset_of(const Permutation& x) const {
  const auto idx = g_->index_of(x);
  if (!idx) throw InputError("coset_of: element not in group");
  return coset_of_[*idx];
}

Permutation CosetSpace::action_of(const Permutation& g) const {
  std::vector<int> img(count());
  for (int i = 0; i < count(); ++i) img[i] = coset_of(mul(reps_[i], g));
  return Permutation(std::move(img));
}

Permutation CosetSpace::left_action_of(const Permutation& n) const {
  std::vector<int> img(count());
  for (int i = 0; i < count(); ++i) img[i] = coset_of(mul(n, reps_[i]));
  return Permutation(std::move(img));
}

GeneratedPermGroup quotient_as_perm_group(const GeneratedPermGroup& n,
                                          const GeneratedPermGroup& h,
                                          const CosetSpace& cosets) {
  if (!is_normal_in(h, n)) throw InputError("quotient: h is not normal in n");
  std::vector<Permutation> gens;
  gens.reserve(n.generators().size());
  for (const auto& x : n.generators()) gens.push_back(cosets.left_action_of(x));
  auto gamma = GeneratedPermGroup::closure(cosets.count(), std::move(gens));
  if (gamma.order() * h.order() != n.order())
    throw InvariantViolation("quotient order is not |N|/|H|");
  for (std::uint64_t i = 1; i < gamma.order(); ++i)
    if (gamma.element(i).fixed_points() != 0)
      throw InvariantViolation("automorphism action on squares is not free");
  return gamma;
}

}  // namespace origami
