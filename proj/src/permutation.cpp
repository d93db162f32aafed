#include "origami/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "origami/errors.hpp"

namespace origami {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (int v : img_) {
    if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
      throw InputError("permutation images are not a bijection");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  return Permutation(std::move(img));
}

Permutation Permutation::from_cycles(const std::string& text, int degree) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
      ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw InputError("cycle notation: expected '(' in \"" + text + "\"");
    ++i;
    std::vector<int> cyc;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw InputError("cycle notation: expected digit in \"" + text + "\"");
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        v = 10 * v + (text[i++] - '0');
      if (v >= degree) throw InputError("cycle notation: point out of range");
      cyc.push_back(v);
      skip_ws();
    }
    if (i >= text.size()) throw InputError("cycle notation: unterminated cycle");
    ++i;  // ')'
    if (cyc.size() > 1) cycles.push_back(std::move(cyc));
    skip_ws();
  }
  // Rightmost cycle acts first.
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
    const auto& c = *it;
    auto sorted = c;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw InputError("cycle notation: repeated point within a cycle");
    std::vector<int> step(degree);
    std::iota(step.begin(), step.end(), 0);
    for (std::size_t k = 0; k < c.size(); ++k) step[c[k]] = c[(k + 1) % c.size()];
    std::vector<int> out(degree);
    for (int x = 0; x < degree; ++x) out[x] = step[img[x]];
    img = std::move(out);
  }
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
  for (int x = 0; x < degree(); ++x)
    if (img_[x] != x) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(img_.size());
  for (int x = 0; x < degree(); ++x) inv[img_[x]] = x;
  return Permutation(std::move(inv));
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw InputError("compose: degree mismatch");
  std::vector<int> img(a.degree());
  for (int x = 0; x < a.degree(); ++x) img[x] = a(b(x));
  return Permutation(std::move(img));
}

Permutation Permutation::power(long long e) const {
  Permutation base = e < 0 ? inverse() : *this;
  unsigned long long k = e < 0 ? static_cast<unsigned long long>(-e)
                               : static_cast<unsigned long long>(e);
  Permutation acc = identity(degree());
  while (k) {
    if (k & 1ULL) acc = compose(acc, base);
    base = compose(base, base);
    k >>= 1;
  }
  return acc;
}

long long Permutation::order() const {
  long long ord = 1;
  for (const auto& c : cycles()) ord = std::lcm(ord, static_cast<long long>(c.size()));
  return ord;
}

int Permutation::fixed_points() const {
  int n = 0;
  for (int x = 0; x < degree(); ++x)
    if (img_[x] == x) ++n;
  return n;
}

std::vector<std::vector<int>> Permutation::cycles(bool keep_fixed) const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(img_.size(), 0);
  for (int x = 0; x < degree(); ++x) {
    if (seen[x]) continue;
    std::vector<int> c;
    int y = x;
    do {
      seen[y] = 1;
      c.push_back(y);
      y = img_[y];
    } while (y != x);
    if (c.size() > 1 || keep_fixed) out.push_back(std::move(c));
  }
  return out;
}

std::string Permutation::cycle_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream os;
  for (const auto& c : cs) {
    os << '(';
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k) os << ' ';
      os << c[k];
    }
    os << ')';
  }
  return os.str();
}

std::uint64_t Permutation::hash() const {
  return fnv1a64(img_.data(), img_.size() * sizeof(int));
}

Permutation conjugate(const Permutation& g, const Permutation& x) {
  return mul(mul(g, x), g.inverse());
}

Permutation commutator(const Permutation& a, const Permutation& b,
                       CommutatorConvention conv) {
  Permutation ai = a.inverse(), bi = b.inverse();
  if (conv == CommutatorConvention::grgu)
    return mul(mul(a, b), mul(ai, bi));
  return mul(mul(ai, bi), mul(a, b));
}

const char* convention_name(CommutatorConvention conv) {
  return conv == CommutatorConvention::grgu ? "grgu" : "inverse";
}

CommutatorConvention convention_from_name(const std::string& name) {
  if (name == "grgu") return CommutatorConvention::grgu;
  if (name == "inverse") return CommutatorConvention::inverse_grgu;
  throw InputError("unknown commutator convention \"" + name + "\" (want grgu|inverse)");
}

std::uint64_t fnv1a64(const void* data, std::size_t len) {
  const auto* p = static_cast<const unsigned char*>(data);
  std::uint64_t h = 1469598103934665603ULL;
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 1099511628211ULL;
  }
  return h;
}

std::uint64_t fnv1a64(const std::string& s) { return fnv1a64(s.data(), s.size()); }

}  // namespace origami
