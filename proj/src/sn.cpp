#include "origami/sn.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "origami/errors.hpp"

namespace origami::sn {

namespace {

void gen_partitions(int n, int max_part, Partition& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int k = std::min(n, max_part); k >= 1; --k) {
    cur.push_back(k);
    gen_partitions(n - k, k, cur, out);
    cur.pop_back();
  }
}

long long factorial(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

std::vector<Partition> partitions(int n) {
  if (n < 0) throw InputError("partitions: negative n");
  std::vector<Partition> out;
  Partition cur;
  gen_partitions(n, n, cur, out);
  return out;
}

Partition conjugate(const Partition& p) {
  Partition out;
  for (int col = 1; !p.empty() && col <= p[0]; ++col) {
    int cnt = 0;
    for (int part : p)
      if (part >= col) ++cnt;
    out.push_back(cnt);
  }
  return out;
}

bool is_valid_partition(const Partition& p, int n) {
  long long sum = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0) return false;
    if (i && p[i] > p[i - 1]) return false;
    sum += p[i];
  }
  return sum == n;
}

std::string to_string(const Partition& p) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) os << ',';
    os << p[i];
  }
  os << ')';
  return os.str();
}

long long dimension(const Partition& p) {
  const int n = std::accumulate(p.begin(), p.end(), 0);
  const Partition q = conjugate(p);
  mpz_class num;
  mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(n));
  mpz_class den(1);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (int j = 0; j < p[i]; ++j)
      den *= (p[i] - j - 1) + (q[j] - static_cast<int>(i) - 1) + 1;
  if (num % den != 0) throw InvariantViolation("hook product does not divide n!");
  const mpz_class d = num / den;
  if (!d.fits_slong_p()) throw InputError("dimension overflows long");
  return d.get_si();
}

long long p2(const Partition& p) {
  long long s = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const long long li = p[i];
    s += li * (li - 2 * static_cast<long long>(i + 1) + 1);
  }
  return s;
}

long long centralizer_order(const Partition& mu) {
  std::map<int, int> mult;
  for (int part : mu) ++mult[part];
  long long z = 1;
  for (auto [part, m] : mult) {
    z *= factorial(m);
    for (int k = 0; k < m; ++k) z *= part;
  }
  return z;
}

namespace {

// Beta-set representation: distinct nonnegative integers, |lambda| = sum(B) -
// staircase. Removing a border strip of length m moves one element b to b-m.
using Beta = std::vector<int>;

Beta beta_of(const Partition& p) {
  const int k = static_cast<int>(p.size());
  Beta b(k);
  for (int i = 0; i < k; ++i) b[i] = p[i] + (k - 1 - i);  // strictly decreasing
  return b;
}

struct Key {
  Beta beta;
  std::size_t mu_index;
  bool operator<(const Key& o) const {
    if (mu_index != o.mu_index) return mu_index < o.mu_index;
    return beta < o.beta;
  }
};

long long mn(const Beta& beta, const Partition& mu, std::size_t mi,
             std::map<Key, long long>& memo) {
  if (mi == mu.size()) return 1;  // weight exhausted: shape is empty
  const Key key{beta, mi};
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const int m = mu[mi];
  long long total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const int target = beta[i] - m;
    if (target < 0) continue;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int jumped = 0;  // beads strictly between target and beta[i]
    for (int x : beta)
      if (x > target && x < beta[i]) ++jumped;
    Beta next = beta;
    next[i] = target;
    std::sort(next.begin(), next.end(), std::greater<int>());
    const long long sub = mn(next, mu, mi + 1, memo);
    total += (jumped % 2 == 0) ? sub : -sub;
  }
  memo[key] = total;
  return total;
}

}  // namespace

long long character(const Partition& lambda, const Partition& mu) {
  const int n = std::accumulate(lambda.begin(), lambda.end(), 0);
  if (!is_valid_partition(lambda, n) || !is_valid_partition(mu, n))
    throw InputError("character: invalid partition pair");
  std::map<Key, long long> memo;
  return mn(beta_of(lambda), mu, 0, memo);
}

}  // namespace origami::sn
