#pragma once

#include <string>
#include <vector>

namespace origami::sn {

// A partition is a weakly decreasing list of positive parts.
using Partition = std::vector<int>;

// All partitions of n in reverse lexicographic order, (n) first, (1^n) last.
std::vector<Partition> partitions(int n);
Partition conjugate(const Partition& p);
bool is_valid_partition(const Partition& p, int n);
std::string to_string(const Partition& p);

// Dimension of the irreducible labelled by p, by the hook length formula.
long long dimension(const Partition& p);

// p2(lambda) = sum_i lambda_i (lambda_i - 2i + 1), 1-based i. Satisfies
// p2(conjugate) = -p2 and gives the transposition character value as
// dim * p2 / (n (n-1)).
long long p2(const Partition& p);

// Exact character value chi_lambda(mu) by the Murnaghan-Nakayama rule.
long long character(const Partition& lambda, const Partition& mu);

// Centralizer order z_mu = prod m_i! i^m_i; class size is n!/z_mu.
long long centralizer_order(const Partition& mu);

}  // namespace origami::sn
