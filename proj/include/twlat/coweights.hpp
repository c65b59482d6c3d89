// Dominant coweights of SL_n, their standard decomposition into minuscule
// coweights, dual partitions and the dominance (Bruhat) order.
#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace twlat {

using Coweight = std::vector<int>;
using Partition = std::vector<int>;

struct Normalized {
  Partition lambda_tilde;
  int N = 0;
};

struct MinusculeSequence {
  std::size_t n = 0;
  /// mus[m] = (1^{sizes[m]}, 0^{n - sizes[m]}).
  std::vector<std::vector<int>> mus;
  std::vector<int> sizes;

  std::size_t length() const { return mus.size(); }
};

/// Positive roots e_i - e_j (i < j, 0-based) and 2*rho, which is integral.
struct RootData {
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> positive_roots;
  std::vector<int> two_rho;
};

bool is_dominant(const Coweight& lambda);

/// lambda - (lambda_n, ..., lambda_n) and N = its largest entry.
Normalized normalize(const Coweight& lambda);

/// |mu_i| = number of entries of lambda_tilde that are >= i, i = 1..N.
MinusculeSequence standard_decomposition(const Coweight& lambda);

/// tau_i = #{parts of sigma >= i} for i = 1..length. Parts must lie in [0, length].
Partition dual_partition(const Partition& sigma, std::size_t length);

/// Dominance order: every prefix sum of lhs is <= that of rhs. Totals must agree.
bool bruhat_leq(const Partition& lhs, const Partition& rhs);

RootData root_data(std::size_t n);

/// sum_m |mu_m| (n - |mu_m|).
int demazure_dimension(const Coweight& lambda);
/// <lambda, 2 rho> = sum_{i<j} (lambda_i - lambda_j).
int demazure_dimension_roots(const Coweight& lambda);

/// Pads with zeros (or checks trailing zeros) to exactly n parts.
Partition pad_partition(const Partition& sigma, std::size_t n);

/// All partitions of total into at most max_parts parts each <= max_part,
/// weakly decreasing, padded to max_parts entries.
std::vector<Partition> partitions_of(int total, std::size_t max_parts, int max_part);

}  // namespace twlat
