#include "twlat/coweights.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace twlat {

bool is_dominant(const Coweight& lambda) {
  return std::is_sorted(lambda.begin(), lambda.end(), std::greater<int>());
}

Normalized normalize(const Coweight& lambda) {
  if (lambda.empty()) throw std::invalid_argument("coweight must be nonempty");
  if (!is_dominant(lambda)) throw std::invalid_argument("coweight is not dominant (entries must weakly decrease)");
  Normalized out;
  const int last = lambda.back();
  for (int x : lambda) out.lambda_tilde.push_back(x - last);
  out.N = out.lambda_tilde.front();
  return out;
}

MinusculeSequence standard_decomposition(const Coweight& lambda) {
  const auto nz = normalize(lambda);
  MinusculeSequence ms;
  ms.n = lambda.size();
  ms.sizes = dual_partition(nz.lambda_tilde, static_cast<std::size_t>(nz.N));
  for (int s : ms.sizes) {
    std::vector<int> mu(ms.n, 0);
    std::fill(mu.begin(), mu.begin() + s, 1);
    ms.mus.push_back(std::move(mu));
  }
  return ms;
}

Partition dual_partition(const Partition& sigma, std::size_t length) {
  if (!std::is_sorted(sigma.begin(), sigma.end(), std::greater<int>()))
    throw std::invalid_argument("partition must be weakly decreasing");
  Partition tau(length, 0);
  for (int part : sigma) {
    if (part < 0) throw std::invalid_argument("partition has a negative part");
    if (static_cast<std::size_t>(part) > length) throw std::invalid_argument("partition part exceeds dual length");
    for (int i = 0; i < part; ++i) ++tau[static_cast<std::size_t>(i)];
  }
  return tau;
}

bool bruhat_leq(const Partition& lhs, const Partition& rhs) {
  const long long tl = std::accumulate(lhs.begin(), lhs.end(), 0LL);
  const long long tr = std::accumulate(rhs.begin(), rhs.end(), 0LL);
  if (tl != tr) throw std::invalid_argument("bruhat order compares partitions of equal total only");
  long long sl = 0, sr = 0;
  for (std::size_t i = 0; i < std::max(lhs.size(), rhs.size()); ++i) {
    sl += i < lhs.size() ? lhs[i] : 0;
    sr += i < rhs.size() ? rhs[i] : 0;
    if (sl > sr) return false;
  }
  return true;
}

RootData root_data(std::size_t n) {
  RootData rd;
  rd.n = n;
  rd.two_rho.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      rd.positive_roots.emplace_back(i, j);
      ++rd.two_rho[i];
      --rd.two_rho[j];
    }
  return rd;
}

int demazure_dimension(const Coweight& lambda) {
  const auto ms = standard_decomposition(lambda);
  const int n = static_cast<int>(ms.n);
  int dim = 0;
  for (int s : ms.sizes) dim += s * (n - s);
  return dim;
}

int demazure_dimension_roots(const Coweight& lambda) {
  if (!is_dominant(lambda)) throw std::invalid_argument("coweight is not dominant (entries must weakly decrease)");
  const auto rd = root_data(lambda.size());
  int dim = 0;
  for (auto [i, j] : rd.positive_roots) dim += lambda[i] - lambda[j];
  return dim;
}

Partition pad_partition(const Partition& sigma, std::size_t n) {
  Partition out = sigma;
  while (out.size() > n) {
    if (out.back() != 0) throw std::invalid_argument("partition has more than n nonzero parts");
    out.pop_back();
  }
  out.resize(n, 0);
  return out;
}

std::vector<Partition> partitions_of(int total, std::size_t max_parts, int max_part) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int remaining, int bound) {
    if (remaining == 0) {
      out.push_back(pad_partition(cur, max_parts));
      return;
    }
    if (cur.size() == max_parts) return;
    for (int part = std::min(remaining, bound); part >= 1; --part) {
      cur.push_back(part);
      rec(remaining - part, part);
      cur.pop_back();
    }
  };
  rec(total, max_part);
  return out;
}

}  // namespace twlat
