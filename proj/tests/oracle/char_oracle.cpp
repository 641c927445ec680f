#include "char_oracle.hpp"

#include <klm/errors.hpp>

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>
#include <vector>

namespace klm::oracle {

namespace {

std::map<std::tuple<Partition, Partition>, BigInt> char_cache;  // NOLINT
std::mutex char_cache_mutex;

std::vector<int> beta_numbers(const Partition& lambda) {
  const int len = lambda.length();
  std::vector<int> beta(static_cast<size_t>(len));
  for (int i = 0; i < len; ++i)
    beta[static_cast<size_t>(i)] = lambda.part(i) + (len - 1 - i);
  return beta;
}

Partition partition_from_beta(std::vector<int> beta) {
  std::sort(beta.rbegin(), beta.rend());
  const int len = static_cast<int>(beta.size());
  std::vector<int> parts;
  for (int i = 0; i < len; ++i) {
    const int part = beta[static_cast<size_t>(i)] - (len - 1 - i);
    if (part > 0) parts.push_back(part);
  }
  return Partition(std::move(parts));
}

BigInt character_impl(const Partition& lambda, const Partition& rho) {
  if (rho.empty()) return 1;
  const int strip = rho.part(0);
  const Partition rest(
      std::vector<int>(rho.parts().begin() + 1, rho.parts().end()));
  const std::vector<int> beta = beta_numbers(lambda);
  BigInt total = 0;
  for (int b : beta) {
    if (b < strip) continue;
    const int lowered = b - strip;
    if (std::find(beta.begin(), beta.end(), lowered) != beta.end()) continue;
    int height = 0;  // beta numbers strictly between lowered and b
    for (int other : beta)
      if (lowered < other && other < b) ++height;
    std::vector<int> next = beta;
    *std::find(next.begin(), next.end(), b) = lowered;
    const BigInt sub = character(partition_from_beta(std::move(next)), rest);
    total += (height % 2 == 0) ? sub : -sub;
  }
  return total;
}

}  // namespace

BigInt character(const Partition& lambda, const Partition& rho) {
  if (lambda.weight() != rho.weight())
    throw InvalidArgumentError("character: |lambda| != |rho|");
  std::tuple<Partition, Partition> key(lambda, rho);
  {
    std::lock_guard<std::mutex> lock(char_cache_mutex);
    auto it = char_cache.find(key);
    if (it != char_cache.end()) return it->second;
  }
  BigInt value = character_impl(lambda, rho);
  std::lock_guard<std::mutex> lock(char_cache_mutex);
  return char_cache.emplace(std::move(key), std::move(value)).first->second;
}

BigInt cycle_symmetrizer(const Partition& rho) {
  BigInt z = 1;
  int run_value = -1, run_length = 0;
  for (int part : rho.parts()) {
    if (part == run_value) {
      ++run_length;
    } else {
      run_value = part;
      run_length = 1;
    }
    z *= BigInt(part) * run_length;
  }
  return z;
}

BigInt induced_multiplicity(const Partition& lambda, const Partition& mu,
                            const Partition& nu) {
  const int n = lambda.weight(), k = mu.weight();
  if (k + nu.weight() != n)
    throw InvalidArgumentError("induced_multiplicity: weight mismatch");
  // Frobenius reciprocity: <Ind(χ^μ ⊠ χ^ν), χ^λ> over S_n equals
  // <χ^μ ⊠ χ^ν, Res χ^λ> over S_k × S_{n-k}, summed by cycle-type classes.
  BigInt total = 0;
  for (const Partition& alpha : partitions_of(k)) {
    const BigInt class_a =
        detail::ring_div_exact(factorial(k), cycle_symmetrizer(alpha));
    for (const Partition& beta : partitions_of(n - k)) {
      const BigInt class_b = detail::ring_div_exact(
          factorial(n - k), cycle_symmetrizer(beta));
      std::vector<int> merged = alpha.parts();
      merged.insert(merged.end(), beta.parts().begin(), beta.parts().end());
      std::sort(merged.rbegin(), merged.rend());
      total += class_a * class_b * character(lambda, Partition(merged)) *
               character(mu, alpha) * character(nu, beta);
    }
  }
  return detail::ring_div_exact(total, factorial(k) * factorial(n - k));
}

}  // namespace klm::oracle
