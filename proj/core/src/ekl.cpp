#include <klm/ekl.hpp>
#include <klm/errors.hpp>
#include <klm/matroid.hpp>

#include <map>
#include <mutex>
#include <utility>

namespace klm {

std::string to_string(Flavor flavor) {
  return flavor == Flavor::kSymmetric ? "symmetric" : "unipotent";
}

namespace {

void check_nm(int n, int m) {
  if (n < 0 || m < 0 || m > n)
    throw InvalidArgumentError("equivariant table requires 0 <= m <= n");
}

std::map<std::pair<int, int>, std::vector<VirtualRep>> table_cache;  // NOLINT
std::mutex table_cache_mutex;

const std::vector<VirtualRep>& table_entries(int n, int m);

// C^d of U_{n-?,m} with the degree-bound bookkeeping: zero outside
// 0 <= d < rank/2, trivial rep at degree 0 for rank zero.
VirtualRep degree_entry(int n, int m, int d) {
  const int rank = n - m;
  if (rank == 0) return d == 0 ? VirtualRep::irreducible(Partition(
                                     n ? std::vector<int>{n}
                                       : std::vector<int>{}))
                               : VirtualRep(n);
  if (d < 0 || 2 * d >= rank) return VirtualRep(n);
  return table_entries(n, m)[static_cast<size_t>(d)];
}

// Full Orlik-Solomon piece of the Boolean U_{k,0}, including the rank-zero
// case k = 0 where degree 0 carries the trivial representation.
VirtualRep boolean_os(int k, int j) {
  if (k == 0) return j == 0 ? VirtualRep::unit() : VirtualRep(0);
  return full_os_rep(k, 0, j);
}

std::vector<VirtualRep> compute_entries(int n, int m) {
  const int rank = n - m;
  std::vector<VirtualRep> entries;
  for (int i = 0; 2 * i < rank; ++i) {
    VirtualRep acc = full_os_rep(n, m, i);
    if (i % 2 == 1) acc = -acc;
    for (int k = 0; k < rank; ++k) {
      for (int j = 0; j <= k; ++j) {
        const VirtualRep contraction = degree_entry(n - k, m, rank - k - i + j);
        if (contraction.is_zero()) continue;
        const VirtualRep os = boolean_os(k, j);
        if (os.is_zero()) continue;
        VirtualRep term = induce_product(os, contraction);
        if (j % 2 == 1) term = -term;
        acc += term;
      }
    }
    for (const auto& [lambda, mult] : acc.terms())
      if (mult < 0)
        throw ConsistencyError(
            "negative multiplicity " + mult.str() + " of " +
            lambda.to_string() + " in C^" + std::to_string(i) + " of U(" +
            std::to_string(n) + "," + std::to_string(m) + ")");
    entries.push_back(std::move(acc));
  }
  return entries;
}

const std::vector<VirtualRep>& table_entries(int n, int m) {
  const auto key = std::make_pair(n, m);
  {
    std::lock_guard<std::mutex> lock(table_cache_mutex);
    auto it = table_cache.find(key);
    if (it != table_cache.end()) return it->second;
  }
  auto entries = compute_entries(n, m);
  std::lock_guard<std::mutex> lock(table_cache_mutex);
  return table_cache.emplace(key, std::move(entries)).first->second;
}

}  // namespace

EKLTable ekl_recursive(int n, int m) {
  check_nm(n, m);
  return EKLTable{n, m, Flavor::kSymmetric, table_entries(n, m)};
}

EKLTable ekl_unipotent(int n, int m) {
  check_nm(n, m);
  return EKLTable{n, m, Flavor::kUnipotent, table_entries(n, m)};
}

VirtualRep ekl_closed_form(int n, int m, int i) {
  check_nm(n, m);
  if (i < 0) return VirtualRep(n);
  if (i == 0)
    return VirtualRep::irreducible(
        Partition(n ? std::vector<int>{n} : std::vector<int>{}));
  VirtualRep result(n);
  const int bound = std::min(m, n - m - 2 * i);
  for (int b = 1; b <= bound; ++b) {
    std::vector<int> parts{n - 2 * i - b + 1, b + 1};
    parts.insert(parts.end(), static_cast<size_t>(i) - 1, 2);
    result.add_term(Partition(std::move(parts)), 1);
  }
  return result;
}

BigInt ekl_scalar_closed_form(int n, int m, int i) {
  check_nm(n, m);
  if (i < 0) return 0;
  if (i == 0) return 1;
  BigInt total = 0;
  const int bound = std::min(m, n - m - 2 * i);
  for (int b = 1; b <= bound; ++b) {
    const BigInt numerator = BigInt(n - 2 * i - 2 * b + 1) * factorial(n);
    BigInt denominator = BigInt(n - i - b) * (n - i - b + 1) * (i + b) *
                         (i + b - 1);
    denominator *= factorial(n - 2 * i - b) * factorial(b - 1) * factorial(i) *
                   factorial(i - 1);
    total += detail::ring_div_exact(numerator, denominator);
  }
  return total;
}

QPoly ekl_q_closed_form(int n, int m, int i) {
  check_nm(n, m);
  if (i < 0) return QPoly();
  if (i == 0) return QPoly(1);
  QPoly total;
  const int bound = std::min(m, n - m - 2 * i);
  for (int b = 1; b <= bound; ++b) {
    const QPoly numerator = q_int(n - 2 * i - 2 * b + 1) * q_factorial(n);
    QPoly denominator = q_int(n - i - b) * q_int(n - i - b + 1) *
                        q_int(i + b) * q_int(i + b - 1);
    denominator *= q_factorial(n - 2 * i - b) * q_factorial(b - 1) *
                   q_factorial(i) * q_factorial(i - 1);
    total += numerator.div_exact(denominator).shifted(b - 1 + i * (i + 1));
  }
  return total;
}

}  // namespace klm
