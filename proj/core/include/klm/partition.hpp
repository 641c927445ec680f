#pragma once

#include <klm/bigint.hpp>
#include <klm/polynomial.hpp>

#include <compare>
#include <string>
#include <vector>

namespace klm {

/// Integer partition: weakly decreasing positive parts. The empty partition
/// (weight 0) is valid. Partitions are immutable value types ordered
/// lexicographically on their part lists, which makes them canonical map
/// keys everywhere multiplicities are stored.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  int weight() const { return weight_; }
  const std::vector<int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  int length() const { return static_cast<int>(parts_.size()); }
  int part(int row) const {  // 0-based, 0 past the end
    return row < length() ? parts_[static_cast<size_t>(row)] : 0;
  }

  Partition conjugate() const;

  /// Hook lengths h(i,j) = arm + leg + 1 of every cell, in row-major cell
  /// order (one value per cell of the Young diagram).
  std::vector<int> hook_lengths() const;

  /// Young-diagram containment (row-wise domination).
  bool contains(const Partition& inner) const;

  std::string to_string() const;  // "[3,2]", "[]"

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// [n-i, 1^i]; the shape of every reduced Orlik-Solomon graded piece.
Partition hook_partition(int n, int i);

/// Hook-length formula: |λ|! / Π h(i,j). The division is exact for every
/// valid partition; a remainder would mean a broken hook computation.
BigInt dim_symmetric(const Partition& lambda);

/// q-hook formula: q^{Σ (k-1)λ_k} [n]_q! / Π [h(i,j)]_q with 1-based row
/// index k, so the exponent vanishes exactly for single-row shapes.
QPoly dim_unipotent(const Partition& lambda);

inline constexpr int kMaxPartitionWeight = 30;

/// All partitions of n in lexicographic-descending order:
/// [n], ..., [1^n]. Refuses n beyond kMaxPartitionWeight.
std::vector<Partition> partitions_of(int n);

}  // namespace klm
