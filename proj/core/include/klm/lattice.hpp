#pragma once

#include <klm/bigint.hpp>
#include <klm/polynomial.hpp>

#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <vector>

namespace klm {

/// A lattice of flats given extensionally: a ground set {0, ..., ground-1}
/// and the list of flats as element subsets. Validated eagerly on
/// construction: flats must be sorted, distinct subsets of the ground set,
/// closed under pairwise intersection, contain the full ground set (and
/// hence a unique minimal flat), and be graded so that covers raise the rank
/// by exactly one. Violations raise LatticeError naming the offending flats.
///
/// Flats are addressed by index; indices are assigned in (size,
/// lexicographic) order, so index 0 is the minimal flat.
class ExplicitLattice {
 public:
  ExplicitLattice(int ground_size, std::vector<std::vector<int>> flats);

  int ground_size() const { return ground_; }
  int flat_count() const { return static_cast<int>(masks_.size()); }
  int rank() const { return ranks_.back(); }

  int bottom() const { return 0; }
  int top() const { return flat_count() - 1; }
  int flat_rank(int flat) const { return ranks_[check_index(flat)]; }
  int flat_size(int flat) const;
  std::vector<int> flat_elements(int flat) const;

  /// Inclusion order.
  bool leq(int flat_a, int flat_b) const;

  /// Index lookup by element set; -1 if absent.
  int find_flat(const std::vector<int>& elements) const;

  /// Poset Möbius function on the interval [flat_a, flat_b]; requires
  /// flat_a <= flat_b. Memoized per lattice.
  BigInt mobius(int flat_a, int flat_b) const;

  /// Characteristic polynomial via the Möbius route:
  /// Σ_F μ(0̂, F) t^{rk - rk F}. Degree = rank, monic.
  TPoly char_poly() const;

  /// Lower interval [0̂, F] relabeled to ground set F: the lattice of the
  /// localization at F.
  ExplicitLattice localization(int flat) const;

  /// Upper interval [F, 1̂] relabeled to the complement of F: the lattice of
  /// the contraction at F.
  ExplicitLattice contraction(int flat) const;

  std::string describe() const;

 private:
  int check_index(int flat) const;
  void validate();

  int ground_ = 0;
  std::vector<std::uint64_t> masks_;       // sorted by (popcount, value)
  std::vector<std::vector<int>> elements_;  // parallel to masks_
  std::vector<int> ranks_;
  mutable std::map<std::pair<int, int>, BigInt> mobius_cache_;
  mutable std::mutex mobius_mutex_;
};

/// The lattice of flats of the uniform matroid U_{n,m}: all subsets of
/// cardinality below n-m plus the full ground set. This is the input of
/// choice for cross-checking the family engines against the brute-force
/// recursion.
ExplicitLattice uniform_lattice(int n, int m);

}  // namespace klm
