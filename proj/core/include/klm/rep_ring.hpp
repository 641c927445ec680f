#pragma once

#include <klm/bigint.hpp>
#include <klm/partition.hpp>
#include <klm/polynomial.hpp>

#include <cstdint>
#include <map>
#include <string>

namespace klm {

/// Finite signed combination of partitions of one fixed weight: an element
/// of the virtual representation ring of S_n (equivalently, by the bijection
/// with unipotent representations, of GL_n(q)). Zero multiplicities are
/// never stored; the zero element is an empty term map at a declared weight.
class VirtualRep {
 public:
  explicit VirtualRep(int weight = 0);
  static VirtualRep irreducible(const Partition& lambda, BigInt mult = 1);
  /// The trivial representation of the trivial group: V[[]], weight 0.
  static VirtualRep unit() { return irreducible(Partition()); }

  int weight() const { return weight_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Partition, BigInt>& terms() const { return terms_; }
  BigInt multiplicity(const Partition& lambda) const;

  void add_term(const Partition& lambda, const BigInt& mult);

  VirtualRep& operator+=(const VirtualRep& other);
  VirtualRep& operator-=(const VirtualRep& other);
  friend VirtualRep operator+(VirtualRep a, const VirtualRep& b) {
    return a += b;
  }
  friend VirtualRep operator-(VirtualRep a, const VirtualRep& b) {
    return a -= b;
  }
  VirtualRep operator-() const;
  VirtualRep scaled(const BigInt& factor) const;

  bool operator==(const VirtualRep& other) const = default;

  /// "V[4] + V[2,2]" / "V(q)[2,2]" depending on the symbol; dominant terms
  /// first.
  std::string to_string(const std::string& symbol = "V") const;

 private:
  int weight_ = 0;
  std::map<Partition, BigInt> terms_;
};

/// Littlewood-Richardson coefficient: the multiplicity of V[λ] in
/// V[μ] * V[ν], counted as skew semistandard tableaux of shape λ/μ and
/// content ν whose reverse reading word is a lattice word. Memoized;
/// requires |μ| + |ν| = |λ|.
std::int64_t lr_coefficient(const Partition& lambda, const Partition& mu,
                            const Partition& nu);

/// Induction product V * V' (Harish-Chandra induction on the unipotent
/// side), extended bilinearly over signed terms.
VirtualRep induce_product(const VirtualRep& a, const VirtualRep& b);

/// Linear extension of the hook-length dimension over signed terms.
BigInt rep_dim(const VirtualRep& rep);

/// Linear extension of the q-hook dimension over signed terms.
QPoly rep_qdim(const VirtualRep& rep);

}  // namespace klm
