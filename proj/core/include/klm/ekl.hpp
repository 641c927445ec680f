#pragma once

#include <klm/bigint.hpp>
#include <klm/polynomial.hpp>
#include <klm/rep_ring.hpp>

#include <string>
#include <vector>

namespace klm {

/// Which group the coefficients are representations of. Both flavors carry
/// the same partition table (that equality is the point of the Comparison
/// Theorem); the flavor routes dimension queries to dim or q-dim.
enum class Flavor { kSymmetric, kUnipotent };

std::string to_string(Flavor flavor);

/// Equivariant Kazhdan-Lusztig coefficients of U_{n,m} / U_{n,m}(q):
/// entries[i] = C^i for 0 <= i < (n-m)/2. Rank zero gives an empty table.
/// Every stored multiplicity is >= 0 (asserted on construction: final KL
/// coefficients are honest representations).
struct EKLTable {
  int n = 0;
  int m = 0;
  Flavor flavor = Flavor::kSymmetric;
  std::vector<VirtualRep> entries;

  int rank() const { return n - m; }
  int degree_count() const { return static_cast<int>(entries.size()); }
};

/// The defining equivariant recursion over flat orbits, memoized on (n, m):
/// C^i = (-1)^i OS^i of U_{n,m} plus the alternating induced sum over
/// proper-flat orbits, with out-of-range degrees contributing zero.
EKLTable ekl_recursive(int n, int m);

/// Same partition table flagged unipotent, so dimension queries route to
/// q-dimensions. Deliberately not a second code path: the multiplicity
/// structure is shared, and independence is recovered through the scalar
/// q-recursion cross-check.
EKLTable ekl_unipotent(int n, int m);

/// Closed form: C^0 = V[n]; for i > 0 the sum over b = 1..min(m, n-m-2i) of
/// V[n-2i-b+1, b+1, 2^{i-1}]. An empty bound gives the zero rep.
VirtualRep ekl_closed_form(int n, int m, int i);

/// Closed-form dimension c^i_{n,m} as a ratio of factorials, evaluated
/// term-by-term with exact division.
BigInt ekl_scalar_closed_form(int n, int m, int i);

/// Closed-form q-dimension c^i_{n,m}(q): the q-analogue with a power shift
/// q^{b-1+i(i+1)} per term, again exact term-by-term.
QPoly ekl_q_closed_form(int n, int m, int i);

}  // namespace klm
