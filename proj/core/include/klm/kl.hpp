#pragma once

#include <klm/lattice.hpp>
#include <klm/matroid.hpp>
#include <klm/polynomial.hpp>

namespace klm {

/// A computed Kazhdan-Lusztig polynomial together with the right-hand side
/// R(t) = t^rk P(1/t) - P(t) it was read off from. R is retained because its
/// antisymmetry is the engine's built-in self-test and a useful diagnostic.
template <class Ring>
struct KLResult {
  Polynomial<Ring, VarT> poly;    // P_M(t), deg < rank/2, constant term 1
  int rank = 0;
  Polynomial<Ring, VarT> defect;  // R(t)
};

/// Kazhdan-Lusztig polynomial by the defining recursion over the flat-orbit
/// profile. P is read off the top half of R (p_i = r_{rank-i} for i below
/// rank/2); the redundant bottom half is then checked against the identity,
/// and any mismatch raises ConsistencyError. Memoized per family on (n, m).
KLResult<BigInt> kl_polynomial(const Uniform& matroid);
KLResult<QPoly> kl_polynomial(const QNiform& matroid);

/// Same recursion summed over every individual flat of an explicit lattice:
/// localizations via Möbius on lower intervals, contractions via upper
/// intervals. This is the brute-force oracle the family engines are checked
/// against.
KLResult<BigInt> kl_explicit_lattice(const ExplicitLattice& lattice);

template <class Ring>
struct DefectCheck {
  Polynomial<Ring, VarT> defect;  // R(t)
  bool ok = false;                // antisymmetry verdict
};

/// R(t) plus the verdict of the forced antisymmetry r_d + r_{rank-d} = 0
/// (middle coefficient zero when the rank is even). Requires rank >= 1.
DefectCheck<BigInt> palindromic_defect(const Uniform& matroid);
DefectCheck<QPoly> palindromic_defect(const QNiform& matroid);
DefectCheck<BigInt> palindromic_defect(const ExplicitLattice& lattice);

}  // namespace klm
