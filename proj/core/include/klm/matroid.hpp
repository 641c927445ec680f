#pragma once

#include <klm/lattice.hpp>
#include <klm/polynomial.hpp>
#include <klm/rep_ring.hpp>

#include <string>
#include <variant>
#include <vector>

namespace klm {

/// The uniform matroid U_{n,m}: rank n-m on n elements, acted on by S_n.
struct Uniform {
  int n = 0;
  int m = 0;
  Uniform(int n_, int m_);
  int rank() const { return n - m; }
  std::string to_string() const;
};

/// The q-niform matroid U_{n,m}(q): the rank n-m truncation of the matroid
/// of all hyperplanes of an n-dimensional space over a q-element field,
/// acted on by GL_n(q).
struct QNiform {
  int n = 0;
  int m = 0;
  QNiform(int n_, int m_);
  int rank() const { return n - m; }
  std::string to_string() const;
};

using MatroidSpec = std::variant<Uniform, QNiform, ExplicitLattice>;

int rank_of(const MatroidSpec& spec);
std::string describe(const MatroidSpec& spec);

/// Reduced Orlik-Solomon graded piece of U_{n,m} (and, reading the same
/// partition table unipotently, of U_{n,m}(q)): the hook V[n-i, 1^i] when
/// 0 <= i < n-m, zero otherwise. Degenerate i never error so recursion code
/// stays branch-light.
VirtualRep reduced_os_rep(int n, int m, int i);

/// Full Orlik-Solomon piece via the splitting
/// OS^i = reduced^i ⊕ reduced^{i-1}; requires positive rank.
VirtualRep full_os_rep(int n, int m, int i);

/// Characteristic polynomials. The family routes go through representation
/// (q-)dimensions of the Orlik-Solomon pieces; the explicit route goes
/// through the Möbius function, which keeps the two independent.
TPoly char_poly(const Uniform& matroid);
QTPoly char_poly(const QNiform& matroid);
TPoly char_poly(const ExplicitLattice& lattice);

/// One orbit of flats under the acting group. Localizations of both families
/// are Boolean (of their own family), and contractions stay in-family, so an
/// orbit is described by the localization rank alone.
template <class Ring>
struct FlatOrbit {
  int loc_rank = 0;  // rank of the localization
  int corank = 0;    // rank(M) - loc_rank
  Ring count;        // number of flats in the orbit
  Polynomial<Ring, VarT> loc_char;  // χ of the localization
  int contraction_n = 0;            // contraction is (n', m) in-family
  int contraction_m = 0;
};

/// Orbit profile: one entry per proper-flat rank k = 0..rank-1, plus the
/// maximal flat (count 1, localization χ = χ_M, rank-zero contraction).
/// Requires rank >= 1: a rank-zero matroid has no flats to profile.
std::vector<FlatOrbit<BigInt>> flat_orbit_profile(const Uniform& matroid);
std::vector<FlatOrbit<QPoly>> flat_orbit_profile(const QNiform& matroid);

}  // namespace klm
