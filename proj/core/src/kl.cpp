#include <klm/errors.hpp>
#include <klm/kl.hpp>

#include <map>
#include <mutex>
#include <utility>

namespace klm {

namespace {

template <class Ring>
Polynomial<Ring, VarT> reverse_poly(const Polynomial<Ring, VarT>& p,
                                    int rank) {
  // t^rank * p(1/t); requires deg p <= rank.
  std::vector<Ring> coeffs(static_cast<size_t>(rank) + 1, Ring(0));
  for (int i = 0; i <= p.degree(); ++i)
    coeffs[static_cast<size_t>(rank - i)] = p.coeff(i);
  return Polynomial<Ring, VarT>(std::move(coeffs));
}

// Reads P off the top half of R and verifies the bottom half: since
// R = t^rank P(1/t) - P with deg P < rank/2, the coefficient of t^{rank-i}
// is p_i for i < rank/2, and the identity then pins every remaining
// coefficient of R.
template <class Ring>
KLResult<Ring> solve_from_rhs(Polynomial<Ring, VarT> rhs, int rank,
                              const std::string& context) {
  std::vector<Ring> coeffs;
  for (int i = 0; 2 * i < rank; ++i)
    coeffs.push_back(rhs.coeff(rank - i));
  Polynomial<Ring, VarT> poly(std::move(coeffs));
  if (reverse_poly(poly, rank) - poly != rhs)
    throw ConsistencyError("Kazhdan-Lusztig defect identity failed for " +
                           context);
  return KLResult<Ring>{std::move(poly), rank, std::move(rhs)};
}

// The minimal flat's term (χ = 1, contraction = M itself) is P_M and lives
// on the left side, so the right-hand side sums orbits of positive rank.
template <class Ring, class Matroid, class Recurse>
Polynomial<Ring, VarT> assemble_rhs(const Matroid& matroid, Recurse&& kl) {
  Polynomial<Ring, VarT> rhs;
  for (const auto& orbit : flat_orbit_profile(matroid)) {
    if (orbit.loc_rank < 1) continue;
    const auto contraction_poly =
        kl(orbit.contraction_n, orbit.contraction_m);
    rhs += (orbit.loc_char * contraction_poly) * orbit.count;
  }
  return rhs;
}

template <class Ring, class Matroid>
class FamilyCache {
 public:
  KLResult<Ring> get(int n, int m) {
    const auto key = std::make_pair(n, m);
    {
      std::lock_guard<std::mutex> lock(mutex_);
      auto it = cache_.find(key);
      if (it != cache_.end()) return it->second;
    }
    const Matroid matroid(n, m);
    KLResult<Ring> result;
    if (matroid.rank() == 0) {
      result = KLResult<Ring>{Polynomial<Ring, VarT>(1), 0,
                              Polynomial<Ring, VarT>()};
    } else {
      auto rhs = assemble_rhs<Ring>(
          matroid, [this](int cn, int cm) { return get(cn, cm).poly; });
      result =
          solve_from_rhs(std::move(rhs), matroid.rank(), matroid.to_string());
    }
    std::lock_guard<std::mutex> lock(mutex_);
    return cache_.emplace(key, std::move(result)).first->second;
  }

 private:
  std::map<std::pair<int, int>, KLResult<Ring>> cache_;
  std::mutex mutex_;
};

FamilyCache<BigInt, Uniform> uniform_cache;   // NOLINT
FamilyCache<QPoly, QNiform> qniform_cache;    // NOLINT

template <class Ring>
bool defect_antisymmetric(const Polynomial<Ring, VarT>& rhs, int rank) {
  if (rhs.degree() > rank) return false;
  for (int d = 0; 2 * d <= rank; ++d) {
    if (2 * d == rank) {
      if (!detail::ring_is_zero(rhs.coeff(d))) return false;
    } else if (!detail::ring_is_zero(rhs.coeff(d) + rhs.coeff(rank - d))) {
      return false;
    }
  }
  return true;
}

}  // namespace

KLResult<BigInt> kl_polynomial(const Uniform& matroid) {
  return uniform_cache.get(matroid.n, matroid.m);
}

KLResult<QPoly> kl_polynomial(const QNiform& matroid) {
  return qniform_cache.get(matroid.n, matroid.m);
}

KLResult<BigInt> kl_explicit_lattice(const ExplicitLattice& lattice) {
  // Upper intervals of upper intervals are upper intervals of the original
  // lattice, so one memo keyed by flat index covers the whole recursion.
  std::map<int, TPoly> upper;  // flat -> P of the contraction at that flat

  // χ of the localization of the contraction at `flat` along the flat `g`:
  // Möbius over the interval [flat, g].
  auto interval_char = [&lattice](int flat, int g) {
    std::vector<BigInt> coeffs(
        static_cast<size_t>(lattice.flat_rank(g) - lattice.flat_rank(flat)) +
            1,
        BigInt(0));
    for (int h = 0; h < lattice.flat_count(); ++h)
      if (lattice.leq(flat, h) && lattice.leq(h, g))
        coeffs[static_cast<size_t>(lattice.flat_rank(g) -
                                   lattice.flat_rank(h))] +=
            lattice.mobius(flat, h);
    return TPoly(std::move(coeffs));
  };

  auto solve = [&](auto&& self, int flat) -> TPoly {
    auto it = upper.find(flat);
    if (it != upper.end()) return it->second;
    const int rank = lattice.rank() - lattice.flat_rank(flat);
    TPoly poly;
    if (rank == 0) {
      poly = TPoly(1);
    } else {
      TPoly rhs;
      for (int g = 0; g < lattice.flat_count(); ++g) {
        if (g == flat || !lattice.leq(flat, g)) continue;
        rhs += interval_char(flat, g) * self(self, g);
      }
      poly = solve_from_rhs(std::move(rhs), rank,
                            "explicit " + lattice.describe())
                 .poly;
    }
    return upper.emplace(flat, std::move(poly)).first->second;
  };

  const TPoly poly = solve(solve, lattice.bottom());
  TPoly rhs;  // the actual computed right-hand side, for diagnostics
  for (int g = 0; g < lattice.flat_count(); ++g)
    if (g != lattice.bottom())
      rhs += interval_char(lattice.bottom(), g) * upper.at(g);
  return KLResult<BigInt>{poly, lattice.rank(), std::move(rhs)};
}

DefectCheck<BigInt> palindromic_defect(const Uniform& matroid) {
  if (matroid.rank() < 1)
    throw InvalidArgumentError("palindromic_defect requires rank >= 1");
  auto result = kl_polynomial(matroid);
  return {result.defect, defect_antisymmetric(result.defect, result.rank)};
}

DefectCheck<QPoly> palindromic_defect(const QNiform& matroid) {
  if (matroid.rank() < 1)
    throw InvalidArgumentError("palindromic_defect requires rank >= 1");
  auto result = kl_polynomial(matroid);
  return {result.defect, defect_antisymmetric(result.defect, result.rank)};
}

DefectCheck<BigInt> palindromic_defect(const ExplicitLattice& lattice) {
  if (lattice.rank() < 1)
    throw InvalidArgumentError("palindromic_defect requires rank >= 1");
  auto result = kl_explicit_lattice(lattice);
  return {result.defect, defect_antisymmetric(result.defect, result.rank)};
}

}  // namespace klm
