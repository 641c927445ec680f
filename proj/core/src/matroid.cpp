#include <klm/errors.hpp>
#include <klm/matroid.hpp>

namespace klm {

namespace {

void check_nm(int n, int m, const char* what) {
  if (n < 0 || m < 0 || m > n)
    throw InvalidArgumentError(std::string(what) +
                               " requires 0 <= m <= n, got n=" +
                               std::to_string(n) + " m=" + std::to_string(m));
}

}  // namespace

Uniform::Uniform(int n_, int m_) : n(n_), m(m_) { check_nm(n, m, "Uniform"); }

std::string Uniform::to_string() const {
  return "U(" + std::to_string(n) + "," + std::to_string(m) + ")";
}

QNiform::QNiform(int n_, int m_) : n(n_), m(m_) { check_nm(n, m, "QNiform"); }

std::string QNiform::to_string() const {
  return "U_q(" + std::to_string(n) + "," + std::to_string(m) + ")";
}

int rank_of(const MatroidSpec& spec) {
  return std::visit([](const auto& s) { return s.rank(); }, spec);
}

std::string describe(const MatroidSpec& spec) {
  if (const auto* u = std::get_if<Uniform>(&spec)) return u->to_string();
  if (const auto* u = std::get_if<QNiform>(&spec)) return u->to_string();
  return std::get<ExplicitLattice>(spec).describe();
}

VirtualRep reduced_os_rep(int n, int m, int i) {
  check_nm(n, m, "reduced_os_rep");
  if (i < 0 || i >= n - m || i >= n) return VirtualRep(n);
  return VirtualRep::irreducible(hook_partition(n, i));
}

VirtualRep full_os_rep(int n, int m, int i) {
  check_nm(n, m, "full_os_rep");
  if (n - m < 1)
    throw InvalidArgumentError("full_os_rep requires positive rank");
  return reduced_os_rep(n, m, i) + reduced_os_rep(n, m, i - 1);
}

namespace {

// χ_M(t) = Σ_i (-1)^i dim OS^i t^{rk - i}, with the dimension taken in
// whichever ring the family lives in.
template <class Ring, class DimFn>
Polynomial<Ring, VarT> char_poly_from_os(int n, int m, DimFn&& dim) {
  const int rank = n - m;
  std::vector<Ring> coeffs(static_cast<size_t>(rank) + 1, Ring(0));
  if (rank == 0) {
    coeffs[0] = Ring(1);
  } else {
    for (int i = 0; i <= rank; ++i) {
      Ring d = dim(full_os_rep(n, m, i));
      coeffs[static_cast<size_t>(rank - i)] = (i % 2 == 0) ? d : -d;
    }
  }
  return Polynomial<Ring, VarT>(std::move(coeffs));
}

}  // namespace

TPoly char_poly(const Uniform& matroid) {
  return char_poly_from_os<BigInt>(matroid.n, matroid.m, rep_dim);
}

QTPoly char_poly(const QNiform& matroid) {
  return char_poly_from_os<QPoly>(matroid.n, matroid.m, rep_qdim);
}

TPoly char_poly(const ExplicitLattice& lattice) { return lattice.char_poly(); }

namespace {

template <class Ring, class CountFn, class BooleanChar>
std::vector<FlatOrbit<Ring>> profile(int n, int m, CountFn&& count,
                                     BooleanChar&& boolean_char,
                                     Polynomial<Ring, VarT> full_char) {
  const int rank = n - m;
  if (rank < 1)
    throw InvalidArgumentError(
        "flat_orbit_profile requires rank >= 1 (no proper flats at rank 0)");
  std::vector<FlatOrbit<Ring>> orbits;
  orbits.reserve(static_cast<size_t>(rank) + 1);
  for (int k = 0; k < rank; ++k) {
    FlatOrbit<Ring> orbit;
    orbit.loc_rank = k;
    orbit.corank = rank - k;
    orbit.count = count(k);
    orbit.loc_char = boolean_char(k);
    orbit.contraction_n = n - k;
    orbit.contraction_m = m;
    orbits.push_back(std::move(orbit));
  }
  FlatOrbit<Ring> maximal;
  maximal.loc_rank = rank;
  maximal.corank = 0;
  maximal.count = Ring(1);
  maximal.loc_char = std::move(full_char);
  maximal.contraction_n = m;  // U_{m,m} / U_{m,m}(q): the rank-zero matroid
  maximal.contraction_m = m;
  orbits.push_back(std::move(maximal));
  return orbits;
}

}  // namespace

std::vector<FlatOrbit<BigInt>> flat_orbit_profile(const Uniform& matroid) {
  const int n = matroid.n;
  return profile<BigInt>(
      n, matroid.m, [n](int k) { return binomial(n, k); },
      [](int k) {
        TPoly boolean(1);
        const TPoly t_minus_1{BigInt(-1), BigInt(1)};
        for (int j = 0; j < k; ++j) boolean *= t_minus_1;
        return boolean;
      },
      char_poly(matroid));
}

std::vector<FlatOrbit<QPoly>> flat_orbit_profile(const QNiform& matroid) {
  const int n = matroid.n;
  return profile<QPoly>(
      n, matroid.m, [n](int k) { return gaussian_binomial(n, k); },
      [](int k) { return char_poly(QNiform(k, 0)); }, char_poly(matroid));
}

}  // namespace klm
