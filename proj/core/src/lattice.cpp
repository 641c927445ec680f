#include <klm/errors.hpp>
#include <klm/lattice.hpp>

#include <algorithm>
#include <bit>
#include <sstream>

namespace klm {

namespace {

std::string set_to_string(const std::vector<int>& elements) {
  std::ostringstream os;
  os << '{';
  for (size_t j = 0; j < elements.size(); ++j) {
    if (j) os << ',';
    os << elements[j];
  }
  os << '}';
  return os.str();
}

std::vector<int> mask_to_elements(std::uint64_t mask) {
  std::vector<int> out;
  for (int e = 0; mask; ++e, mask >>= 1)
    if (mask & 1u) out.push_back(e);
  return out;
}

}  // namespace

ExplicitLattice::ExplicitLattice(int ground_size,
                                 std::vector<std::vector<int>> flats)
    : ground_(ground_size) {
  if (ground_ < 0)
    throw InvalidArgumentError("lattice ground size must be >= 0");
  if (ground_ > 64)
    throw ResourceLimitError("explicit lattices support at most 64 elements");
  if (flats.empty()) throw LatticeError("lattice needs at least one flat");

  masks_.reserve(flats.size());
  for (const auto& flat : flats) {
    std::uint64_t mask = 0;
    int prev = -1;
    for (int e : flat) {
      if (e < 0 || e >= ground_)
        throw LatticeError("flat " + set_to_string(flat) +
                           " has element outside the ground set");
      if (e <= prev)
        throw LatticeError("flat " + set_to_string(flat) +
                           " is not sorted strictly increasing");
      prev = e;
      mask |= std::uint64_t{1} << e;
    }
    masks_.push_back(mask);
  }
  std::sort(masks_.begin(), masks_.end(),
            [](std::uint64_t a, std::uint64_t b) {
              const int pa = std::popcount(a), pb = std::popcount(b);
              return pa != pb ? pa < pb : a < b;
            });
  if (std::adjacent_find(masks_.begin(), masks_.end()) != masks_.end())
    throw LatticeError("duplicate flat in lattice description");

  elements_.reserve(masks_.size());
  for (std::uint64_t mask : masks_) elements_.push_back(mask_to_elements(mask));

  validate();
}

void ExplicitLattice::validate() {
  const std::uint64_t full =
      ground_ == 64 ? ~std::uint64_t{0}
                    : (std::uint64_t{1} << ground_) - 1;
  if (masks_.back() != full)
    throw LatticeError("the full ground set must be a flat");

  // Meet closure: the intersection of two flats is a flat. With the full set
  // present this makes the poset a lattice.
  for (size_t a = 0; a < masks_.size(); ++a) {
    for (size_t b = a + 1; b < masks_.size(); ++b) {
      const std::uint64_t meet = masks_[a] & masks_[b];
      if (!std::binary_search(masks_.begin(), masks_.end(), meet,
                              [](std::uint64_t x, std::uint64_t y) {
                                const int px = std::popcount(x),
                                          py = std::popcount(y);
                                return px != py ? px < py : x < y;
                              }))
        throw LatticeError(
            "flats " + set_to_string(elements_[a]) + " and " +
            set_to_string(elements_[b]) +
            " have no meet in the lattice (missing their intersection)");
    }
  }
  // The global meet is then a flat too; it must be the unique minimum.
  for (size_t a = 1; a < masks_.size(); ++a)
    if ((masks_[0] & masks_[a]) != masks_[0])
      throw LatticeError("no unique minimal flat: " +
                         set_to_string(elements_[0]) + " vs " +
                         set_to_string(elements_[a]));

  // Longest-chain rank, then the grading check: covers raise rank by one.
  ranks_.assign(masks_.size(), 0);
  for (size_t a = 1; a < masks_.size(); ++a) {
    int best = 0;
    for (size_t b = 0; b < a; ++b)
      if (masks_[b] != masks_[a] && (masks_[b] & masks_[a]) == masks_[b])
        best = std::max(best, ranks_[b] + 1);
    ranks_[a] = best;
  }
  // A rank jump of two or more across a pair with nothing strictly between
  // is a cover that skips a level.
  for (size_t a = 0; a < masks_.size(); ++a) {
    for (size_t b = 0; b < masks_.size(); ++b) {
      if (a == b || (masks_[a] & masks_[b]) != masks_[a]) continue;
      if (ranks_[b] - ranks_[a] < 2) continue;
      bool has_intermediate = false;
      for (size_t c = 0; c < masks_.size(); ++c) {
        if (c == a || c == b) continue;
        if ((masks_[a] & masks_[c]) == masks_[a] &&
            (masks_[c] & masks_[b]) == masks_[c]) {
          has_intermediate = true;
          break;
        }
      }
      if (!has_intermediate)
        throw LatticeError("cover " + set_to_string(elements_[a]) + " < " +
                           set_to_string(elements_[b]) +
                           " jumps rank by more than one");
    }
  }
}

int ExplicitLattice::check_index(int flat) const {
  if (flat < 0 || flat >= flat_count())
    throw InvalidArgumentError("flat index out of range");
  return flat;
}

int ExplicitLattice::flat_size(int flat) const {
  return std::popcount(masks_[static_cast<size_t>(check_index(flat))]);
}

std::vector<int> ExplicitLattice::flat_elements(int flat) const {
  return elements_[static_cast<size_t>(check_index(flat))];
}

bool ExplicitLattice::leq(int flat_a, int flat_b) const {
  const std::uint64_t a = masks_[static_cast<size_t>(check_index(flat_a))];
  const std::uint64_t b = masks_[static_cast<size_t>(check_index(flat_b))];
  return (a & b) == a;
}

int ExplicitLattice::find_flat(const std::vector<int>& elements) const {
  std::uint64_t mask = 0;
  for (int e : elements) {
    if (e < 0 || e >= ground_) return -1;
    mask |= std::uint64_t{1} << e;
  }
  for (size_t a = 0; a < masks_.size(); ++a)
    if (masks_[a] == mask) return static_cast<int>(a);
  return -1;
}

BigInt ExplicitLattice::mobius(int flat_a, int flat_b) const {
  check_index(flat_a);
  check_index(flat_b);
  if (!leq(flat_a, flat_b))
    throw InvalidArgumentError("mobius requires comparable flats");
  const auto key = std::make_pair(flat_a, flat_b);
  {
    std::lock_guard<std::mutex> lock(mobius_mutex_);
    auto it = mobius_cache_.find(key);
    if (it != mobius_cache_.end()) return it->second;
  }
  BigInt value;
  if (flat_a == flat_b) {
    value = 1;
  } else {
    // μ(a, b) = -Σ_{a <= h < b} μ(a, h)
    BigInt sum = 0;
    for (int h = 0; h < flat_count(); ++h)
      if (h != flat_b && leq(flat_a, h) && leq(h, flat_b))
        sum += mobius(flat_a, h);
    value = -sum;
  }
  std::lock_guard<std::mutex> lock(mobius_mutex_);
  mobius_cache_.emplace(key, value);
  return value;
}

TPoly ExplicitLattice::char_poly() const {
  std::vector<BigInt> coeffs(static_cast<size_t>(rank()) + 1, BigInt(0));
  for (int f = 0; f < flat_count(); ++f)
    coeffs[static_cast<size_t>(rank() - flat_rank(f))] += mobius(bottom(), f);
  return TPoly(std::move(coeffs));
}

ExplicitLattice ExplicitLattice::localization(int flat) const {
  check_index(flat);
  const std::vector<int> base = flat_elements(flat);
  std::vector<int> position(static_cast<size_t>(ground_), -1);
  for (size_t j = 0; j < base.size(); ++j)
    position[static_cast<size_t>(base[j])] = static_cast<int>(j);

  std::vector<std::vector<int>> flats;
  for (int g = 0; g < flat_count(); ++g) {
    if (!leq(g, flat)) continue;
    std::vector<int> relabeled;
    for (int e : flat_elements(g))
      relabeled.push_back(position[static_cast<size_t>(e)]);
    flats.push_back(std::move(relabeled));
  }
  return ExplicitLattice(static_cast<int>(base.size()), std::move(flats));
}

ExplicitLattice ExplicitLattice::contraction(int flat) const {
  check_index(flat);
  const std::uint64_t base_mask = masks_[static_cast<size_t>(flat)];
  std::vector<int> rest;
  for (int e = 0; e < ground_; ++e)
    if (!(base_mask >> e & 1u)) rest.push_back(e);
  std::vector<int> position(static_cast<size_t>(ground_), -1);
  for (size_t j = 0; j < rest.size(); ++j)
    position[static_cast<size_t>(rest[j])] = static_cast<int>(j);

  std::vector<std::vector<int>> flats;
  for (int g = 0; g < flat_count(); ++g) {
    if (!leq(flat, g)) continue;
    std::vector<int> relabeled;
    for (int e : flat_elements(g))
      if (position[static_cast<size_t>(e)] >= 0)
        relabeled.push_back(position[static_cast<size_t>(e)]);
    flats.push_back(std::move(relabeled));
  }
  return ExplicitLattice(static_cast<int>(rest.size()), std::move(flats));
}

std::string ExplicitLattice::describe() const {
  std::ostringstream os;
  os << "lattice on " << ground_ << " elements, " << flat_count()
     << " flats, rank " << rank();
  return os.str();
}

ExplicitLattice uniform_lattice(int n, int m) {
  if (n < 0 || m < 0 || m > n)
    throw InvalidArgumentError("uniform_lattice requires 0 <= m <= n");
  if (n > 16)
    throw ResourceLimitError("uniform_lattice limited to n <= 16");
  const int rank = n - m;
  std::vector<std::vector<int>> flats;
  std::vector<std::uint64_t> masks;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask)
    if (std::popcount(mask) < rank) masks.push_back(mask);
  std::vector<int> all(static_cast<size_t>(n));
  for (int e = 0; e < n; ++e) all[static_cast<size_t>(e)] = e;
  for (std::uint64_t mask : masks) flats.push_back(mask_to_elements(mask));
  flats.push_back(all);
  return ExplicitLattice(n, std::move(flats));
}

}  // namespace klm
