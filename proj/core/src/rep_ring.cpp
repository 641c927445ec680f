#include <klm/errors.hpp>
#include <klm/rep_ring.hpp>

#include <mutex>
#include <sstream>
#include <tuple>
#include <vector>

namespace klm {

VirtualRep::VirtualRep(int weight) : weight_(weight) {
  if (weight < 0) throw InvalidArgumentError("VirtualRep weight must be >= 0");
}

VirtualRep VirtualRep::irreducible(const Partition& lambda, BigInt mult) {
  VirtualRep rep(lambda.weight());
  rep.add_term(lambda, mult);
  return rep;
}

BigInt VirtualRep::multiplicity(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void VirtualRep::add_term(const Partition& lambda, const BigInt& mult) {
  if (lambda.weight() != weight_)
    throw InvalidArgumentError("term weight " +
                               std::to_string(lambda.weight()) +
                               " does not match rep weight " +
                               std::to_string(weight_));
  if (mult.is_zero()) return;
  auto [it, inserted] = terms_.emplace(lambda, mult);
  if (!inserted) {
    it->second += mult;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

VirtualRep& VirtualRep::operator+=(const VirtualRep& other) {
  if (other.weight_ != weight_)
    throw InvalidArgumentError("cannot add reps of different weights");
  for (const auto& [lambda, mult] : other.terms_) add_term(lambda, mult);
  return *this;
}

VirtualRep& VirtualRep::operator-=(const VirtualRep& other) {
  return *this += -other;
}

VirtualRep VirtualRep::operator-() const {
  VirtualRep rep(weight_);
  for (const auto& [lambda, mult] : terms_) rep.terms_.emplace(lambda, -mult);
  return rep;
}

VirtualRep VirtualRep::scaled(const BigInt& factor) const {
  VirtualRep rep(weight_);
  if (factor.is_zero()) return rep;
  for (const auto& [lambda, mult] : terms_)
    rep.terms_.emplace(lambda, mult * factor);
  return rep;
}

std::string VirtualRep::to_string(const std::string& symbol) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [lambda, mult] = *it;
    const bool neg = mult < 0;
    if (first) {
      if (neg) os << '-';
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    BigInt a = neg ? BigInt(-mult) : mult;
    if (a != 1) os << a.str() << '*';
    os << symbol << lambda.to_string();
  }
  return os.str();
}

namespace {

// Counts skew semistandard fillings of lambda/mu with content nu whose
// reverse reading word (right to left along each row, rows top to bottom) is
// a lattice word. Cells are visited in exactly that reading order, so the
// lattice test is a running prefix check.
class LRCounter {
 public:
  LRCounter(const Partition& lambda, const Partition& mu, const Partition& nu)
      : lambda_(lambda), mu_(mu), nu_(nu) {
    for (int row = 0; row < lambda.length(); ++row)
      for (int col = lambda.part(row) - 1; col >= mu.part(row); --col)
        cells_.emplace_back(row, col);
    grid_.assign(static_cast<size_t>(lambda.length()),
                 std::vector<int>(
                     static_cast<size_t>(lambda.length() ? lambda.part(0) : 0),
                     0));
    used_.assign(static_cast<size_t>(nu_.length()) + 1, 0);
  }

  std::int64_t count() {
    fill(0);
    return total_;
  }

 private:
  void fill(size_t k) {
    if (k == cells_.size()) {
      ++total_;
      return;
    }
    const auto [row, col] = cells_[k];
    // Row neighbor to the right and column neighbor above are already
    // placed; a neighbor inside mu imposes no constraint.
    const int right = (col + 1 < lambda_.part(row))
                          ? grid_[static_cast<size_t>(row)]
                                 [static_cast<size_t>(col + 1)]
                          : nu_.length();
    const int above = (row > 0 && col >= mu_.part(row - 1))
                          ? grid_[static_cast<size_t>(row - 1)]
                                 [static_cast<size_t>(col)]
                          : 0;
    for (int v = above + 1; v <= right; ++v) {
      if (used_[static_cast<size_t>(v)] >= nu_.part(v - 1)) continue;
      if (v > 1 &&
          used_[static_cast<size_t>(v)] >= used_[static_cast<size_t>(v - 1)])
        continue;  // lattice prefix condition
      grid_[static_cast<size_t>(row)][static_cast<size_t>(col)] = v;
      ++used_[static_cast<size_t>(v)];
      fill(k + 1);
      --used_[static_cast<size_t>(v)];
    }
  }

  const Partition& lambda_;
  const Partition& mu_;
  const Partition& nu_;
  std::vector<std::pair<int, int>> cells_;
  std::int64_t total_ = 0;
  std::vector<std::vector<int>> grid_;
  std::vector<int> used_;
};

using LRKey = std::tuple<Partition, Partition, Partition>;
std::map<LRKey, std::int64_t> lr_cache;  // NOLINT
std::mutex lr_cache_mutex;

}  // namespace

std::int64_t lr_coefficient(const Partition& lambda, const Partition& mu,
                            const Partition& nu) {
  if (mu.weight() + nu.weight() != lambda.weight())
    throw InvalidArgumentError("lr_coefficient weight mismatch: |mu| + |nu| " +
                               std::to_string(mu.weight() + nu.weight()) +
                               " != |lambda| " +
                               std::to_string(lambda.weight()));
  if (!lambda.contains(mu) || !lambda.contains(nu)) return 0;
  if (nu.weight() == 0) return 1;  // lambda == mu at this point

  LRKey key(lambda, mu, nu);
  {
    std::lock_guard<std::mutex> lock(lr_cache_mutex);
    auto it = lr_cache.find(key);
    if (it != lr_cache.end()) return it->second;
  }
  const std::int64_t value = LRCounter(lambda, mu, nu).count();
  {
    std::lock_guard<std::mutex> lock(lr_cache_mutex);
    lr_cache.emplace(std::move(key), value);
  }
  return value;
}

VirtualRep induce_product(const VirtualRep& a, const VirtualRep& b) {
  const int n = a.weight() + b.weight();
  VirtualRep result(n);
  if (a.is_zero() || b.is_zero()) return result;
  const std::vector<Partition> shapes = partitions_of(n);
  for (const auto& [mu, am] : a.terms()) {
    for (const auto& [nu, bm] : b.terms()) {
      const BigInt mult = am * bm;
      for (const Partition& lambda : shapes) {
        if (!lambda.contains(mu) || !lambda.contains(nu)) continue;
        const std::int64_t c = lr_coefficient(lambda, mu, nu);
        if (c != 0) result.add_term(lambda, mult * c);
      }
    }
  }
  return result;
}

BigInt rep_dim(const VirtualRep& rep) {
  BigInt total = 0;
  for (const auto& [lambda, mult] : rep.terms())
    total += mult * dim_symmetric(lambda);
  return total;
}

QPoly rep_qdim(const VirtualRep& rep) {
  QPoly total;
  for (const auto& [lambda, mult] : rep.terms())
    total += dim_unipotent(lambda) * mult;
  return total;
}

}  // namespace klm
