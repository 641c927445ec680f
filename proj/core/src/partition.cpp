#include <klm/errors.hpp>
#include <klm/partition.hpp>

#include <numeric>
#include <sstream>

namespace klm {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t j = 0; j < parts_.size(); ++j) {
    if (parts_[j] < 1)
      throw InvalidPartitionError("partition part must be positive, got " +
                                  std::to_string(parts_[j]));
    if (j > 0 && parts_[j] > parts_[j - 1])
      throw InvalidPartitionError("partition parts must be weakly decreasing");
    weight_ += parts_[j];
  }
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return Partition();
  std::vector<int> cols(static_cast<size_t>(parts_[0]), 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++cols[static_cast<size_t>(j)];
  return Partition(std::move(cols));
}

std::vector<int> Partition::hook_lengths() const {
  const Partition conj = conjugate();
  std::vector<int> hooks;
  hooks.reserve(static_cast<size_t>(weight_));
  for (int i = 0; i < length(); ++i)
    for (int j = 0; j < parts_[static_cast<size_t>(i)]; ++j)
      hooks.push_back(part(i) - j + conj.part(j) - i - 1);
  return hooks;
}

bool Partition::contains(const Partition& inner) const {
  if (inner.length() > length()) return false;
  for (int i = 0; i < inner.length(); ++i)
    if (inner.part(i) > part(i)) return false;
  return true;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '[';
  for (size_t j = 0; j < parts_.size(); ++j) {
    if (j) os << ',';
    os << parts_[j];
  }
  os << ']';
  return os.str();
}

Partition hook_partition(int n, int i) {
  if (n < 1 || i < 0 || i >= n)
    throw InvalidArgumentError("hook_partition requires 0 <= i < n, n >= 1");
  std::vector<int> parts;
  parts.reserve(static_cast<size_t>(i) + 1);
  parts.push_back(n - i);
  parts.insert(parts.end(), static_cast<size_t>(i), 1);
  return Partition(std::move(parts));
}

BigInt dim_symmetric(const Partition& lambda) {
  BigInt denom = 1;
  for (int h : lambda.hook_lengths()) denom *= h;
  return detail::ring_div_exact(factorial(lambda.weight()), denom);
}

QPoly dim_unipotent(const Partition& lambda) {
  QPoly denom(1);
  for (int h : lambda.hook_lengths()) denom *= q_int(h);
  int exponent = 0;
  for (int k = 0; k < lambda.length(); ++k) exponent += k * lambda.part(k);
  return q_factorial(lambda.weight()).div_exact(denom).shifted(exponent);
}

namespace {

void emit_partitions(int remaining, int max_part, std::vector<int>& prefix,
                     std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition(prefix));
    return;
  }
  for (int first = std::min(remaining, max_part); first >= 1; --first) {
    prefix.push_back(first);
    emit_partitions(remaining - first, first, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw InvalidArgumentError("partitions_of requires n >= 0");
  if (n > kMaxPartitionWeight)
    throw ResourceLimitError("partitions_of limited to n <= " +
                             std::to_string(kMaxPartitionWeight));
  std::vector<Partition> out;
  std::vector<int> prefix;
  emit_partitions(n, n, prefix, out);
  return out;
}

}  // namespace klm
