#pragma once

#include <vector>

namespace chromabij {

/// Integer partition: weakly decreasing sequence of positive parts.
class Partition {
 public:
  Partition() = default;  // the empty partition of 0

  /// `parts` must already be weakly decreasing and positive.
  explicit Partition(std::vector<int> parts);

  /// Sorts the given parts into canonical (weakly decreasing) form.
  static Partition from_unsorted(std::vector<int> parts);

  int sum() const noexcept { return sum_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  const std::vector<int>& parts() const noexcept { return parts_; }

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.parts_ == b.parts_;
  }
  friend bool operator!=(const Partition& a, const Partition& b) {
    return !(a == b);
  }

 private:
  std::vector<int> parts_;
  int sum_ = 0;
};

/// Multiset union of the parts, re-sorted; the exponent bookkeeping behind
/// multiplying two power-sum basis elements.
Partition merge_parts(const Partition& a, const Partition& b);

/// Serialization and map order: by sum, then reverse-lexicographic within a
/// degree, so (n) comes first and (1,...,1) last.
struct PartitionOrder {
  bool operator()(const Partition& a, const Partition& b) const;
};

}  // namespace chromabij
