#include "chromabij/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "chromabij/errors.hpp"

namespace chromabij {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw invalid_input_error("partition parts are positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw invalid_input_error("partition parts must be weakly decreasing");
    sum_ += parts_[i];
  }
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  return Partition(std::move(parts));
}

Partition merge_parts(const Partition& a, const Partition& b) {
  std::vector<int> merged;
  merged.reserve(a.parts().size() + b.parts().size());
  std::merge(a.parts().begin(), a.parts().end(), b.parts().begin(), b.parts().end(),
             std::back_inserter(merged), std::greater<int>());
  return Partition(std::move(merged));
}

bool PartitionOrder::operator()(const Partition& a, const Partition& b) const {
  if (a.sum() != b.sum()) return a.sum() < b.sum();
  return a.parts() > b.parts();  // reverse-lex: (n) first, (1,...,1) last
}

}  // namespace chromabij
