#include "chromabij/budget.hpp"

#include <cstdlib>
#include <string>

namespace chromabij {

Budget Budget::from_env() {
  Budget b;
  if (const char* raw = std::getenv("CHROMABIJ_BUDGET")) {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(raw, &end, 10);
    if (end != raw && *end == '\0' && value > 0) {
      b.max_colorings = value;
      b.max_subsets = value;
      b.max_terms = value;
    }
  }
  return b;
}

}  // namespace chromabij
