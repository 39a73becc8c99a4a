#include "tlweyl/errors.hpp"

namespace tlweyl {

void check_rank(int n) {
  if (n < 1) throw InputError("rank must be at least 1, got " + std::to_string(n));
  if (n > kMaxRank)
    throw CapacityError("rank " + std::to_string(n) + " exceeds the cap of " +
                        std::to_string(kMaxRank));
}

}  // namespace tlweyl
