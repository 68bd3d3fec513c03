#include "toricdm/numerical_semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "toricdm/integer.hpp"

namespace toricdm {

NumericalSemigroup::NumericalSemigroup(std::vector<std::int64_t> generators) {
  std::int64_t g = 0;
  for (auto x : generators) {
    if (x < 0) fail(ErrorCode::InvalidInput, "negative generator " + std::to_string(x));
    if (x == 0) continue;
    generators_.push_back(x);
    g = std::gcd(g, x);
  }
  std::sort(generators_.begin(), generators_.end());
  generators_.erase(std::unique(generators_.begin(), generators_.end()), generators_.end());
  if (g != 1) fail(ErrorCode::InvalidInput, "generators of a numerical semigroup must have gcd 1");

  // the Frobenius number is below min * max, so this table covers every gap
  const std::int64_t limit = checked_mul(generators_.front(), generators_.back()) + 1;
  std::vector<bool> in(static_cast<std::size_t>(limit), false);
  in[0] = true;
  for (std::int64_t x = 1; x < limit; ++x)
    for (auto a : generators_) {
      if (a > x) break;
      if (in[static_cast<std::size_t>(x - a)]) {
        in[static_cast<std::size_t>(x)] = true;
        break;
      }
    }
  for (std::int64_t x = 0; x < limit; ++x)
    if (!in[static_cast<std::size_t>(x)]) gaps_.push_back(x);
  conductor_ = gaps_.empty() ? 0 : gaps_.back() + 1;
  table_.assign(in.begin(), in.begin() + conductor_);
}

bool NumericalSemigroup::contains(std::int64_t x) const {
  if (x < 0) return false;
  if (x >= conductor_) return true;
  return table_[static_cast<std::size_t>(x)];
}

std::int64_t NumericalSemigroup::nu(std::int64_t f) const {
  // x + f >= conductor forces membership, so only x below this can count
  const std::int64_t top = conductor_ + std::max<std::int64_t>(0, -f);
  std::int64_t count = 0;
  for (std::int64_t x = 0; x < top; ++x)
    if (contains(x) && !contains(checked_add(x, f))) ++count;
  return count;
}

}  // namespace toricdm
