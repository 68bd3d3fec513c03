#pragma once

#include <cstdint>
#include <vector>

namespace toricdm {

/// Submonoid of N generated by positive integers with gcd 1.
class NumericalSemigroup {
 public:
  /// Zeros are dropped; the rest must be positive with gcd 1.
  explicit NumericalSemigroup(std::vector<std::int64_t> generators);

  const std::vector<std::int64_t>& generators() const noexcept { return generators_; }
  /// Smallest c with c + N contained in the semigroup (0 for N itself).
  std::int64_t conductor() const noexcept { return conductor_; }
  const std::vector<std::int64_t>& gaps() const noexcept { return gaps_; }
  bool is_full() const noexcept { return gaps_.empty(); }

  bool contains(std::int64_t x) const;

  /// #{x in N : x + f not in N}, with N this semigroup.
  std::int64_t nu(std::int64_t f) const;

 private:
  std::vector<std::int64_t> generators_;
  std::int64_t conductor_ = 0;
  std::vector<std::int64_t> gaps_;
  std::vector<bool> table_;  // membership below the conductor
};

}  // namespace toricdm
