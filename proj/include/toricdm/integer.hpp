#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "toricdm/error.hpp"

namespace toricdm {

/// Arbitrary-precision integer used by the normal-form and lattice code.
using Integer = mpz_class;

/// A point of Z^d. Semigroup-level oracles work with machine integers and
/// checked arithmetic; any overflow raises ErrorCode::Overflow instead of
/// wrapping.
using Degree = std::vector<std::int64_t>;

std::int64_t to_int64(const Integer& value);

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) fail(ErrorCode::Overflow, "int64 addition");
  return out;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_sub_overflow(a, b, &out)) fail(ErrorCode::Overflow, "int64 subtraction");
  return out;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) fail(ErrorCode::Overflow, "int64 multiplication");
  return out;
}

std::int64_t dot(std::span<const std::int64_t> a, std::span<const std::int64_t> b);

Degree add(const Degree& a, const Degree& b);
Degree sub(const Degree& a, const Degree& b);
Degree scale(std::int64_t k, const Degree& a);
Degree negate(const Degree& a);
bool is_zero(const Degree& a);

/// Max-norm, used to bucket degrees into centered boxes.
std::int64_t max_norm(const Degree& a);

/// Floor division and non-negative remainder (Euclidean for positive moduli).
std::int64_t floor_div(std::int64_t a, std::int64_t b);
std::int64_t mod_floor(std::int64_t a, std::int64_t m);

std::string format_degree(const Degree& a);

}  // namespace toricdm
