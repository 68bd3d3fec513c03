#include "toricdm/integer.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace toricdm {

std::int64_t to_int64(const Integer& value) {
  if (!value.fits_slong_p()) fail(ErrorCode::Overflow, "integer " + value.get_str() + " exceeds 64 bits");
  return static_cast<std::int64_t>(value.get_si());
}

std::int64_t dot(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
  if (a.size() != b.size()) fail(ErrorCode::Internal, "dot: length mismatch");
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc = checked_add(acc, checked_mul(a[i], b[i]));
  return acc;
}

Degree add(const Degree& a, const Degree& b) {
  if (a.size() != b.size()) fail(ErrorCode::Internal, "add: length mismatch");
  Degree out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = checked_add(a[i], b[i]);
  return out;
}

Degree sub(const Degree& a, const Degree& b) {
  if (a.size() != b.size()) fail(ErrorCode::Internal, "sub: length mismatch");
  Degree out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = checked_sub(a[i], b[i]);
  return out;
}

Degree scale(std::int64_t k, const Degree& a) {
  Degree out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = checked_mul(k, a[i]);
  return out;
}

Degree negate(const Degree& a) { return scale(-1, a); }

bool is_zero(const Degree& a) {
  for (auto x : a)
    if (x != 0) return false;
  return true;
}

std::int64_t max_norm(const Degree& a) {
  std::int64_t m = 0;
  for (auto x : a) m = std::max(m, x < 0 ? checked_mul(-1, x) : x);
  return m;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  if (r < 0) r += m;
  return r;
}

std::string format_degree(const Degree& a) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
  os << ')';
  return os.str();
}

}  // namespace toricdm
