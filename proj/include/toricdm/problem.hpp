#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "toricdm/int_matrix.hpp"

namespace toricdm {

struct IdealSpec {
  bool maximal = false;
  std::vector<Degree> generators;
};

/// One problem file. Grammar (one directive per line, '#' starts a comment):
///
///   matrix R C            followed by R lines of C integers
///   ideal maximal
///   ideal K               followed by K lines of d integers
///   search_bound N
///   box_radius N
///   samples_per_class N
struct ProblemFile {
  IntMatrix matrix;
  std::optional<IdealSpec> ideal;
  std::optional<std::int64_t> search_bound;
  std::optional<std::int64_t> box_radius;
  std::optional<std::int64_t> samples_per_class;
};

/// Throws Error(Parse) with "line N:" in the message.
ProblemFile parse_problem(const std::string& text);
ProblemFile load_problem(const std::string& path);

/// "1,-2,0" -> {1,-2,0}; throws Error(Parse).
std::vector<std::int64_t> parse_int_list(const std::string& text);

}  // namespace toricdm
