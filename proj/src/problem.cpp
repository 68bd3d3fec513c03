#include "toricdm/problem.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "toricdm/error.hpp"

namespace toricdm {

namespace {

struct Lines {
  std::vector<std::pair<std::size_t, std::vector<std::string>>> items;  // (line number, tokens)
  std::size_t pos = 0;

  bool done() const { return pos >= items.size(); }
};

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
  fail(ErrorCode::Parse, "line " + std::to_string(line) + ": " + what);
}

std::int64_t to_int(const std::string& tok, std::size_t line) {
  std::int64_t v = 0;
  const char* b = tok.data();
  const char* e = b + tok.size();
  if (!tok.empty() && *b == '+') ++b;
  auto [p, ec] = std::from_chars(b, e, v);
  if (ec == std::errc::result_out_of_range) parse_error(line, "integer out of range: " + tok);
  if (ec != std::errc() || p != e || b == e) parse_error(line, "expected an integer, got '" + tok + "'");
  return v;
}

std::vector<std::int64_t> int_row(const std::pair<std::size_t, std::vector<std::string>>& item, std::size_t want) {
  const auto& [line, toks] = item;
  if (toks.size() != want)
    parse_error(line, "expected " + std::to_string(want) + " integers, got " + std::to_string(toks.size()));
  std::vector<std::int64_t> out;
  for (const auto& t : toks) out.push_back(to_int(t, line));
  return out;
}

std::int64_t count_arg(const std::pair<std::size_t, std::vector<std::string>>& item, std::int64_t min) {
  const auto& [line, toks] = item;
  if (toks.size() != 2) parse_error(line, "'" + toks[0] + "' takes exactly one integer");
  const std::int64_t v = to_int(toks[1], line);
  if (v < min) parse_error(line, "'" + toks[0] + "' must be at least " + std::to_string(min));
  return v;
}

}  // namespace

ProblemFile parse_problem(const std::string& text) {
  Lines L;
  std::istringstream in(text);
  std::string raw;
  for (std::size_t no = 1; std::getline(in, raw); ++no) {
    if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
    std::istringstream ls(raw);
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(t);
    if (!toks.empty()) L.items.emplace_back(no, std::move(toks));
  }

  ProblemFile P;
  bool have_matrix = false;
  std::optional<std::pair<std::size_t, std::vector<std::vector<std::int64_t>>>> pending_ideal;
  std::size_t last_line = 0;
  while (!L.done()) {
    const auto& item = L.items[L.pos++];
    const auto& [line, toks] = item;
    last_line = line;
    const std::string& key = toks[0];
    auto take_rows = [&](std::size_t count, std::size_t width, const std::string& what) {
      std::vector<std::vector<std::int64_t>> rows;
      for (std::size_t r = 0; r < count; ++r) {
        if (L.done()) parse_error(line, what + " ends after " + std::to_string(r) + " of " + std::to_string(count) + " rows");
        rows.push_back(int_row(L.items[L.pos++], width));
      }
      return rows;
    };
    if (key == "matrix") {
      if (have_matrix) parse_error(line, "duplicate 'matrix'");
      if (toks.size() != 3) parse_error(line, "usage: matrix ROWS COLS");
      const std::int64_t r = to_int(toks[1], line), c = to_int(toks[2], line);
      if (r < 1 || c < 1) parse_error(line, "matrix dimensions must be positive");
      if (r > 64 || c > 64) parse_error(line, "matrix dimensions are limited to 64");
      auto rows = take_rows(static_cast<std::size_t>(r), static_cast<std::size_t>(c), "matrix");
      P.matrix = IntMatrix::from_rows(rows, static_cast<std::size_t>(c));
      have_matrix = true;
    } else if (key == "ideal") {
      if (pending_ideal || P.ideal) parse_error(line, "duplicate 'ideal'");
      if (toks.size() != 2) parse_error(line, "usage: ideal maximal | ideal COUNT");
      if (toks[1] == "maximal") {
        P.ideal = IdealSpec{true, {}};
        continue;
      }
      const std::int64_t k = to_int(toks[1], line);
      if (k < 1) parse_error(line, "an ideal needs at least one generator");
      if (!have_matrix) parse_error(line, "'ideal' must follow 'matrix'");
      pending_ideal.emplace(line, take_rows(static_cast<std::size_t>(k), P.matrix.rows(), "ideal"));
    } else if (key == "search_bound") {
      if (P.search_bound) parse_error(line, "duplicate 'search_bound'");
      P.search_bound = count_arg(item, 1);
    } else if (key == "box_radius") {
      if (P.box_radius) parse_error(line, "duplicate 'box_radius'");
      P.box_radius = count_arg(item, 0);
    } else if (key == "samples_per_class") {
      if (P.samples_per_class) parse_error(line, "duplicate 'samples_per_class'");
      P.samples_per_class = count_arg(item, 1);
    } else {
      parse_error(line, "unknown directive '" + key + "'");
    }
  }
  if (!have_matrix) parse_error(last_line, "missing 'matrix'");
  if (pending_ideal) P.ideal = IdealSpec{false, pending_ideal->second};
  return P;
}

ProblemFile load_problem(const std::string& path) {
  std::ifstream f(path);
  if (!f) fail(ErrorCode::Parse, "cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_problem(ss.str());
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::string tok;
  std::istringstream in(text);
  while (std::getline(in, tok, ',')) {
    auto b = tok.find_first_not_of(" \t");
    auto e = tok.find_last_not_of(" \t");
    if (b == std::string::npos) fail(ErrorCode::Parse, "empty entry in '" + text + "'");
    tok = tok.substr(b, e - b + 1);
    std::int64_t v = 0;
    const char* p0 = tok.data() + (tok[0] == '+');
    auto [p, ec] = std::from_chars(p0, tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size()) fail(ErrorCode::Parse, "bad integer '" + tok + "' in '" + text + "'");
    out.push_back(v);
  }
  if (out.empty()) fail(ErrorCode::Parse, "empty integer list");
  return out;
}

}  // namespace toricdm
