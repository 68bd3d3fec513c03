#include <doctest.h>

#include <numeric>

#include "toricdm/cone.hpp"

using namespace toricdm;

namespace {

void check_dd_zero(const FaceLattice& L) {
  for (std::size_t t = 0; t < L.size(); ++t)
    for (std::size_t t2 = 0; t2 < L.size(); ++t2) {
      if (L.face(t2).dim != L.face(t).dim + 2 || !L.contains(t, t2)) continue;
      int sum = 0;
      for (std::size_t mid : L.covers(t))
        if (L.contains(mid, t2)) sum += L.incidence_sign(t, mid) * L.incidence_sign(mid, t2);
      CHECK(sum == 0);
    }
}

void check_support_functions(const IntMatrix& A, const std::vector<SupportFunction>& fs) {
  const auto cols = A.columns_int64();
  for (const auto& f : fs) {
    std::int64_t g = 0;
    for (auto c : f.coefficients) g = std::gcd(g, c < 0 ? -c : c);
    CHECK(g == 1);
    std::vector<Degree> zero;
    for (const auto& c : cols) {
      CHECK(f(c) >= 0);
      if (f(c) == 0) zero.push_back(c);
    }
    CHECK(rank(IntMatrix::from_columns(zero, A.rows())) == A.rows() - 1);
  }
}

}  // namespace

TEST_CASE("facets of the 2dim example") {
  IntMatrix A{{1, 1, 1}, {0, 1, 2}};
  auto fs = compute_facets(A);
  REQUIRE(fs.size() == 2);
  CHECK(fs[0].coefficients == Degree{0, 1});
  CHECK(fs[1].coefficients == Degree{2, -1});
  check_support_functions(A, fs);
  FaceLattice L(A, fs);
  CHECK(L.size() == 4);
  check_dd_zero(L);
  CHECK(facets_pointed(fs, 2));
}

TEST_CASE("facets of the identity") {
  for (std::size_t d = 1; d <= 4; ++d) {
    IntMatrix A = IntMatrix::identity(d);
    auto fs = compute_facets(A);
    REQUIRE(fs.size() == d);
    for (const auto& f : fs) {
      int nz = 0;
      for (auto c : f.coefficients) nz += c != 0;
      CHECK(nz == 1);
    }
    FaceLattice L(A, fs);
    CHECK(L.size() == (std::size_t{1} << d));
    check_dd_zero(L);
  }
}

TEST_CASE("hartshorne cone") {
  IntMatrix A{{1, 1, 1, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}};
  auto fs = compute_facets(A);
  REQUIRE(fs.size() == 4);
  // sorted by vanishing columns: {0,1} z, {0,2} y, {1,3} x-y, {2,3} x-z
  CHECK(fs[0].coefficients == Degree{0, 0, 1});
  CHECK(fs[1].coefficients == Degree{0, 1, 0});
  CHECK(fs[2].coefficients == Degree{1, -1, 0});
  CHECK(fs[3].coefficients == Degree{1, 0, -1});
  check_support_functions(A, fs);
  FaceLattice L(A, fs);
  CHECK(L.size() == 10);
  check_dd_zero(L);
  // every maximal chain has length d
  for (std::size_t t = 0; t + 1 < L.size(); ++t) CHECK(!L.covers(t).empty());
  CHECK(L.face(L.top()).dim == 3);
  CHECK(L.face(L.bottom()).dim == 0);
}

TEST_CASE("non pointed and degenerate inputs") {
  IntMatrix line{{1, -1}};
  auto fs = compute_facets(line);
  CHECK(fs.empty());
  CHECK_FALSE(facets_pointed(fs, 1));
  CHECK_THROWS_AS(FaceLattice(line, fs), Error);
  CHECK_THROWS_AS(compute_facets(IntMatrix{{1, 2}, {2, 4}}), Error);
}

TEST_CASE("d dd zero on assorted cones") {
  std::vector<IntMatrix> cones{
      IntMatrix{{1, 1, 1, 1}, {0, 1, 3, 4}},
      IntMatrix{{1, 1, 1}, {0, 2, 3}},
      IntMatrix{{1, 0, 0, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}},
      IntMatrix{{1, 1, 1, 1, 1}, {0, 1, 0, 1, 2}, {0, 0, 1, 1, 1}},
      IntMatrix{{1, 1, 1, 1, 1}, {0, 1, 0, -1, 0}, {0, 0, 1, 0, -1}},
      IntMatrix{{1, 0, 0, 0, 1}, {0, 1, 0, 0, 1}, {0, 0, 1, 0, -1}, {0, 0, 0, 1, -1}},
  };
  for (const auto& A : cones) {
    auto fs = compute_facets(A);
    check_support_functions(A, fs);
    FaceLattice L(A, fs);
    check_dd_zero(L);
    for (std::size_t i = 0; i < L.size(); ++i)
      for (std::size_t j : L.covers(i)) CHECK(L.incidence_sign(i, j) != 0);
  }
}
