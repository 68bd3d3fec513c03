#include <doctest.h>

#include "instances.hpp"
#include "toricdm/cohomology.hpp"

using namespace toricdm;
using fixtures::cube;

namespace {

std::vector<std::size_t> sector_of_series(const ClassEnumeration& E, const IndexModule& m, std::size_t k) {
  return E.sectors[E.classes[m.series[k].class_id].sector_id].faces;
}

const IndexModule& module_at(const GradedModuleDescription& M, std::size_t i) {
  for (const auto& m : M.modules)
    if (m.index == i) return m;
  FAIL("no module at index " << i);
  return M.modules.front();
}

}  // namespace

TEST_CASE("ishida ranks") {
  ToricPresentation P(fixtures::two_dim());
  const auto& L = P.face_lattice();
  CHECK(ishida_ranks(P, {L.top()}) == std::vector<std::size_t>{0, 0, 1});
  CHECK(ishida_ranks(P, {0, 1, 2, 3}) == std::vector<std::size_t>{0, 0, 0});
  CHECK(ishida_ranks(P, {}) == std::vector<std::size_t>{0, 0, 0});
  CHECK(ishida_ranks(P, {1, 3}) == std::vector<std::size_t>{0, 0, 0});
  // the empty sector {sigma1, sigma2, cone} has H^1
  CHECK(ishida_ranks(P, {1, 2, 3}) == std::vector<std::size_t>{0, 1, 0});
}

TEST_CASE("cech ranks") {
  ToricPresentation P(fixtures::two_dim());
  auto I = make_ideal(P, {{1, 1}});
  CHECK(cech_ranks(P, I, {-1, -1}) == std::vector<std::size_t>{0, 1});
  CHECK(cech_ranks(P, I, {0, 0}) == std::vector<std::size_t>{0, 0});
  ToricPresentation H(fixtures::hartshorne());
  auto J = make_ideal(H, {{1, 0, 0}, {1, 1, 0}});
  CHECK(cech_ranks(H, J, {-2, -1, 0}) == std::vector<std::size_t>{0, 0, 1});
  CHECK_THROWS_WITH_AS(make_ideal(P, {{0, 1}}), doctest::Contains("GeneratorNotInSemigroup"), Error);
  CHECK_THROWS_AS(make_ideal(P, {}), Error);
  CHECK(make_ideal(P, {{1, 1}, {1, 1}}).generators.size() == 1);
}

TEST_CASE("euler characteristic and class constancy of cech terms") {
  for (const auto& inst : fixtures::corpus()) {
    CAPTURE(inst.name);
    ToricPresentation P(inst.A);
    auto E = enumerate_classes(P);
    std::map<Signature, std::size_t> cls;
    for (const auto& c : E.classes) cls.emplace(c.signature, c.class_id);
    std::vector<MonomialIdeal> ideals{maximal_ideal(P), make_ideal(P, {P.columns().front()})};
    for (const auto& I : ideals) {
      std::map<std::size_t, std::vector<std::size_t>> dims_by_class;
      for (const auto& a : cube(P.d(), P.d() >= 3 ? 2 : 5)) {
        auto s = cech_slice(P, I, a);
        long chi_terms = 0, chi_ranks = 0;
        for (std::size_t i = 0; i < s.term_dims.size(); ++i) {
          chi_terms += (i % 2 ? -1L : 1L) * static_cast<long>(s.term_dims[i]);
          chi_ranks += (i % 2 ? -1L : 1L) * static_cast<long>(s.ranks[i]);
        }
        CHECK(chi_terms == chi_ranks);
        CHECK(s.ranks[0] == 0);
        auto [it, fresh] = dims_by_class.emplace(cls.at(signature(P, a)), s.term_dims);
        CHECK(it->second == s.term_dims);
      }
    }
  }
}

TEST_CASE("ishida equals cech for the maximal ideal") {
  for (const auto& inst : fixtures::corpus()) {
    CAPTURE(inst.name);
    ToricPresentation P(inst.A);
    auto m = maximal_ideal(P);
    for (const auto& a : cube(P.d(), P.d() >= 3 ? 2 : 4)) {
      auto c = cech_ranks(P, m, a);
      auto i = ishida_ranks(P, nabla(P, a));
      c.resize(std::max(c.size(), i.size()), 0);
      i.resize(c.size(), 0);
      CHECK(c == i);
    }
  }
}

TEST_CASE("2dim example: H^1 of (ts)") {
  ToricPresentation P(fixtures::two_dim());
  auto E = enumerate_classes(P);
  auto M = assemble_module(P, make_ideal(P, {{1, 1}}), E);
  CHECK(M.length(1) == 3);
  const auto& m = module_at(M, 1);
  REQUIRE(m.series.size() == 3);
  const std::size_t top = P.face_lattice().top();
  CHECK(sector_of_series(E, m, 0) == std::vector<std::size_t>{1, top});
  CHECK(sector_of_series(E, m, 1) == std::vector<std::size_t>{2, top});
  CHECK(sector_of_series(E, m, 2) == std::vector<std::size_t>{top});
  CHECK(M.modules.size() == 1);
  CHECK(M.samples_checked == 12);
}

TEST_CASE("hartshorne H^2 is simple") {
  ToricPresentation P(fixtures::hartshorne());
  auto E = enumerate_classes(P);
  auto M = assemble_module(P, make_ideal(P, {{1, 0, 0}, {1, 1, 0}}), E);
  CHECK(M.length(2) == 1);
  const auto& m = module_at(M, 2);
  REQUIRE(m.series.size() == 1);
  const auto& L = P.face_lattice();
  CHECK(sector_of_series(E, m, 0) == std::vector<std::size_t>{L.facet_face(0), L.top()});

  auto probe = socle_probe(P, E, M, 2, {5, 10, 20});
  REQUIRE(probe.counts.size() == 3);
  CHECK(probe.counts[0].count == 6);
  CHECK(probe.counts[1].count == 11);
  CHECK(probe.counts[2].count == 21);
  for (const auto& a : probe.degrees) {
    CHECK(a[0] == -2);
    CHECK(a[1] == -1);
    CHECK(a[2] >= 0);
  }
}

TEST_CASE("one-dimensional H^1") {
  for (auto A : {IntMatrix{{2, 3}}, IntMatrix{{3, 5, 7}}, IntMatrix{{1}}}) {
    ToricPresentation P(A);
    auto E = enumerate_classes(P);
    const std::int64_t b = 2 * A.max_abs_entry().get_si();
    auto M = assemble_module(P, make_ideal(P, {{b}}), E);
    CHECK(M.length(1) == 1);
    CHECK(module_at(M, 1).series[0].class_id == 1);
    auto top = local_cohomology_max(P, E);
    CHECK(top.length(1) == 1);
    CHECK(module_at(top, 1).series[0].class_id == 1);
  }
}

TEST_CASE("top local cohomology") {
  ToricPresentation P(fixtures::two_dim());
  auto E = enumerate_classes(P);
  auto M = local_cohomology_max(P, E);
  CHECK(M.modules.size() == 1);
  CHECK(M.length(2) == 1);
  CHECK(E.sectors[E.classes[module_at(M, 2).series[0].class_id].sector_id].faces ==
        std::vector<std::size_t>{P.face_lattice().top()});

  ToricPresentation plane(IntMatrix::identity(2));
  auto F = enumerate_classes(plane);
  auto N = local_cohomology_max(plane, F);
  CHECK(N.length(2) == 1);
  auto probe = socle_probe(plane, F, N, 2, {1, 3, 6});
  CHECK(probe.degrees == std::vector<Degree>{{-1, -1}});
  for (const auto& c : probe.counts) CHECK(c.count == 1);
  auto zero = socle_probe(plane, F, N, 1, {1, 3});
  for (const auto& c : zero.counts) CHECK(c.count == 0);
  CHECK(zero.degrees.empty());
}

TEST_CASE("assembled cech module of the maximal ideal matches ishida") {
  for (const auto& inst : fixtures::corpus()) {
    CAPTURE(inst.name);
    ToricPresentation P(inst.A);
    auto E = enumerate_classes(P);
    auto viaI = local_cohomology_max(P, E);
    auto viaC = assemble_module(P, maximal_ideal(P), E);
    for (std::size_t i = 0; i <= P.d(); ++i) CHECK(viaI.ranks[i] == viaC.ranks[i]);
    for (std::size_t i = P.d() + 1; i < viaC.ranks.size(); ++i)
      for (auto r : viaC.ranks[i]) CHECK(r == 0);
    // the top piece sits exactly on the sectors {cone}
    for (const auto& c : E.classes) {
      const bool top_only = E.sectors[c.sector_id].faces == std::vector<std::size_t>{P.face_lattice().top()};
      CHECK((viaI.ranks[P.d()][c.class_id] > 0) == top_only);
    }
  }
}

TEST_CASE("unknown classes are reported") {
  ToricPresentation P(fixtures::two_dim());
  auto E = enumerate_classes(P);
  E.classes.pop_back();
  auto M = local_cohomology_max(P, E);
  SupportOracle S(P, E, M);
  CHECK_THROWS_WITH_AS(S.rank_at(2, {-5, -5}), doctest::Contains("ClassNotEnumerated"), Error);
}
