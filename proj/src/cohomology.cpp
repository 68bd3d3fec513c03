#include "toricdm/cohomology.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <set>
#include <string>

namespace toricdm {

namespace {

// Ranks of a cochain complex given its differentials d^i : C^i -> C^{i+1}.
std::vector<std::size_t> cohomology_ranks(const std::vector<std::size_t>& dims, const std::vector<IntMatrix>& diffs) {
  std::vector<std::size_t> r(diffs.size());
  for (std::size_t i = 0; i < diffs.size(); ++i) r[i] = diffs[i].rows() && diffs[i].cols() ? rank(diffs[i]) : 0;
  std::vector<std::size_t> h(dims.size());
  for (std::size_t i = 0; i < dims.size(); ++i) {
    std::size_t out = i < r.size() ? r[i] : 0;
    std::size_t in = i > 0 ? r[i - 1] : 0;
    if (out + in > dims[i]) fail(ErrorCode::Internal, "differential ranks exceed the term dimension");
    h[i] = dims[i] - out - in;
  }
  return h;
}

// The slice depends only on which subsets carry a nonzero term.
std::mutex cech_cache_mu;
std::map<std::pair<std::size_t, std::vector<bool>>, std::vector<std::size_t>> cech_cache;

std::vector<std::size_t> cech_from_support(std::size_t t, const std::vector<bool>& live) {
  {
    std::lock_guard<std::mutex> lock(cech_cache_mu);
    auto it = cech_cache.find({t, live});
    if (it != cech_cache.end()) return it->second;
  }
  const std::uint32_t total = 1u << t;
  std::vector<std::vector<std::uint32_t>> terms(t + 1);
  for (std::uint32_t J = 0; J < total; ++J)
    if (live[J]) terms[static_cast<std::size_t>(std::popcount(J))].push_back(J);
  std::vector<std::size_t> dims(t + 1);
  for (std::size_t i = 0; i <= t; ++i) dims[i] = terms[i].size();
  std::vector<IntMatrix> diffs;
  for (std::size_t i = 0; i < t; ++i) {
    IntMatrix D(terms[i + 1].size(), terms[i].size());
    for (std::size_t c = 0; c < terms[i].size(); ++c) {
      const std::uint32_t J = terms[i][c];
      for (std::size_t k = 0; k < t; ++k) {
        if (J >> k & 1) continue;
        const std::uint32_t K = J | (1u << k);
        auto row = std::lower_bound(terms[i + 1].begin(), terms[i + 1].end(), K);
        if (row == terms[i + 1].end() || *row != K) fail(ErrorCode::Internal, "Cech support is not upward closed");
        const int before = std::popcount(J & ((1u << k) - 1));
        D(static_cast<std::size_t>(row - terms[i + 1].begin()), c) = before % 2 ? -1 : 1;
      }
    }
    diffs.push_back(std::move(D));
  }
  auto h = cohomology_ranks(dims, diffs);
  std::lock_guard<std::mutex> lock(cech_cache_mu);
  cech_cache.emplace(std::make_pair(t, live), h);
  return h;
}

}  // namespace

MonomialIdeal make_ideal(const ToricPresentation& P, const std::vector<Degree>& generators) {
  MonomialIdeal I;
  if (generators.empty()) fail(ErrorCode::InvalidInput, "an ideal needs at least one generator");
  for (const auto& b : generators) {
    if (b.size() != P.d()) fail(ErrorCode::InvalidInput, "generator " + format_degree(b) + " has wrong length");
    if (!P.member_NA(b)) fail(ErrorCode::GeneratorNotInSemigroup, format_degree(b) + " is not in NA");
    if (is_zero(b)) fail(ErrorCode::InvalidInput, "the zero degree generates the unit ideal");
    if (std::find(I.generators.begin(), I.generators.end(), b) == I.generators.end()) I.generators.push_back(b);
  }
  if (I.generators.size() > 16) fail(ErrorCode::InvalidInput, "at most 16 distinct generators are supported");
  return I;
}

MonomialIdeal maximal_ideal(const ToricPresentation& P) {
  std::vector<Degree> gens;
  for (const auto& c : P.columns())
    if (!is_zero(c)) gens.push_back(c);
  MonomialIdeal I = make_ideal(P, gens);
  I.maximal = true;
  return I;
}

std::vector<std::size_t> ishida_ranks(const ToricPresentation& P, const std::vector<std::size_t>& filter) {
  const FaceLattice& L = P.face_lattice();
  const std::size_t d = P.d();
  std::vector<std::vector<std::size_t>> terms(d + 1);
  for (auto f : filter) terms[L.face(f).dim].push_back(f);
  for (auto& t : terms) std::sort(t.begin(), t.end());
  std::vector<std::size_t> dims(d + 1);
  for (std::size_t i = 0; i <= d; ++i) dims[i] = terms[i].size();
  std::vector<IntMatrix> diffs;
  for (std::size_t i = 0; i < d; ++i) {
    IntMatrix D(terms[i + 1].size(), terms[i].size());
    for (std::size_t r = 0; r < terms[i + 1].size(); ++r)
      for (std::size_t c = 0; c < terms[i].size(); ++c) D(r, c) = L.incidence_sign(terms[i][c], terms[i + 1][r]);
    diffs.push_back(std::move(D));
  }
  return cohomology_ranks(dims, diffs);
}

CechSlice cech_slice(const ToricPresentation& P, const MonomialIdeal& I, const Degree& a) {
  const std::size_t t = I.generators.size();
  const std::uint32_t total = 1u << t;
  std::vector<bool> live(total, false);
  CechSlice s;
  s.term_dims.assign(t + 1, 0);
  for (std::uint32_t J = 0; J < total; ++J) {
    Degree b(P.d(), 0);
    for (std::size_t k = 0; k < t; ++k)
      if (J >> k & 1) b = add(b, I.generators[k]);
    live[J] = P.member_localization(a, b);
    if (live[J]) ++s.term_dims[static_cast<std::size_t>(std::popcount(J))];
  }
  s.ranks = cech_from_support(t, live);
  return s;
}

std::vector<std::size_t> cech_ranks(const ToricPresentation& P, const MonomialIdeal& I, const Degree& a) {
  return cech_slice(P, I, a).ranks;
}

std::size_t GradedModuleDescription::length(std::size_t index) const {
  for (const auto& m : modules)
    if (m.index == index) return m.length;
  return 0;
}

namespace {

void finish(GradedModuleDescription& M) {
  for (std::size_t i = 0; i < M.ranks.size(); ++i) {
    IndexModule im;
    im.index = i;
    for (std::size_t c = 0; c < M.ranks[i].size(); ++c) {
      const std::size_t r = M.ranks[i][c];
      if (r == 0) continue;
      M.pieces.push_back(ModulePiece{c, i, r});
      im.series.push_back(SeriesFactor{c, r});
      im.length += r;
    }
    if (im.length > 0) M.modules.push_back(std::move(im));
  }
}

}  // namespace

GradedModuleDescription assemble_module(const ToricPresentation& P, const MonomialIdeal& I,
                                        const ClassEnumeration& classes) {
  GradedModuleDescription M;
  M.ideal = I;
  M.method = "cech";
  const std::size_t t = I.generators.size();
  M.ranks.assign(t + 1, std::vector<std::size_t>(classes.classes.size(), 0));
  for (const auto& c : classes.classes) {
    std::vector<std::size_t> first;
    for (const auto& x : c.samples) {
      auto r = cech_ranks(P, I, x);
      ++M.samples_checked;
      if (r[0] != 0) fail(ErrorCode::Internal, "nonzero H^0 at " + format_degree(x) + " for a nonzero ideal");
      if (first.empty()) {
        first = r;
      } else if (r != first) {
        fail(ErrorCode::ClassRankMismatch, "ranks differ between " + format_degree(c.samples.front()) + " and " +
                                               format_degree(x) + " in class " + std::to_string(c.class_id));
      }
    }
    for (std::size_t i = 0; i <= t; ++i) M.ranks[i][c.class_id] = first[i];
  }
  finish(M);
  return M;
}

GradedModuleDescription local_cohomology_max(const ToricPresentation& P, const ClassEnumeration& classes) {
  GradedModuleDescription M;
  M.ideal = maximal_ideal(P);
  M.method = "ishida";
  M.ranks.assign(P.d() + 1, std::vector<std::size_t>(classes.classes.size(), 0));
  for (const auto& c : classes.classes) {
    auto r = ishida_ranks(P, classes.sectors[c.sector_id].faces);
    for (std::size_t i = 0; i <= P.d(); ++i) M.ranks[i][c.class_id] = r[i];
  }
  finish(M);
  return M;
}

bool ranks_agree(const GradedModuleDescription& a, const GradedModuleDescription& b) {
  const std::size_t top = std::max(a.ranks.size(), b.ranks.size());
  for (std::size_t i = 0; i < top; ++i) {
    const bool ha = i < a.ranks.size(), hb = i < b.ranks.size();
    const std::size_t classes = std::max(ha ? a.ranks[i].size() : 0, hb ? b.ranks[i].size() : 0);
    for (std::size_t c = 0; c < classes; ++c) {
      const std::size_t ra = ha && c < a.ranks[i].size() ? a.ranks[i][c] : 0;
      const std::size_t rb = hb && c < b.ranks[i].size() ? b.ranks[i][c] : 0;
      if (ra != rb) return false;
    }
  }
  return true;
}

SupportOracle::SupportOracle(const ToricPresentation& P, const ClassEnumeration& classes,
                             const GradedModuleDescription& M)
    : P_(P), M_(M) {
  for (const auto& c : classes.classes) class_of_.emplace(c.signature, c.class_id);
}

std::size_t SupportOracle::rank_at(std::size_t index, const Degree& a) const {
  if (index >= M_.ranks.size()) return 0;
  auto it = class_of_.find(signature(P_, a));
  if (it == class_of_.end())
    fail(ErrorCode::ClassNotEnumerated, "the class of " + format_degree(a) + " was not found by the box scan");
  return M_.ranks[index][it->second];
}

SocleProbe socle_probe(const ToricPresentation& P, const ClassEnumeration& classes, const GradedModuleDescription& M,
                       std::size_t index, const std::vector<std::int64_t>& radii) {
  SocleProbe out;
  out.index = index;
  std::int64_t rmax = 0;
  for (auto r : radii) {
    if (r < 0) fail(ErrorCode::InvalidInput, "negative socle radius");
    rmax = std::max(rmax, r);
  }
  SupportOracle support(P, classes, M);
  std::map<Degree, bool> cache;
  auto in_support = [&](const Degree& a) {
    auto it = cache.find(a);
    if (it != cache.end()) return it->second;
    bool v = support.rank_at(index, a) > 0;
    cache.emplace(a, v);
    return v;
  };
  std::vector<Degree> shifts;
  for (const auto& c : P.columns())
    if (!is_zero(c) && std::find(shifts.begin(), shifts.end(), c) == shifts.end()) shifts.push_back(c);
  if (!radii.empty())
    for (const auto& a : box_shell(P.d(), -1, rmax)) {
      if (!in_support(a)) continue;
      bool socle = true;
      for (const auto& c : shifts) socle = socle && !in_support(add(a, c));
      if (socle) out.degrees.push_back(a);
    }
  for (auto r : radii) {
    std::size_t n = 0;
    for (const auto& a : out.degrees) n += max_norm(a) <= r;
    out.counts.push_back(SocleCount{r, n});
  }
  return out;
}

}  // namespace toricdm
