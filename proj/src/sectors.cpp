#include "toricdm/sectors.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace toricdm {

namespace {

// Face-by-face bit comparison: at the first rep index where the sets differ,
// the signature containing it is larger.
int compare_bits(const Signature& a, const Signature& b) {
  const std::size_t m = std::min(a.per_face.size(), b.per_face.size());
  for (std::size_t f = 0; f < m; ++f) {
    const auto& x = a.per_face[f];
    const auto& y = b.per_face[f];
    std::size_t i = 0;
    while (i < x.size() && i < y.size() && x[i] == y[i]) ++i;
    if (i == x.size() && i == y.size()) continue;
    if (i == y.size()) return 1;
    if (i == x.size()) return -1;
    return x[i] < y[i] ? 1 : -1;
  }
  return 0;
}

std::vector<bool> face_bits(const std::vector<std::size_t>& faces, std::size_t count) {
  std::vector<bool> bits(count, false);
  for (auto f : faces) bits[f] = true;
  return bits;
}

}  // namespace

bool leq(const Signature& a, const Signature& b) {
  if (a.per_face.size() != b.per_face.size()) fail(ErrorCode::InvalidInput, "signatures of different presentations");
  for (std::size_t f = 0; f < a.per_face.size(); ++f)
    if (!std::includes(b.per_face[f].begin(), b.per_face[f].end(), a.per_face[f].begin(), a.per_face[f].end()))
      return false;
  return true;
}

bool equiv(const Signature& a, const Signature& b) { return leq(a, b) && leq(b, a); }

std::vector<std::size_t> e_tau(const ToricPresentation& P, const Degree& a, std::size_t face_id) {
  const auto& reps = P.face_coset_reps(face_id);
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < reps.size(); ++k)
    if (P.member_NA_plus_face(sub(a, reps[k]), face_id)) out.push_back(k);
  return out;
}

Signature signature(const ToricPresentation& P, const Degree& a) {
  Signature s;
  const std::size_t m = P.face_lattice().size();
  s.per_face.reserve(m);
  for (std::size_t f = 0; f < m; ++f) s.per_face.push_back(e_tau(P, a, f));
  return s;
}

std::vector<std::size_t> nabla(const ToricPresentation& P, const Degree& a) {
  const FaceLattice& L = P.face_lattice();
  std::vector<std::size_t> out;
  for (std::size_t f = 0; f < L.size(); ++f)
    if (P.member_NA_plus_face(a, f)) out.push_back(f);
  for (auto f : out)
    for (auto g : L.covers(f))
      if (!std::binary_search(out.begin(), out.end(), g))
        fail(ErrorCode::Internal, "sector of " + format_degree(a) + " is not upward closed");
  return out;
}

std::vector<std::vector<std::size_t>> upward_closed_filters(const FaceLattice& L) {
  const std::size_t m = L.size();
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> in(m, false);
  in[L.top()] = true;
  // decide faces from the top down; a face may join only if every face
  // covering it already has
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == 0) {
      std::vector<std::size_t> faces;
      for (std::size_t f = 0; f < m; ++f)
        if (in[f]) faces.push_back(f);
      out.push_back(std::move(faces));
      return;
    }
    const std::size_t f = k - 1;
    self(self, k - 1);
    bool allowed = true;
    for (auto g : L.covers(f)) allowed = allowed && in[g];
    if (allowed) {
      in[f] = true;
      self(self, k - 1);
      in[f] = false;
    }
  };
  rec(rec, m - 1);
  std::sort(out.begin(), out.end(), [m](const auto& a, const auto& b) { return face_bits(a, m) > face_bits(b, m); });
  return out;
}

std::vector<Degree> box_shell(std::size_t d, std::int64_t inner, std::int64_t r) {
  std::vector<Degree> out;
  if (r < 0) return out;
  Degree x(d, -r);
  for (;;) {
    if (inner < 0 || max_norm(x) > inner) out.push_back(x);
    std::size_t k = d;
    bool done = true;
    while (k > 0) {
      --k;
      if (++x[k] <= r) {
        done = false;
        break;
      }
      x[k] = -r;
    }
    if (done) break;
  }
  std::stable_sort(out.begin(), out.end(), [](const Degree& a, const Degree& b) { return max_norm(a) < max_norm(b); });
  return out;
}

ClassPoset class_poset(const std::vector<Signature>& signatures) {
  const std::size_t k = signatures.size();
  ClassPoset out;
  std::vector<std::size_t> above(k, 0);
  std::vector<std::vector<std::size_t>> below(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j || !leq(signatures[j], signatures[i]) || signatures[i] == signatures[j]) continue;
      out.edges.emplace_back(i, j);
      below[i].push_back(j);
      ++above[j];
    }
  std::vector<std::size_t> ready;
  for (std::size_t i = 0; i < k; ++i)
    if (above[i] == 0) ready.push_back(i);
  while (!ready.empty()) {
    auto best = std::min_element(ready.begin(), ready.end(), [&](std::size_t a, std::size_t b) {
      return compare_bits(signatures[a], signatures[b]) > 0;
    });
    const std::size_t i = *best;
    ready.erase(best);
    out.order.push_back(i);
    for (auto j : below[i])
      if (--above[j] == 0) ready.push_back(j);
  }
  if (out.order.size() != k) fail(ErrorCode::CycleDetected, "class order has a cycle");
  return out;
}

ClassEnumeration enumerate_classes(const ToricPresentation& P, const EnumerationPolicy& policy) {
  const FaceLattice& L = P.face_lattice();
  ClassEnumeration out;
  out.initial_radius = policy.initial_radius > 0
                           ? policy.initial_radius
                           : checked_add(checked_mul(2, P.max_facet_conductor()), P.max_abs_entry());
  if (out.initial_radius <= 0) out.initial_radius = 1;
  const std::size_t want = std::max<std::size_t>(policy.samples_per_class, 1);

  struct Found {
    Signature sig;
    std::vector<Degree> samples;
    std::vector<std::size_t> sector;
  };
  std::vector<Found> found;
  std::map<Signature, std::size_t> index;

  auto filters = upward_closed_filters(L);
  std::map<std::vector<std::size_t>, std::size_t> filter_index;
  for (std::size_t i = 0; i < filters.size(); ++i) {
    filter_index.emplace(filters[i], i);
    out.sectors.push_back(SectorFilter{filters[i], false, {}});
  }

  std::int64_t inner = -1, r = out.initial_radius;
  std::size_t quiet = 0;
  for (std::size_t round = 0;; ++round) {
    bool fresh = false;
    for (const auto& a : box_shell(P.d(), inner, r)) {
      ++out.points_scanned;
      Signature s = signature(P, a);
      auto sector = nabla(P, a);
      auto it = index.find(s);
      if (it == index.end()) {
        it = index.emplace(s, found.size()).first;
        found.push_back(Found{std::move(s), {}, sector});
        fresh = true;
      } else if (found[it->second].sector != sector) {
        fail(ErrorCode::Internal, "equivalent degrees with different sectors at " + format_degree(a));
      }
      if (found[it->second].samples.size() < want) found[it->second].samples.push_back(a);
      auto& sf = out.sectors[filter_index.at(sector)];
      sf.nonempty = true;
      if (sf.sample_points.size() < want) sf.sample_points.push_back(a);
    }
    out.rounds = round + 1;
    out.final_radius = r;
    if (round > 0) quiet = fresh ? 0 : quiet + 1;
    if (quiet >= policy.stable_rounds) break;
    if (out.rounds > policy.max_rounds)
      fail(ErrorCode::EnumerationIncomplete,
           "signatures still changing at box radius " + std::to_string(r) + " after " + std::to_string(out.rounds) +
               " rounds");
    inner = r;
    r = checked_mul(r, 2);
  }

  std::vector<Signature> sigs;
  for (const auto& f : found) sigs.push_back(f.sig);
  ClassPoset poset = class_poset(sigs);
  std::vector<std::size_t> new_id(found.size());
  for (std::size_t pos = 0; pos < poset.order.size(); ++pos) new_id[poset.order[pos]] = pos;
  for (std::size_t pos = 0; pos < poset.order.size(); ++pos) {
    Found& f = found[poset.order[pos]];
    EquivClass c;
    c.class_id = pos;
    c.signature = f.sig;
    c.representative = f.samples.front();
    c.samples = f.samples;
    c.sector_id = filter_index.at(f.sector);
    out.classes.push_back(std::move(c));
  }
  for (auto [hi, lo] : poset.edges) out.poset_edges.emplace_back(new_id[hi], new_id[lo]);
  std::sort(out.poset_edges.begin(), out.poset_edges.end());
  return out;
}

}  // namespace toricdm
