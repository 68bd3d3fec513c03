#include "toricdm/presentation.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <unordered_map>

namespace toricdm {

namespace {

struct DegreeHash {
  std::size_t operator()(const Degree& v) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (auto x : v) h ^= std::hash<std::int64_t>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

enum class Tri { False, True, Unknown };

// Memoized search for membership of a residue in the image of NA inside
// Z^d / Z(A cap tau). State is the canonical quotient coordinate vector;
// the facet values of facets containing tau ride along for pruning.
struct FaceOracle {
  std::optional<QuotientGroup> Q;
  std::vector<Degree> reps;
  std::vector<std::size_t> facets;  // facets containing tau
  std::vector<Degree> facet_rows;

  struct Gen {
    Degree p;   // quotient image
    Degree f;   // facet values
    std::int64_t w;
    std::size_t column;
  };
  std::vector<Gen> gens;
  std::int64_t min_w = 1;

  std::mutex mu;
  std::unordered_map<Degree, bool, DegreeHash> exact;
  std::unordered_map<Degree, std::int64_t, DegreeHash> unknown_depth;

  void step(const Degree& p, const Gen& g, Degree& out) const {
    const auto& mod = Q->moduli_int64();
    out.resize(p.size());
    for (std::size_t k = 0; k < p.size(); ++k) {
      std::int64_t x = checked_sub(p[k], g.p[k]);
      out[k] = mod[k] ? mod_floor(x, mod[k]) : x;
    }
  }

  static bool nonnegative(const Degree& f) {
    return std::all_of(f.begin(), f.end(), [](std::int64_t x) { return x >= 0; });
  }

  static std::int64_t weight(const Degree& f) {
    std::int64_t w = 0;
    for (auto x : f) w = checked_add(w, x);
    return w;
  }

  bool search_exact(const Degree& p, const Degree& f) {
    if (!nonnegative(f)) return false;
    const std::int64_t w = weight(f);
    if (w == 0) return is_zero(p);
    if (auto it = exact.find(p); it != exact.end()) return it->second;
    bool found = false;
    Degree p2, f2;
    for (const auto& g : gens) {
      if (g.w > w) continue;
      f2 = sub(f, g.f);
      if (!nonnegative(f2)) continue;
      step(p, g, p2);
      if (search_exact(p2, f2)) {
        found = true;
        break;
      }
    }
    exact.emplace(p, found);
    return found;
  }

  Tri search_bounded(const Degree& p, const Degree& f, std::int64_t depth) {
    if (!nonnegative(f)) return Tri::False;
    const std::int64_t w = weight(f);
    if (w == 0) return is_zero(p) ? Tri::True : Tri::False;
    if (auto it = exact.find(p); it != exact.end()) return it->second ? Tri::True : Tri::False;
    // any solution uses at most w / min_w generators
    if (w / min_w <= depth) return search_exact(p, f) ? Tri::True : Tri::False;
    if (depth == 0) return Tri::Unknown;
    if (auto it = unknown_depth.find(p); it != unknown_depth.end() && it->second >= depth) return Tri::Unknown;
    bool unknown = false;
    Degree p2, f2;
    for (const auto& g : gens) {
      if (g.w > w) continue;
      f2 = sub(f, g.f);
      if (!nonnegative(f2)) continue;
      step(p, g, p2);
      Tri t = search_bounded(p2, f2, depth - 1);
      if (t == Tri::True) {
        exact.emplace(p, true);
        return Tri::True;
      }
      unknown = unknown || t == Tri::Unknown;
    }
    if (!unknown) {
      exact.emplace(p, false);
      return Tri::False;
    }
    unknown_depth[p] = depth;
    return Tri::Unknown;
  }

  void start(const Degree& a, Degree& p, Degree& f) const {
    Q->project_int64(a, p);
    f.resize(facet_rows.size());
    for (std::size_t k = 0; k < facet_rows.size(); ++k) f[k] = dot(facet_rows[k], a);
  }
};

// Points y of a box in chosen facet coordinates, mapped back through the
// inverse of the chosen facet rows.
struct FacetChart {
  std::vector<std::size_t> chosen;  // d independent facets
  IntMatrix adj;                    // adjugate of the chosen rows
  Integer det;
};

FacetChart make_chart(const std::vector<SupportFunction>& facets, std::size_t d) {
  FacetChart c;
  std::vector<Degree> rows;
  for (const auto& f : facets) {
    rows.push_back(f.coefficients);
    if (rank(IntMatrix::from_rows(rows, d)) < rows.size())
      rows.pop_back();
    else
      c.chosen.push_back(f.facet_id);
    if (rows.size() == d) break;
  }
  if (rows.size() != d) fail(ErrorCode::NotPointed, "facet normals do not span");
  IntMatrix G = IntMatrix::from_rows(rows, d);
  c.det = determinant(G);
  c.adj = IntMatrix(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      IntMatrix minor(d - 1, d - 1);
      for (std::size_t r = 0, rr = 0; r < d; ++r) {
        if (r == j) continue;
        for (std::size_t s = 0, ss = 0; s < d; ++s) {
          if (s == i) continue;
          minor(rr, ss++) = G(r, s);
        }
        ++rr;
      }
      Integer m = determinant(minor);
      c.adj(i, j) = ((i + j) % 2) ? Integer(-m) : m;
    }
  return c;
}

}  // namespace

struct ToricPresentation::Impl {
  IntMatrix A;
  std::size_t d = 0, n = 0;
  std::vector<Degree> columns;
  std::int64_t max_abs = 0;
  std::int64_t bound = 0;
  std::int64_t margin = 10;
  std::vector<SupportFunction> facets;
  bool pointed = false;
  bool simplicial = false;
  FaceLattice lattice;
  std::vector<NumericalSemigroup> images;
  std::vector<std::unique_ptr<FaceOracle>> oracles;

  std::once_flag classified;
  Classification cls;
  FastPathCheck fast;

  void require_pointed() const {
    if (!pointed) fail(ErrorCode::NotPointed, "the semigroup is not pointed");
  }

  FaceOracle& oracle(std::size_t face_id) {
    require_pointed();
    if (face_id >= oracles.size()) fail(ErrorCode::InvalidInput, "face id out of range");
    return *oracles[face_id];
  }

  bool search(const Degree& a, std::size_t face_id) {
    if (a.size() != d) fail(ErrorCode::InvalidInput, "degree has wrong length");
    FaceOracle& o = oracle(face_id);
    Degree p, f;
    o.start(a, p, f);
    std::lock_guard<std::mutex> lock(o.mu);
    Tri t = o.search_bounded(p, f, bound);
    if (t == Tri::Unknown)
      fail(ErrorCode::SearchBoundExceeded,
           "membership of " + format_degree(a) + " undecided within search bound " + std::to_string(bound));
    return t == Tri::True;
  }

  bool facet_test(const Degree& a, std::size_t face_id) const {
    for (auto s : lattice.face(face_id).zero_facets)
      if (!images[s].contains(facets[s](a))) return false;
    return true;
  }

  bool member(const Degree& a, std::size_t face_id) {
    ensure_classified();
    if (fast.enabled) {
      if (a.size() != d) fail(ErrorCode::InvalidInput, "degree has wrong length");
      require_pointed();
      return facet_test(a, face_id);
    }
    return search(a, face_id);
  }

  std::int64_t max_conductor() const {
    std::int64_t c = 0;
    for (const auto& N : images) c = std::max(c, N.conductor());
    return c;
  }

  std::vector<Degree> box_points(const std::vector<std::int64_t>& lower, const std::vector<std::int64_t>& upper) const {
    const FacetChart chart = make_chart(facets, d);
    std::vector<Degree> out;
    std::vector<std::int64_t> y(d);
    for (std::size_t k = 0; k < d; ++k) {
      y[k] = lower[chart.chosen[k]];
      if (y[k] > upper[chart.chosen[k]]) return out;
    }
    for (;;) {
      Degree a(d);
      bool integral = true;
      for (std::size_t i = 0; i < d && integral; ++i) {
        Integer acc = 0;
        for (std::size_t k = 0; k < d; ++k) acc += chart.adj(i, k) * Integer(static_cast<long>(y[k]));
        if (acc % chart.det != 0)
          integral = false;
        else
          a[i] = to_int64(acc / chart.det);
      }
      if (integral) {
        bool inside = true;
        for (const auto& f : facets) {
          std::int64_t v = f(a);
          inside = inside && v >= lower[f.facet_id] && v <= upper[f.facet_id];
        }
        if (inside) out.push_back(std::move(a));
      }
      std::size_t k = d;
      while (k > 0) {
        --k;
        if (++y[k] <= upper[chart.chosen[k]]) break;
        y[k] = lower[chart.chosen[k]];
        if (k == 0) {
          std::sort(out.begin(), out.end());
          return out;
        }
      }
    }
  }

  void ensure_classified() {
    std::call_once(classified, [this] { classify(); });
  }

  void classify() {
    require_pointed();
    const std::size_t m = facets.size();
    cls.margin = margin;
    cls.box.lower.assign(m, 0);
    cls.box.upper.resize(m);
    for (std::size_t s = 0; s < m; ++s) cls.box.upper[s] = checked_add(images[s].conductor(), margin);
    const auto points = box_points(cls.box.lower, cls.box.upper);
    cls.box.points = points.size();

    cls.normal = cls.scored = cls.s2 = true;
    for (const auto& a : points) {
      const bool in = search(a, lattice.bottom());
      if (!in) cls.normal = false;
      bool facet_values = true;
      for (std::size_t s = 0; s < m; ++s) facet_values = facet_values && images[s].contains(facets[s](a));
      if (in != facet_values) cls.scored = false;
      bool all_facets = true;
      for (std::size_t s = 0; s < m && all_facets; ++s) all_facets = search(a, lattice.facet_face(s));
      if (in != all_facets) cls.s2 = false;
    }
    if ((cls.normal && !cls.scored) || (cls.scored && !cls.s2))
      fail(ErrorCode::Internal, "classification flags violate normal => scored => S2");

    cross_validate();
  }

  // The facet-value test for Z(A cap tau)-translates is compared with the
  // search on a signed box around the origin; one disagreement disables it.
  void cross_validate() {
    fast = FastPathCheck{};
    if (!cls.scored) return;
    const std::size_t m = facets.size();
    std::int64_t h = margin;
    const FacetChart chart = make_chart(facets, d);
    auto estimate = [&](std::int64_t hh) {
      double est = 1;
      for (auto s : chart.chosen) est *= 2.0 * static_cast<double>(images[s].conductor() + hh) + 1;
      return est;
    };
    while (h > 1 && estimate(h) > 20000) --h;
    fast.box.lower.resize(m);
    fast.box.upper.resize(m);
    for (std::size_t s = 0; s < m; ++s) {
      fast.box.upper[s] = images[s].conductor() + h;
      fast.box.lower[s] = -fast.box.upper[s];
    }
    const auto points = box_points(fast.box.lower, fast.box.upper);
    fast.box.points = points.size();
    for (const auto& a : points)
      for (std::size_t t = 0; t < lattice.size(); ++t) {
        bool oracle_says;
        try {
          oracle_says = search(a, t);
        } catch (const Error& e) {
          if (e.code() != ErrorCode::SearchBoundExceeded) throw;
          continue;
        }
        ++fast.checks;
        if (oracle_says != facet_test(a, t)) {
          fast.disagreement = true;
          return;
        }
      }
    fast.enabled = true;
  }
};

ToricPresentation::ToricPresentation(const IntMatrix& A, PresentationOptions options)
    : impl_(std::make_shared<Impl>()) {
  Impl& I = *impl_;
  if (A.rows() == 0 || A.cols() == 0) fail(ErrorCode::InvalidInput, "A must have at least one row and one column");
  I.A = A;
  I.d = A.rows();
  I.n = A.cols();
  I.columns = A.columns_int64();
  for (const auto& c : I.columns) I.max_abs = std::max(I.max_abs, max_norm(c));
  if (options.search_bound < 0 || options.margin < 0) fail(ErrorCode::InvalidInput, "negative option");
  I.bound = options.search_bound > 0 ? options.search_bound
                                     : checked_mul(checked_mul(10, I.max_abs), static_cast<std::int64_t>(I.d));
  I.margin = options.margin;

  I.facets = compute_facets(A);
  const SmithForm snf = smith_normal_form(A);
  for (std::size_t i = 0; i < I.d; ++i)
    if (snf.D(i, i) != 1) fail(ErrorCode::LatticeNotFull, "the columns of A do not generate Z^d");

  I.pointed = facets_pointed(I.facets, I.d);
  I.simplicial = I.facets.size() == I.d;
  for (const auto& f : I.facets) {
    std::vector<std::int64_t> values;
    for (const auto& c : I.columns) values.push_back(f(c));
    I.images.emplace_back(values);
  }
  if (!I.pointed) return;

  I.lattice = FaceLattice(A, I.facets);
  for (const auto& face : I.lattice.faces()) {
    auto o = std::make_unique<FaceOracle>();
    std::vector<Degree> span;
    for (auto i : face.column_indices) span.push_back(I.columns[i]);
    o->Q = quotient(I.d, Sublattice::span(I.d, span));
    o->reps = torsion_coset_reps(*o->Q);
    o->facets = face.zero_facets;
    for (auto s : face.zero_facets) o->facet_rows.push_back(I.facets[s].coefficients);
    std::map<Degree, std::size_t> seen;
    for (std::size_t i = 0; i < I.n; ++i) {
      if (std::binary_search(face.column_indices.begin(), face.column_indices.end(), i)) continue;
      FaceOracle::Gen g;
      o->start(I.columns[i], g.p, g.f);
      g.w = FaceOracle::weight(g.f);
      g.column = i;
      if (g.w <= 0) fail(ErrorCode::Internal, "column outside a face has non-positive weight");
      if (seen.emplace(g.p, i).second) o->gens.push_back(std::move(g));
    }
    if (!o->gens.empty()) {
      o->min_w = o->gens.front().w;
      for (const auto& g : o->gens) o->min_w = std::min(o->min_w, g.w);
    }
    I.oracles.push_back(std::move(o));
  }
}

const IntMatrix& ToricPresentation::matrix() const { return impl_->A; }
std::size_t ToricPresentation::d() const { return impl_->d; }
std::size_t ToricPresentation::n() const { return impl_->n; }
const std::vector<Degree>& ToricPresentation::columns() const { return impl_->columns; }
std::int64_t ToricPresentation::max_abs_entry() const { return impl_->max_abs; }
std::int64_t ToricPresentation::search_bound() const { return impl_->bound; }
const std::vector<SupportFunction>& ToricPresentation::facets() const { return impl_->facets; }
bool ToricPresentation::pointed() const { return impl_->pointed; }
bool ToricPresentation::simplicial() const { return impl_->simplicial; }

const FaceLattice& ToricPresentation::face_lattice() const {
  impl_->require_pointed();
  return impl_->lattice;
}

const Classification& ToricPresentation::classification() const {
  impl_->ensure_classified();
  return impl_->cls;
}

const FastPathCheck& ToricPresentation::fast_path() const {
  impl_->ensure_classified();
  return impl_->fast;
}

const NumericalSemigroup& ToricPresentation::numerical_image(std::size_t facet_id) const {
  if (facet_id >= impl_->images.size()) fail(ErrorCode::InvalidInput, "facet id out of range");
  return impl_->images[facet_id];
}

std::int64_t ToricPresentation::max_facet_conductor() const { return impl_->max_conductor(); }

bool ToricPresentation::member_NA(const Degree& a) const {
  impl_->require_pointed();
  return impl_->member(a, impl_->lattice.bottom());
}

bool ToricPresentation::member_NA_plus_face(const Degree& a, std::size_t face_id) const {
  impl_->require_pointed();
  return impl_->member(a, face_id);
}

bool ToricPresentation::member_NA_plus_face_search(const Degree& a, std::size_t face_id) const {
  return impl_->search(a, face_id);
}

bool ToricPresentation::member_localization(const Degree& a, const Degree& b) const {
  impl_->require_pointed();
  if (!member_NA(b)) fail(ErrorCode::GeneratorNotInSemigroup, format_degree(b) + " is not in NA");
  // a + m b lands in NA for some m exactly when a lies in NA + Z(A cap tau)
  // for the smallest face tau containing b
  const std::size_t tau = impl_->lattice.smallest_face_containing(b, impl_->facets);
  return member_NA_plus_face(a, tau);
}

std::int64_t ToricPresentation::localization_bound(const Degree& a, const Degree& b) const {
  std::int64_t m = 0;
  for (const auto& f : impl_->facets) {
    const std::int64_t fb = f(b);
    if (fb <= 0) continue;
    const std::int64_t gap = impl_->images[f.facet_id].conductor() - f(a);
    if (gap > 0) m = std::max(m, (gap + fb - 1) / fb);
  }
  if (classification().scored) return m;
  return std::max(m, impl_->bound);
}

std::optional<std::int64_t> ToricPresentation::localization_exponent(const Degree& a, const Degree& b) const {
  impl_->require_pointed();
  if (!member_NA(b)) fail(ErrorCode::GeneratorNotInSemigroup, format_degree(b) + " is not in NA");
  const std::int64_t top = localization_bound(a, b);
  Degree x = a;
  for (std::int64_t m = 0; m <= top; ++m) {
    if (impl_->search(x, impl_->lattice.bottom())) return m;
    x = add(x, b);
  }
  return std::nullopt;
}

std::optional<std::vector<std::int64_t>> ToricPresentation::decompose(const Degree& a) const {
  Impl& I = *impl_;
  I.require_pointed();
  if (!I.search(a, I.lattice.bottom())) return std::nullopt;
  FaceOracle& o = I.oracle(I.lattice.bottom());
  std::vector<std::int64_t> x(I.n, 0);
  Degree p, f, p2, f2;
  o.start(a, p, f);
  std::lock_guard<std::mutex> lock(o.mu);
  std::int64_t depth = I.bound;
  while (FaceOracle::weight(f) > 0) {
    bool moved = false;
    for (const auto& g : o.gens) {
      f2 = sub(f, g.f);
      if (!FaceOracle::nonnegative(f2)) continue;
      o.step(p, g, p2);
      if (o.search_bounded(p2, f2, depth - 1) == Tri::True) {
        ++x[g.column];
        p = p2;
        f = f2;
        --depth;
        moved = true;
        break;
      }
    }
    if (!moved) fail(ErrorCode::Internal, "witness reconstruction lost its path");
  }
  return x;
}

const QuotientGroup& ToricPresentation::face_quotient(std::size_t face_id) const { return *impl_->oracle(face_id).Q; }

const std::vector<Degree>& ToricPresentation::face_coset_reps(std::size_t face_id) const {
  return impl_->oracle(face_id).reps;
}

std::vector<Degree> ToricPresentation::facet_box_points(const std::vector<std::int64_t>& lower,
                                                        const std::vector<std::int64_t>& upper) const {
  impl_->require_pointed();
  if (lower.size() != impl_->facets.size() || upper.size() != impl_->facets.size())
    fail(ErrorCode::InvalidInput, "box needs one range per facet");
  return impl_->box_points(lower, upper);
}

std::int64_t omega_size(const ToricPresentation& P, const Degree& w) {
  if (P.d() != 1) fail(ErrorCode::DimensionUnsupported, "|Omega(w)| is only counted for d = 1");
  if (w.size() != 1) fail(ErrorCode::InvalidInput, "degree has wrong length");
  // d = 1 and pointed: one facet F = +-x, and NA sits in F >= 0
  const auto& F = P.facets().at(0);
  const std::int64_t dir = F.coefficients[0];
  const std::int64_t top = checked_add(P.numerical_image(0).conductor(), std::abs(w[0]));
  std::int64_t count = 0;
  for (std::int64_t k = 0; k <= top; ++k) {
    Degree x{checked_mul(dir, k)};
    if (P.member_NA_plus_face_search(x, 0) && !P.member_NA_plus_face_search(add(x, w), 0)) ++count;
  }
  return count;
}

}  // namespace toricdm
