#include "toricdm/graded_dmod.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "toricdm/lattice.hpp"

namespace toricdm {

namespace {

void require_scored(const ToricPresentation& P) {
  if (!P.classification().scored) fail(ErrorCode::NotScored, "n_{sigma,a} needs a scored semigroup");
}

void note(ClauseTally& c, bool ok, const std::string& what) {
  ++c.checked;
  if (ok) return;
  ++c.failed;
  if (c.failures.size() < 5) c.failures.push_back(what);
}

std::vector<Degree> nonzero_columns(const ToricPresentation& P) {
  std::vector<Degree> out;
  for (const auto& c : P.columns())
    if (!is_zero(c) && std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
  return out;
}

// Integer kernel of A from the transform rows that kill A^T.
std::vector<std::vector<std::int64_t>> kernel_basis(const IntMatrix& A) {
  const auto hf = hermite_normal_form(A.transpose());
  std::vector<std::vector<std::int64_t>> out;
  for (std::size_t r = 0; r < hf.H.rows(); ++r) {
    bool zero = true;
    for (std::size_t c = 0; c < hf.H.cols() && zero; ++c) zero = hf.H(r, c) == 0;
    if (zero) out.push_back(hf.U.row_int64(r));
  }
  return out;
}

Degree combine(const std::vector<Degree>& cols, const std::vector<std::int64_t>& u, std::size_t d) {
  Degree a(d, 0);
  for (std::size_t i = 0; i < cols.size(); ++i) a = add(a, scale(u[i], cols[i]));
  return a;
}

// Generator monomials t^{-a_i} P_{-a_i}, the identity n_{s,-a_i} = F_s(a_i),
// and additivity/injectivity of the exponent map on random sums.
void certify_exponent_map(const ToricPresentation& P, const CertificateOptions& opt, FiberCertificate& cert) {
  const auto cols = nonzero_columns(P);
  const std::size_t d = P.d(), n = cols.size();
  std::vector<std::vector<std::int64_t>> gen_exps;
  for (const auto& c : cols) {
    GrMonomial g = gr_monomial(P, negate(c));
    for (const auto& f : P.facets()) {
      ++cert.identity_checks;
      if (g.theta_exponents[f.facet_id] != f(c)) ++cert.identity_failures;
    }
    gen_exps.push_back(g.theta_exponents);
    cert.generator_monomials.push_back(std::move(g));
  }

  cert.seed = opt.seed;
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<std::int64_t> coef(0, 3);
  std::uniform_int_distribution<std::int64_t> kcoef(-1, 1);
  const auto kernel = kernel_basis(IntMatrix::from_columns(cols, d));

  auto exponents_of = [&](const std::vector<std::int64_t>& u) {
    const Degree a = negate(combine(cols, u, d));
    std::vector<std::int64_t> counted = gr_monomial(P, a).theta_exponents;
    std::vector<std::int64_t> summed(counted.size(), 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t s = 0; s < summed.size(); ++s) summed[s] += u[i] * gen_exps[i][s];
    if (counted != summed) ++cert.additivity_failures;
    return counted;
  };

  for (std::size_t t = 0; t < opt.sums; ++t) {
    std::vector<std::int64_t> u(n), v(n);
    for (auto& x : u) x = coef(rng);
    if (t % 2 == 1 && !kernel.empty()) {
      std::vector<std::int64_t> k(n, 0);
      for (const auto& row : kernel) {
        const std::int64_t c = kcoef(rng);
        for (std::size_t i = 0; i < n; ++i) k[i] += c * row[i];
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (k[i] < 0) u[i] -= k[i];
        v[i] = u[i] + k[i];
      }
    } else {
      for (auto& x : v) x = coef(rng);
    }
    const bool same_degree = combine(cols, u, d) == combine(cols, v, d);
    cert.relation_pairs += same_degree;
    const bool same_image = exponents_of(u) == exponents_of(v);
    if (same_image != same_degree) ++cert.injectivity_failures;
    ++cert.sums_checked;
  }
}

}  // namespace

std::int64_t n_sigma(const ToricPresentation& P, const Degree& a, std::size_t facet_id) {
  require_scored(P);
  if (a.size() != P.d()) fail(ErrorCode::InvalidInput, "degree has wrong length");
  const auto& f = P.facets().at(facet_id);
  return P.numerical_image(facet_id).nu(f(a));
}

GrMonomial gr_monomial(const ToricPresentation& P, const Degree& a) {
  GrMonomial g;
  g.degree = a;
  for (const auto& f : P.facets()) g.theta_exponents.push_back(n_sigma(P, a, f.facet_id));
  return g;
}

std::int64_t large_k_threshold(const ToricPresentation& P, const Degree& a, std::size_t facet_id) {
  const std::int64_t v = P.facets().at(facet_id)(a);
  return checked_add(checked_add(P.numerical_image(facet_id).conductor(), v < 0 ? -v : v), 1);
}

bool FiberLemmaReport::passed() const {
  return std::all_of(clauses.begin(), clauses.end(), [](const ClauseTally& c) { return c.passed(); });
}

FiberLemmaReport verify_fiber_lemma(const ToricPresentation& P, const std::vector<Degree>& samples) {
  require_scored(P);
  FiberLemmaReport rep;
  rep.clauses[0].name = "main";
  rep.clauses[1].name = "(1)";
  rep.clauses[2].name = "(2)";
  rep.clauses[3].name = "(3)";
  rep.clauses[4].name = "(4)";
  for (const auto& a : samples) {
    ++rep.samples;
    const std::string at = format_degree(a);
    const bool in_NA = P.member_NA(a);
    bool all_nonpositive = true;
    std::int64_t k_all = 0;
    for (const auto& f : P.facets()) {
      const std::size_t s = f.facet_id;
      ++rep.pairs;
      const std::int64_t F = f(a);
      const std::int64_t na = n_sigma(P, a, s);
      const std::int64_t nneg = n_sigma(P, negate(a), s);
      const std::string tag = " at " + at + ", facet " + std::to_string(s);
      note(rep.clauses[0], nneg == na + F, "n(-a) != n(a) + F" + tag);
      const std::int64_t K = large_k_threshold(P, a, s);
      k_all = std::max(k_all, K);
      if (F <= 0) {
        for (std::int64_t k : {K, K + 1})
          note(rep.clauses[1], n_sigma(P, scale(k, a), s) <= checked_mul(k, na), "n(ka) > k n(a)" + tag);
      } else {
        all_nonpositive = false;
        for (std::int64_t k : {K, K + 1}) note(rep.clauses[4], n_sigma(P, scale(k, a), s) == 0, "n(ka) != 0" + tag);
      }
      if (in_NA) note(rep.clauses[3], nneg == F && na == 0, "n(-a) != F(a) or n(a) != 0" + tag);
    }
    if (all_nonpositive && !P.member_NA(negate(a))) {
      bool strict = false;
      for (const auto& f : P.facets())
        strict = strict || n_sigma(P, scale(k_all, a), f.facet_id) < checked_mul(k_all, n_sigma(P, a, f.facet_id));
      note(rep.clauses[2], strict, "no facet with n(ka) < k n(a) at " + at);
    }
  }
  return rep;
}

std::vector<GrPair> gr_generators_dim1(const ToricPresentation& P) {
  if (P.d() != 1) fail(ErrorCode::DimensionUnsupported, "gr D_A generators are listed for d = 1 only");
  const NumericalSemigroup& N = P.numerical_image(0);
  const auto& F = P.facets().at(0);
  std::set<std::int64_t> ws(N.gaps().begin(), N.gaps().end());
  for (const auto& c : P.columns())
    if (F(c) != 0) ws.insert(F(c));
  std::set<GrPair> out{{1, 1}};
  for (auto w : ws) {
    const std::int64_t plus = N.nu(w), minus = N.nu(-w);
    out.insert({plus, minus});
    out.insert({minus, plus});
  }
  return {out.begin(), out.end()};
}

NotCMCertificate notcm_certificate(const ToricPresentation& P) {
  if (P.d() != 1) fail(ErrorCode::DimensionUnsupported, "the non-CM certificate is for d = 1 only");
  const NumericalSemigroup& N = P.numerical_image(0);
  if (N.is_full()) fail(ErrorCode::IsNormal, "NA is normal; gr D_A is Gorenstein");
  NotCMCertificate cert;
  cert.generators = gr_generators_dim1(P);
  cert.holes = N.gaps();
  for (auto h : cert.holes) cert.ell = std::max(cert.ell, checked_mul(2, N.nu(-h)));

  // Every point past the strip reaches it by removing (g, 0) or (0, g) for
  // the smallest generator g, so a filled strip of width 2g suffices.
  const std::int64_t g = N.generators().front();
  cert.strip_width = 2 * g;
  const bool axis = std::binary_search(cert.generators.begin(), cert.generators.end(), GrPair{g, 0});
  const std::int64_t S = cert.ell + cert.strip_width;
  std::vector<std::vector<bool>> reach(S + 1, std::vector<bool>(S + 1, false));
  reach[0][0] = true;
  for (std::int64_t s = 1; s <= S; ++s)
    for (std::int64_t u = 0; u <= s; ++u) {
      const std::int64_t v = s - u;
      bool r = false;
      for (const auto& p : cert.generators)
        if (!r && (p[0] || p[1]) && p[0] <= u && p[1] <= v) r = reach[u - p[0]][v - p[1]];
      reach[u][v] = r;
    }
  cert.strip_filled = axis;
  for (std::int64_t s = 0; s <= S; ++s)
    for (std::int64_t u = 0; u <= s; ++u)
      if (!reach[u][s - u]) {
        cert.gaps.push_back({u, s - u});
        if (s >= cert.ell) cert.strip_filled = false;
      }

  IntMatrix M(2, cert.generators.size());
  for (std::size_t j = 0; j < cert.generators.size(); ++j) {
    M(0, j) = static_cast<long>(cert.generators[j][0]);
    M(1, j) = static_cast<long>(cert.generators[j][1]);
  }
  ToricPresentation G(M);
  cert.flags = G.classification();
  const auto& box = cert.flags.box;
  for (const auto& a : G.facet_box_points(box.lower, box.upper)) {
    if (G.member_NA(a)) continue;
    bool everywhere = true;
    for (const auto& f : G.facets())
      everywhere = everywhere && G.member_NA_plus_face(a, G.face_lattice().facet_face(f.facet_id));
    if (everywhere) {
      cert.has_s2_witness = true;
      cert.s2_witness = a;
      break;
    }
  }
  cert.not_cohen_macaulay = cert.strip_filled && !cert.flags.s2 && cert.has_s2_witness;
  return cert;
}

std::string_view to_string(FiberKind kind) {
  switch (kind) {
    case FiberKind::OriginFiber:
      return "origin_fiber";
    case FiberKind::OrbitFiber:
      return "orbit_fiber";
    case FiberKind::CharVarietyMax:
      return "char_variety_max";
  }
  return "unknown";
}

bool FiberCertificate::verified() const {
  return identity_failures == 0 && additivity_failures == 0 && injectivity_failures == 0 && step1_failures == 0 &&
         step4_failures == 0;
}

FiberCertificate fiber_at_origin(const ToricPresentation& P, const CertificateOptions& opt) {
  if (!P.pointed() || !P.simplicial()) fail(ErrorCode::HypothesisFailed, "the origin fiber needs a simplicial cone");
  if (!P.classification().scored) fail(ErrorCode::HypothesisFailed, "the origin fiber needs a scored semigroup");
  FiberCertificate cert;
  cert.kind = FiberKind::OriginFiber;
  cert.target_semigroup = P.matrix();
  certify_exponent_map(P, opt, cert);
  return cert;
}

FiberCertificate fiber_at_orbit(const ToricPresentation& P, std::size_t face_id, const CertificateOptions& opt) {
  if (!P.pointed() || !P.simplicial()) fail(ErrorCode::HypothesisFailed, "orbit fibers need a simplicial cone");
  if (!P.classification().scored) fail(ErrorCode::HypothesisFailed, "orbit fibers need a scored semigroup");
  const FaceLattice& L = P.face_lattice();
  if (face_id >= L.size() || face_id == L.top()) fail(ErrorCode::InvalidInput, "orbit fibers need a proper face");
  const Face& tau = L.face(face_id);
  FiberCertificate cert;
  cert.kind = FiberKind::OrbitFiber;
  cert.face_id = face_id;
  cert.poly_vars = tau.dim;

  IntMatrix B;
  if (face_id == L.bottom()) {
    B = P.matrix();
    cert.lifts = P.columns();
  } else {
    const QuotientGroup& Q = P.face_quotient(face_id);
    if (!Q.torsion_invariants().empty())
      fail(ErrorCode::HypothesisFailed, "Z(A cap tau) is not saturated");
    // lifts reduced against the Hermite basis of Z(A cap tau)
    const IntMatrix& H = Q.defining_lattice().basis();
    std::vector<Degree> images;
    Degree img;
    for (std::size_t i = 0; i < P.n(); ++i) {
      if (std::binary_search(tau.column_indices.begin(), tau.column_indices.end(), i)) continue;
      Q.project_int64(P.columns()[i], img);
      if (is_zero(img) || std::find(images.begin(), images.end(), img) != images.end()) continue;
      images.push_back(img);
      Degree lift = P.columns()[i];
      for (std::size_t r = 0; r < H.rows(); ++r) {
        const Degree row = H.row_int64(r);
        std::size_t p = 0;
        while (row[p] == 0) ++p;
        const std::int64_t q = floor_div(lift[p], row[p]);
        lift = sub(lift, scale(q, row));
      }
      cert.lifts.push_back(std::move(lift));
    }
    B = IntMatrix::from_columns(images, Q.coordinate_count());
  }
  ToricPresentation PB(B);
  if (!PB.simplicial() || !PB.classification().scored)
    fail(ErrorCode::HypothesisFailed, "the quotient semigroup is not simplicial and scored");
  cert.target_semigroup = B;
  certify_exponent_map(PB, opt, cert);
  return cert;
}

Degree interior_point(const ToricPresentation& P) {
  const auto cols = nonzero_columns(P);
  if (cols.size() > 20) fail(ErrorCode::InvalidInput, "interior point search is limited to 20 distinct columns");
  std::optional<Degree> best;
  for (std::uint32_t mask = 1; mask < (1u << cols.size()); ++mask) {
    Degree a(P.d(), 0);
    for (std::size_t i = 0; i < cols.size(); ++i)
      if (mask >> i & 1) a = add(a, cols[i]);
    bool interior = true;
    for (const auto& f : P.facets()) interior = interior && f(a) > 0;
    if (interior && (!best || a < *best)) best = a;
  }
  if (!best) fail(ErrorCode::NoInteriorPoint, "no sum of columns is interior");
  return *best;
}

FiberCertificate char_variety_max(const ToricPresentation& P, const CertificateOptions& opt) {
  if (!P.pointed()) fail(ErrorCode::HypothesisFailed, "the characteristic variety certificate needs a pointed cone");
  if (!P.classification().scored) fail(ErrorCode::HypothesisFailed, "the characteristic variety certificate needs a scored semigroup");
  FiberCertificate cert;
  cert.kind = FiberKind::CharVarietyMax;
  cert.target_semigroup = P.matrix();
  cert.alpha = interior_point(P);
  certify_exponent_map(P, opt, cert);

  const FaceLattice& L = P.face_lattice();
  const auto cols = nonzero_columns(P);
  const std::size_t d = P.d();
  std::mt19937_64 rng(opt.seed ^ 0x9e3779b97f4a7c15ULL);
  const std::int64_t R = 2 * P.max_abs_entry() + 1;
  std::uniform_int_distribution<std::int64_t> box(-R, R);
  std::uniform_int_distribution<std::int64_t> coef(0, 3);

  // step 1: n a - alpha in NA + Z(A cap sigma) for some n when F_sigma(a) > 0
  for (std::size_t t = 0; t < opt.samples; ++t) {
    Degree a(d);
    for (auto& x : a) x = box(rng);
    for (const auto& f : P.facets()) {
      const std::int64_t Fa = f(a);
      if (Fa <= 0) continue;
      ++cert.step1_checks;
      const std::int64_t need = P.numerical_image(f.facet_id).conductor() + f(cert.alpha);
      const std::int64_t top = std::max<std::int64_t>(1, (need + Fa - 1) / Fa);
      std::int64_t found = 0;
      for (std::int64_t m = 1; m <= top && !found; ++m)
        if (P.member_NA_plus_face(sub(scale(m, a), cert.alpha), L.facet_face(f.facet_id))) found = m;
      if (!found)
        ++cert.step1_failures;
      else
        cert.step1_max_n = std::max(cert.step1_max_n, found);
    }
  }

  // step 4: a - alpha avoids every NA + Z(A cap sigma) for a in -NA \ {0}
  for (std::size_t t = 0; t < opt.samples; ++t) {
    std::vector<std::int64_t> u(cols.size());
    for (auto& x : u) x = coef(rng);
    if (std::all_of(u.begin(), u.end(), [](std::int64_t x) { return x == 0; })) u[t % u.size()] = 1;
    const Degree a = negate(combine(cols, u, d));
    ++cert.step4_checks;
    bool outside = true;
    for (const auto& f : P.facets())
      outside = outside && !P.member_NA_plus_face(sub(a, cert.alpha), L.facet_face(f.facet_id));
    if (!outside) ++cert.step4_failures;
  }
  return cert;
}

}  // namespace toricdm
