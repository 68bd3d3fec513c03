#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "toricdm/presentation.hpp"

namespace toricdm {

/// The graded piece t^a K[Theta] P_a of gr D_A, recorded by its exponents:
/// P_a = prod_sigma F_sigma(Theta)^{n_{sigma,a}}.
struct GrMonomial {
  Degree degree;
  std::vector<std::int64_t> theta_exponents;  ///< indexed by facet id
};

/// n_{sigma,a} = #{x in N : x + F_sigma(a) not in N}, N = F_sigma(NA).
/// Throws NotScored unless the classification marks NA scored.
std::int64_t n_sigma(const ToricPresentation& P, const Degree& a, std::size_t facet_id);
GrMonomial gr_monomial(const ToricPresentation& P, const Degree& a);

/// k used for the "large k" clauses: conductor(F_sigma(NA)) + |F_sigma(a)| + 1.
std::int64_t large_k_threshold(const ToricPresentation& P, const Degree& a, std::size_t facet_id);

struct ClauseTally {
  std::string name;
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::vector<std::string> failures;  ///< first few counterexamples

  bool passed() const { return failed == 0; }
};

/// main identity n_{s,-a} = n_{s,a} + F_s(a) and clauses (1)-(4).
struct FiberLemmaReport {
  std::array<ClauseTally, 5> clauses;
  std::size_t samples = 0;
  std::size_t pairs = 0;  ///< (degree, facet) pairs

  bool passed() const;
};

FiberLemmaReport verify_fiber_lemma(const ToricPresentation& P, const std::vector<Degree>& samples);

/// Exponent pair (u, v) of t^u xi^v.
using GrPair = std::array<std::int64_t, 2>;

/// d = 1: t xi together with (|Omega(w)|, |Omega(-w)|) and its mirror for w
/// running over generators and holes of the numerical image. Sorted, unique.
std::vector<GrPair> gr_generators_dim1(const ToricPresentation& P);

struct NotCMCertificate {
  std::vector<GrPair> generators;
  std::vector<std::int64_t> holes;
  std::int64_t ell = 0;            ///< max 2|Omega(-w)| over holes
  std::int64_t strip_width = 0;    ///< strip ell <= u + v <= ell + strip_width checked
  bool strip_filled = false;       ///< hence every u + v >= ell lies in the semigroup
  std::vector<GrPair> gaps;        ///< points of N^2 outside the semigroup
  Classification flags;            ///< of the 2-dim semigroup
  bool has_s2_witness = false;
  Degree s2_witness;               ///< outside gr D_A but inside every facet localization
  bool not_cohen_macaulay = false;
};

/// Throws DimensionUnsupported for d != 1 and IsNormal for N itself.
NotCMCertificate notcm_certificate(const ToricPresentation& P);

enum class FiberKind { OriginFiber, OrbitFiber, CharVarietyMax };
std::string_view to_string(FiberKind kind);

struct FiberCertificate {
  FiberKind kind = FiberKind::OriginFiber;
  std::vector<GrMonomial> generator_monomials;
  IntMatrix target_semigroup;
  std::size_t poly_vars = 0;

  std::size_t face_id = 0;           ///< orbit fibers
  std::vector<Degree> lifts;         ///< orbit fibers: lift of each column of B
  Degree alpha;                      ///< char_variety_max interior point

  std::uint64_t seed = 0;
  std::size_t identity_checks = 0;   ///< n_{s,-a_i} = F_s(a_i)
  std::size_t identity_failures = 0;
  std::size_t sums_checked = 0;
  std::size_t additivity_failures = 0;
  std::size_t injectivity_failures = 0;
  std::size_t relation_pairs = 0;    ///< pairs with A u = A v among the sums

  std::size_t step1_checks = 0;      ///< (a, sigma) with F_sigma(a) > 0
  std::size_t step1_failures = 0;
  std::int64_t step1_max_n = 0;
  std::size_t step4_checks = 0;
  std::size_t step4_failures = 0;

  bool verified() const;
};

struct CertificateOptions {
  std::uint64_t seed = 20240611;
  std::size_t sums = 50;
  std::size_t samples = 50;
};

/// Requires simplicial and scored (HypothesisFailed otherwise).
FiberCertificate fiber_at_origin(const ToricPresentation& P, const CertificateOptions& opt = {});
/// B presents (NA + Z(A cap tau)) / Z(A cap tau); tau must be a proper face.
FiberCertificate fiber_at_orbit(const ToricPresentation& P, std::size_t face_id, const CertificateOptions& opt = {});
/// Requires scored and pointed; no simplicial hypothesis.
FiberCertificate char_variety_max(const ToricPresentation& P, const CertificateOptions& opt = {});

/// Lexicographically smallest interior sum of a nonempty set of columns.
Degree interior_point(const ToricPresentation& P);

}  // namespace toricdm
