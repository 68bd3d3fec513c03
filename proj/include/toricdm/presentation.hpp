#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "toricdm/cone.hpp"
#include "toricdm/lattice.hpp"
#include "toricdm/numerical_semigroup.hpp"

namespace toricdm {

struct PresentationOptions {
  std::int64_t search_bound = 0;  ///< 0 selects 10 * max|A| * d
  std::int64_t margin = 10;       ///< verification box slack beyond each conductor
};

/// Box {0 <= F_sigma(a) <= upper[sigma]} used to verify a flag.
struct FacetBox {
  std::vector<std::int64_t> lower;
  std::vector<std::int64_t> upper;
  std::size_t points = 0;
};

struct Classification {
  bool normal = false;
  bool scored = false;
  bool s2 = false;
  FacetBox box;
  std::int64_t margin = 0;
};

/// Agreement of the facet-value fast path with the search oracle.
struct FastPathCheck {
  bool enabled = false;
  bool disagreement = false;
  FacetBox box;             ///< signed box that was checked
  std::size_t checks = 0;   ///< (degree, face) pairs compared
};

/// The matrix A with its cone data and membership oracles. Copies share the
/// (immutable) cone data and the memo tables; all methods are thread-safe.
class ToricPresentation {
 public:
  explicit ToricPresentation(const IntMatrix& A, PresentationOptions options = {});

  const IntMatrix& matrix() const;
  std::size_t d() const;
  std::size_t n() const;
  const std::vector<Degree>& columns() const;
  std::int64_t max_abs_entry() const;
  std::int64_t search_bound() const;

  const std::vector<SupportFunction>& facets() const;
  bool pointed() const;
  bool simplicial() const;
  /// Throws NotPointed when the cone has lineality.
  const FaceLattice& face_lattice() const;

  /// Normal / scored / S2 verified on a facet box. Requires pointed.
  const Classification& classification() const;
  const FastPathCheck& fast_path() const;

  /// F_sigma(NA) for the facet sigma.
  const NumericalSemigroup& numerical_image(std::size_t facet_id) const;
  std::int64_t max_facet_conductor() const;

  bool member_NA(const Degree& a) const;
  bool member_NA_plus_face(const Degree& a, std::size_t face_id) const;
  /// Same question answered by the search alone, never the fast path.
  bool member_NA_plus_face_search(const Degree& a, std::size_t face_id) const;

  /// a + m b in NA for some m >= 0. Throws GeneratorNotInSemigroup if b is
  /// not in NA.
  bool member_localization(const Degree& a, const Degree& b) const;
  /// Smallest such m, searched up to a facet-derived stabilization bound.
  std::optional<std::int64_t> localization_exponent(const Degree& a, const Degree& b) const;
  std::int64_t localization_bound(const Degree& a, const Degree& b) const;

  /// x in N^n with A x = a, if one exists.
  std::optional<std::vector<std::int64_t>> decompose(const Degree& a) const;

  /// Z^d / Z(A cap tau) and coset representatives of its torsion part.
  const QuotientGroup& face_quotient(std::size_t face_id) const;
  const std::vector<Degree>& face_coset_reps(std::size_t face_id) const;

  /// Integer points with lower[s] <= F_s(a) <= upper[s] for every facet s.
  std::vector<Degree> facet_box_points(const std::vector<std::int64_t>& lower,
                                       const std::vector<std::int64_t>& upper) const;

  struct Impl;

 private:
  std::shared_ptr<Impl> impl_;
};

/// |NA \ (-w + NA)| for d = 1, by enumeration up to conductor + |w|.
std::int64_t omega_size(const ToricPresentation& P, const Degree& w);

}  // namespace toricdm
