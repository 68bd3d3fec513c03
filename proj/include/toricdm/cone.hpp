#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "toricdm/int_matrix.hpp"

namespace toricdm {

/// Primitive integer functional F_sigma: non-negative on every column of A,
/// zero exactly on the columns spanning the facet sigma.
struct SupportFunction {
  std::size_t facet_id = 0;
  Degree coefficients;
  std::vector<std::size_t> vanishing_columns;

  std::int64_t operator()(const Degree& a) const { return dot(coefficients, a); }
};

struct Face {
  std::size_t face_id = 0;
  std::vector<std::size_t> column_indices;  ///< columns of A lying in the face
  std::size_t dim = 0;
  std::vector<std::size_t> zero_facets;  ///< facets containing the face
  std::vector<Degree> basis;             ///< index-greedy maximal independent columns
};

/// Facets by exhaustive search over (d-1)-subsets of columns, sorted by their
/// vanishing column sets. Throws NotFullDimensional when rank A < d.
std::vector<SupportFunction> compute_facets(const IntMatrix& A);

/// Pointed iff the facet normals span Q^d (no lineality).
bool facets_pointed(const std::vector<SupportFunction>& facets, std::size_t d);

/// The face poset of a pointed cone, faces ordered by (dim, column set).
/// Face 0 is the vertex {0}; the last face is the whole cone.
class FaceLattice {
 public:
  FaceLattice() = default;
  FaceLattice(const IntMatrix& A, const std::vector<SupportFunction>& facets);

  std::size_t size() const noexcept { return faces_.size(); }
  const std::vector<Face>& faces() const noexcept { return faces_; }
  const Face& face(std::size_t id) const { return faces_.at(id); }
  std::size_t bottom() const noexcept { return 0; }
  std::size_t top() const noexcept { return faces_.size() - 1; }

  /// tau subset of tau'
  bool contains(std::size_t tau, std::size_t tau_prime) const { return order_[tau][tau_prime]; }

  /// Faces of dimension dim(tau) + 1 containing tau.
  const std::vector<std::size_t>& covers(std::size_t tau) const { return covers_[tau]; }

  /// Orientation sign in {-1, 0, +1}; non-zero only for covering pairs.
  int incidence_sign(std::size_t tau, std::size_t tau_prime) const;

  /// Face id of the facet with the given facet id.
  std::size_t facet_face(std::size_t facet_id) const { return facet_faces_.at(facet_id); }

  /// Face whose zero-facet set is exactly `zero_facets`' closure; this is
  /// the smallest face containing every point on which those facets vanish.
  std::size_t face_of_zero_set(const std::vector<std::size_t>& zero_facets) const;

  /// The smallest face containing the point a (a must lie in the cone).
  std::size_t smallest_face_containing(const Degree& a, const std::vector<SupportFunction>& facets) const;

 private:
  std::vector<Face> faces_;
  std::vector<std::vector<bool>> order_;
  std::vector<std::vector<std::size_t>> covers_;
  std::map<std::pair<std::size_t, std::size_t>, int> signs_;
  std::vector<std::size_t> facet_faces_;
  std::vector<Degree> columns_;
  std::vector<SupportFunction> facets_;
};

}  // namespace toricdm
