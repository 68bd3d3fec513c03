#pragma once

#include <cstddef>
#include <vector>

#include "toricdm/int_matrix.hpp"

namespace toricdm {

struct HermiteForm {
  IntMatrix H;  ///< row-style Hermite normal form
  IntMatrix U;  ///< unimodular, U * M == H
};

/// Row-style Hermite normal form: H is in row echelon form, pivots are
/// positive, entries above a pivot lie in [0, pivot), zero rows are last.
HermiteForm hermite_normal_form(const IntMatrix& M);

struct SmithForm {
  IntMatrix D;  ///< diagonal, D(0,0) | D(1,1) | ..., non-negative
  IntMatrix U;  ///< unimodular (rows x rows)
  IntMatrix V;  ///< unimodular (cols x cols), U * M * V == D
};

SmithForm smith_normal_form(const IntMatrix& M);

/// Inverse of a unimodular matrix.
IntMatrix unimodular_inverse(const IntMatrix& U);

/// A subgroup of Z^d, stored through its Hermite-reduced row basis so that
/// structural equality is lattice equality. The zero lattice has an empty
/// basis (0 x d).
class Sublattice {
 public:
  explicit Sublattice(std::size_t ambient_rank) : ambient_rank_(ambient_rank), basis_(0, ambient_rank) {}

  /// Lattice generated by arbitrary (possibly dependent) vectors.
  static Sublattice span(std::size_t ambient_rank, const std::vector<Degree>& generators);
  static Sublattice span(const IntMatrix& generator_rows);
  static Sublattice full(std::size_t ambient_rank);

  std::size_t ambient_rank() const noexcept { return ambient_rank_; }
  std::size_t rank() const noexcept { return basis_.rows(); }
  const IntMatrix& basis() const noexcept { return basis_; }

  bool contains(const Degree& v) const;

  friend bool operator==(const Sublattice& a, const Sublattice& b) {
    return a.ambient_rank_ == b.ambient_rank_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_rank_;
  IntMatrix basis_;
};

/// (rational span of L) intersected with Z^d.
Sublattice saturate(const Sublattice& L);

/// Z^d / L presented as Z^free_rank (+) Z/t_1 (+) ... (+) Z/t_k.
///
/// Canonical coordinates of a vector are the torsion coordinates (reduced
/// into [0, t_i)) followed by the free coordinates.
class QuotientGroup {
 public:
  std::size_t ambient_rank() const noexcept { return ambient_rank_; }
  std::size_t free_rank() const noexcept { return free_rank_; }
  const std::vector<Integer>& torsion_invariants() const noexcept { return torsion_; }
  const Sublattice& defining_lattice() const noexcept { return lattice_; }

  /// Number of canonical coordinates (torsion first, then free).
  std::size_t coordinate_count() const noexcept { return projection_.rows(); }
  const IntMatrix& projection_matrix() const noexcept { return projection_; }
  /// Modulus of each coordinate, 0 for free coordinates.
  const std::vector<Integer>& moduli() const noexcept { return moduli_; }

  std::vector<Integer> project(const Degree& v) const;

  /// Machine-integer copy of the projection for the hot membership paths.
  const std::vector<Degree>& projection_rows_int64() const noexcept { return projection64_; }
  const Degree& moduli_int64() const noexcept { return moduli64_; }
  void project_int64(const Degree& v, Degree& out) const;

  /// Columns of U^{-1}; used to lift canonical coordinates back to Z^d.
  const IntMatrix& lift_matrix() const noexcept { return lift_; }

 private:
  friend QuotientGroup quotient(std::size_t, const Sublattice&);
  friend std::vector<Degree> torsion_coset_reps(const QuotientGroup&);
  explicit QuotientGroup(const Sublattice& L) : lattice_(L) {}

  std::size_t ambient_rank_ = 0;
  std::size_t free_rank_ = 0;
  std::vector<Integer> torsion_;
  Sublattice lattice_;
  IntMatrix projection_;
  std::vector<Integer> moduli_;
  std::vector<std::size_t> torsion_rows_;  // row of U per torsion coordinate
  IntMatrix lift_;
  std::vector<Degree> projection64_;
  Degree moduli64_;
};

QuotientGroup quotient(std::size_t ambient_rank, const Sublattice& L);

/// One representative per element of saturate(L)/L, each in the rational
/// span of L. The zero vector comes first; the order is lexicographic in
/// the torsion coordinates and therefore deterministic.
std::vector<Degree> torsion_coset_reps(const QuotientGroup& Q);

}  // namespace toricdm
