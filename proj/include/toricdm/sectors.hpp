#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "toricdm/presentation.hpp"

namespace toricdm {

/// (E_tau(a))_tau, each E_tau stored as sorted indices into the face's
/// coset representatives; faces in lattice order.
struct Signature {
  std::vector<std::vector<std::size_t>> per_face;

  friend bool operator==(const Signature&, const Signature&) = default;
  friend auto operator<=>(const Signature&, const Signature&) = default;
};

/// E_tau(a) subset of E_tau(b) for every face.
bool leq(const Signature& a, const Signature& b);
bool equiv(const Signature& a, const Signature& b);

std::vector<std::size_t> e_tau(const ToricPresentation& P, const Degree& a, std::size_t face_id);
Signature signature(const ToricPresentation& P, const Degree& a);

/// Faces tau with a in NA + Z(A cap tau), ascending ids; upward closed.
std::vector<std::size_t> nabla(const ToricPresentation& P, const Degree& a);

struct SectorFilter {
  std::vector<std::size_t> faces;
  bool nonempty = false;
  std::vector<Degree> sample_points;
};

/// Every upward-closed set of faces containing the whole cone, sorted by
/// descending face-membership bitstring (all faces first).
std::vector<std::vector<std::size_t>> upward_closed_filters(const FaceLattice& L);

struct EquivClass {
  std::size_t class_id = 0;
  Signature signature;
  Degree representative;
  std::vector<Degree> samples;  ///< first samples in scan order, representative first
  std::size_t sector_id = 0;    ///< index into ClassEnumeration::sectors
};

struct EnumerationPolicy {
  std::int64_t initial_radius = 0;  ///< 0 selects 2 * max conductor + max|A|
  std::size_t samples_per_class = 3;
  std::size_t stable_rounds = 2;
  std::size_t max_rounds = 8;
};

struct ClassEnumeration {
  std::vector<EquivClass> classes;  ///< in linear-extension order
  std::vector<SectorFilter> sectors;
  std::int64_t initial_radius = 0;
  std::int64_t final_radius = 0;
  std::size_t rounds = 0;
  std::size_t points_scanned = 0;
  /// (larger, smaller) class pairs with strictly included signatures.
  std::vector<std::pair<std::size_t, std::size_t>> poset_edges;
};

/// Scans growing centered boxes until `stable_rounds` growths in a row add
/// no signature. Throws EnumerationIncomplete after max_rounds growths.
ClassEnumeration enumerate_classes(const ToricPresentation& P, const EnumerationPolicy& policy = {});

/// Points of [-r, r]^d with max-norm above `inner`, ordered by max-norm and
/// then lexicographically.
std::vector<Degree> box_shell(std::size_t d, std::int64_t inner, std::int64_t r);

struct ClassPoset {
  std::vector<std::pair<std::size_t, std::size_t>> edges;  ///< (larger, smaller)
  std::vector<std::size_t> order;                           ///< larger elements first
};

/// Kahn's algorithm from the maximal classes; ties go to the larger
/// signature bitstring. Throws CycleDetected if the relation is cyclic.
ClassPoset class_poset(const std::vector<Signature>& signatures);

}  // namespace toricdm
