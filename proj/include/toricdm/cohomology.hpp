#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "toricdm/sectors.hpp"

namespace toricdm {

struct MonomialIdeal {
  bool maximal = false;
  std::vector<Degree> generators;  ///< degrees in NA, distinct, nonzero
};

/// Validates membership in NA; duplicates are dropped keeping first order.
MonomialIdeal make_ideal(const ToricPresentation& P, const std::vector<Degree>& generators);
/// The maximal graded ideal, generated by the distinct nonzero columns.
MonomialIdeal maximal_ideal(const ToricPresentation& P);

/// Cohomology ranks H^0..H^d of the Ishida complex restricted to the faces
/// of `filter`.
std::vector<std::size_t> ishida_ranks(const ToricPresentation& P, const std::vector<std::size_t>& filter);

struct CechSlice {
  std::vector<std::size_t> term_dims;  ///< per cohomological index
  std::vector<std::size_t> ranks;      ///< H^0..H^t
};

/// Degree-a slice of the Cech complex of I. Term J is one-dimensional when
/// a lies in the support of S_A localized at the product of the b_j, j in J.
CechSlice cech_slice(const ToricPresentation& P, const MonomialIdeal& I, const Degree& a);
std::vector<std::size_t> cech_ranks(const ToricPresentation& P, const MonomialIdeal& I, const Degree& a);

struct ModulePiece {
  std::size_t class_id = 0;
  std::size_t index = 0;
  std::size_t rank = 0;
};

struct SeriesFactor {
  std::size_t class_id = 0;
  std::size_t multiplicity = 0;
};

struct IndexModule {
  std::size_t index = 0;
  std::size_t length = 0;
  std::vector<SeriesFactor> series;  ///< bottom of the composition series first
};

/// H^i_I(S_A) for all i as class-supported pieces.
struct GradedModuleDescription {
  MonomialIdeal ideal;
  std::string method;                            ///< "cech" or "ishida"
  std::vector<ModulePiece> pieces;               ///< by index, then class order
  std::vector<IndexModule> modules;              ///< indices with nonzero length
  std::vector<std::vector<std::size_t>> ranks;   ///< ranks[i][class_id]
  std::size_t samples_checked = 0;

  std::size_t length(std::size_t index) const;
};

/// Cech ranks at every class sample; ClassRankMismatch if a class disagrees.
GradedModuleDescription assemble_module(const ToricPresentation& P, const MonomialIdeal& I,
                                        const ClassEnumeration& classes);

/// H^i_m(S_A) from the Ishida ranks of each class's sector.
GradedModuleDescription local_cohomology_max(const ToricPresentation& P, const ClassEnumeration& classes);

/// Same rank at every (index, class); indices missing on one side count as zero.
bool ranks_agree(const GradedModuleDescription& a, const GradedModuleDescription& b);

/// Rank of the module's H^index at degree a, via the class of a. Throws
/// ClassNotEnumerated when the signature of a is not among the classes.
class SupportOracle {
 public:
  SupportOracle(const ToricPresentation& P, const ClassEnumeration& classes, const GradedModuleDescription& M);
  std::size_t rank_at(std::size_t index, const Degree& a) const;

 private:
  const ToricPresentation& P_;
  const GradedModuleDescription& M_;
  std::map<Signature, std::size_t> class_of_;
};

struct SocleCount {
  std::int64_t radius = 0;
  std::size_t count = 0;
};

struct SocleProbe {
  std::size_t index = 0;
  std::vector<SocleCount> counts;
  std::vector<Degree> degrees;  ///< socle degrees within the largest radius
};

/// a is a socle degree when it is in the support and a + a_i is not, for
/// every column a_i. Counts are over the centered boxes [-R, R]^d.
SocleProbe socle_probe(const ToricPresentation& P, const ClassEnumeration& classes, const GradedModuleDescription& M,
                       std::size_t index, const std::vector<std::int64_t>& radii);

}  // namespace toricdm
