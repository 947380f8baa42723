#ifndef HOMKERNEL_FPMODULES_HPP
#define HOMKERNEL_FPMODULES_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "homkernel/ideal.hpp"

namespace homkernel {

struct FreeModule {
  RingPtr ring;
  Twists twists;
  std::size_t rank() const { return twists.size(); }
};

/// Length of a module, std::nullopt when infinite.
using Length = std::optional<std::int64_t>;

/// coker(R^m -> R^r) for a homogeneous matrix given by its columns. The
/// minimal presentation and the Gröbner basis of the relation span are
/// computed on first use and shared between copies.
class PresentedModule {
 public:
  PresentedModule() = default;
  /// Throws InhomogeneousInput or RankMismatch for malformed columns.
  PresentedModule(RingPtr ring, Twists twists, std::vector<VectorPoly> relations);

  const RingPtr& ring() const { return ring_; }
  const Twists& twists() const { return twists_; }
  std::size_t rank() const { return twists_.size(); }
  const std::vector<VectorPoly>& relations() const { return relations_; }
  FreeModule ambient() const { return {ring_, twists_}; }
  /// Degree of each relation column.
  Twists relation_degrees() const;

  const PresentedModule& minimal() const;
  /// Gröbner basis of relations + J·e_i in A^r.
  const SubmoduleGB& relation_gb() const;
  /// Relations adjoined with J·e_i.
  std::vector<VectorPoly> relation_span() const;

  std::size_t beta0() const { return minimal().rank(); }
  std::size_t beta1() const { return minimal().relations().size(); }
  bool is_zero() const { return beta0() == 0; }
  bool is_minimal() const;

 private:
  struct Cache;
  RingPtr ring_;
  Twists twists_;
  std::vector<VectorPoly> relations_;
  std::shared_ptr<Cache> cache_;
};

/// Generators of `source` mapped to vectors of `target`'s ambient module.
struct ModuleMap {
  PresentedModule source, target;
  std::vector<VectorPoly> columns;
};

PresentedModule make_coker(const RingPtr& ring, Twists twists, std::vector<VectorPoly> relations);
PresentedModule free_module(const RingPtr& ring, Twists twists);
PresentedModule cyclic_module(const Ideal& i);
PresentedModule zero_module(const RingPtr& ring);
PresentedModule residue_field(const RingPtr& ring);

PresentedModule minimal_presentation(const PresentedModule& m);
/// (K + Q)/Q inside the free module with the given twists, re-presented as a cokernel.
PresentedModule subquotient(const RingPtr& ring, const Twists& twists, const std::vector<VectorPoly>& gens,
                            const std::vector<VectorPoly>& rels);

/// Throws InhomogeneousInput or RankMismatch when the map is ill-formed and
/// TypeMismatch when a source relation does not map into the target relations.
ModuleMap make_map(PresentedModule source, PresentedModule target, std::vector<VectorPoly> columns);
PresentedModule kernel_of_map(const ModuleMap& f);
PresentedModule image_of_map(const ModuleMap& f);
PresentedModule cokernel_of_map(const ModuleMap& f);

struct FreeInfo {
  bool free;
  std::size_t rank;
  Twists twists;
};
FreeInfo is_free(const PresentedModule& m);

PresentedModule direct_sum(const PresentedModule& m, const PresentedModule& n);
PresentedModule twist(const PresentedModule& m, std::int64_t d);
PresentedModule tensor(const PresentedModule& m, const PresentedModule& n);
PresentedModule hom_module(const PresentedModule& m, const PresentedModule& n);
PresentedModule transpose(const PresentedModule& m);
/// M/IM.
PresentedModule quotient_by_ideal(const PresentedModule& m, const std::vector<Polynomial>& ideal_gens);

Length length(const PresentedModule& m);
/// Dimensions of the graded pieces in degrees lo..hi.
std::vector<std::int64_t> hilbert_function(const PresentedModule& m, std::int64_t lo, std::int64_t hi);
inline std::vector<std::int64_t> hilbert_function(const PresentedModule& m, std::int64_t d_max) {
  return hilbert_function(m, 0, d_max);
}
Ideal annihilator(const PresentedModule& m);
PresentedModule socle(const PresentedModule& m);
/// True iff the socle is nonzero; ZeroModule for M = 0.
bool depth_zero_test(const PresentedModule& m);
/// (0 :_N f).
PresentedModule colon_in_module(const PresentedModule& n, const Polynomial& f);

std::string format_length(const Length& l);
std::string describe(const PresentedModule& m);

}  // namespace homkernel

#endif
