#ifndef HOMKERNEL_GROEBNER_HPP
#define HOMKERNEL_GROEBNER_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "homkernel/polynomial.hpp"

namespace homkernel {

using Twists = std::vector<std::int64_t>;

/// Element of a graded free module A^r, stored densely by slot.
class VectorPoly {
 public:
  VectorPoly() = default;
  explicit VectorPoly(std::vector<Polynomial> components) : comps_(std::move(components)) {}
  static VectorPoly zero(const PolyRingPtr& ring, std::size_t rank);
  static VectorPoly unit(const PolyRingPtr& ring, std::size_t rank, std::size_t i);

  std::size_t rank() const { return comps_.size(); }
  const Polynomial& operator[](std::size_t i) const { return comps_[i]; }
  Polynomial& operator[](std::size_t i) { return comps_[i]; }
  const std::vector<Polynomial>& components() const { return comps_; }
  bool is_zero() const;

  /// Common degree d with slot i of degree d - twists[i]; nullopt for the zero
  /// vector. Throws InhomogeneousInput when the slots disagree.
  std::optional<std::int64_t> degree(std::span<const std::int64_t> twists) const;

  friend VectorPoly operator+(const VectorPoly& a, const VectorPoly& b);
  friend VectorPoly operator-(const VectorPoly& a, const VectorPoly& b);
  friend VectorPoly operator*(const Polynomial& f, const VectorPoly& v);
  friend bool operator==(const VectorPoly& a, const VectorPoly& b) { return a.comps_ == b.comps_; }

  std::string to_string() const;

 private:
  std::vector<Polynomial> comps_;
};

/// Position-over-term order on A^r. Positions with a smaller priority value
/// dominate; the default ranks slots by ascending twist, then ascending index.
class ModuleOrder {
 public:
  ModuleOrder() = default;
  explicit ModuleOrder(Twists twists);
  ModuleOrder(Twists twists, std::vector<std::uint32_t> priority);

  std::size_t positions() const { return twists_.size(); }
  std::int64_t twist(std::uint32_t pos) const { return twists_[pos]; }
  const Twists& twists() const { return twists_; }
  std::uint32_t priority(std::uint32_t pos) const { return priority_[pos]; }

  std::strong_ordering compare(std::uint32_t pa, const Monomial& ma, std::uint32_t pb, const Monomial& mb) const {
    if (pa != pb) return priority_[pb] <=> priority_[pa];
    return ma <=> mb;
  }

 private:
  Twists twists_;
  std::vector<std::uint32_t> priority_;
};

struct ModTerm {
  Scalar coeff;
  Monomial mono;
  std::uint32_t pos;
};

/// Sparse module element, terms strictly descending under a ModuleOrder.
using SparseVec = std::vector<ModTerm>;

SparseVec to_sparse(const VectorPoly& v, const ModuleOrder& order);
VectorPoly to_dense(const SparseVec& v, const PolyRingPtr& ring, std::size_t rank);

/// Reduced Gröbner basis of span(generators ∪ background) in A^r, computed by a
/// homogeneous degree-by-degree Buchberger run (normal strategy, pairs ordered
/// by lcm degree then index, coprimality criterion for rank one and the chain
/// criterion throughout). Background vectors are processed ahead of
/// generators in each degree, so `minimal_generators()` lists the generators
/// that minimally generate the span modulo the background.
class SubmoduleGB {
 public:
  SubmoduleGB() = default;
  SubmoduleGB(PolyRingPtr ring, ModuleOrder order, const std::vector<VectorPoly>& generators,
              const std::vector<VectorPoly>& background = {});

  const PolyRingPtr& ring() const { return ring_; }
  const ModuleOrder& order() const { return order_; }
  std::size_t rank() const { return order_.positions(); }

  /// Reduced basis, monic, sorted by descending lead term.
  const std::vector<SparseVec>& sparse_basis() const { return basis_; }
  std::vector<VectorPoly> basis() const;
  const std::vector<std::size_t>& minimal_generators() const { return minimal_; }

  SparseVec normal_form(SparseVec f) const;
  VectorPoly normal_form(const VectorPoly& f) const;
  bool contains(const VectorPoly& f) const { return normal_form(f).is_zero(); }

  /// Lead monomials per slot of the initial module.
  std::vector<std::vector<Monomial>> initial_module() const;

  /// Number of S-pairs discarded by each criterion in the last run.
  struct Stats {
    std::size_t pairs = 0, coprime = 0, chain = 0, reductions_to_zero = 0;
  };
  const Stats& stats() const { return stats_; }

 private:
  PolyRingPtr ring_;
  ModuleOrder order_;
  std::vector<SparseVec> basis_;
  std::vector<std::vector<std::size_t>> by_pos_;
  std::vector<std::size_t> minimal_;
  Stats stats_;
};

/// S-vector of two basis elements sharing a lead position.
SparseVec s_vector(const SparseVec& f, const SparseVec& g, const ModuleOrder& order, const PolyRing& ring);

/// Reduced Gröbner basis of a homogeneous polynomial list (descending leads).
std::vector<Polynomial> buchberger(const PolyRingPtr& ring, const std::vector<Polynomial>& gens);

/// Kernel of A^n -> A^r / span(background), e_i -> columns[i], over the
/// ambient polynomial ring. `source_twists` are the degrees of the e_i.
/// Computed by a POT elimination run on the augmented vectors (col_i, e_i).
std::vector<VectorPoly> syzygies_over_ambient(const PolyRingPtr& ring, const Twists& target_twists,
                                              const std::vector<VectorPoly>& columns,
                                              const Twists& source_twists,
                                              const std::vector<VectorPoly>& background);

}  // namespace homkernel

#endif
