#ifndef HOMKERNEL_HOMOLOGY_HPP
#define HOMKERNEL_HOMOLOGY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "homkernel/fpmodules.hpp"

namespace homkernel {

/// F_0 <- F_1 <- ... <- F_L of graded free modules. differentials[i] holds
/// the columns of d_i : F_i -> F_{i-1} (differentials[0] is empty).
struct Complex {
  RingPtr ring;
  std::vector<Twists> spots;
  std::vector<std::vector<VectorPoly>> differentials;

  std::size_t length() const { return spots.empty() ? 0 : spots.size() - 1; }
  std::size_t rank(std::size_t i) const { return i < spots.size() ? spots[i].size() : 0; }
};

class BettiTable {
 public:
  void add(std::size_t i, std::int64_t degree, std::size_t count = 1) { entries_[{i, degree}] += count; }
  std::size_t at(std::size_t i, std::int64_t degree) const;
  std::size_t total(std::size_t i) const;
  std::size_t max_index() const { return bound_; }
  void set_bound(std::size_t l) { bound_ = l; }
  const std::map<std::pair<std::size_t, std::int64_t>, std::size_t>& entries() const { return entries_; }
  std::vector<std::size_t> totals() const;
  /// Macaulay layout: rows are degree minus index, columns homological indices.
  std::string to_text() const;

 private:
  std::map<std::pair<std::size_t, std::int64_t>, std::size_t> entries_;
  std::size_t bound_ = 0;
};

struct Resolution {
  PresentedModule module;
  Complex complex;
  BettiTable betti;
  /// Set when a zero kernel appeared within the bound.
  std::optional<std::size_t> pd;
  /// d_i ∘ d_{i+1} = 0 and ker d_i = im d_{i+1} at every interior spot.
  bool certified = false;
};

/// Minimal free resolution truncated at F_L.
Resolution resolve(const PresentedModule& m, std::size_t l);
/// Syz_i(M) = coker(d_{i+1}) on F_i; Syz_0(M) is the minimal presentation of M.
PresentedModule syzygy(const PresentedModule& m, std::size_t i);
PresentedModule syzygy(const Resolution& r, std::size_t i);

Complex koszul_complex(const RingPtr& ring, const std::vector<Polynomial>& seq);
/// H_i(C ⊗ N).
PresentedModule tensor_homology(const Complex& c, const PresentedModule& n, std::size_t i);
/// H^i(Hom(C, N)).
PresentedModule hom_cohomology(const Complex& c, const PresentedModule& n, std::size_t i);
/// ker d_i / im d_{i+1}; IndexOutOfRange past the end.
PresentedModule homology_at(const Complex& c, std::size_t i);
bool check_complex(const Complex& c);

/// Koszul depth against the variables; ZeroModule for M = 0.
std::size_t kdepth(const PresentedModule& m);

PresentedModule tor(std::size_t i, const PresentedModule& m, const PresentedModule& n);
PresentedModule tor(std::size_t i, const Resolution& res_m, const PresentedModule& n);
PresentedModule ext(std::size_t i, const PresentedModule& m, const PresentedModule& n);

}  // namespace homkernel

#endif
