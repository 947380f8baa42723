#ifndef HOMKERNEL_IDEAL_HPP
#define HOMKERNEL_IDEAL_HPP

#include <string>
#include <vector>

#include "homkernel/ring.hpp"

namespace homkernel {

/// Homogeneous ideal of R = A/J, carried as its preimage in A.
class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr ring, std::vector<Polynomial> gens);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& gens() const { return gens_; }
  /// Reduced Gröbner basis of gens + J in A.
  const std::vector<Polynomial>& gb() const { return gb_; }
  /// Generators not already in J, reduced modulo J; a generating set of the image in R.
  std::vector<Polynomial> gens_mod_quotient() const;

  Polynomial normal_form(const Polynomial& f) const;
  bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }
  bool is_unit() const;
  /// Zero in R, i.e. contained in J.
  bool is_zero() const { return gb_ == ring_->quotient_gb(); }

  std::vector<std::string> gb_strings() const;
  std::string to_string() const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::vector<Polynomial> gb_;
  SubmoduleGB engine_;
};

Ideal maximal_ideal(const RingPtr& ring);
Ideal unit_ideal(const RingPtr& ring);
Ideal zero_ideal(const RingPtr& ring);

Ideal ideal_sum(const Ideal& i, const Ideal& k);
Ideal ideal_product(const Ideal& i, const Ideal& k);
Ideal ideal_power(const Ideal& i, int n);
/// I ∩ K from the kernel of R -> R/I ⊕ R/K, 1 -> (1, 1).
Ideal ideal_intersect(const Ideal& i, const Ideal& k);
/// (I : f) from the kernel of R -> R/I, 1 -> f.
Ideal ideal_colon(const Ideal& i, const Polynomial& f);
/// (I : K) = ∩ (I : g) over the generators g of K; ZeroDivisorIdeal when K = 0.
Ideal ideal_colon(const Ideal& i, const Ideal& k);
bool ideal_equal(const Ideal& i, const Ideal& k);
bool ideal_membership(const Polynomial& f, const Ideal& i);

}  // namespace homkernel

#endif
