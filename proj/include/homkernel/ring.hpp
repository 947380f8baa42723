#ifndef HOMKERNEL_RING_HPP
#define HOMKERNEL_RING_HPP

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "homkernel/groebner.hpp"

namespace homkernel {

/// R = A/J for a graded polynomial ring A and a homogeneous ideal J, with the
/// reduced Gröbner basis of J cached at construction.
class Ring {
 public:
  Ring(PolyRingPtr ambient, std::vector<Polynomial> quotient_gens);

  const PolyRingPtr& ambient() const { return ambient_; }
  const Field& field() const { return ambient_->field(); }
  std::size_t nvars() const { return ambient_->nvars(); }
  const std::vector<std::string>& names() const { return ambient_->names(); }
  const Weights& weights() const { return ambient_->weights(); }

  const std::vector<Polynomial>& quotient_gens() const { return quotient_gens_; }
  const std::vector<Polynomial>& quotient_gb() const { return quotient_gb_; }
  bool is_polynomial_ring() const { return quotient_gb_.empty(); }

  Polynomial zero() const { return Polynomial(ambient_); }
  Polynomial one() const { return Polynomial::constant(ambient_, field().one()); }
  Polynomial variable(std::size_t i) const { return Polynomial::variable(ambient_, i); }
  Polynomial constant(std::int64_t c) const { return Polynomial::constant(ambient_, field().from_int(c)); }
  Polynomial parse(std::string_view text) const { return parse_polynomial(ambient_, text); }

  /// Normal form modulo J.
  Polynomial reduce(const Polynomial& f) const;
  VectorPoly reduce(const VectorPoly& v) const;
  /// J·e_i for every slot of a free module of the given rank.
  std::vector<VectorPoly> quotient_background(std::size_t rank) const;
  /// Generators of the graded maximal ideal (the variables).
  std::vector<Polynomial> maximal_ideal_gens() const;

  std::string to_string() const;

  /// Same ambient ring and same J.
  bool operator==(const Ring& other) const;

 private:
  PolyRingPtr ambient_;
  std::vector<Polynomial> quotient_gens_;
  std::vector<Polynomial> quotient_gb_;
  SubmoduleGB quotient_engine_;
};

using RingPtr = std::shared_ptr<const Ring>;

/// Throws InhomogeneousInput naming the first offending generator.
RingPtr make_ring(const Field& field, std::vector<std::string> names, Weights weights,
                  const std::vector<std::string>& quotient_gens);
RingPtr make_ring(PolyRingPtr ambient, std::vector<Polynomial> quotient_gens);

/// Throws RingMismatch unless both rings agree.
void require_same_ring(const RingPtr& a, const RingPtr& b);

}  // namespace homkernel

#endif
