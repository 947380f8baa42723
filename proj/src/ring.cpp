#include "homkernel/ring.hpp"

#include "homkernel/error.hpp"

namespace homkernel {

Ring::Ring(PolyRingPtr ambient, std::vector<Polynomial> quotient_gens)
    : ambient_(std::move(ambient)), quotient_gens_(std::move(quotient_gens)) {
  std::vector<VectorPoly> cols;
  for (const auto& g : quotient_gens_) {
    if (!(*g.ring() == *ambient_)) throw Error(ErrorKind::RingMismatch, "quotient generator from another ring");
    if (!g.is_homogeneous())
      throw Error(ErrorKind::InhomogeneousInput, "quotient generator " + g.to_string() + " is not homogeneous");
    cols.emplace_back(std::vector<Polynomial>{g});
  }
  quotient_engine_ = SubmoduleGB(ambient_, ModuleOrder(Twists{0}), cols);
  for (const auto& v : quotient_engine_.basis()) quotient_gb_.push_back(v[0]);
}

Polynomial Ring::reduce(const Polynomial& f) const {
  if (quotient_gb_.empty() || f.is_zero()) return f;
  return quotient_engine_.normal_form(VectorPoly(std::vector<Polynomial>{f}))[0];
}

VectorPoly Ring::reduce(const VectorPoly& v) const {
  std::vector<Polynomial> comps;
  comps.reserve(v.rank());
  for (const auto& c : v.components()) comps.push_back(reduce(c));
  return VectorPoly(std::move(comps));
}

std::vector<VectorPoly> Ring::quotient_background(std::size_t rank) const {
  std::vector<VectorPoly> out;
  out.reserve(rank * quotient_gb_.size());
  for (std::size_t i = 0; i < rank; ++i)
    for (const auto& g : quotient_gb_) {
      VectorPoly v = VectorPoly::zero(ambient_, rank);
      v[i] = g;
      out.push_back(std::move(v));
    }
  return out;
}

std::vector<Polynomial> Ring::maximal_ideal_gens() const {
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < nvars(); ++i) out.push_back(variable(i));
  return out;
}

std::string Ring::to_string() const {
  std::string out = field().name() + "[";
  for (std::size_t i = 0; i < nvars(); ++i) out += (i ? "," : "") + names()[i];
  out += "]";
  bool unit_weights = true;
  for (auto w : weights()) unit_weights = unit_weights && w == 1;
  if (!unit_weights) {
    out += " weights (";
    for (std::size_t i = 0; i < nvars(); ++i) out += (i ? "," : "") + std::to_string(weights()[i]);
    out += ")";
  }
  if (!quotient_gb_.empty()) {
    out += "/(";
    for (std::size_t i = 0; i < quotient_gb_.size(); ++i) out += (i ? ", " : "") + quotient_gb_[i].to_string();
    out += ")";
  }
  return out;
}

bool Ring::operator==(const Ring& other) const {
  return *ambient_ == *other.ambient_ && quotient_gb_ == other.quotient_gb_;
}

RingPtr make_ring(PolyRingPtr ambient, std::vector<Polynomial> quotient_gens) {
  return std::make_shared<const Ring>(std::move(ambient), std::move(quotient_gens));
}

RingPtr make_ring(const Field& field, std::vector<std::string> names, Weights weights,
                  const std::vector<std::string>& quotient_gens) {
  auto ambient = std::make_shared<const PolyRing>(field, std::move(names), std::move(weights));
  std::vector<Polynomial> gens;
  gens.reserve(quotient_gens.size());
  for (const auto& text : quotient_gens) gens.push_back(parse_polynomial(ambient, text));
  return make_ring(std::move(ambient), std::move(gens));
}

void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return;
  if (!a || !b || !(*a == *b)) throw Error(ErrorKind::RingMismatch, "operands live over different rings");
}

}  // namespace homkernel
