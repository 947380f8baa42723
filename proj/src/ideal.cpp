#include "homkernel/ideal.hpp"

#include "homkernel/error.hpp"

namespace homkernel {

namespace {

VectorPoly as_vec(const Polynomial& f) { return VectorPoly(std::vector<Polynomial>{f}); }

void check_member_ring(const RingPtr& ring, const Polynomial& f) {
  if (!(*f.ring() == *ring->ambient())) throw Error(ErrorKind::RingMismatch, "polynomial from another ring");
}

}  // namespace

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens) : ring_(std::move(ring)), gens_(std::move(gens)) {
  std::vector<VectorPoly> cols, bg;
  for (const auto& g : gens_) {
    check_member_ring(ring_, g);
    if (!g.is_homogeneous()) throw Error(ErrorKind::InhomogeneousInput, "ideal generator " + g.to_string());
    cols.push_back(as_vec(g));
  }
  for (const auto& j : ring_->quotient_gb()) bg.push_back(as_vec(j));
  engine_ = SubmoduleGB(ring_->ambient(), ModuleOrder(Twists{0}), cols, bg);
  for (const auto& v : engine_.basis()) gb_.push_back(v[0]);
}

std::vector<Polynomial> Ideal::gens_mod_quotient() const {
  std::vector<Polynomial> out;
  for (const auto& g : gens_) {
    Polynomial r = ring_->reduce(g);
    if (!r.is_zero()) out.push_back(std::move(r));
  }
  return out;
}

Polynomial Ideal::normal_form(const Polynomial& f) const {
  check_member_ring(ring_, f);
  return engine_.normal_form(as_vec(f))[0];
}

bool Ideal::is_unit() const { return gb_.size() == 1 && gb_[0].leading_term().mono.is_one(); }

std::vector<std::string> Ideal::gb_strings() const {
  std::vector<std::string> out;
  for (const auto& g : gb_) {
    Polynomial r = ring_->reduce(g);
    if (!r.is_zero()) out.push_back(r.to_string());
  }
  return out;
}

std::string Ideal::to_string() const {
  auto shown = gb_strings();
  if (shown.empty()) return "(0)";
  std::string out = "(";
  for (std::size_t i = 0; i < shown.size(); ++i) out += (i ? ", " : "") + shown[i];
  return out + ")";
}

Ideal maximal_ideal(const RingPtr& ring) { return Ideal(ring, ring->maximal_ideal_gens()); }
Ideal unit_ideal(const RingPtr& ring) { return Ideal(ring, {ring->one()}); }
Ideal zero_ideal(const RingPtr& ring) { return Ideal(ring, {}); }

Ideal ideal_sum(const Ideal& i, const Ideal& k) {
  require_same_ring(i.ring(), k.ring());
  std::vector<Polynomial> gens = i.gens();
  gens.insert(gens.end(), k.gens().begin(), k.gens().end());
  return Ideal(i.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& i, const Ideal& k) {
  require_same_ring(i.ring(), k.ring());
  std::vector<Polynomial> gens;
  for (const auto& f : i.gens_mod_quotient())
    for (const auto& g : k.gens_mod_quotient()) gens.push_back(i.ring()->reduce(f * g));
  return Ideal(i.ring(), std::move(gens));
}

Ideal ideal_power(const Ideal& i, int n) {
  if (n <= 0) return unit_ideal(i.ring());
  Ideal out = i;
  for (int e = 1; e < n; ++e) out = ideal_product(out, i);
  return out;
}

Ideal ideal_intersect(const Ideal& i, const Ideal& k) {
  require_same_ring(i.ring(), k.ring());
  const auto& ambient = i.ring()->ambient();
  std::vector<VectorPoly> bg;
  for (const auto& g : i.gb()) bg.push_back(VectorPoly(std::vector<Polynomial>{g, Polynomial(ambient)}));
  for (const auto& g : k.gb()) bg.push_back(VectorPoly(std::vector<Polynomial>{Polynomial(ambient), g}));
  VectorPoly col(std::vector<Polynomial>{i.ring()->one(), i.ring()->one()});
  auto syz = syzygies_over_ambient(ambient, Twists{0, 0}, {col}, Twists{0}, bg);
  std::vector<Polynomial> gens;
  for (const auto& v : syz) gens.push_back(v[0]);
  return Ideal(i.ring(), std::move(gens));
}

Ideal ideal_colon(const Ideal& i, const Polynomial& f) {
  check_member_ring(i.ring(), f);
  if (!f.is_homogeneous()) throw Error(ErrorKind::InhomogeneousInput, "colon by " + f.to_string());
  Polynomial r = i.normal_form(f);
  if (r.is_zero()) return unit_ideal(i.ring());
  std::vector<VectorPoly> bg;
  for (const auto& g : i.gb()) bg.push_back(as_vec(g));
  auto syz = syzygies_over_ambient(i.ring()->ambient(), Twists{0}, {as_vec(r)}, Twists{*r.homogeneity().degree},
                                   bg);
  std::vector<Polynomial> gens = i.gb();
  for (const auto& v : syz) gens.push_back(v[0]);
  return Ideal(i.ring(), std::move(gens));
}

Ideal ideal_colon(const Ideal& i, const Ideal& k) {
  require_same_ring(i.ring(), k.ring());
  auto gens = k.gens_mod_quotient();
  if (gens.empty()) throw Error(ErrorKind::ZeroDivisorIdeal, "colon by the zero ideal");
  Ideal out = ideal_colon(i, gens[0]);
  for (std::size_t g = 1; g < gens.size(); ++g) out = ideal_intersect(out, ideal_colon(i, gens[g]));
  return out;
}

bool ideal_equal(const Ideal& i, const Ideal& k) {
  require_same_ring(i.ring(), k.ring());
  return i.gb() == k.gb();
}

bool ideal_membership(const Polynomial& f, const Ideal& i) { return i.contains(f); }

}  // namespace homkernel
