#include "homkernel/fpmodules.hpp"

#include <algorithm>
#include <functional>
#include <mutex>

#include "homkernel/error.hpp"

namespace homkernel {

struct PresentedModule::Cache {
  std::once_flag minimal_once, gb_once;
  std::unique_ptr<PresentedModule> minimal;
  bool self_minimal = false;
  SubmoduleGB gb;
};

namespace {

VectorPoly place(const PolyRingPtr& ambient, std::size_t rank, std::size_t slot, const Polynomial& f) {
  VectorPoly v = VectorPoly::zero(ambient, rank);
  v[slot] = f;
  return v;
}

std::int64_t poly_degree(const Polynomial& f) {
  auto h = f.homogeneity();
  if (!h.homogeneous) throw Error(ErrorKind::InhomogeneousInput, "polynomial " + f.to_string());
  return h.degree.value_or(0);
}

PresentedModule compute_minimal(const PresentedModule& m) {
  const RingPtr& ring = m.ring();
  Twists twists = m.twists();
  std::vector<VectorPoly> cols;
  for (const auto& c : m.relations()) {
    VectorPoly r = ring->reduce(c);
    if (!r.is_zero()) cols.push_back(std::move(r));
  }
  for (;;) {
    std::optional<std::pair<std::size_t, std::size_t>> pivot;
    for (std::size_t i = 0; i < twists.size() && !pivot; ++i)
      for (std::size_t j = 0; j < cols.size(); ++j)
        if (!cols[j][i].constant_term().is_zero()) {
          pivot = {i, j};
          break;
        }
    if (!pivot) break;
    auto [i, j] = *pivot;
    const VectorPoly p = cols[j];
    Scalar inv = p[i].constant_term().inverse();
    std::vector<VectorPoly> next;
    for (std::size_t l = 0; l < cols.size(); ++l) {
      if (l == j) continue;
      VectorPoly c = cols[l];
      if (!c[i].is_zero()) c = c - c[i].scaled(inv) * p;
      std::vector<Polynomial> comps = c.components();
      comps.erase(comps.begin() + static_cast<std::ptrdiff_t>(i));
      VectorPoly r = ring->reduce(VectorPoly(std::move(comps)));
      if (!r.is_zero()) next.push_back(std::move(r));
    }
    twists.erase(twists.begin() + static_cast<std::ptrdiff_t>(i));
    cols = std::move(next);
  }
  if (!cols.empty()) {
    SubmoduleGB gb(ring->ambient(), ModuleOrder(twists), cols, ring->quotient_background(twists.size()));
    std::vector<VectorPoly> kept;
    for (std::size_t idx : gb.minimal_generators()) kept.push_back(cols[idx]);
    cols = std::move(kept);
  }
  return PresentedModule(ring, std::move(twists), std::move(cols));
}

/// Preimage in the source ambient of the target relations.
std::vector<VectorPoly> preimage_of_relations(const Twists& source_twists, const PresentedModule& target,
                                              const std::vector<VectorPoly>& columns) {
  if (columns.empty()) return {};
  const auto& gb = target.relation_gb();
  std::vector<VectorPoly> bg = gb.basis();
  return syzygies_over_ambient(target.ring()->ambient(), target.twists(), columns, source_twists, bg);
}

PresentedModule kernel_unchecked(const PresentedModule& source, const PresentedModule& target,
                                 const std::vector<VectorPoly>& columns) {
  auto k = preimage_of_relations(source.twists(), target, columns);
  return subquotient(source.ring(), source.twists(), k, source.relations());
}

/// Block sum of copies of the relations of n, one block per outer index.
std::vector<VectorPoly> block_relations(const PresentedModule& n, std::size_t blocks) {
  const auto& ambient = n.ring()->ambient();
  const std::size_t rn = n.rank();
  std::vector<VectorPoly> out;
  for (std::size_t j = 0; j < blocks; ++j)
    for (const auto& d : n.relations()) {
      VectorPoly v = VectorPoly::zero(ambient, blocks * rn);
      for (std::size_t k = 0; k < rn; ++k) v[j * rn + k] = d[k];
      out.push_back(std::move(v));
    }
  return out;
}

bool slot_has_pure_powers(const std::vector<Monomial>& leads, std::size_t nvars, std::vector<std::int32_t>& bounds) {
  bounds.assign(nvars, -1);
  for (const auto& m : leads) {
    std::size_t support = 0, var = 0;
    for (std::size_t v = 0; v < nvars; ++v)
      if (m[v] > 0) {
        ++support;
        var = v;
      }
    if (support == 0) {
      bounds.assign(nvars, 0);
      return true;
    }
    if (support == 1 && (bounds[var] < 0 || m[var] < bounds[var])) bounds[var] = m[var];
  }
  return std::all_of(bounds.begin(), bounds.end(), [](std::int32_t b) { return b >= 0; });
}

bool is_standard(const Monomial::Exponents& e, const std::vector<Monomial>& leads) {
  for (const auto& m : leads) {
    bool divides = true;
    for (std::size_t v = 0; v < e.size() && divides; ++v) divides = m[v] <= e[v];
    if (divides) return false;
  }
  return true;
}

/// Calls visit on every exponent vector of weighted degree d.
void for_each_monomial(const Weights& w, std::int64_t d, const std::function<void(const Monomial::Exponents&)>& visit) {
  Monomial::Exponents e(w.size(), 0);
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t v, std::int64_t left) {
    if (v + 1 == w.size()) {
      if (left % w[v] == 0) {
        e[v] = static_cast<std::int32_t>(left / w[v]);
        visit(e);
      }
      return;
    }
    for (std::int64_t k = 0; k * w[v] <= left; ++k) {
      e[v] = static_cast<std::int32_t>(k);
      rec(v + 1, left - k * w[v]);
    }
    e[v] = 0;
  };
  if (d < 0) return;
  if (w.empty()) {
    if (d == 0) visit(e);
    return;
  }
  rec(0, d);
}

}  // namespace

PresentedModule::PresentedModule(RingPtr ring, Twists twists, std::vector<VectorPoly> relations)
    : ring_(std::move(ring)), twists_(std::move(twists)), relations_(std::move(relations)),
      cache_(std::make_shared<Cache>()) {
  for (std::size_t c = 0; c < relations_.size(); ++c) {
    const auto& col = relations_[c];
    if (col.rank() != twists_.size())
      throw Error(ErrorKind::RankMismatch, "relation " + std::to_string(c + 1) + " has " +
                                               std::to_string(col.rank()) + " entries for " +
                                               std::to_string(twists_.size()) + " generators");
    for (const auto& e : col.components())
      if (!(*e.ring() == *ring_->ambient())) throw Error(ErrorKind::RingMismatch, "relation entry from another ring");
    col.degree(twists_);
  }
}

Twists PresentedModule::relation_degrees() const {
  Twists out;
  for (const auto& c : relations_) out.push_back(c.degree(twists_).value_or(0));
  return out;
}

const PresentedModule& PresentedModule::minimal() const {
  std::call_once(cache_->minimal_once, [this] {
    auto m = std::make_unique<PresentedModule>(compute_minimal(*this));
    std::call_once(m->cache_->minimal_once, [&] { m->cache_->self_minimal = true; });
    cache_->minimal = std::move(m);
  });
  if (cache_->self_minimal) return *this;
  return *cache_->minimal;
}

const SubmoduleGB& PresentedModule::relation_gb() const {
  std::call_once(cache_->gb_once, [this] {
    cache_->gb = SubmoduleGB(ring_->ambient(), ModuleOrder(twists_), relations_, ring_->quotient_background(rank()));
  });
  return cache_->gb;
}

std::vector<VectorPoly> PresentedModule::relation_span() const {
  std::vector<VectorPoly> out = relations_;
  auto bg = ring_->quotient_background(rank());
  out.insert(out.end(), bg.begin(), bg.end());
  return out;
}

bool PresentedModule::is_minimal() const {
  for (const auto& c : relations_)
    for (const auto& e : c.components())
      if (!ring_->reduce(e).constant_term().is_zero()) return false;
  return true;
}

PresentedModule make_coker(const RingPtr& ring, Twists twists, std::vector<VectorPoly> relations) {
  return PresentedModule(ring, std::move(twists), std::move(relations));
}

PresentedModule free_module(const RingPtr& ring, Twists twists) { return PresentedModule(ring, std::move(twists), {}); }

PresentedModule cyclic_module(const Ideal& i) {
  const auto& ring = i.ring();
  std::vector<VectorPoly> rels;
  for (const auto& g : i.gens_mod_quotient()) rels.push_back(VectorPoly(std::vector<Polynomial>{g}));
  return PresentedModule(ring, Twists{0}, std::move(rels));
}

PresentedModule zero_module(const RingPtr& ring) { return PresentedModule(ring, {}, {}); }

PresentedModule residue_field(const RingPtr& ring) { return cyclic_module(maximal_ideal(ring)); }

PresentedModule minimal_presentation(const PresentedModule& m) { return m.minimal(); }

PresentedModule subquotient(const RingPtr& ring, const Twists& twists, const std::vector<VectorPoly>& gens,
                            const std::vector<VectorPoly>& rels) {
  const auto& ambient = ring->ambient();
  std::vector<VectorPoly> bg = rels;
  auto jbg = ring->quotient_background(twists.size());
  bg.insert(bg.end(), jbg.begin(), jbg.end());
  SubmoduleGB gb(ambient, ModuleOrder(twists), gens, bg);
  std::vector<VectorPoly> kept;
  Twists degrees;
  for (std::size_t idx : gb.minimal_generators()) {
    kept.push_back(ring->reduce(gens[idx]));
    degrees.push_back(*gens[idx].degree(twists));
  }
  if (kept.empty()) return zero_module(ring);
  // Relations among the kept generators modulo rels + J, computed against a basis of that span.
  std::vector<VectorPoly> span_basis = SubmoduleGB(ambient, ModuleOrder(twists), bg).basis();
  auto syz = syzygies_over_ambient(ambient, twists, kept, degrees, span_basis);
  std::vector<VectorPoly> relations;
  for (auto& s : syz) {
    VectorPoly r = ring->reduce(s);
    if (!r.is_zero()) relations.push_back(std::move(r));
  }
  return PresentedModule(ring, std::move(degrees), std::move(relations)).minimal();
}

ModuleMap make_map(PresentedModule source, PresentedModule target, std::vector<VectorPoly> columns) {
  require_same_ring(source.ring(), target.ring());
  if (columns.size() != source.rank())
    throw Error(ErrorKind::RankMismatch, "map needs one column per source generator");
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].rank() != target.rank()) throw Error(ErrorKind::RankMismatch, "map column of the wrong rank");
    auto d = columns[j].degree(target.twists());
    if (d && *d != source.twists()[j])
      throw Error(ErrorKind::InhomogeneousInput, "map column " + std::to_string(j + 1) + " is not of degree zero");
  }
  const auto& ambient = source.ring()->ambient();
  for (const auto& r : source.relations()) {
    VectorPoly img = VectorPoly::zero(ambient, target.rank());
    for (std::size_t j = 0; j < columns.size(); ++j) img = img + r[j] * columns[j];
    if (!target.relation_gb().contains(img))
      throw Error(ErrorKind::TypeMismatch, "map does not send the source relations into the target relations");
  }
  return ModuleMap{std::move(source), std::move(target), std::move(columns)};
}

PresentedModule kernel_of_map(const ModuleMap& f) { return kernel_unchecked(f.source, f.target, f.columns); }

PresentedModule image_of_map(const ModuleMap& f) {
  return subquotient(f.target.ring(), f.target.twists(), f.columns, f.target.relations());
}

PresentedModule cokernel_of_map(const ModuleMap& f) {
  std::vector<VectorPoly> rels = f.target.relations();
  for (const auto& c : f.columns)
    if (!c.is_zero()) rels.push_back(c);
  return PresentedModule(f.target.ring(), f.target.twists(), std::move(rels));
}

FreeInfo is_free(const PresentedModule& m) {
  const auto& mm = m.minimal();
  return {mm.relations().empty(), mm.rank(), mm.twists()};
}

PresentedModule direct_sum(const PresentedModule& m, const PresentedModule& n) {
  require_same_ring(m.ring(), n.ring());
  const auto& ambient = m.ring()->ambient();
  const std::size_t r = m.rank() + n.rank();
  Twists twists = m.twists();
  twists.insert(twists.end(), n.twists().begin(), n.twists().end());
  std::vector<VectorPoly> rels;
  for (const auto& c : m.relations()) {
    VectorPoly v = VectorPoly::zero(ambient, r);
    for (std::size_t i = 0; i < m.rank(); ++i) v[i] = c[i];
    rels.push_back(std::move(v));
  }
  for (const auto& c : n.relations()) {
    VectorPoly v = VectorPoly::zero(ambient, r);
    for (std::size_t i = 0; i < n.rank(); ++i) v[m.rank() + i] = c[i];
    rels.push_back(std::move(v));
  }
  return PresentedModule(m.ring(), std::move(twists), std::move(rels));
}

PresentedModule twist(const PresentedModule& m, std::int64_t d) {
  Twists twists = m.twists();
  for (auto& t : twists) t += d;
  return PresentedModule(m.ring(), std::move(twists), m.relations());
}

PresentedModule tensor(const PresentedModule& m, const PresentedModule& n) {
  require_same_ring(m.ring(), n.ring());
  const auto& mm = m.minimal();
  const auto& nm = n.minimal();
  const auto& ambient = m.ring()->ambient();
  const std::size_t rm = mm.rank(), rn = nm.rank(), r = rm * rn;
  Twists twists;
  for (std::size_t j = 0; j < rm; ++j)
    for (std::size_t k = 0; k < rn; ++k) twists.push_back(mm.twists()[j] + nm.twists()[k]);
  std::vector<VectorPoly> rels;
  for (const auto& c : mm.relations())
    for (std::size_t k = 0; k < rn; ++k) {
      VectorPoly v = VectorPoly::zero(ambient, r);
      for (std::size_t j = 0; j < rm; ++j) v[j * rn + k] = c[j];
      rels.push_back(std::move(v));
    }
  auto blocks = block_relations(nm, rm);
  rels.insert(rels.end(), blocks.begin(), blocks.end());
  return PresentedModule(m.ring(), std::move(twists), std::move(rels));
}

PresentedModule hom_module(const PresentedModule& m, const PresentedModule& n) {
  require_same_ring(m.ring(), n.ring());
  const auto& mm = m.minimal();
  const auto& nm = n.minimal();
  const auto& ambient = m.ring()->ambient();
  const std::size_t rm = mm.rank(), rn = nm.rank(), cm = mm.relations().size();
  Twists src_twists, tgt_twists;
  const Twists col_degrees = mm.relation_degrees();
  for (std::size_t j = 0; j < rm; ++j)
    for (std::size_t k = 0; k < rn; ++k) src_twists.push_back(nm.twists()[k] - mm.twists()[j]);
  for (std::size_t c = 0; c < cm; ++c)
    for (std::size_t k = 0; k < rn; ++k) tgt_twists.push_back(nm.twists()[k] - col_degrees[c]);
  PresentedModule source(m.ring(), src_twists, block_relations(nm, rm));
  if (cm == 0) return source;
  PresentedModule target(m.ring(), tgt_twists, block_relations(nm, cm));
  std::vector<VectorPoly> cols;
  for (std::size_t j = 0; j < rm; ++j)
    for (std::size_t k = 0; k < rn; ++k) {
      VectorPoly v = VectorPoly::zero(ambient, cm * rn);
      for (std::size_t c = 0; c < cm; ++c) v[c * rn + k] = mm.relations()[c][j];
      cols.push_back(std::move(v));
    }
  return kernel_unchecked(source, target, cols);
}

PresentedModule transpose(const PresentedModule& m) {
  const auto& mm = m.minimal();
  const auto& ambient = m.ring()->ambient();
  const std::size_t cm = mm.relations().size();
  Twists twists;
  for (auto d : mm.relation_degrees()) twists.push_back(-d);
  std::vector<VectorPoly> rels;
  for (std::size_t j = 0; j < mm.rank(); ++j) {
    VectorPoly v = VectorPoly::zero(ambient, cm);
    for (std::size_t c = 0; c < cm; ++c) v[c] = mm.relations()[c][j];
    if (!v.is_zero()) rels.push_back(std::move(v));
  }
  return PresentedModule(m.ring(), std::move(twists), std::move(rels));
}

PresentedModule quotient_by_ideal(const PresentedModule& m, const std::vector<Polynomial>& ideal_gens) {
  std::vector<VectorPoly> rels = m.relations();
  const auto& ambient = m.ring()->ambient();
  for (std::size_t i = 0; i < m.rank(); ++i)
    for (const auto& g : ideal_gens) {
      poly_degree(g);
      Polynomial r = m.ring()->reduce(g);
      if (!r.is_zero()) rels.push_back(place(ambient, m.rank(), i, r));
    }
  return PresentedModule(m.ring(), m.twists(), std::move(rels));
}

Length length(const PresentedModule& m) {
  const auto& mm = m.minimal();
  const auto inits = mm.relation_gb().initial_module();
  const std::size_t n = m.ring()->nvars();
  std::int64_t total = 0;
  for (const auto& leads : inits) {
    std::vector<std::int32_t> bounds;
    if (!slot_has_pure_powers(leads, n, bounds)) return std::nullopt;
    if (std::any_of(bounds.begin(), bounds.end(), [](std::int32_t b) { return b == 0; })) continue;
    Monomial::Exponents e(n, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t v) {
      if (v == n) {
        if (is_standard(e, leads)) ++total;
        return;
      }
      for (std::int32_t k = 0; k < bounds[v]; ++k) {
        e[v] = k;
        rec(v + 1);
      }
      e[v] = 0;
    };
    rec(0);
  }
  return total;
}

std::vector<std::int64_t> hilbert_function(const PresentedModule& m, std::int64_t lo, std::int64_t hi) {
  const auto& mm = m.minimal();
  const auto inits = mm.relation_gb().initial_module();
  std::vector<std::int64_t> out;
  for (std::int64_t d = lo; d <= hi; ++d) {
    std::int64_t count = 0;
    for (std::size_t i = 0; i < mm.rank(); ++i)
      for_each_monomial(m.ring()->weights(), d - mm.twists()[i], [&](const Monomial::Exponents& e) {
        if (is_standard(e, inits[i])) ++count;
      });
    out.push_back(count);
  }
  return out;
}

Ideal annihilator(const PresentedModule& m) {
  const auto& mm = m.minimal();
  const auto& ring = m.ring();
  if (mm.rank() == 0) return unit_ideal(ring);
  std::vector<VectorPoly> span = mm.relation_gb().basis();
  std::optional<Ideal> out;
  for (std::size_t j = 0; j < mm.rank(); ++j) {
    VectorPoly e = VectorPoly::unit(ring->ambient(), mm.rank(), j);
    auto syz = syzygies_over_ambient(ring->ambient(), mm.twists(), {e}, Twists{mm.twists()[j]}, span);
    std::vector<Polynomial> gens;
    for (const auto& s : syz) gens.push_back(s[0]);
    Ideal colon(ring, std::move(gens));
    out = out ? ideal_intersect(*out, colon) : colon;
  }
  return *out;
}

PresentedModule socle(const PresentedModule& m) {
  const auto& mm = m.minimal();
  const auto& ring = m.ring();
  if (mm.rank() == 0) return zero_module(ring);
  const auto& ambient = ring->ambient();
  const std::size_t r = mm.rank(), n = ring->nvars();
  Twists tgt_twists;
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t j = 0; j < r; ++j) tgt_twists.push_back(mm.twists()[j] - ring->weights()[v]);
  PresentedModule target(ring, tgt_twists, block_relations(mm, n));
  std::vector<VectorPoly> cols;
  for (std::size_t j = 0; j < r; ++j) {
    VectorPoly c = VectorPoly::zero(ambient, n * r);
    for (std::size_t v = 0; v < n; ++v) c[v * r + j] = ring->variable(v);
    cols.push_back(std::move(c));
  }
  return kernel_unchecked(mm, target, cols);
}

bool depth_zero_test(const PresentedModule& m) {
  if (m.is_zero()) throw Error(ErrorKind::ZeroModule, "depth of the zero module is undefined");
  return !socle(m).is_zero();
}

PresentedModule colon_in_module(const PresentedModule& n, const Polynomial& f) {
  const std::int64_t d = poly_degree(f);
  const auto& nm = n.minimal();
  const auto& ring = n.ring();
  Polynomial g = ring->reduce(f);
  if (g.is_zero()) return nm;
  Twists tgt_twists = nm.twists();
  for (auto& t : tgt_twists) t -= d;
  PresentedModule target(ring, tgt_twists, nm.relations());
  std::vector<VectorPoly> cols;
  for (std::size_t j = 0; j < nm.rank(); ++j) cols.push_back(place(ring->ambient(), nm.rank(), j, g));
  return kernel_unchecked(nm, target, cols);
}

std::string format_length(const Length& l) { return l ? std::to_string(*l) : "inf"; }

std::string describe(const PresentedModule& m) {
  std::string out = "coker twists (";
  for (std::size_t i = 0; i < m.rank(); ++i) out += (i ? "," : "") + std::to_string(m.twists()[i]);
  out += ") [";
  for (std::size_t c = 0; c < m.relations().size(); ++c) {
    out += c ? "; [" : "[";
    for (std::size_t i = 0; i < m.rank(); ++i) out += (i ? ", " : "") + m.relations()[c][i].to_string();
    out += "]";
  }
  return out + "]";
}

}  // namespace homkernel
