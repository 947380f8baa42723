#include "homkernel/homology.hpp"

#include <algorithm>
#include <sstream>

#include "homkernel/error.hpp"

namespace homkernel {

namespace {

std::vector<VectorPoly> reduce_all(const Ring& ring, const std::vector<VectorPoly>& vs) {
  std::vector<VectorPoly> out;
  for (const auto& v : vs) {
    VectorPoly r = ring.reduce(v);
    if (!r.is_zero()) out.push_back(std::move(r));
  }
  return out;
}

Twists column_degrees(const std::vector<VectorPoly>& cols, const Twists& twists) {
  Twists out;
  for (const auto& c : cols) out.push_back(*c.degree(twists));
  return out;
}

std::vector<VectorPoly> blocks_of(const PresentedModule& n, std::size_t blocks) {
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

/// ker(out) / (relations + im(in)) at a term P; out is absent at the end of the complex.
PresentedModule homology_of(const PresentedModule& p, const std::vector<VectorPoly>& in_cols,
                            const std::optional<PresentedModule>& target, const std::vector<VectorPoly>& out_cols) {
  const auto& ring = p.ring();
  if (p.rank() == 0) return zero_module(ring);
  std::vector<VectorPoly> kernel;
  if (!target || target->rank() == 0) {
    for (std::size_t j = 0; j < p.rank(); ++j) kernel.push_back(VectorPoly::unit(ring->ambient(), p.rank(), j));
  } else {
    kernel = syzygies_over_ambient(ring->ambient(), target->twists(), out_cols, p.twists(),
                                   target->relation_gb().basis());
  }
  std::vector<VectorPoly> rels = p.relations();
  for (const auto& c : in_cols)
    if (!c.is_zero()) rels.push_back(c);
  return subquotient(ring, p.twists(), kernel, rels);
}

/// F ⊗ N with generator (j, k) at index j * rank(N) + k.
PresentedModule tensor_spot(const Twists& f, const PresentedModule& n) {
  Twists twists;
  for (auto a : f)
    for (auto h : n.twists()) twists.push_back(a + h);
  return PresentedModule(n.ring(), std::move(twists), blocks_of(n, f.size()));
}

/// d ⊗ 1 : F ⊗ N -> F' ⊗ N.
std::vector<VectorPoly> tensor_columns(const std::vector<VectorPoly>& d, std::size_t target_rank,
                                       const PresentedModule& n) {
  const auto& ambient = n.ring()->ambient();
  const std::size_t rn = n.rank();
  std::vector<VectorPoly> out;
  for (const auto& col : d)
    for (std::size_t k = 0; k < rn; ++k) {
      VectorPoly v = VectorPoly::zero(ambient, target_rank * rn);
      for (std::size_t l = 0; l < target_rank; ++l) v[l * rn + k] = col[l];
      out.push_back(std::move(v));
    }
  return out;
}

/// Hom(F, N) with generator (j, k) at index j * rank(N) + k.
PresentedModule hom_spot(const Twists& f, const PresentedModule& n) {
  Twists twists;
  for (auto a : f)
    for (auto h : n.twists()) twists.push_back(h - a);
  return PresentedModule(n.ring(), std::move(twists), blocks_of(n, f.size()));
}

/// Hom(d, N) : Hom(F_prev, N) -> Hom(F, N) for d : F -> F_prev.
std::vector<VectorPoly> hom_columns(const std::vector<VectorPoly>& d, std::size_t prev_rank, const PresentedModule& n) {
  const auto& ambient = n.ring()->ambient();
  const std::size_t rn = n.rank(), rf = d.size();
  std::vector<VectorPoly> out;
  for (std::size_t l = 0; l < prev_rank; ++l)
    for (std::size_t k = 0; k < rn; ++k) {
      VectorPoly v = VectorPoly::zero(ambient, rf * rn);
      for (std::size_t j = 0; j < rf; ++j) v[j * rn + k] = d[j][l];
      out.push_back(std::move(v));
    }
  return out;
}

bool composes_to_zero(const Ring& ring, const std::vector<VectorPoly>& first, const std::vector<VectorPoly>& second,
                      std::size_t target_rank) {
  for (const auto& col : second) {
    VectorPoly img = VectorPoly::zero(ring.ambient(), target_rank);
    for (std::size_t l = 0; l < col.rank(); ++l)
      if (!col[l].is_zero()) img = img + col[l] * first[l];
    if (!ring.reduce(img).is_zero()) return false;
  }
  return true;
}

Resolution resolve_impl(const PresentedModule& m, std::size_t l, bool probe) {
  const auto& ring = m.ring();
  const auto& ambient = ring->ambient();
  Resolution res;
  res.module = m.minimal();
  Complex& c = res.complex;
  c.ring = ring;
  c.spots.assign(l + 1, Twists{});
  c.differentials.assign(l + 1, {});
  c.spots[0] = res.module.twists();
  res.certified = true;
  if (c.spots[0].empty()) {
    res.pd = 0;
  } else {
    auto d1 = reduce_all(*ring, res.module.relations());
    if (d1.empty()) {
      res.pd = 0;
    } else if (l >= 1) {
      c.spots[1] = column_degrees(d1, c.spots[0]);
      c.differentials[1] = std::move(d1);
    }
  }
  for (std::size_t i = 1; i <= l && !res.pd; ++i) {
    if (i == l && !probe) break;
    const auto& di = c.differentials[i];
    const Twists& fi = c.spots[i];
    auto kernel = syzygies_over_ambient(ambient, c.spots[i - 1], di, fi, ring->quotient_background(c.spots[i - 1].size()));
    auto bg_i = ring->quotient_background(fi.size());
    SubmoduleGB gb(ambient, ModuleOrder(fi), kernel, bg_i);
    std::vector<VectorPoly> next;
    for (std::size_t idx : gb.minimal_generators()) next.push_back(ring->reduce(kernel[idx]));
    if (next.empty()) {
      res.pd = i;
      break;
    }
    if (i + 1 > l) break;
    if (!composes_to_zero(*ring, di, next, c.spots[i - 1].size())) res.certified = false;
    SubmoduleGB image(ambient, ModuleOrder(fi), next, bg_i);
    for (const auto& k : kernel)
      if (!image.contains(k)) res.certified = false;
    c.spots[i + 1] = column_degrees(next, fi);
    c.differentials[i + 1] = std::move(next);
  }
  res.betti.set_bound(l);
  for (std::size_t i = 0; i <= l; ++i)
    for (auto t : c.spots[i]) res.betti.add(i, t);
  return res;
}

}  // namespace

std::size_t BettiTable::at(std::size_t i, std::int64_t degree) const {
  auto it = entries_.find({i, degree});
  return it == entries_.end() ? 0 : it->second;
}

std::size_t BettiTable::total(std::size_t i) const {
  std::size_t sum = 0;
  for (const auto& [key, count] : entries_)
    if (key.first == i) sum += count;
  return sum;
}

std::vector<std::size_t> BettiTable::totals() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i <= bound_; ++i) out.push_back(total(i));
  return out;
}

std::string BettiTable::to_text() const {
  std::vector<std::size_t> cols(bound_ + 1);
  for (std::size_t i = 0; i <= bound_; ++i) cols[i] = i;
  std::int64_t lo = 0, hi = 0;
  bool any = false;
  for (const auto& [key, count] : entries_) {
    std::int64_t row = key.second - static_cast<std::int64_t>(key.first);
    lo = any ? std::min(lo, row) : row;
    hi = any ? std::max(hi, row) : row;
    any = true;
  }
  std::vector<std::vector<std::string>> grid;
  std::vector<std::string> labels;
  auto cell = [](std::size_t v) { return v ? std::to_string(v) : std::string("."); };
  labels.push_back("");
  grid.emplace_back();
  for (auto i : cols) grid.back().push_back(std::to_string(i));
  labels.push_back("total:");
  grid.emplace_back();
  for (auto i : cols) grid.back().push_back(std::to_string(total(i)));
  if (any)
    for (std::int64_t r = lo; r <= hi; ++r) {
      labels.push_back(std::to_string(r) + ":");
      grid.emplace_back();
      for (auto i : cols) grid.back().push_back(cell(at(i, r + static_cast<std::int64_t>(i))));
    }
  std::size_t label_w = 0;
  for (const auto& s : labels) label_w = std::max(label_w, s.size());
  std::vector<std::size_t> widths(cols.size(), 0);
  for (const auto& row : grid)
    for (std::size_t i = 0; i < row.size(); ++i) widths[i] = std::max(widths[i], row[i].size());
  std::ostringstream out;
  for (std::size_t r = 0; r < grid.size(); ++r) {
    out << std::string(label_w - labels[r].size(), ' ') << labels[r];
    for (std::size_t i = 0; i < grid[r].size(); ++i)
      out << ' ' << std::string(widths[i] - grid[r][i].size(), ' ') << grid[r][i];
    out << '\n';
  }
  return out.str();
}

Resolution resolve(const PresentedModule& m, std::size_t l) { return resolve_impl(m, l, true); }

PresentedModule syzygy(const Resolution& r, std::size_t i) {
  const auto& c = r.complex;
  const auto& ring = c.ring;
  if (i == 0) return r.module;
  if (i >= c.spots.size() || c.spots[i].empty()) return zero_module(ring);
  std::vector<VectorPoly> rels;
  if (i + 1 < c.spots.size()) rels = c.differentials[i + 1];
  else if (!r.pd) throw Error(ErrorKind::IndexOutOfRange, "syzygy beyond the resolution bound");
  return PresentedModule(ring, c.spots[i], std::move(rels));
}

PresentedModule syzygy(const PresentedModule& m, std::size_t i) { return syzygy(resolve_impl(m, i + 1, false), i); }

Complex koszul_complex(const RingPtr& ring, const std::vector<Polynomial>& seq) {
  std::vector<std::int64_t> degs;
  for (const auto& f : seq) {
    auto h = f.homogeneity();
    if (!h.homogeneous) throw Error(ErrorKind::InhomogeneousInput, "Koszul entry " + f.to_string());
    degs.push_back(h.degree.value_or(0));
  }
  const std::size_t n = seq.size();
  std::vector<std::vector<std::vector<std::size_t>>> subsets(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
      std::vector<std::size_t> s;
      for (std::size_t v = 0; v < n; ++v)
        if (pick[v]) s.push_back(v);
      subsets[k].push_back(std::move(s));
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  Complex c;
  c.ring = ring;
  c.spots.resize(n + 1);
  c.differentials.resize(n + 1);
  for (std::size_t k = 0; k <= n; ++k)
    for (const auto& s : subsets[k]) {
      std::int64_t t = 0;
      for (auto v : s) t += degs[v];
      c.spots[k].push_back(t);
    }
  for (std::size_t k = 1; k <= n; ++k)
    for (const auto& s : subsets[k]) {
      VectorPoly col = VectorPoly::zero(ring->ambient(), subsets[k - 1].size());
      for (std::size_t pos = 0; pos < s.size(); ++pos) {
        std::vector<std::size_t> face = s;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(pos));
        auto it = std::find(subsets[k - 1].begin(), subsets[k - 1].end(), face);
        std::size_t idx = static_cast<std::size_t>(it - subsets[k - 1].begin());
        col[idx] = pos % 2 ? -seq[s[pos]] : seq[s[pos]];
      }
      c.differentials[k].push_back(std::move(col));
    }
  return c;
}

PresentedModule tensor_homology(const Complex& c, const PresentedModule& n, std::size_t i) {
  require_same_ring(c.ring, n.ring());
  const auto& nm = n.minimal();
  if (i >= c.spots.size()) return zero_module(n.ring());
  PresentedModule p = tensor_spot(c.spots[i], nm);
  std::vector<VectorPoly> in_cols;
  if (i + 1 < c.spots.size()) in_cols = tensor_columns(c.differentials[i + 1], c.spots[i].size(), nm);
  std::optional<PresentedModule> target;
  std::vector<VectorPoly> out_cols;
  if (i >= 1) {
    target = tensor_spot(c.spots[i - 1], nm);
    out_cols = tensor_columns(c.differentials[i], c.spots[i - 1].size(), nm);
  }
  return homology_of(p, in_cols, target, out_cols);
}

PresentedModule hom_cohomology(const Complex& c, const PresentedModule& n, std::size_t i) {
  require_same_ring(c.ring, n.ring());
  const auto& nm = n.minimal();
  if (i >= c.spots.size()) return zero_module(n.ring());
  PresentedModule p = hom_spot(c.spots[i], nm);
  std::vector<VectorPoly> in_cols;
  if (i >= 1) in_cols = hom_columns(c.differentials[i], c.spots[i - 1].size(), nm);
  std::optional<PresentedModule> target;
  std::vector<VectorPoly> out_cols;
  if (i + 1 < c.spots.size()) {
    target = hom_spot(c.spots[i + 1], nm);
    out_cols = hom_columns(c.differentials[i + 1], c.spots[i].size(), nm);
  }
  return homology_of(p, in_cols, target, out_cols);
}

PresentedModule homology_at(const Complex& c, std::size_t i) {
  if (i >= c.spots.size())
    throw Error(ErrorKind::IndexOutOfRange, "spot " + std::to_string(i) + " of a complex of length " +
                                                std::to_string(c.length()));
  return tensor_homology(c, free_module(c.ring, {0}), i);
}

bool check_complex(const Complex& c) {
  for (std::size_t i = 1; i + 1 < c.spots.size(); ++i)
    if (!composes_to_zero(*c.ring, c.differentials[i], c.differentials[i + 1], c.spots[i - 1].size())) return false;
  return true;
}

std::size_t kdepth(const PresentedModule& m) {
  if (m.is_zero()) throw Error(ErrorKind::ZeroModule, "Koszul depth of the zero module");
  const auto& ring = m.ring();
  Complex k = koszul_complex(ring, ring->maximal_ideal_gens());
  const std::size_t d = ring->nvars();
  for (std::size_t i = d + 1; i-- > 0;)
    if (!tensor_homology(k, m, i).is_zero()) return d - i;
  return d;
}

PresentedModule tor(std::size_t i, const Resolution& res_m, const PresentedModule& n) {
  return tensor_homology(res_m.complex, n, i);
}

PresentedModule tor(std::size_t i, const PresentedModule& m, const PresentedModule& n) {
  require_same_ring(m.ring(), n.ring());
  return tor(i, resolve_impl(m, i + 1, false), n);
}

PresentedModule ext(std::size_t i, const PresentedModule& m, const PresentedModule& n) {
  require_same_ring(m.ring(), n.ring());
  return hom_cohomology(resolve_impl(m, i + 1, false).complex, n, i);
}

}  // namespace homkernel
