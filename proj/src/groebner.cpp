#include "homkernel/groebner.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <tuple>

#include "homkernel/error.hpp"

namespace homkernel {

VectorPoly VectorPoly::zero(const PolyRingPtr& ring, std::size_t rank) {
  return VectorPoly(std::vector<Polynomial>(rank, Polynomial(ring)));
}

VectorPoly VectorPoly::unit(const PolyRingPtr& ring, std::size_t rank, std::size_t i) {
  VectorPoly v = zero(ring, rank);
  v.comps_[i] = Polynomial::constant(ring, ring->field().one());
  return v;
}

bool VectorPoly::is_zero() const {
  return std::all_of(comps_.begin(), comps_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

std::optional<std::int64_t> VectorPoly::degree(std::span<const std::int64_t> twists) const {
  if (twists.size() != comps_.size())
    throw Error(ErrorKind::RankMismatch, "vector of rank " + std::to_string(comps_.size()) +
                                             " against " + std::to_string(twists.size()) + " twists");
  std::optional<std::int64_t> deg;
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    auto h = comps_[i].homogeneity();
    if (!h.homogeneous) throw Error(ErrorKind::InhomogeneousInput, "entry " + comps_[i].to_string());
    if (!h.degree) continue;
    std::int64_t d = *h.degree + twists[i];
    if (deg && *deg != d)
      throw Error(ErrorKind::InhomogeneousInput, "vector " + to_string() + " is not homogeneous for its twists");
    deg = d;
  }
  return deg;
}

VectorPoly operator+(const VectorPoly& a, const VectorPoly& b) {
  if (a.rank() != b.rank()) throw Error(ErrorKind::RankMismatch, "vector ranks differ");
  VectorPoly out(a);
  for (std::size_t i = 0; i < a.rank(); ++i) out.comps_[i] = a.comps_[i] + b.comps_[i];
  return out;
}

VectorPoly operator-(const VectorPoly& a, const VectorPoly& b) {
  if (a.rank() != b.rank()) throw Error(ErrorKind::RankMismatch, "vector ranks differ");
  VectorPoly out(a);
  for (std::size_t i = 0; i < a.rank(); ++i) out.comps_[i] = a.comps_[i] - b.comps_[i];
  return out;
}

VectorPoly operator*(const Polynomial& f, const VectorPoly& v) {
  VectorPoly out(v);
  for (auto& c : out.comps_) c = f * c;
  return out;
}

std::string VectorPoly::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    if (i) out += ", ";
    out += comps_[i].to_string();
  }
  return out + ")";
}

ModuleOrder::ModuleOrder(Twists twists) : twists_(std::move(twists)), priority_(twists_.size()) {
  std::vector<std::uint32_t> idx(twists_.size());
  std::iota(idx.begin(), idx.end(), 0u);
  std::stable_sort(idx.begin(), idx.end(), [&](auto a, auto b) { return twists_[a] < twists_[b]; });
  for (std::uint32_t r = 0; r < idx.size(); ++r) priority_[idx[r]] = r;
}

ModuleOrder::ModuleOrder(Twists twists, std::vector<std::uint32_t> priority)
    : twists_(std::move(twists)), priority_(std::move(priority)) {}

namespace {

bool term_greater(const ModTerm& a, const ModTerm& b, const ModuleOrder& order) {
  return order.compare(a.pos, a.mono, b.pos, b.mono) == std::strong_ordering::greater;
}

/// f - c * m * g over the tail of f starting at `from`.
SparseVec sub_multiple(const SparseVec& f, std::size_t from, const Scalar& c, const Monomial& m,
                       const SparseVec& g, const ModuleOrder& order) {
  SparseVec out;
  out.reserve(f.size() - from + g.size());
  std::size_t a = from, b = 0;
  while (a < f.size() || b < g.size()) {
    if (b == g.size()) {
      out.push_back(f[a++]);
      continue;
    }
    ModTerm gt{-(c * g[b].coeff), g[b].mono * m, g[b].pos};
    if (a == f.size()) {
      out.push_back(std::move(gt));
      ++b;
      continue;
    }
    auto cmp = order.compare(f[a].pos, f[a].mono, gt.pos, gt.mono);
    if (cmp == std::strong_ordering::greater) {
      out.push_back(f[a++]);
    } else if (cmp == std::strong_ordering::less) {
      out.push_back(std::move(gt));
      ++b;
    } else {
      Scalar s = f[a].coeff + gt.coeff;
      if (!s.is_zero()) out.push_back({s, f[a].mono, f[a].pos});
      ++a;
      ++b;
    }
  }
  return out;
}

void make_monic(SparseVec& v) {
  if (v.empty() || v.front().coeff.is_one()) return;
  Scalar inv = v.front().coeff.inverse();
  for (auto& t : v) t.coeff = t.coeff * inv;
}

using PositionIndex = std::vector<std::vector<std::size_t>>;

const SparseVec* find_reducer(const std::vector<SparseVec>& elems, const PositionIndex& by_pos, const ModTerm& t,
                              std::size_t skip) {
  for (std::size_t i : by_pos[t.pos]) {
    if (i == skip) continue;
    if (elems[i].front().mono.divides(t.mono)) return &elems[i];
  }
  return nullptr;
}

/// Full reduction, always rewriting the largest reducible term first.
SparseVec reduce_full(const std::vector<SparseVec>& elems, const PositionIndex& by_pos, const ModuleOrder& order,
                      SparseVec f, std::size_t skip = SIZE_MAX) {
  SparseVec result;
  std::size_t start = 0;
  while (start < f.size()) {
    const ModTerm& lt = f[start];
    const SparseVec* g = find_reducer(elems, by_pos, lt, skip);
    if (!g) {
      result.push_back(lt);
      ++start;
      continue;
    }
    Scalar c = lt.coeff / g->front().coeff;
    Monomial m = lt.mono.divided_by(g->front().mono);
    f = sub_multiple(f, start, c, m, *g, order);
    start = 0;
  }
  return result;
}

/// Basis with a per-position index for reducer lookup.
class Reducer {
 public:
  explicit Reducer(const ModuleOrder& order) : order_(order), by_pos_(order.positions()) {}

  const std::vector<SparseVec>& elements() const { return elems_; }
  const SparseVec& operator[](std::size_t i) const { return elems_[i]; }
  std::size_t size() const { return elems_.size(); }
  const std::vector<std::size_t>& at_position(std::uint32_t pos) const { return by_pos_[pos]; }

  std::size_t add(SparseVec v) {
    by_pos_[v.front().pos].push_back(elems_.size());
    elems_.push_back(std::move(v));
    return elems_.size() - 1;
  }

  SparseVec reduce(SparseVec f, std::size_t skip = SIZE_MAX) const {
    return reduce_full(elems_, by_pos_, order_, std::move(f), skip);
  }

 private:
  const ModuleOrder& order_;
  std::vector<SparseVec> elems_;
  PositionIndex by_pos_;
};

}  // namespace

SparseVec to_sparse(const VectorPoly& v, const ModuleOrder& order) {
  SparseVec out;
  for (std::uint32_t i = 0; i < v.rank(); ++i)
    for (const auto& t : v[i].terms()) out.push_back({t.coeff, t.mono, i});
  std::sort(out.begin(), out.end(), [&](const ModTerm& a, const ModTerm& b) { return term_greater(a, b, order); });
  return out;
}

VectorPoly to_dense(const SparseVec& v, const PolyRingPtr& ring, std::size_t rank) {
  std::vector<std::vector<Term>> slots(rank);
  for (const auto& t : v) slots[t.pos].push_back({t.coeff, t.mono});
  std::vector<Polynomial> comps;
  comps.reserve(rank);
  for (auto& s : slots) comps.push_back(Polynomial::from_terms(ring, std::move(s)));
  return VectorPoly(std::move(comps));
}

SparseVec s_vector(const SparseVec& f, const SparseVec& g, const ModuleOrder& order, const PolyRing& ring) {
  const Monomial& mf = f.front().mono;
  const Monomial& mg = g.front().mono;
  Monomial l = Monomial::lcm(mf, mg, ring.weights());
  SparseVec lhs;
  lhs.reserve(f.size());
  Monomial uf = l.divided_by(mf);
  Scalar cf = f.front().coeff.inverse();
  for (const auto& t : f) lhs.push_back({t.coeff * cf, t.mono * uf, t.pos});
  Scalar cg = g.front().coeff.inverse();
  return sub_multiple(lhs, 0, cg, l.divided_by(mg), g, order);
}

SubmoduleGB::SubmoduleGB(PolyRingPtr ring, ModuleOrder order, const std::vector<VectorPoly>& generators,
                         const std::vector<VectorPoly>& background)
    : ring_(std::move(ring)), order_(std::move(order)) {
  struct Input {
    SparseVec vec;
    std::int64_t degree;
    bool background;
    std::size_t index;
  };
  std::vector<Input> inputs;
  auto push = [&](const VectorPoly& v, bool bg, std::size_t idx) {
    if (v.rank() != order_.positions())
      throw Error(ErrorKind::RankMismatch, "generator rank " + std::to_string(v.rank()) + " in a module of rank " +
                                               std::to_string(order_.positions()));
    auto deg = v.degree(order_.twists());
    if (!deg) return;
    inputs.push_back({to_sparse(v, order_), *deg, bg, idx});
  };
  for (std::size_t i = 0; i < background.size(); ++i) push(background[i], true, i);
  for (std::size_t i = 0; i < generators.size(); ++i) push(generators[i], false, i);
  std::stable_sort(inputs.begin(), inputs.end(), [](const Input& a, const Input& b) {
    return std::tie(a.degree, b.background, a.index) < std::tie(b.degree, a.background, b.index);
  });

  Reducer basis(order_);
  std::vector<std::int64_t> degrees;
  using Pair = std::tuple<std::int64_t, std::size_t, std::size_t>;
  std::priority_queue<Pair, std::vector<Pair>, std::greater<>> queue;
  std::set<std::pair<std::size_t, std::size_t>> pending;
  const bool ideal_case = order_.positions() == 1;

  auto add = [&](SparseVec v) {
    make_monic(v);
    std::size_t j = basis.add(std::move(v));
    const SparseVec& h = basis[j];
    for (std::size_t i : basis.at_position(h.front().pos)) {
      if (i == j) continue;
      Monomial l = Monomial::lcm(basis[i].front().mono, h.front().mono, ring_->weights());
      queue.emplace(l.degree() + order_.twist(h.front().pos), i, j);
      pending.emplace(i, j);
    }
  };

  auto chain_skips = [&](std::size_t i, std::size_t j, const Monomial& l, std::uint32_t pos) {
    for (std::size_t k : basis.at_position(pos)) {
      if (k == i || k == j) continue;
      if (!basis[k].front().mono.divides(l)) continue;
      auto key = [](std::size_t a, std::size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
      if (!pending.count(key(i, k)) && !pending.count(key(j, k))) return true;
    }
    return false;
  };

  std::size_t next = 0;
  while (!queue.empty() || next < inputs.size()) {
    std::int64_t d = next < inputs.size() ? inputs[next].degree : INT64_MAX;
    if (!queue.empty()) d = std::min(d, std::get<0>(queue.top()));
    while (!queue.empty() && std::get<0>(queue.top()) == d) {
      auto [deg, i, j] = queue.top();
      queue.pop();
      pending.erase({i, j});
      ++stats_.pairs;
      const SparseVec& f = basis[i];
      const SparseVec& g = basis[j];
      if (ideal_case && f.front().mono.coprime(g.front().mono)) {
        ++stats_.coprime;
        continue;
      }
      Monomial l = Monomial::lcm(f.front().mono, g.front().mono, ring_->weights());
      if (chain_skips(i, j, l, f.front().pos)) {
        ++stats_.chain;
        continue;
      }
      SparseVec r = basis.reduce(s_vector(f, g, order_, *ring_));
      if (r.empty()) {
        ++stats_.reductions_to_zero;
        continue;
      }
      add(std::move(r));
    }
    while (next < inputs.size() && inputs[next].degree == d) {
      SparseVec r = basis.reduce(std::move(inputs[next].vec));
      if (!r.empty()) {
        if (!inputs[next].background) minimal_.push_back(inputs[next].index);
        add(std::move(r));
      }
      ++next;
    }
  }
  std::sort(minimal_.begin(), minimal_.end());

  // Reduce: drop redundant leads, then tail-reduce against the survivors.
  std::vector<std::size_t> keep;
  const auto& elems = basis.elements();
  for (std::size_t i = 0; i < elems.size(); ++i) {
    bool redundant = false;
    for (std::size_t k : basis.at_position(elems[i].front().pos)) {
      if (k == i) continue;
      const Monomial& mk = elems[k].front().mono;
      const Monomial& mi = elems[i].front().mono;
      if (mk.divides(mi) && (!(mk == mi) || k < i)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) keep.push_back(i);
  }
  Reducer minimal(order_);
  for (std::size_t i : keep) minimal.add(elems[i]);
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    SparseVec v = minimal[i];
    SparseVec tail(v.begin() + 1, v.end());
    SparseVec reduced = minimal.reduce(std::move(tail), i);
    reduced.insert(reduced.begin(), v.front());
    make_monic(reduced);
    basis_.push_back(std::move(reduced));
  }
  std::sort(basis_.begin(), basis_.end(),
            [&](const SparseVec& a, const SparseVec& b) { return term_greater(a.front(), b.front(), order_); });
  by_pos_.assign(order_.positions(), {});
  for (std::size_t i = 0; i < basis_.size(); ++i) by_pos_[basis_[i].front().pos].push_back(i);
}

std::vector<VectorPoly> SubmoduleGB::basis() const {
  std::vector<VectorPoly> out;
  out.reserve(basis_.size());
  for (const auto& v : basis_) out.push_back(to_dense(v, ring_, rank()));
  return out;
}

SparseVec SubmoduleGB::normal_form(SparseVec f) const {
  return reduce_full(basis_, by_pos_, order_, std::move(f));
}

VectorPoly SubmoduleGB::normal_form(const VectorPoly& f) const {
  if (f.rank() != rank()) throw Error(ErrorKind::RankMismatch, "normal form of a vector in the wrong ambient");
  return to_dense(normal_form(to_sparse(f, order_)), ring_, rank());
}

std::vector<std::vector<Monomial>> SubmoduleGB::initial_module() const {
  std::vector<std::vector<Monomial>> out(rank());
  for (const auto& v : basis_) out[v.front().pos].push_back(v.front().mono);
  return out;
}

std::vector<Polynomial> buchberger(const PolyRingPtr& ring, const std::vector<Polynomial>& gens) {
  std::vector<VectorPoly> vs;
  vs.reserve(gens.size());
  for (const auto& g : gens) {
    if (!g.is_homogeneous()) throw Error(ErrorKind::InhomogeneousInput, "generator " + g.to_string());
    vs.emplace_back(std::vector<Polynomial>{g});
  }
  SubmoduleGB gb(ring, ModuleOrder(Twists{0}), vs);
  std::vector<Polynomial> out;
  for (const auto& v : gb.basis()) out.push_back(v[0]);
  return out;
}

std::vector<VectorPoly> syzygies_over_ambient(const PolyRingPtr& ring, const Twists& target_twists,
                                              const std::vector<VectorPoly>& columns,
                                              const Twists& source_twists,
                                              const std::vector<VectorPoly>& background) {
  const std::size_t r = target_twists.size(), n = columns.size();
  if (source_twists.size() != n) throw Error(ErrorKind::RankMismatch, "one source twist per column is required");
  if (n == 0) return {};
  ModuleOrder target(target_twists);
  ModuleOrder tracking(source_twists);
  Twists twists = target_twists;
  twists.insert(twists.end(), source_twists.begin(), source_twists.end());
  std::vector<std::uint32_t> priority(r + n);
  for (std::uint32_t i = 0; i < r; ++i) priority[i] = target.priority(i);
  for (std::uint32_t i = 0; i < n; ++i) priority[r + i] = static_cast<std::uint32_t>(r) + tracking.priority(i);
  ModuleOrder order(twists, priority);

  auto extend = [&](const VectorPoly& v) {
    std::vector<Polynomial> comps = v.components();
    comps.resize(r + n, Polynomial(ring));
    return VectorPoly(std::move(comps));
  };
  std::vector<VectorPoly> gens;
  gens.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (columns[i].rank() != r) throw Error(ErrorKind::RankMismatch, "column rank differs from target rank");
    auto deg = columns[i].degree(target_twists);
    if (deg && *deg != source_twists[i])
      throw Error(ErrorKind::InhomogeneousInput, "column " + std::to_string(i) + " has degree " +
                                                     std::to_string(*deg) + " but source twist " +
                                                     std::to_string(source_twists[i]));
    VectorPoly g = extend(columns[i]);
    g[r + i] = Polynomial::constant(ring, ring->field().one());
    gens.push_back(std::move(g));
  }
  std::vector<VectorPoly> bg;
  bg.reserve(background.size());
  for (const auto& b : background) bg.push_back(extend(b));

  SubmoduleGB gb(ring, order, gens, bg);
  std::vector<VectorPoly> out;
  for (const auto& v : gb.sparse_basis()) {
    if (v.front().pos < r) continue;
    SparseVec shifted;
    shifted.reserve(v.size());
    for (const auto& t : v) shifted.push_back({t.coeff, t.mono, static_cast<std::uint32_t>(t.pos - r)});
    out.push_back(to_dense(shifted, ring, n));
  }
  return out;
}

}  // namespace homkernel
