#ifndef HOMKERNEL_TESTS_SUPPORT_HPP
#define HOMKERNEL_TESTS_SUPPORT_HPP

#include <map>
#include <random>
#include <string>
#include <vector>

#include "homkernel/fpmodules.hpp"
#include "homkernel/homology.hpp"
#include "homkernel/ideal.hpp"
#include "homkernel/predicates.hpp"

namespace hk_test {

using namespace homkernel;

inline Field gf() { return Field::prime(32003); }

inline RingPtr r0(Field f = gf()) { return make_ring(f, {"x", "y"}, {1, 1}, {"x^2", "x*y"}); }
inline RingPtr poly2(Field f = gf()) { return make_ring(f, {"x", "y"}, {1, 1}, {}); }
inline RingPtr poly3(Field f = gf()) { return make_ring(f, {"x", "y", "z"}, {1, 1, 1}, {}); }
inline RingPtr kx(int n, Field f = gf()) { return make_ring(f, {"x"}, {1}, {"x^" + std::to_string(n)}); }
inline RingPtr toric(Field f = gf()) {
  return make_ring(f, {"a", "b", "c", "d"}, {1, 1, 1, 1},
                   {"c*d - a*b", "c^3 - a^2*d", "d^3 - b^2*c", "b*c^2 - a*d^2"});
}

inline Polynomial P(const RingPtr& r, const std::string& s) { return r->parse(s); }

inline std::vector<Polynomial> Ps(const RingPtr& r, const std::vector<std::string>& s) {
  std::vector<Polynomial> out;
  for (const auto& t : s) out.push_back(r->parse(t));
  return out;
}

inline Ideal I(const RingPtr& r, const std::vector<std::string>& s) { return Ideal(r, Ps(r, s)); }
inline PresentedModule cyc(const RingPtr& r, const std::vector<std::string>& s) { return cyclic_module(I(r, s)); }

inline VectorPoly V(const RingPtr& r, const std::vector<std::string>& s) { return VectorPoly(Ps(r, s)); }

inline PresentedModule toric_B(const RingPtr& t) {
  return make_coker(t, {0, 1},
                    {V(t, {"c^2", "-a"}), V(t, {"d^2", "-b"}), V(t, {"a*d", "-c"}), V(t, {"b*c", "-d"})});
}

// ---- dense linear algebra over GF(p), independent of the Gröbner engine

inline std::vector<Monomial> monomials_of_degree(const PolyRing& ring, std::int64_t d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  Monomial::Exponents e(ring.nvars(), 0);
  auto rec = [&](auto&& self, std::size_t v, std::int64_t left) -> void {
    if (v + 1 == ring.nvars()) {
      if (left % ring.weights()[v] == 0) {
        e[v] = static_cast<std::int32_t>(left / ring.weights()[v]);
        out.push_back(ring.monomial(e));
      }
      return;
    }
    for (std::int64_t k = 0; k * ring.weights()[v] <= left; ++k) {
      e[v] = static_cast<std::int32_t>(k);
      self(self, v + 1, left - k * ring.weights()[v]);
    }
    e[v] = 0;
  };
  rec(rec, 0, d);
  return out;
}

/// Rank of a set of dense rows modulo p.
inline std::size_t rank_mod_p(std::vector<std::vector<std::uint64_t>> rows, std::uint64_t p) {
  std::size_t rank = 0;
  if (rows.empty()) return 0;
  std::size_t cols = rows[0].size();
  auto inv = [p](std::uint64_t a) {
    std::uint64_t r = 1, e = p - 2;
    while (e) {
      if (e & 1) r = r * a % p;
      a = a * a % p;
      e >>= 1;
    }
    return r;
  };
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    std::uint64_t s = inv(rows[rank][c]);
    for (auto& x : rows[rank]) x = x * s % p;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      std::uint64_t f = rows[r][c];
      for (std::size_t k = 0; k < cols; ++k) rows[r][k] = (rows[r][k] + p - f * rows[rank][k] % p) % p;
    }
    ++rank;
  }
  return rank;
}

/// Coordinates of the degree-d piece of A^r with the given twists.
struct DegreePiece {
  std::map<std::pair<std::size_t, Monomial>, std::size_t> index;
  std::size_t size() const { return index.size(); }
};

inline DegreePiece degree_piece(const PolyRing& ring, const Twists& twists, std::int64_t d) {
  DegreePiece dp;
  for (std::size_t s = 0; s < twists.size(); ++s)
    for (const auto& m : monomials_of_degree(ring, d - twists[s])) dp.index.emplace(std::make_pair(s, m), dp.index.size());
  return dp;
}

inline std::vector<std::uint64_t> coords(const DegreePiece& dp, const VectorPoly& v) {
  std::vector<std::uint64_t> row(dp.size(), 0);
  for (std::size_t s = 0; s < v.rank(); ++s)
    for (const auto& t : v[s].terms()) row.at(dp.index.at({s, t.mono})) = t.coeff.as_modp()->value;
  return row;
}

/// All monomial multiples of the generators landing in degree d.
inline std::vector<std::vector<std::uint64_t>> multiples(const PolyRingPtr& ring, const Twists& twists,
                                                         const std::vector<VectorPoly>& gens, std::int64_t d,
                                                         const DegreePiece& dp) {
  std::vector<std::vector<std::uint64_t>> rows;
  for (const auto& g : gens) {
    auto deg = g.degree(twists);
    if (!deg || *deg > d) continue;
    for (const auto& m : monomials_of_degree(*ring, d - *deg)) {
      VectorPoly mg = Polynomial::monomial(ring, m) * g;
      rows.push_back(coords(dp, mg));
    }
  }
  return rows;
}

/// dim_k (A^r / span(gens))_d by linear algebra.
inline std::int64_t oracle_quotient_dim(const PolyRingPtr& ring, const Twists& twists,
                                        const std::vector<VectorPoly>& gens, std::int64_t d) {
  auto dp = degree_piece(*ring, twists, d);
  auto rows = multiples(ring, twists, gens, d, dp);
  return static_cast<std::int64_t>(dp.size() - rank_mod_p(rows, ring->field().characteristic()));
}

/// Hilbert function of a presented module computed without Gröbner bases.
inline std::vector<std::int64_t> oracle_hilbert(const PresentedModule& m, std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> out;
  auto span = m.relation_span();
  for (std::int64_t d = lo; d <= hi; ++d)
    out.push_back(oracle_quotient_dim(m.ring()->ambient(), m.twists(), span, d));
  return out;
}

/// dim_k of the degree-d kernel of A^n -> A^r/U, e_i -> cols[i].
inline std::int64_t oracle_kernel_dim(const PolyRingPtr& ring, const Twists& target, const std::vector<VectorPoly>& cols,
                                      const Twists& source, const std::vector<VectorPoly>& background, std::int64_t d) {
  auto dt = degree_piece(*ring, target, d);
  auto ds = degree_piece(*ring, source, d);
  auto brows = multiples(ring, target, background, d, dt);
  std::size_t rb = rank_mod_p(brows, ring->field().characteristic());
  auto rows = brows;
  for (const auto& [key, idx] : ds.index) {
    VectorPoly img = Polynomial::monomial(ring, key.second) * cols[key.first];
    rows.push_back(coords(dt, img));
  }
  std::size_t r = rank_mod_p(rows, ring->field().characteristic());
  return static_cast<std::int64_t>(ds.size() - (r - rb));
}

/// dim_k of span(vecs)_d inside A^n.
inline std::int64_t oracle_span_dim(const PolyRingPtr& ring, const Twists& twists, const std::vector<VectorPoly>& vecs,
                                    std::int64_t d) {
  auto dp = degree_piece(*ring, twists, d);
  return static_cast<std::int64_t>(rank_mod_p(multiples(ring, twists, vecs, d, dp), ring->field().characteristic()));
}

inline std::int64_t sum(const std::vector<std::int64_t>& v) {
  std::int64_t s = 0;
  for (auto x : v) s += x;
  return s;
}

/// Small corpus of modules used by the property suites.
struct CorpusEntry {
  std::string label;
  PresentedModule module;
};

inline std::vector<CorpusEntry> module_corpus() {
  std::vector<CorpusEntry> out;
  auto R = r0();
  out.push_back({"R0", free_module(R, {0})});
  out.push_back({"R0/y", cyc(R, {"y"})});
  out.push_back({"R0/x", cyc(R, {"x"})});
  out.push_back({"R0/y2", cyc(R, {"y^2"})});
  out.push_back({"R0/m2", cyc(R, {"x^2", "x*y", "y^2"})});
  out.push_back({"k(R0)", residue_field(R)});
  auto A = poly2();
  out.push_back({"A", free_module(A, {0})});
  out.push_back({"A/x", cyc(A, {"x"})});
  out.push_back({"A/(x2,xy)", cyc(A, {"x^2", "x*y"})});
  out.push_back({"A/y", cyc(A, {"y"})});
  out.push_back({"A/(x,y2)", cyc(A, {"x", "y^2"})});
  out.push_back({"k(A)", residue_field(A)});
  out.push_back({"A/(x2,y2)", cyc(A, {"x^2", "y^2"})});
  auto X = kx(4);
  out.push_back({"kx4/x3", cyc(X, {"x^3"})});
  out.push_back({"kx4/x", cyc(X, {"x"})});
  return out;
}

}  // namespace hk_test

#endif
