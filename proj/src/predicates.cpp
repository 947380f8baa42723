#include "homkernel/predicates.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "homkernel/error.hpp"

namespace homkernel {

namespace {

TorEvidence evidence(std::size_t i, const PresentedModule& t) {
  const auto& m = t.minimal();
  return {i, m.rank(), m.relations().size(), length(m), m.rank() == 0};
}

/// Same module behind a fresh cache.
PresentedModule fresh(const PresentedModule& m) { return PresentedModule(m.ring(), m.twists(), m.relations()); }

void require_nonzero(const PresentedModule& m, const char* what) {
  if (m.is_zero()) throw Error(ErrorKind::ZeroModule, std::string(what) + " is the zero module");
}

std::string ideal_label(const std::vector<Polynomial>& gens) {
  std::string out = "R/(";
  for (std::size_t i = 0; i < gens.size(); ++i) out += (i ? ", " : "") + gens[i].to_string();
  return out + ")";
}

}  // namespace

BurchResult burch_test(const Ideal& i) {
  if (i.is_unit()) throw Error(ErrorKind::UnitIdeal, "Burch test needs a proper ideal");
  const Ideal m = maximal_ideal(i.ring());
  Ideal colon = ideal_colon(i, m);
  Ideal lhs = ideal_product(m, colon);
  Ideal rhs = ideal_product(i, m);
  bool burch = !ideal_equal(lhs, rhs);
  return {burch, std::move(colon), std::move(lhs), std::move(rhs)};
}

CandidateFamily CandidateFamily::cyclic(const RingPtr& ring, std::int64_t max_deg, std::size_t max_gens) {
  std::vector<Polynomial> monos;
  for (std::int64_t d = 1; d <= max_deg; ++d) {
    // Monomials of degree d by a bounded scan over exponent vectors.
    const auto& w = ring->weights();
    Monomial::Exponents e(ring->nvars(), 0);
    std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t v, std::int64_t left) {
      if (v == e.size()) {
        if (left == 0) {
          Polynomial p = Polynomial::monomial(ring->ambient(), ring->ambient()->monomial(e));
          if (!ring->reduce(p).is_zero()) monos.push_back(std::move(p));
        }
        return;
      }
      for (std::int64_t k = 0; k * w[v] <= left; ++k) {
        e[v] = static_cast<std::int32_t>(k);
        rec(v + 1, left - k * w[v]);
      }
      e[v] = 0;
    };
    rec(0, d);
  }
  auto greater = [](const Polynomial& a, const Polynomial& b) {
    return a.leading_term().mono > b.leading_term().mono;
  };
  std::sort(monos.begin(), monos.end(), greater);

  struct Candidate {
    std::int64_t total;
    std::vector<std::size_t> picks;
  };
  std::vector<Candidate> cands;
  std::vector<std::size_t> picks;
  std::function<void(std::size_t, std::int64_t)> choose = [&](std::size_t from, std::int64_t total) {
    if (!picks.empty()) cands.push_back({total, picks});
    if (picks.size() == max_gens) return;
    for (std::size_t k = from; k < monos.size(); ++k) {
      picks.push_back(k);
      choose(k + 1, total + monos[k].leading_term().mono.degree());
      picks.pop_back();
    }
  };
  choose(0, 0);
  // Indices follow descending monomial order, so comparing index lists compares generator lists.
  std::stable_sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
    if (a.total != b.total) return a.total < b.total;
    return a.picks < b.picks;
  });

  CandidateFamily fam;
  std::set<std::vector<std::string>> seen;
  for (const auto& c : cands) {
    std::vector<Polynomial> gens;
    for (auto k : c.picks) gens.push_back(monos[k]);
    Ideal ideal(ring, gens);
    if (!seen.insert(ideal.gb_strings()).second) continue;
    fam.members_.push_back({cyclic_module(ideal), ideal_label(gens), ideal});
  }
  fam.bounds_ = "cyclic monomial ideals, generator degree <= " + std::to_string(max_deg) + ", at most " +
                std::to_string(max_gens) + " generators, " + std::to_string(fam.members_.size()) + " members";
  return fam;
}

CandidateFamily CandidateFamily::explicit_list(std::vector<PresentedModule> modules, std::vector<std::string> labels) {
  CandidateFamily fam;
  for (std::size_t i = 0; i < modules.size(); ++i)
    fam.members_.push_back({modules[i], i < labels.size() ? labels[i] : "#" + std::to_string(i + 1), std::nullopt});
  fam.bounds_ = "explicit list of " + std::to_string(modules.size()) + " modules";
  return fam;
}

std::string to_string(WitnessKind k) {
  switch (k) {
    case WitnessKind::LichtenbaumViolation: return "lichtenbaum-violation";
    case WitnessKind::QuasiViolation: return "quasi-violation";
    case WitnessKind::TorrigidViolation: return "torrigid-violation";
    case WitnessKind::Exhausted: return "exhausted";
  }
  return "?";
}

namespace {

/// Shared scan for the Lichtenbaum-type falsifiers: the first non-free member
/// with Tor_1 = ... = Tor_depth = 0.
Witness falsify_vanishing(const PresentedModule& l, const CandidateFamily& fam, std::size_t depth, WitnessKind kind) {
  require_nonzero(l, "the tested module");
  Resolution res = resolve(l, depth + 1);
  Witness w;
  w.bounds = fam.bounds();
  const auto& members = fam.members();
  for (std::size_t idx = 0; idx < members.size(); ++idx) {
    const auto& f = members[idx].module;
    std::vector<TorEvidence> cert;
    bool vanish = true;
    for (std::size_t i = 1; i <= depth && vanish; ++i) {
      cert.push_back(evidence(i, tor(i, res, f)));
      vanish = cert.back().zero;
    }
    if (!vanish || is_free(f).free) continue;
    w.kind = kind;
    w.member = idx;
    w.label = members[idx].label;
    w.certificate = std::move(cert);
    bool replay = !is_free(fresh(f)).free;
    for (std::size_t i = 1; i <= depth && replay; ++i) replay = tor(i, fresh(l), fresh(f)).is_zero();
    w.replayed = replay;
    return w;
  }
  return w;
}

}  // namespace

Witness falsify_lichtenbaum(const PresentedModule& l, const CandidateFamily& fam) {
  return falsify_vanishing(l, fam, 1, WitnessKind::LichtenbaumViolation);
}

Witness falsify_quasi_lichtenbaum(const PresentedModule& l, const CandidateFamily& fam) {
  return falsify_vanishing(l, fam, 2, WitnessKind::QuasiViolation);
}

Witness falsify_torrigid(const PresentedModule& t, const CandidateFamily& fam, std::size_t i_max) {
  require_nonzero(t, "the tested module");
  if (i_max < 1) throw Error(ErrorKind::IndexOutOfRange, "imax must be at least 1");
  Resolution res = resolve(t, i_max + 1);
  Witness w;
  w.bounds = fam.bounds() + ", Tor indices 1.." + std::to_string(i_max);
  const auto& members = fam.members();
  for (std::size_t idx = 0; idx < members.size(); ++idx) {
    const auto& m = members[idx].module;
    std::vector<TorEvidence> cert;
    for (std::size_t i = 1; i <= i_max; ++i) cert.push_back(evidence(i, tor(i, res, m)));
    for (std::size_t i = 1; i < i_max; ++i) {
      if (!cert[i - 1].zero || cert[i].zero) continue;
      w.kind = WitnessKind::TorrigidViolation;
      w.member = idx;
      w.label = members[idx].label;
      w.index = i;
      w.certificate = {cert[i - 1], cert[i]};
      w.replayed = tor(i, fresh(t), fresh(m)).is_zero() && !tor(i + 1, fresh(t), fresh(m)).is_zero();
      return w;
    }
  }
  return w;
}

bool ArtinReesReport::pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.second; });
}

ArtinReesReport check_artin_rees_qs(const PresentedModule& m, const std::vector<Polynomial>& seq, int n_max) {
  const auto& ring = m.ring();
  PresentedModule q = m;
  for (std::size_t t = 0; t < seq.size(); ++t) {
    PresentedModule colon = colon_in_module(q, seq[t]);
    if (!colon.is_zero())
      throw Error(ErrorKind::NotRegularSequence, "element " + std::to_string(t + 1) + " (" + seq[t].to_string() +
                                                     ") is a zero divisor on the quotient; (0 :_Q f) has " +
                                                     std::to_string(colon.beta0()) + " generators");
    q = quotient_by_ideal(q, {seq[t]});
  }
  if (q.is_zero()) throw Error(ErrorKind::NotRegularSequence, "M/(x)M is zero");
  Resolution res = resolve(m, 2);
  Ideal i(ring, seq);
  ArtinReesReport report;
  for (int n = 1; n <= n_max; ++n)
    report.rows.push_back({n, tor(1, res, cyclic_module(ideal_power(i, n))).is_zero()});
  return report;
}

std::vector<Ideal> ass_monomial(const Ideal& i) {
  const auto& ring = i.ring();
  if (!ring->is_polynomial_ring())
    throw Error(ErrorKind::NotMonomial, "monomial associated primes are computed over a polynomial ring");
  std::vector<Monomial> gens;
  for (const auto& g : i.gb()) {
    if (!g.is_monomial()) throw Error(ErrorKind::NotMonomial, "generator " + g.to_string() + " is not a monomial");
    gens.push_back(g.leading_term().mono);
  }
  if (i.is_unit()) throw Error(ErrorKind::UnitIdeal, "associated primes of the unit ideal");
  const std::size_t n = ring->nvars();
  Monomial::Exponents top(n, 0);
  for (const auto& g : gens)
    for (std::size_t v = 0; v < n; ++v) top[v] = std::max(top[v], g[v]);

  std::set<std::vector<std::size_t>> primes;
  Monomial::Exponents e(n, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t v) {
    if (v < n) {
      for (std::int32_t k = 0; k <= top[v]; ++k) {
        e[v] = k;
        rec(v + 1);
      }
      e[v] = 0;
      return;
    }
    std::vector<Monomial::Exponents> quot;
    for (const auto& g : gens) {
      Monomial::Exponents q(n, 0);
      for (std::size_t u = 0; u < n; ++u) q[u] = std::max(0, g[u] - e[u]);
      quot.push_back(q);
    }
    auto divides = [&](const Monomial::Exponents& a, const Monomial::Exponents& b) {
      for (std::size_t u = 0; u < n; ++u)
        if (a[u] > b[u]) return false;
      return true;
    };
    std::vector<std::size_t> vars;
    for (std::size_t a = 0; a < quot.size(); ++a) {
      bool minimal = true;
      for (std::size_t b = 0; b < quot.size() && minimal; ++b)
        if (b != a && divides(quot[b], quot[a]) && (!(quot[b] == quot[a]) || b < a)) minimal = false;
      if (!minimal) continue;
      std::size_t support = 0, var = 0;
      std::int32_t total = 0;
      for (std::size_t u = 0; u < n; ++u) {
        total += quot[a][u];
        if (quot[a][u]) {
          ++support;
          var = u;
        }
      }
      if (total == 0) return;  // m lies in I
      if (support != 1 || total != 1) return;
      vars.push_back(var);
    }
    std::sort(vars.begin(), vars.end());
    primes.insert(vars);
  };
  rec(0);
  std::vector<std::vector<std::size_t>> sorted(primes.begin(), primes.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  std::vector<Ideal> out;
  for (const auto& vars : sorted) {
    std::vector<Polynomial> g;
    for (auto v : vars) g.push_back(ring->variable(v));
    out.emplace_back(ring, std::move(g));
  }
  return out;
}

SocleTorReport check_cor55_at_m(const PresentedModule& m, const PresentedModule& n) {
  Resolution res = resolve(m, 2);
  if (!res.pd || *res.pd > 1)
    throw Error(ErrorKind::PdNotOne, res.pd ? "projective dimension is " + std::to_string(*res.pd)
                                            : std::string("projective dimension exceeds 2"));
  SocleTorReport r;
  r.socle_tor = !socle(tor(1, res, n)).is_zero();
  r.socle_n = !socle(n).is_zero();
  r.m_free = is_free(m).free;
  return r;
}

bool BurchSharpReport::pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.pass; });
}

BurchSharpReport check_burch_sharp(const Ideal& i, const CandidateFamily& fam, std::size_t t, std::size_t l) {
  if (t < 1) throw Error(ErrorKind::IndexOutOfRange, "t must be at least 1");
  if (!burch_test(i).burch) throw Error(ErrorKind::NotBurch, "ideal " + i.to_string() + " is not Burch");
  Resolution res = resolve(cyclic_module(i), t + 2);
  BurchSharpReport report;
  for (const auto& member : fam.members()) {
    BurchSharpRow row{member.label, false, std::nullopt, true};
    row.hypothesis = tor(t, res, member.module).is_zero() && tor(t + 1, res, member.module).is_zero();
    if (row.hypothesis) {
      row.pd = resolve(member.module, l).pd;
      row.pass = row.pd && *row.pd + 1 <= t;
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace homkernel
