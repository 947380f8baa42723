#ifndef HOMKERNEL_PREDICATES_HPP
#define HOMKERNEL_PREDICATES_HPP

#include <optional>
#include <string>
#include <vector>

#include "homkernel/homology.hpp"

namespace homkernel {

struct BurchResult {
  bool burch;
  Ideal colon, lhs, rhs;  ///< (I:m), m(I:m), Im
};
/// UnitIdeal for I = R.
BurchResult burch_test(const Ideal& i);

/// A bounded, ordered family of candidate modules.
class CandidateFamily {
 public:
  struct Member {
    PresentedModule module;
    std::string label;
    std::optional<Ideal> ideal;  ///< set for cyclic members
  };

  /// R/I for monomial ideals I with at most max_gens generators of degree
  /// 1..max_deg, ordered by total generator degree, then by the generator
  /// lists compared term by term (larger monomials first). Ideals that
  /// coincide in R appear once.
  static CandidateFamily cyclic(const RingPtr& ring, std::int64_t max_deg, std::size_t max_gens = 2);
  static CandidateFamily explicit_list(std::vector<PresentedModule> modules, std::vector<std::string> labels);

  const std::vector<Member>& members() const { return members_; }
  std::string bounds() const { return bounds_; }

 private:
  std::vector<Member> members_;
  std::string bounds_;
};

enum class WitnessKind { LichtenbaumViolation, QuasiViolation, TorrigidViolation, Exhausted };
std::string to_string(WitnessKind k);

struct TorEvidence {
  std::size_t index;
  std::size_t beta0, beta1;
  Length length;
  bool zero;
};

struct Witness {
  WitnessKind kind = WitnessKind::Exhausted;
  std::optional<std::size_t> member;  ///< position in the family
  std::string label;
  std::optional<std::size_t> index;   ///< Tor index for tor-rigidity
  std::vector<TorEvidence> certificate;
  std::string bounds;
  bool replayed = false;  ///< certificate recomputed from scratch and confirmed
};

Witness falsify_lichtenbaum(const PresentedModule& l, const CandidateFamily& fam);
Witness falsify_quasi_lichtenbaum(const PresentedModule& l, const CandidateFamily& fam);
Witness falsify_torrigid(const PresentedModule& t, const CandidateFamily& fam, std::size_t i_max);

struct ArtinReesReport {
  std::vector<std::pair<int, bool>> rows;  ///< (n, Tor_1(M, R/I^n) = 0)
  bool pass() const;
};
/// NotRegularSequence names the failing step.
ArtinReesReport check_artin_rees_qs(const PresentedModule& m, const std::vector<Polynomial>& seq, int n_max);

/// Primes (I : m) generated by variables; NotMonomial on non-monomial input.
std::vector<Ideal> ass_monomial(const Ideal& i);

struct SocleTorReport {
  bool socle_tor, socle_n, m_free;
  bool holds() const { return socle_tor == (socle_n && !m_free); }
};
/// PdNotOne unless resolve certifies pd M <= 1.
SocleTorReport check_cor55_at_m(const PresentedModule& m, const PresentedModule& n);

struct BurchSharpRow {
  std::string label;
  bool hypothesis;               ///< Tor_t = Tor_{t+1} = 0
  std::optional<std::size_t> pd;
  bool pass;
};
struct BurchSharpReport {
  std::vector<BurchSharpRow> rows;
  bool pass() const;
};
/// NotBurch unless burch_test(I) holds.
BurchSharpReport check_burch_sharp(const Ideal& i, const CandidateFamily& fam, std::size_t t, std::size_t l);

}  // namespace homkernel

#endif
