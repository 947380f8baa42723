#ifndef HOMKERNEL_POLYNOMIAL_HPP
#define HOMKERNEL_POLYNOMIAL_HPP

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "homkernel/field.hpp"
#include "homkernel/monomial.hpp"

namespace homkernel {

/// The ambient polynomial ring A = k[x_1..x_n] with positive weights.
class PolyRing {
 public:
  PolyRing(Field field, std::vector<std::string> names, Weights weights);

  const Field& field() const { return field_; }
  std::size_t nvars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const Weights& weights() const { return weights_; }

  Monomial monomial(Monomial::Exponents exps) const { return Monomial(std::move(exps), weights_); }
  Monomial one() const { return Monomial::one(nvars()); }
  Monomial variable(std::size_t i) const;
  std::optional<std::size_t> index_of(std::string_view name) const;

  bool operator==(const PolyRing& other) const {
    return field_ == other.field_ && names_ == other.names_ && weights_ == other.weights_;
  }

 private:
  Field field_;
  std::vector<std::string> names_;
  Weights weights_;
};

using PolyRingPtr = std::shared_ptr<const PolyRing>;

struct Term {
  Scalar coeff;
  Monomial mono;
};

struct Homogeneity {
  bool homogeneous = true;
  std::optional<std::int64_t> degree;  ///< unset for the zero polynomial
};

/// Sparse polynomial over A; terms strictly descending, no zero coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(PolyRingPtr ring) : ring_(std::move(ring)) {}
  /// Sorts and combines an arbitrary term list.
  static Polynomial from_terms(PolyRingPtr ring, std::vector<Term> terms);
  static Polynomial constant(PolyRingPtr ring, const Scalar& c);
  static Polynomial variable(PolyRingPtr ring, std::size_t i);
  static Polynomial monomial(PolyRingPtr ring, const Monomial& m);

  const PolyRingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Term& leading_term() const { return terms_.front(); }
  bool is_monomial() const { return terms_.size() == 1; }

  Homogeneity homogeneity() const;
  bool is_homogeneous() const { return homogeneity().homogeneous; }
  /// Coefficient of the constant monomial (zero when absent).
  Scalar constant_term() const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator-(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g);
  Polynomial scaled(const Scalar& c) const;
  Polynomial times(const Scalar& c, const Monomial& m) const;
  friend bool operator==(const Polynomial& f, const Polynomial& g);

  /// Canonical rendering: `coeff*x^a*y^b` terms in descending order, "0" for zero.
  std::string to_string() const;

 private:
  PolyRingPtr ring_;
  std::vector<Term> terms_;
};

/// Parses the canonical textual form (explicit `*` and `^`, integer or a/b
/// coefficients). Throws ParseError whose message starts with the byte
/// offset of the failure: "@<offset>: ...".
Polynomial parse_polynomial(const PolyRingPtr& ring, std::string_view text);

}  // namespace homkernel

#endif
