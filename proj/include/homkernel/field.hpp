#ifndef HOMKERNEL_FIELD_HPP
#define HOMKERNEL_FIELD_HPP

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace homkernel {

enum class FieldKind { Prime, Rationals };

/// A coefficient. Prime-field values carry their modulus so that arithmetic
/// between two scalars needs no external context; rationals are GMP values in
/// lowest terms.
class Scalar {
 public:
  struct ModP {
    std::uint32_t value;
    std::uint32_t prime;
  };

  Scalar() : rep_(ModP{0, 0}) {}
  static Scalar modp(std::uint32_t value, std::uint32_t prime) { return Scalar(ModP{value % prime, prime}); }
  static Scalar rational(mpq_class q);

  bool is_zero() const;
  bool is_one() const;
  bool is_prime_field() const { return std::holds_alternative<ModP>(rep_); }

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Multiplicative inverse; throws DivisionByZero on zero.
  Scalar inverse() const;

  /// Prime-field values print in the symmetric range (-p/2, p/2].
  std::string to_string() const;
  /// Sign in the textual sense used by the printer.
  bool is_negative() const;

  const ModP* as_modp() const { return std::get_if<ModP>(&rep_); }
  const mpq_class* as_rational() const { return std::get_if<mpq_class>(&rep_); }

 private:
  explicit Scalar(ModP v) : rep_(v) {}
  explicit Scalar(mpq_class q) : rep_(std::move(q)) {}
  std::variant<ModP, mpq_class> rep_;
};

class Field {
 public:
  /// Throws NotPrime unless 2 <= p < 2^31 and p is prime.
  static Field prime(std::int64_t p);
  static Field rationals();

  FieldKind kind() const { return kind_; }
  std::uint32_t characteristic() const { return kind_ == FieldKind::Prime ? p_ : 0; }

  Scalar zero() const { return from_int(0); }
  Scalar one() const { return from_int(1); }
  Scalar from_int(std::int64_t v) const;
  /// num/den reduced into the field; DivisionByZero if den vanishes there.
  Scalar from_fraction(const mpz_class& num, const mpz_class& den) const;

  std::string name() const;
  bool operator==(const Field& other) const { return kind_ == other.kind_ && p_ == other.p_; }

 private:
  Field(FieldKind kind, std::uint32_t p) : kind_(kind), p_(p) {}
  FieldKind kind_;
  std::uint32_t p_;
};

bool is_prime(std::int64_t n);

}  // namespace homkernel

#endif
