#include "homkernel/field.hpp"

#include "homkernel/error.hpp"

namespace homkernel {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::InhomogeneousInput: return "InhomogeneousInput";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::RankMismatch: return "RankMismatch";
    case ErrorKind::ZeroDivisorIdeal: return "ZeroDivisorIdeal";
    case ErrorKind::ZeroModule: return "ZeroModule";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::UnitIdeal: return "UnitIdeal";
    case ErrorKind::NotMonomial: return "NotMonomial";
    case ErrorKind::NotRegularSequence: return "NotRegularSequence";
    case ErrorKind::PdNotOne: return "PdNotOne";
    case ErrorKind::NotBurch: return "NotBurch";
    case ErrorKind::UnknownExampleId: return "UnknownExampleId";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UndeclaredIdentifier: return "UndeclaredIdentifier";
    case ErrorKind::TypeMismatch: return "TypeMismatch";
  }
  return "Error";
}

namespace {

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

void require_same(const Scalar::ModP& a, const Scalar::ModP& b) {
  if (a.prime != b.prime) throw Error(ErrorKind::RingMismatch, "scalars from different prime fields");
}

}  // namespace

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

Scalar Scalar::rational(mpq_class q) {
  q.canonicalize();
  return Scalar(std::move(q));
}

bool Scalar::is_zero() const {
  if (auto* m = as_modp()) return m->value == 0;
  return sgn(*as_rational()) == 0;
}

bool Scalar::is_one() const {
  if (auto* m = as_modp()) return m->value == 1;
  return *as_rational() == 1;
}

bool Scalar::is_negative() const {
  if (auto* m = as_modp()) return m->value > m->prime / 2;
  return sgn(*as_rational()) < 0;
}

Scalar Scalar::operator-() const {
  if (auto* m = as_modp()) return Scalar(ModP{m->value == 0 ? 0 : m->prime - m->value, m->prime});
  return Scalar(mpq_class(-*as_rational()));
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (auto* x = a.as_modp()) {
    auto* y = b.as_modp();
    if (!y) throw Error(ErrorKind::RingMismatch, "mixed scalar kinds");
    require_same(*x, *y);
    std::uint64_t s = std::uint64_t(x->value) + y->value;
    if (s >= x->prime) s -= x->prime;
    return Scalar(Scalar::ModP{static_cast<std::uint32_t>(s), x->prime});
  }
  auto* y = b.as_rational();
  if (!y) throw Error(ErrorKind::RingMismatch, "mixed scalar kinds");
  return Scalar(mpq_class(*a.as_rational() + *y));
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (auto* x = a.as_modp()) {
    auto* y = b.as_modp();
    if (!y) throw Error(ErrorKind::RingMismatch, "mixed scalar kinds");
    require_same(*x, *y);
    std::uint64_t s = (std::uint64_t(x->value) * y->value) % x->prime;
    return Scalar(Scalar::ModP{static_cast<std::uint32_t>(s), x->prime});
  }
  auto* y = b.as_rational();
  if (!y) throw Error(ErrorKind::RingMismatch, "mixed scalar kinds");
  return Scalar(mpq_class(*a.as_rational() * *y));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  if (auto* m = as_modp()) return Scalar(ModP{mod_inverse(m->value, m->prime), m->prime});
  return Scalar(mpq_class(1 / *as_rational()));
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
  if (auto* x = a.as_modp()) {
    auto* y = b.as_modp();
    return y && x->value == y->value && x->prime == y->prime;
  }
  auto* y = b.as_rational();
  return y && *a.as_rational() == *y;
}

std::string Scalar::to_string() const {
  if (auto* m = as_modp()) {
    if (m->value > m->prime / 2) return "-" + std::to_string(m->prime - m->value);
    return std::to_string(m->value);
  }
  return as_rational()->get_str();
}

Field Field::prime(std::int64_t p) {
  if (p < 2 || p >= (std::int64_t(1) << 31) || !is_prime(p))
    throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not a prime below 2^31");
  return Field(FieldKind::Prime, static_cast<std::uint32_t>(p));
}

Field Field::rationals() { return Field(FieldKind::Rationals, 0); }

Scalar Field::from_int(std::int64_t v) const {
  if (kind_ == FieldKind::Prime) {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return Scalar::modp(static_cast<std::uint32_t>(r), p_);
  }
  return Scalar::rational(mpq_class(mpz_class(std::to_string(v))));
}

Scalar Field::from_fraction(const mpz_class& num, const mpz_class& den) const {
  if (kind_ == FieldKind::Prime) {
    mpz_class p(p_);
    mpz_class n = num % p, d = den % p;
    if (n < 0) n += p;
    if (d < 0) d += p;
    if (d == 0) throw Error(ErrorKind::DivisionByZero, "denominator vanishes in " + name());
    return Scalar::modp(static_cast<std::uint32_t>(n.get_ui()), p_) /
           Scalar::modp(static_cast<std::uint32_t>(d.get_ui()), p_);
  }
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  return Scalar::rational(mpq_class(num, den));
}

std::string Field::name() const {
  if (kind_ == FieldKind::Prime) return "GF(" + std::to_string(p_) + ")";
  return "QQ";
}

}  // namespace homkernel
