#include "homkernel/polynomial.hpp"

#include <algorithm>
#include <cctype>

#include "homkernel/error.hpp"

namespace homkernel {

PolyRing::PolyRing(Field field, std::vector<std::string> names, Weights weights)
    : field_(field), names_(std::move(names)), weights_(std::move(weights)) {
  if (names_.size() != weights_.size())
    throw Error(ErrorKind::RankMismatch, "one weight per variable is required");
  for (auto w : weights_)
    if (w <= 0) throw Error(ErrorKind::InhomogeneousInput, "variable weights must be positive");
}

Monomial PolyRing::variable(std::size_t i) const {
  Monomial::Exponents e(nvars(), 0);
  e[i] = 1;
  return monomial(std::move(e));
}

std::optional<std::size_t> PolyRing::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

Polynomial Polynomial::from_terms(PolyRingPtr ring, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.mono > b.mono; });
  Polynomial out(std::move(ring));
  for (auto& t : terms) {
    if (!out.terms_.empty() && out.terms_.back().mono == t.mono) {
      out.terms_.back().coeff = out.terms_.back().coeff + t.coeff;
      if (out.terms_.back().coeff.is_zero()) out.terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      out.terms_.push_back(std::move(t));
    }
  }
  return out;
}

Polynomial Polynomial::constant(PolyRingPtr ring, const Scalar& c) {
  Polynomial out(ring);
  if (!c.is_zero()) out.terms_.push_back({c, ring->one()});
  return out;
}

Polynomial Polynomial::variable(PolyRingPtr ring, std::size_t i) {
  Polynomial out(ring);
  out.terms_.push_back({ring->field().one(), ring->variable(i)});
  return out;
}

Polynomial Polynomial::monomial(PolyRingPtr ring, const Monomial& m) {
  Polynomial out(ring);
  out.terms_.push_back({ring->field().one(), m});
  return out;
}

Homogeneity Polynomial::homogeneity() const {
  Homogeneity h;
  if (terms_.empty()) return h;
  h.degree = terms_.front().mono.degree();
  for (const auto& t : terms_)
    if (t.mono.degree() != *h.degree) {
      h.homogeneous = false;
      h.degree.reset();
      break;
    }
  return h;
}

Scalar Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return ring_->field().zero();
}

Polynomial Polynomial::operator-() const {
  Polynomial out(ring_);
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back({-t.coeff, t.mono});
  return out;
}

Polynomial operator+(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero()) return g;
  if (g.is_zero()) return f;
  Polynomial out(f.ring_ ? f.ring_ : g.ring_);
  out.terms_.reserve(f.terms_.size() + g.terms_.size());
  auto a = f.terms_.begin(), b = g.terms_.begin();
  while (a != f.terms_.end() || b != g.terms_.end()) {
    if (b == g.terms_.end() || (a != f.terms_.end() && a->mono > b->mono)) {
      out.terms_.push_back(*a++);
    } else if (a == f.terms_.end() || b->mono > a->mono) {
      out.terms_.push_back(*b++);
    } else {
      Scalar c = a->coeff + b->coeff;
      if (!c.is_zero()) out.terms_.push_back({c, a->mono});
      ++a;
      ++b;
    }
  }
  return out;
}

Polynomial operator-(const Polynomial& f, const Polynomial& g) { return f + (-g); }

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  std::vector<Term> prods;
  prods.reserve(f.terms_.size() * g.terms_.size());
  for (const auto& s : f.terms_)
    for (const auto& t : g.terms_) prods.push_back({s.coeff * t.coeff, s.mono * t.mono});
  return Polynomial::from_terms(f.ring_ ? f.ring_ : g.ring_, std::move(prods));
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  Polynomial out(ring_);
  if (c.is_zero()) return out;
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back({t.coeff * c, t.mono});
  return out;
}

Polynomial Polynomial::times(const Scalar& c, const Monomial& m) const {
  Polynomial out(ring_);
  if (c.is_zero()) return out;
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back({t.coeff * c, t.mono * m});
  return out;
}

bool operator==(const Polynomial& f, const Polynomial& g) {
  if (f.terms_.size() != g.terms_.size()) return false;
  for (std::size_t i = 0; i < f.terms_.size(); ++i)
    if (!(f.terms_[i].mono == g.terms_[i].mono) || !(f.terms_[i].coeff == g.terms_[i].coeff)) return false;
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    std::string c = t.coeff.to_string();
    bool neg = !c.empty() && c[0] == '-';
    if (neg) c.erase(0, 1);
    if (neg) out += '-';
    else if (!first) out += '+';
    if (t.mono.is_one()) {
      out += c;
    } else {
      if (c != "1") out += c + '*';
      out += t.mono.to_string(ring_->names());
    }
    first = false;
  }
  return out;
}

namespace {

class PolyParser {
 public:
  PolyParser(const PolyRingPtr& ring, std::string_view text) : ring_(ring), text_(text) {}

  Polynomial parse() {
    skip_ws();
    if (pos_ == text_.size()) fail("expected polynomial");
    std::vector<Term> terms;
    bool first = true;
    while (true) {
      skip_ws();
      if (pos_ == text_.size()) break;
      bool negative = false;
      if (text_[pos_] == '+' || text_[pos_] == '-') {
        negative = text_[pos_] == '-';
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      Term t = parse_term();
      if (negative) t.coeff = -t.coeff;
      terms.push_back(std::move(t));
      first = false;
    }
    return Polynomial::from_terms(ring_, std::move(terms));
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::ParseError, "@" + std::to_string(pos_) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  Term parse_term() {
    const Field& k = ring_->field();
    Scalar coeff = k.one();
    Monomial::Exponents exps(ring_->nvars(), 0);
    bool expect_factor = true;
    while (expect_factor) {
      skip_ws();
      if (pos_ >= text_.size()) fail("expected number or variable");
      char c = text_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        mpz_class num(read_digits()), den(1);
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '/') {
          ++pos_;
          skip_ws();
          if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected denominator");
          den = mpz_class(read_digits());
        }
        coeff = coeff * k.from_fraction(num, den);
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
          ++pos_;
        std::string name(text_.substr(start, pos_ - start));
        auto idx = ring_->index_of(name);
        if (!idx) {
          pos_ = start;
          fail("unknown variable '" + name + "'");
        }
        std::int64_t e = 1;
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '^') {
          ++pos_;
          skip_ws();
          if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected exponent");
          std::string digits = read_digits();
          if (digits.size() > 6) fail("exponent too large");
          e = std::stoll(digits);
        }
        exps[*idx] += static_cast<std::int32_t>(e);
      } else {
        fail("expected number or variable");
      }
      skip_ws();
      expect_factor = pos_ < text_.size() && text_[pos_] == '*';
      if (expect_factor) ++pos_;
    }
    return Term{coeff, ring_->monomial(std::move(exps))};
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  const PolyRingPtr& ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const PolyRingPtr& ring, std::string_view text) {
  return PolyParser(ring, text).parse();
}

}  // namespace homkernel
