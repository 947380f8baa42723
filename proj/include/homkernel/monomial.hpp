#ifndef HOMKERNEL_MONOMIAL_HPP
#define HOMKERNEL_MONOMIAL_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace homkernel {

using Weights = std::vector<std::int32_t>;

/// Exponent vector with its cached weighted degree. Comparison is the fixed
/// weighted graded reverse lexicographic order: weighted degree first, then
/// the smaller exponent in the last differing variable wins.
class Monomial {
 public:
  using Exponents = boost::container::small_vector<std::int32_t, 8>;

  Monomial() = default;
  Monomial(Exponents exps, std::span<const std::int32_t> weights);
  static Monomial one(std::size_t nvars) { return Monomial(Exponents(nvars, 0), 0); }

  std::size_t size() const { return exps_.size(); }
  std::int32_t operator[](std::size_t i) const { return exps_[i]; }
  const Exponents& exponents() const { return exps_; }
  std::int64_t degree() const { return degree_; }
  bool is_one() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// True when this monomial divides `other`.
  bool divides(const Monomial& other) const;
  /// this / d; requires d.divides(*this).
  Monomial divided_by(const Monomial& d) const;
  bool coprime(const Monomial& other) const;
  static Monomial lcm(const Monomial& a, const Monomial& b, std::span<const std::int32_t> weights);

  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree_ == b.degree_ && a.exps_ == b.exps_;
  }

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  Monomial(Exponents exps, std::int64_t degree) : exps_(std::move(exps)), degree_(degree) {}
  Exponents exps_;
  std::int64_t degree_ = 0;
};

}  // namespace homkernel

#endif
