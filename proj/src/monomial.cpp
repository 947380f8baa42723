#include "homkernel/monomial.hpp"

#include <algorithm>
#include <cassert>

namespace homkernel {

Monomial::Monomial(Exponents exps, std::span<const std::int32_t> weights) : exps_(std::move(exps)) {
  assert(exps_.size() == weights.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) degree_ += std::int64_t(weights[i]) * exps_[i];
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](std::int32_t e) { return e == 0; });
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial::Exponents e(a.exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = a.exps_[i] + b.exps_[i];
  return Monomial(std::move(e), a.degree_ + b.degree_);
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::divided_by(const Monomial& d) const {
  Exponents e(exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = exps_[i] - d.exps_[i];
  return Monomial(std::move(e), degree_ - d.degree_);
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > 0 && other.exps_[i] > 0) return false;
  return true;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b, std::span<const std::int32_t> weights) {
  Exponents e(a.exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a.exps_[i], b.exps_[i]);
  return Monomial(std::move(e), weights);
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (a.degree_ != b.degree_) return a.degree_ <=> b.degree_;
  for (std::size_t i = a.exps_.size(); i-- > 0;) {
    if (a.exps_[i] != b.exps_[i]) return b.exps_[i] <=> a.exps_[i];
  }
  return std::strong_ordering::equal;
}

std::string Monomial::to_string(const std::vector<std::string>& names) const {
  std::string out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names[i];
    if (exps_[i] > 1) out += '^' + std::to_string(exps_[i]);
  }
  return out.empty() ? "1" : out;
}

}  // namespace homkernel
