#include "reidemeister/core.hpp"
#include "reidemeister/error.hpp"

namespace reidemeister::core {

Factored::Factored(Map factors) {
  for (auto [p, k] : factors) {
    if (k == 0) continue;
    if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    factors_.emplace(p, k);
  }
}

Factored Factored::prime_power(std::uint64_t p, unsigned exponent) {
  if (exponent == 0) return {};
  return Factored(Map{{p, exponent}});
}

Factored Factored::from_integer(std::uint64_t n) {
  Factored out;
  for (auto [p, k] : factorize(n)) out.factors_.emplace(p, k);
  return out;
}

unsigned Factored::valuation(std::uint64_t p) const {
  auto it = factors_.find(p);
  return it == factors_.end() ? 0 : it->second;
}

Integer Factored::value() const {
  Integer out = 1;
  for (auto [p, k] : factors_) out *= power(p, k);
  return out;
}

std::string Factored::decimal() const { return value().get_str(); }

std::string Factored::factorization() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (auto [p, k] : factors_) {
    if (!out.empty()) out += " * ";
    out += std::to_string(p);
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

bool Factored::divides(const Factored& other) const {
  for (auto [p, k] : factors_) {
    if (other.valuation(p) < k) return false;
  }
  return true;
}

Factored operator*(const Factored& a, const Factored& b) {
  Factored out = a;
  for (auto [p, k] : b.factors_) out.factors_[p] += k;
  return out;
}

std::strong_ordering operator<=>(const Factored& a, const Factored& b) {
  if (a.factors_ == b.factors_) return std::strong_ordering::equal;
  const int c = cmp(a.value(), b.value());
  return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

}  // namespace reidemeister::core
