#include <algorithm>
#include <charconv>
#include <numeric>
#include <optional>
#include <sstream>

#include "reidemeister/endo.hpp"
#include "reidemeister/error.hpp"

namespace reidemeister::endo {

PGroupType::PGroupType(std::uint64_t p, std::vector<unsigned> exponents)
    : p_(p), e_(std::move(exponents)) {
  if (!core::is_prime(p_)) throw Error(ErrorCode::NotPrime, std::to_string(p_) + " is not prime");
  for (unsigned v : e_) {
    if (v == 0) throw Error(ErrorCode::NonPositiveExponent, "exponents must be at least 1");
  }
  std::sort(e_.begin(), e_.end());
}

unsigned PGroupType::total_exponent() const noexcept {
  return std::accumulate(e_.begin(), e_.end(), 0u);
}

Factored PGroupType::order() const { return Factored::prime_power(p_, total_exponent()); }

Integer PGroupType::modulus(std::size_t i) const { return core::power(p_, e_.at(i)); }

Integer PGroupType::exponent_of_group() const {
  return e_.empty() ? Integer(1) : core::power(p_, e_.back());
}

std::string PGroupType::to_string() const {
  std::string out = "p=" + std::to_string(p_) + " e=";
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(e_[i]);
  }
  return out;
}

PGroupType validate_type(std::uint64_t p, std::span<const long long> raw) {
  if (!core::is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  std::vector<unsigned> e;
  e.reserve(raw.size());
  for (long long v : raw) {
    if (v < 1) throw Error(ErrorCode::NonPositiveExponent, "exponent " + std::to_string(v));
    e.push_back(static_cast<unsigned>(v));
  }
  return PGroupType(p, std::move(e));
}

namespace {

long long parse_integer(std::string_view token) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty()) {
    throw Error(ErrorCode::ParseError, "expected an integer, got '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

PGroupType parse_p_group(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string token;
  std::optional<long long> p;
  std::optional<std::vector<long long>> e;
  while (in >> token) {
    if (token.rfind("p=", 0) == 0) {
      p = parse_integer(std::string_view(token).substr(2));
    } else if (token.rfind("e=", 0) == 0) {
      std::vector<long long> values;
      std::string_view list = std::string_view(token).substr(2);
      while (!list.empty()) {
        const auto comma = list.find(',');
        values.push_back(parse_integer(list.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        list.remove_prefix(comma + 1);
        if (list.empty()) throw Error(ErrorCode::ParseError, "trailing comma in exponent list");
      }
      e = std::move(values);
    } else {
      throw Error(ErrorCode::ParseError, "unexpected token '" + token + "'");
    }
  }
  if (!p || !e) throw Error(ErrorCode::ParseError, "group type needs both p= and e=");
  if (*p < 2) throw Error(ErrorCode::NotPrime, std::to_string(*p) + " is not prime");
  return validate_type(static_cast<std::uint64_t>(*p), *e);
}

GroupElement::GroupElement(PGroupType group, std::vector<Integer> coords)
    : group_(std::move(group)), coords_(std::move(coords)) {
  if (coords_.size() != group_.rank()) {
    throw Error(ErrorCode::DimensionMismatch, "element has the wrong number of coordinates");
  }
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    const Integer q = group_.modulus(i);
    mpz_fdiv_r(coords_[i].get_mpz_t(), coords_[i].get_mpz_t(), q.get_mpz_t());
  }
}

}  // namespace reidemeister::endo
