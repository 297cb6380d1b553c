#include <algorithm>
#include <charconv>

#include "reidemeister/error.hpp"
#include "reidemeister/spectra.hpp"

namespace reidemeister::spectra {

AbelianGroupType::AbelianGroupType(std::vector<PGroupType> components) {
  for (auto& c : components) {
    if (!c.is_trivial()) components_.push_back(std::move(c));
  }
  std::sort(components_.begin(), components_.end(),
            [](const PGroupType& x, const PGroupType& y) { return x.prime() < y.prime(); });
  for (std::size_t i = 1; i < components_.size(); ++i) {
    if (components_[i].prime() == components_[i - 1].prime()) {
      throw Error(ErrorCode::InvalidType, "two components for the prime " +
                                              std::to_string(components_[i].prime()));
    }
  }
}

AbelianGroupType AbelianGroupType::from_cyclic_orders(std::span<const std::uint64_t> orders) {
  std::map<std::uint64_t, std::vector<unsigned>> by_prime;
  for (std::uint64_t order : orders) {
    if (order < 2) throw Error(ErrorCode::InvalidType, "cyclic orders must be at least 2");
    for (auto [p, k] : core::factorize(order)) by_prime[p].push_back(k);
  }
  std::vector<PGroupType> components;
  for (auto& [p, e] : by_prime) components.emplace_back(p, std::move(e));
  return AbelianGroupType(std::move(components));
}

PGroupType AbelianGroupType::sylow(std::uint64_t p) const {
  for (const auto& c : components_) {
    if (c.prime() == p) return c;
  }
  return PGroupType(p, {});
}

Factored AbelianGroupType::order() const {
  Factored out;
  for (const auto& c : components_) out = out * c.order();
  return out;
}

std::vector<Integer> AbelianGroupType::cyclic_orders() const {
  std::vector<Integer> out;
  for (const auto& c : components_) {
    for (std::size_t i = 0; i < c.rank(); ++i) out.push_back(c.modulus(i));
  }
  return out;
}

std::string AbelianGroupType::to_string() const {
  if (components_.empty()) return "0";
  std::string out;
  for (const Integer& q : cyclic_orders()) {
    if (!out.empty()) out += " + ";
    out += "Z/" + q.get_str();
  }
  return out;
}

AbelianGroupType parse_group_spec(std::string_view text) {
  if (text.find('=') != std::string_view::npos) {
    return AbelianGroupType({endo::parse_p_group(text)});
  }
  std::vector<std::uint64_t> orders;
  std::string compact;
  for (char ch : text) {
    if (ch != ' ' && ch != '\t') compact.push_back(ch);
  }
  if (compact.empty()) throw Error(ErrorCode::ParseError, "empty group description");
  std::string_view rest = compact;
  while (true) {
    const auto comma = rest.find(',');
    const std::string_view token = rest.substr(0, comma);
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw Error(ErrorCode::ParseError, "bad cyclic order '" + std::string(token) + "'");
    }
    orders.push_back(value);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return AbelianGroupType::from_cyclic_orders(orders);
}

}  // namespace reidemeister::spectra
