#include "cli.hpp"

#include "reidemeister/error.hpp"

namespace reidemeister::cli {

std::string render_value(const core::Factored& value) {
  const std::string dec = value.decimal();
  const std::string fac = value.factorization();
  return dec == fac ? dec : dec + " = " + fac;
}

nlohmann::json value_json(const core::Factored& value) {
  nlohmann::json factors = nlohmann::json::object();
  for (auto [p, k] : value.factors()) factors[std::to_string(p)] = k;
  return {{"decimal", value.decimal()}, {"factorization", factors}};
}

nlohmann::json group_json(const spectra::AbelianGroupType& group) {
  nlohmann::json sylow = nlohmann::json::array();
  for (const auto& c : group.components()) {
    sylow.push_back({{"p", c.prime()}, {"e", std::vector<unsigned>(c.exponents().begin(), c.exponents().end())}});
  }
  nlohmann::json orders = nlohmann::json::array();
  for (const auto& q : group.cyclic_orders()) orders.push_back(q.get_str());
  return {{"order", value_json(group.order())}, {"sylow", sylow}, {"cyclic_orders", orders}};
}

spectra::AbelianGroupType group_from_json(const nlohmann::json& j) {
  try {
    std::vector<endo::PGroupType> components;
    for (const auto& c : j.at("sylow")) {
      components.emplace_back(c.at("p").get<std::uint64_t>(), c.at("e").get<std::vector<unsigned>>());
    }
    return spectra::AbelianGroupType(std::move(components));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed group object: ") + e.what());
  }
}

nlohmann::json blocks_json(const decomposition::BlockDecomposition& dec) {
  return {{"blocks", dec.bracketed()}, {"a", dec.a}, {"b", dec.b}, {"c", dec.c}, {"d", dec.d}};
}

nlohmann::json spectrum_json(const spectra::AbelianGroupType& group, const spectra::Spectrum& spectrum) {
  nlohmann::json values = nlohmann::json::array();
  for (const auto& v : spectrum.values()) values.push_back(value_json(v));
  return {{"group", group_json(group)}, {"values", values}};
}

nlohmann::json witness_json(const std::map<std::uint64_t, endo::EndoMatrix>& parts) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [p, em] : parts) {
    out[std::to_string(p)] = {{"type", em.group().to_string()}, {"matrix", core::format_matrix(em.matrix())}};
  }
  return out;
}

}  // namespace reidemeister::cli
