#include <algorithm>
#include <atomic>
#include <thread>

#include "cli.hpp"

namespace reidemeister::cli {

namespace {

void partitions(unsigned n, unsigned max_part, std::vector<unsigned>& prefix,
                std::vector<std::vector<unsigned>>& out) {
  if (n == 0) {
    std::vector<unsigned> e(prefix.rbegin(), prefix.rend());
    out.push_back(std::move(e));
    return;
  }
  for (unsigned part = std::min(n, max_part); part >= 1; --part) {
    prefix.push_back(part);
    partitions(n - part, part, prefix, out);
    prefix.pop_back();
  }
}

// Fewer summands first, then lexicographic in e.
bool type_before(const endo::PGroupType& x, const endo::PGroupType& y) {
  if (x.rank() != y.rank()) return x.rank() < y.rank();
  return std::lexicographical_compare(x.exponents().begin(), x.exponents().end(), y.exponents().begin(),
                                      y.exponents().end());
}

}  // namespace

std::vector<spectra::AbelianGroupType> groups_up_to(std::uint64_t max_order) {
  std::vector<spectra::AbelianGroupType> out;
  for (std::uint64_t order = 2; order <= max_order; ++order) {
    std::vector<spectra::AbelianGroupType> level{spectra::AbelianGroupType{}};
    for (auto [p, k] : core::factorize(order)) {
      std::vector<std::vector<unsigned>> types;
      std::vector<unsigned> prefix;
      partitions(k, k, prefix, types);
      std::vector<endo::PGroupType> sylow;
      for (auto& e : types) sylow.emplace_back(p, std::move(e));
      std::sort(sylow.begin(), sylow.end(), type_before);

      std::vector<spectra::AbelianGroupType> next;
      for (const auto& g : level) {
        for (const auto& s : sylow) {
          auto components = g.components();
          components.push_back(s);
          next.emplace_back(std::move(components));
        }
      }
      level = std::move(next);
    }
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

nlohmann::json atlas_entry(const spectra::AbelianGroupType& group, bool with_witnesses) {
  const spectra::Spectrum spectrum = spectra::spec_r_abelian(group);
  nlohmann::json values = nlohmann::json::array();
  for (const auto& v : spectrum.values()) values.push_back(value_json(v));

  nlohmann::json entry = {{"group", group_json(group)}, {"spectrum", values}};
  const auto sylow2 = group.sylow(2);
  entry["sylow2_blocks"] =
      sylow2.is_trivial() ? nlohmann::json(nullptr) : blocks_json(decomposition::abc_decompose(sylow2));
  if (with_witnesses) {
    nlohmann::json witnesses = nlohmann::json::object();
    for (const auto& v : spectrum.values()) {
      witnesses[v.decimal()] = witness_json(spectra::witness_abelian(group, v));
    }
    entry["witness_per_value"] = witnesses;
  }
  return entry;
}

namespace {

// Entries are computed by a small worker pool and written back by index, so
// the document does not depend on scheduling.
std::string render_entries(const std::vector<spectra::AbelianGroupType>& groups,
                           const std::vector<bool>& witnesses) {
  std::vector<nlohmann::json> entries(groups.size());
  std::atomic<std::size_t> cursor{0};
  auto work = [&] {
    for (std::size_t i = cursor++; i < groups.size(); i = cursor++) {
      entries[i] = atlas_entry(groups[i], witnesses[i]);
    }
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), 8));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  nlohmann::json doc = nlohmann::json::array();
  for (auto& e : entries) doc.push_back(std::move(e));
  return doc.dump(2) + "\n";
}

}  // namespace

std::string render_atlas(std::uint64_t max_order, bool with_witnesses) {
  const auto groups = groups_up_to(max_order);
  return render_entries(groups, std::vector<bool>(groups.size(), with_witnesses));
}

std::string recompute_atlas(const nlohmann::json& atlas) {
  std::vector<spectra::AbelianGroupType> groups;
  std::vector<bool> witnesses;
  for (const auto& entry : atlas) {
    groups.push_back(group_from_json(entry.at("group")));
    witnesses.push_back(entry.contains("witness_per_value"));
  }
  return render_entries(groups, witnesses);
}

}  // namespace reidemeister::cli
