#include <algorithm>
#include <cstdlib>
#include <string>

#include "reidemeister/error.hpp"
#include "reidemeister/oracle.hpp"

namespace reidemeister::oracle {

EnumBudget EnumBudget::from_environment() {
  EnumBudget budget;
  const char* raw = std::getenv("REIDEMEISTER_BUDGET");
  if (raw == nullptr || *raw == '\0') return budget;
  const std::string text(raw);
  const auto comma = text.find(',');
  try {
    budget.max_endos = std::stoull(text.substr(0, comma));
    if (comma != std::string::npos) budget.max_group_order = std::stoull(text.substr(comma + 1));
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, "REIDEMEISTER_BUDGET must look like 1048576[,16384]");
  }
  if (budget.max_endos == 0 || budget.max_group_order == 0) {
    throw Error(ErrorCode::OutOfRange, "budget caps must be positive");
  }
  return budget;
}

Integer endomorphism_count(const PGroupType& group) {
  unsigned total = 0;
  const auto e = group.exponents();
  for (unsigned a : e) {
    for (unsigned b : e) total += std::min(a, b);
  }
  return core::power(group.prime(), total);
}

EndomorphismStream::EndomorphismStream(PGroupType group, const EnumBudget& budget)
    : EndomorphismStream(group, budget, 0, ~std::uint64_t{0}) {}

EndomorphismStream::EndomorphismStream(PGroupType group, const EnumBudget& budget, std::uint64_t begin,
                                       std::uint64_t end)
    : group_(std::move(group)) {
  const Integer count = endomorphism_count(group_);
  if (count > budget.max_endos) {
    throw Error(ErrorCode::BudgetExceeded, group_.to_string() + " has " + count.get_str() +
                                               " endomorphisms, cap is " + std::to_string(budget.max_endos));
  }
  total_ = count.get_ui();
  const auto e = group_.exponents();
  const std::uint64_t p = group_.prime();
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = 0; j < e.size(); ++j) {
      radix_.push_back(core::small_power(p, std::min(e[i], e[j])));
      step_.push_back(core::power(p, e[i] > e[j] ? e[i] - e[j] : 0));
    }
  }
  position_ = std::min(begin, total_);
  end_ = std::min(end, total_);
  digits_.assign(radix_.size(), 0);
  std::uint64_t rest = position_;
  for (std::size_t k = radix_.size(); k-- > 0;) {
    digits_[k] = rest % radix_[k];
    rest /= radix_[k];
  }
}

std::optional<EndoMatrix> EndomorphismStream::next() {
  if (position_ >= end_) return std::nullopt;
  const std::size_t n = group_.rank();
  core::IntMatrix m(n, n);
  for (std::size_t k = 0; k < digits_.size(); ++k) {
    if (digits_[k] != 0) {
      mpz_mul_ui(m(k / n, k % n).get_mpz_t(), step_[k].get_mpz_t(), digits_[k]);
    }
  }
  for (std::size_t k = digits_.size(); k-- > 0;) {
    if (++digits_[k] < radix_[k]) break;
    digits_[k] = 0;
  }
  ++position_;
  return endo::EndoBuilder::trusted(group_, std::move(m));
}

std::pair<std::uint64_t, std::uint64_t> EndomorphismStream::partition(const PGroupType& group,
                                                                      std::uint64_t value) {
  const std::uint64_t count = partition_count(group);
  if (value >= count) throw Error(ErrorCode::OutOfRange, "partition index");
  const std::uint64_t width = endomorphism_count(group).get_ui() / count;
  return {value * width, (value + 1) * width};
}

std::uint64_t EndomorphismStream::partition_count(const PGroupType& group) {
  return group.is_trivial() ? 1 : core::small_power(group.prime(), group.exponent(0));
}

AutomorphismStream::AutomorphismStream(PGroupType group, const EnumBudget& budget)
    : inner_(std::move(group), budget) {}

AutomorphismStream::AutomorphismStream(PGroupType group, const EnumBudget& budget, std::uint64_t begin,
                                       std::uint64_t end)
    : inner_(std::move(group), budget, begin, end) {}

std::optional<EndoMatrix> AutomorphismStream::next() {
  while (auto em = inner_.next()) {
    if (endo::is_automorphism(*em)) return em;
  }
  return std::nullopt;
}

std::vector<EndoMatrix> enumerate_endomorphisms(const PGroupType& group, const EnumBudget& budget) {
  std::vector<EndoMatrix> out;
  EndomorphismStream stream(group, budget);
  while (auto em = stream.next()) out.push_back(std::move(*em));
  return out;
}

std::vector<EndoMatrix> enumerate_automorphisms(const PGroupType& group, const EnumBudget& budget) {
  std::vector<EndoMatrix> out;
  AutomorphismStream stream(group, budget);
  while (auto em = stream.next()) out.push_back(std::move(*em));
  return out;
}

namespace {

void extend_types(std::uint64_t p, unsigned max_total, std::vector<unsigned>& prefix, unsigned used,
                  std::vector<PGroupType>& out) {
  unsigned sigma = 0;
  for (unsigned v : prefix) sigma += v;
  const unsigned lo = prefix.empty() ? 1 : prefix.back();
  for (unsigned v = lo;; ++v) {
    // Appending v ≥ every e_i adds 2·Σ(e) + v to Σ min(e_i, e_j).
    const unsigned next = used + 2 * sigma + v;
    if (next > max_total) break;
    prefix.push_back(v);
    out.emplace_back(p, prefix);
    extend_types(p, max_total, prefix, next, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<PGroupType> types_within_budget(std::uint64_t p, const EnumBudget& budget) {
  unsigned max_total = 0;
  while (core::power(p, max_total + 1) <= budget.max_endos) ++max_total;
  std::vector<PGroupType> out;
  std::vector<unsigned> prefix;
  extend_types(p, max_total, prefix, 0, out);
  std::stable_sort(out.begin(), out.end(), [](const PGroupType& a, const PGroupType& b) {
    if (a.rank() != b.rank()) return a.rank() < b.rank();
    return std::lexicographical_compare(a.exponents().begin(), a.exponents().end(),
                                        b.exponents().begin(), b.exponents().end());
  });
  return out;
}

}  // namespace reidemeister::oracle
