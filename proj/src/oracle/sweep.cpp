#include <algorithm>
#include <set>

#include "reidemeister/decomposition.hpp"
#include "reidemeister/error.hpp"
#include "reidemeister/oracle.hpp"

namespace reidemeister::oracle {

CellReport verify_cell(const PGroupType& group, const EnumBudget& budget) {
  CellReport report{group, false, 0, {}, {}, {}, {}, 0, false, false, 0};
  if (endomorphism_count(group) > budget.max_endos) {
    report.skipped = true;
    return report;
  }

  const std::uint64_t p = group.prime();
  const auto dec = decomposition::abc_decompose(group);
  const unsigned lower = static_cast<unsigned>(dec.b + dec.c);
  const unsigned upper = group.total_exponent();
  report.closed_r = spectra::spec_r_p_group(group);
  report.closed_pi = spectra::spec_p(group);

  std::vector<unsigned> restricted_type;
  for (std::size_t i = 0; i < group.rank(); ++i) restricted_type.push_back(group.exponent(i) - dec.d[i]);

  std::set<unsigned> seen_r, seen_pi;
  AutomorphismStream stream(group, budget);
  while (auto em = stream.next()) {
    ++report.automorphisms;
    const unsigned r = endo::fixed_point_exponent(*em);
    const unsigned pi = p == 2 ? r : spectra::product_number(*em).valuation(p);
    seen_r.insert(r);
    seen_pi.insert(pi);
    if (pi > upper || pi < lower) ++report.bound_violations;
    if (pi == lower) report.lower_attained = true;
    if (pi == upper) report.upper_attained = true;

    try {
      const EndoMatrix sub = decomposition::restrict_to_subgroup(*em, dec.d);
      const bool sub_ok = std::equal(sub.group().exponents().begin(), sub.group().exponents().end(),
                                     restricted_type.begin(), restricted_type.end()) &&
                          endo::is_automorphism(sub);
      if (!sub_ok || !decomposition::column_structure_check(*em).passed()) ++report.restriction_failures;
    } catch (const Error&) {
      ++report.restriction_failures;
    }
  }
  for (unsigned k : seen_r) report.oracle_r.insert(core::Factored::prime_power(p, k));
  for (unsigned k : seen_pi) report.oracle_pi.insert(core::Factored::prime_power(p, k));
  return report;
}

}  // namespace reidemeister::oracle
