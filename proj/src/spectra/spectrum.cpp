#include <algorithm>

#include "reidemeister/decomposition.hpp"
#include "reidemeister/error.hpp"
#include "reidemeister/spectra.hpp"

namespace reidemeister::spectra {

Spectrum::Spectrum(std::vector<Factored> values) {
  for (auto& v : values) insert(std::move(v));
}

Spectrum Spectrum::prime_powers(std::uint64_t p, unsigned lo, unsigned hi) {
  Spectrum out;
  for (unsigned k = lo; k <= hi && lo <= hi; ++k) out.values_.push_back(Factored::prime_power(p, k));
  return out;
}

void Spectrum::insert(Factored value) {
  auto it = std::lower_bound(values_.begin(), values_.end(), value);
  if (it != values_.end() && *it == value) return;
  values_.insert(it, std::move(value));
}

bool Spectrum::contains(const Factored& value) const {
  return std::binary_search(values_.begin(), values_.end(), value);
}

std::string Spectrum::to_string() const {
  std::string out;
  for (const auto& v : values_) {
    if (!out.empty()) out += ' ';
    out += v.decimal();
  }
  return out;
}

Spectrum operator*(const Spectrum& x, const Spectrum& y) {
  Spectrum out;
  for (const auto& a : x.values_) {
    for (const auto& b : y.values_) out.insert(a * b);
  }
  return out;
}

Factored product_number(const EndoMatrix& em) {
  if (!endo::is_automorphism(em)) throw Error(ErrorCode::NotAutomorphism, "product number needs an automorphism");
  const std::uint64_t p = em.group().prime();
  unsigned exponent = endo::fixed_point_exponent(em);
  for (std::uint64_t i = 2; i < p; ++i) {
    Integer unit;
    mpz_set_ui(unit.get_mpz_t(), i);
    exponent += endo::fixed_point_exponent(endo::scale(em, unit));
  }
  return Factored::prime_power(p, exponent);
}

Spectrum spec_r_odd_p(const PGroupType& group) {
  if (group.prime() == 2) throw Error(ErrorCode::WrongPrime, "expected an odd prime");
  return Spectrum::prime_powers(group.prime(), 0, group.total_exponent());
}

Spectrum spec_p(const PGroupType& group) {
  const auto dec = decomposition::abc_decompose(group);
  return Spectrum::prime_powers(group.prime(), static_cast<unsigned>(dec.b + dec.c),
                                group.total_exponent());
}

Spectrum spec_r_2group(const PGroupType& group) {
  if (group.prime() != 2) throw Error(ErrorCode::WrongPrime, "expected p = 2");
  return spec_p(group);
}

Spectrum spec_r_p_group(const PGroupType& group) {
  return group.prime() == 2 ? spec_r_2group(group) : spec_r_odd_p(group);
}

Spectrum spec_r_abelian(const AbelianGroupType& group) {
  Spectrum out({Factored{}});
  for (const auto& component : group.components()) out = out * spec_r_p_group(component);
  return out;
}

}  // namespace reidemeister::spectra
