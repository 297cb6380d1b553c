#include <algorithm>

#include "reidemeister/decomposition.hpp"
#include "reidemeister/error.hpp"

namespace reidemeister::decomposition {

using core::IntMatrix;
using core::Integer;

bool is_characteristic(const PGroupType& group, std::span<const unsigned> d) {
  const auto e = group.exponents();
  if (d.size() != e.size()) throw Error(ErrorCode::DimensionMismatch, "depth vector length");
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] > e[i]) throw Error(ErrorCode::OutOfRange, "depth exceeds exponent");
  }
  for (std::size_t i = 0; i + 1 < d.size(); ++i) {
    if (d[i] > d[i + 1]) return false;
    if (e[i] - d[i] > e[i + 1] - d[i + 1]) return false;
  }
  return true;
}

EndoMatrix restrict_to_subgroup(const EndoMatrix& em, std::span<const unsigned> d) {
  const PGroupType& group = em.group();
  if (!is_characteristic(group, d)) {
    throw Error(ErrorCode::NotCharacteristic, "depth vector does not give a characteristic subgroup");
  }
  const auto e = group.exponents();
  std::vector<unsigned> reduced(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (d[i] == e[i]) throw Error(ErrorCode::FullDepth, "depth equals exponent at index " + std::to_string(i));
    reduced[i] = e[i] - d[i];
  }

  const std::uint64_t p = group.prime();
  const std::size_t n = e.size();
  IntMatrix conj(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Integer v = em.matrix()(i, j) * core::power(p, d[j]);
      const Integer down = core::power(p, d[i]);
      if (!mpz_divisible_p(v.get_mpz_t(), down.get_mpz_t())) {
        throw Error(ErrorCode::NotCharacteristic, "D^-1 M D is not integral");
      }
      mpz_divexact(conj(i, j).get_mpz_t(), v.get_mpz_t(), down.get_mpz_t());
    }
  }
  return EndoMatrix(PGroupType(p, std::move(reduced)), std::move(conj));
}

bool ColumnStructureReport::passed() const noexcept {
  return std::all_of(columns.begin(), columns.end(), [](const ColumnCheck& c) { return c.passed(); });
}

ColumnStructureReport column_structure_check(const EndoMatrix& em) {
  if (!endo::is_automorphism(em)) throw Error(ErrorCode::NotAutomorphism, "column check needs an automorphism");
  const BlockDecomposition dec = abc_decompose(em.group());
  const EndoMatrix restricted = restrict_to_subgroup(em, dec.d);
  const IntMatrix reduced = endo::induced_mod_p(restricted);

  ColumnStructureReport report;
  for (const Block& blk : dec.blocks) {
    if (blk.kind == BlockKind::A) continue;
    const std::size_t j = blk.start;
    ColumnCheck check{j, blk.kind, true, sgn(reduced(j, j)) != 0};
    for (std::size_t i = 0; i < reduced.rows(); ++i) {
      if (i != j && sgn(reduced(i, j)) != 0) check.off_diagonal_zero = false;
    }
    report.columns.push_back(check);
  }
  return report;
}

}  // namespace reidemeister::decomposition
