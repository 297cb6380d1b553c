#include <algorithm>

#include "reidemeister/decomposition.hpp"
#include "reidemeister/error.hpp"
#include "reidemeister/spectra.hpp"

namespace reidemeister::spectra {

namespace {

using decomposition::Block;
using decomposition::BlockKind;

// 1 ↦ p^t + 1 on Z/p^e. Π = p^t for 1 ≤ t ≤ e.
EndoMatrix cyclic_part(std::uint64_t p, unsigned e, unsigned t) {
  IntMatrix m(1, 1);
  m(0, 0) = core::power(p, t) + 1;
  return EndoMatrix(PGroupType(p, {e}), std::move(m));
}

// [[1,1],[p,1]] on Z/p^v ⊕ Z/p^w, w ∈ {v, v+1}. Π = p.
EndoMatrix skew_pair(std::uint64_t p, unsigned v, unsigned w) {
  IntMatrix m(2, 2);
  m(0, 0) = 1;
  m(0, 1) = 1;
  m(1, 0) = p;
  m(1, 1) = 1;
  return EndoMatrix(PGroupType(p, {v, w}), std::move(m));
}

// Companion matrix of an irreducible of degree `width` on (Z/p^k)^width.
// Has no eigenvalue in F_p, so Π = 1.
EndoMatrix irreducible_part(std::uint64_t p, unsigned k, unsigned width) {
  return EndoMatrix(PGroupType(p, std::vector<unsigned>(width, k)),
                    companion_matrix(find_irreducible(p, width)));
}

// Two cyclic summands of exponents (lo, hi) sharing target t ≥ 2.
void split_cyclic(std::vector<EndoMatrix>& out, std::uint64_t p, unsigned lo, unsigned hi, unsigned t) {
  const unsigned first = t > hi + 1 ? t - hi : 1;
  out.push_back(cyclic_part(p, lo, first));
  out.push_back(cyclic_part(p, hi, t - first));
}

// A square pair (Z/p^k)^2 carrying target s ∈ [0, 2k].
void homocyclic_pair(std::vector<EndoMatrix>& out, std::uint64_t p, unsigned k, unsigned s) {
  if (s == 0) {
    out.push_back(irreducible_part(p, k, 2));
  } else if (s == 1) {
    out.push_back(skew_pair(p, k, k));
  } else {
    split_cyclic(out, p, k, k, s);
  }
}

void a_block(std::vector<EndoMatrix>& out, std::uint64_t p, unsigned k, unsigned width, unsigned t) {
  if (t == 0) {
    out.push_back(irreducible_part(p, k, width));
    return;
  }
  unsigned rest = t;
  if (width % 2 == 1) {
    const unsigned head = std::min(t, k);
    out.push_back(cyclic_part(p, k, head));
    rest -= head;
  }
  for (unsigned pair = 0; pair < width / 2; ++pair) {
    const unsigned s = std::min(rest, 2 * k);
    homocyclic_pair(out, p, k, s);
    rest -= s;
  }
}

void b_block(std::vector<EndoMatrix>& out, std::uint64_t p, unsigned v, unsigned t) {
  if (t == 1) {
    out.push_back(skew_pair(p, v, v + 1));
  } else {
    split_cyclic(out, p, v, v + 1, t);
  }
}

unsigned block_floor(const Block& blk) { return blk.kind == BlockKind::A ? 0 : 1; }

unsigned block_capacity(const Block& blk) {
  switch (blk.kind) {
    case BlockKind::A: return static_cast<unsigned>(blk.length) * blk.values.front();
    case BlockKind::B: return 2 * blk.values.front() + 1;
    case BlockKind::C: return blk.values.front();
  }
  return 0;
}

}  // namespace

EndoMatrix witness(const PGroupType& group, unsigned m) {
  const auto dec = decomposition::abc_decompose(group);
  const unsigned lo = static_cast<unsigned>(dec.b + dec.c);
  const unsigned hi = group.total_exponent();
  if (m < lo || m > hi) {
    throw Error(ErrorCode::OutOfSpectrum, "exponent " + std::to_string(m) + " outside [" +
                                              std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  if (group.is_trivial()) return EndoMatrix::identity(group);

  const std::uint64_t p = group.prime();
  unsigned budget = m - lo;
  std::vector<EndoMatrix> parts;
  for (const Block& blk : dec.blocks) {
    const unsigned raise = std::min(budget, block_capacity(blk) - block_floor(blk));
    budget -= raise;
    const unsigned t = block_floor(blk) + raise;
    switch (blk.kind) {
      case BlockKind::A:
        a_block(parts, p, blk.values.front(), static_cast<unsigned>(blk.length), t);
        break;
      case BlockKind::B:
        b_block(parts, p, blk.values.front(), t);
        break;
      case BlockKind::C:
        parts.push_back(cyclic_part(p, blk.values.front(), t));
        break;
    }
  }
  return endo::block_diagonal(parts);
}

EndoMatrix witness_r(const PGroupType& group, unsigned m) {
  if (group.prime() == 2) return witness(group, m);
  const unsigned hi = group.total_exponent();
  if (m > hi) throw Error(ErrorCode::OutOfSpectrum, "exponent " + std::to_string(m) + " exceeds " + std::to_string(hi));
  if (group.is_trivial()) return EndoMatrix::identity(group);

  const std::size_t n = group.rank();
  IntMatrix diag(n, n);
  unsigned budget = m;
  for (std::size_t i = 0; i < n; ++i) {
    const unsigned r = std::min(budget, group.exponent(i));
    budget -= r;
    diag(i, i) = core::power(group.prime(), r) + 1;
  }
  return EndoMatrix(group, std::move(diag));
}

std::map<std::uint64_t, EndoMatrix> witness_abelian(const AbelianGroupType& group, const Factored& target) {
  if (!spec_r_abelian(group).contains(target)) {
    throw Error(ErrorCode::OutOfSpectrum, target.decimal() + " is not in the Reidemeister spectrum of " +
                                              group.to_string());
  }
  std::map<std::uint64_t, EndoMatrix> out;
  for (const auto& component : group.components()) {
    out.emplace(component.prime(), witness_r(component, target.valuation(component.prime())));
  }
  return out;
}

}  // namespace reidemeister::spectra
