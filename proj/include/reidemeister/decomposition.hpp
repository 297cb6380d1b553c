#pragma once

// abc-decomposition of an exponent vector, the depth sequence d(e), and the
// characteristic subgroups ⊕ p^{d_i}·Z/p^{e_i} together with the matrices of
// restricted automorphisms.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "reidemeister/endo.hpp"

namespace reidemeister::decomposition {

using endo::EndoMatrix;
using endo::PGroupType;

enum class BlockKind { A, B, C };

char to_char(BlockKind kind) noexcept;

/// A: constant run of length ≥ 2. B: pair (v, v+1). C: singleton.
struct Block {
  BlockKind kind;
  std::size_t start;
  std::size_t length;
  std::vector<unsigned> values;

  friend bool operator==(const Block&, const Block&) = default;
};

struct BlockDecomposition {
  std::vector<Block> blocks;
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t c = 0;
  std::vector<unsigned> d;

  /// `((1,1),(2,3),(8))`
  std::string bracketed() const;

  /// Indices j such that e_j opens a b- or c-block.
  std::vector<std::size_t> b_or_c_starts() const;
};

/// Steps in order: maximal constant runs of length ≥ 2 become a-blocks;
/// among the remaining entries, pairs (v, v+1) scanned left to right become
/// b-blocks; whatever is left becomes c-blocks. Also fills `d`.
BlockDecomposition abc_decompose(std::span<const unsigned> e);
BlockDecomposition abc_decompose(const PGroupType& group);

/// d_1 = 0, and d steps up by one exactly when a new b- or c-block begins.
std::vector<unsigned> d_sequence(const BlockDecomposition& dec);

/// Whether ⊕ p^{d_i}·Z/p^{e_i} is characteristic: d nondecreasing and e − d
/// nondecreasing. Throws OutOfRange if some d_i > e_i.
bool is_characteristic(const PGroupType& group, std::span<const unsigned> d);

/// Matrix D⁻¹MD, D = diag(p^{d_i}), of the automorphism induced on the
/// characteristic subgroup, as an endomorphism of type e − d.
/// Throws NotCharacteristic or FullDepth (some d_i = e_i).
EndoMatrix restrict_to_subgroup(const EndoMatrix& em, std::span<const unsigned> d);

struct ColumnCheck {
  std::size_t column;
  BlockKind kind;
  bool off_diagonal_zero;
  bool diagonal_unit;

  bool passed() const noexcept { return off_diagonal_zero && diagonal_unit; }
};

struct ColumnStructureReport {
  std::vector<ColumnCheck> columns;

  bool passed() const noexcept;
};

/// For N = D⁻¹MD with d = d(e): every column j opening a b- or c-block must
/// be zero mod p off the diagonal and a unit mod p on it.
/// Throws NotAutomorphism if the input is not invertible.
ColumnStructureReport column_structure_check(const EndoMatrix& em);

}  // namespace reidemeister::decomposition
