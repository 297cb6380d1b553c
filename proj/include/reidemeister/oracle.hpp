#pragma once

// Brute-force ground truth: exhaustive enumeration of endomorphisms through
// their canonical matrices, element-by-element fixed-point and
// twisted-class counting, and oracle spectra for comparison with the
// closed forms.

#include <cstdint>
#include <optional>
#include <vector>

#include "reidemeister/endo.hpp"
#include "reidemeister/spectra.hpp"

namespace reidemeister::oracle {

using core::Integer;
using endo::EndoMatrix;
using endo::PGroupType;
using spectra::Spectrum;

struct EnumBudget {
  std::uint64_t max_endos = std::uint64_t{1} << 20;
  std::uint64_t max_group_order = std::uint64_t{1} << 14;

  /// Defaults, overridden by REIDEMEISTER_BUDGET=`max_endos[,max_group_order]`.
  static EnumBudget from_environment();
};

/// ∏_{i,j} p^{min(e_i, e_j)}, the number of distinct endomorphisms.
Integer endomorphism_count(const PGroupType& group);

/// Canonical endomorphisms in lexicographic order of the parameter vector t,
/// where entry (i, j) is p^{max(0, e_i − e_j)}·t_ij with
/// t_ij ∈ [0, p^{min(e_i, e_j)}) and (0, 0) is the most significant entry.
class EndomorphismStream {
 public:
  /// Throws BudgetExceeded if the count exceeds budget.max_endos.
  EndomorphismStream(PGroupType group, const EnumBudget& budget);
  /// Restricts to linear positions [begin, end) of the full stream.
  EndomorphismStream(PGroupType group, const EnumBudget& budget, std::uint64_t begin, std::uint64_t end);

  std::optional<EndoMatrix> next();
  std::uint64_t total() const noexcept { return total_; }

  /// Positions whose first parameter t_11 equals `value`.
  static std::pair<std::uint64_t, std::uint64_t> partition(const PGroupType& group, std::uint64_t value);
  static std::uint64_t partition_count(const PGroupType& group);

 private:
  PGroupType group_;
  std::vector<std::uint64_t> radix_;
  std::vector<Integer> step_;
  std::vector<std::uint64_t> digits_;
  std::uint64_t total_ = 0;
  std::uint64_t position_ = 0;
  std::uint64_t end_ = 0;
};

/// Endomorphisms filtered by invertibility mod p.
class AutomorphismStream {
 public:
  AutomorphismStream(PGroupType group, const EnumBudget& budget);
  AutomorphismStream(PGroupType group, const EnumBudget& budget, std::uint64_t begin, std::uint64_t end);

  std::optional<EndoMatrix> next();

 private:
  EndomorphismStream inner_;
};

std::vector<EndoMatrix> enumerate_endomorphisms(const PGroupType& group, const EnumBudget& budget);
std::vector<EndoMatrix> enumerate_automorphisms(const PGroupType& group, const EnumBudget& budget);

/// Counts x with φ(x) = x by visiting every element. BudgetExceeded when
/// |P| > budget.max_group_order.
std::uint64_t brute_fixed_points(const EndoMatrix& em, const EnumBudget& budget);

/// |P| / |im(Id − φ)|, with the image collected element by element.
std::uint64_t twisted_class_count(const EndoMatrix& em, const EnumBudget& budget);

/// {R(ψ)} (or {Π(ψ)} when use_pi) over every automorphism ψ.
Spectrum oracle_spectrum(const PGroupType& group, bool use_pi, const EnumBudget& budget);

/// Every exponent vector e (p fixed) whose endomorphism count fits the
/// budget, ordered by rank then lexicographically.
std::vector<PGroupType> types_within_budget(std::uint64_t p, const EnumBudget& budget);

/// One pass over Aut(P) comparing the oracle with the closed forms.
struct CellReport {
  PGroupType group;
  bool skipped = false;
  std::uint64_t automorphisms = 0;
  Spectrum oracle_r;
  Spectrum oracle_pi;
  Spectrum closed_r;
  Spectrum closed_pi;
  /// Automorphisms with Π outside [p^{b+c}, p^{Σ}].
  std::uint64_t bound_violations = 0;
  bool lower_attained = false;
  bool upper_attained = false;
  /// Automorphisms whose restriction to the d(e) subgroup is not an
  /// automorphism of type e − d(e), or fails the column-structure check.
  std::uint64_t restriction_failures = 0;

  bool spectra_match() const { return oracle_r == closed_r && oracle_pi == closed_pi; }
  bool bounds_ok() const { return bound_violations == 0 && lower_attained && upper_attained; }
  bool passed() const { return skipped || (spectra_match() && bounds_ok() && restriction_failures == 0); }
};

CellReport verify_cell(const PGroupType& group, const EnumBudget& budget);

}  // namespace reidemeister::oracle
