#pragma once

// Reidemeister spectra and product-number spectra of finite abelian groups,
// the product number Π(φ) = ∏_{i=1}^{p-1} |Fix(μ_i ∘ φ)|, and explicit
// automorphisms attaining every spectrum value.

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "reidemeister/core.hpp"
#include "reidemeister/endo.hpp"

namespace reidemeister::spectra {

using core::Factored;
using core::IntMatrix;
using core::Integer;
using endo::EndoMatrix;
using endo::PGroupType;

/// Finite set of positive integers, kept factored and sorted by value.
class Spectrum {
 public:
  Spectrum() = default;
  explicit Spectrum(std::vector<Factored> values);

  /// {p^lo, …, p^hi}; empty when lo > hi.
  static Spectrum prime_powers(std::uint64_t p, unsigned lo, unsigned hi);

  void insert(Factored value);
  bool contains(const Factored& value) const;
  std::span<const Factored> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }

  /// Space-separated decimals, ascending.
  std::string to_string() const;

  /// Product set {a·b : a ∈ x, b ∈ y}.
  friend Spectrum operator*(const Spectrum& x, const Spectrum& y);
  friend bool operator==(const Spectrum&, const Spectrum&) = default;

 private:
  std::vector<Factored> values_;
};

/// A finite abelian group as its Sylow components, one PGroupType per prime
/// (ascending, trivial components dropped).
class AbelianGroupType {
 public:
  AbelianGroupType() = default;
  /// Components must have distinct primes (InvalidType otherwise).
  explicit AbelianGroupType(std::vector<PGroupType> components);
  /// Orders must be ≥ 2 (InvalidType otherwise).
  static AbelianGroupType from_cyclic_orders(std::span<const std::uint64_t> orders);

  const std::vector<PGroupType>& components() const noexcept { return components_; }
  /// Sylow p-subgroup type; trivial when p does not divide |A|.
  PGroupType sylow(std::uint64_t p) const;
  Factored order() const;
  /// Elementary divisors p^{e_i}, grouped by ascending prime.
  std::vector<Integer> cyclic_orders() const;
  /// `Z/4 + Z/3`, or `0` for the trivial group.
  std::string to_string() const;

  friend bool operator==(const AbelianGroupType&, const AbelianGroupType&) = default;

 private:
  std::vector<PGroupType> components_;
};

/// Either cyclic orders `4,8,3` or an explicit `p=2 e=2,3`.
AbelianGroupType parse_group_spec(std::string_view text);

/// Throws NotAutomorphism.
Factored product_number(const EndoMatrix& em);

/// {1, p, …, p^{Σ(e)}}; WrongPrime for p = 2.
Spectrum spec_r_odd_p(const PGroupType& group);
/// {p^m : b(e) + c(e) ≤ m ≤ Σ(e)}.
Spectrum spec_p(const PGroupType& group);
/// Equal to spec_p; WrongPrime for odd p.
Spectrum spec_r_2group(const PGroupType& group);
/// Dispatches to spec_r_2group or spec_r_odd_p.
Spectrum spec_r_p_group(const PGroupType& group);
/// Product set of the per-Sylow spectra.
Spectrum spec_r_abelian(const AbelianGroupType& group);

/// Block-diagonal automorphism with Π = p^m, assembled along the
/// abc-decomposition. Throws OutOfSpectrum unless b(e)+c(e) ≤ m ≤ Σ(e).
EndoMatrix witness(const PGroupType& group, unsigned m);

/// Automorphism with R = p^m: `witness` for p = 2, and for odd p a diagonal
/// of maps 1 ↦ p^{r_i} + 1 (any m ∈ [0, Σ(e)]).
EndoMatrix witness_r(const PGroupType& group, unsigned m);

/// One automorphism per Sylow component whose Reidemeister numbers multiply
/// to `target`. Throws OutOfSpectrum.
std::map<std::uint64_t, EndoMatrix> witness_abelian(const AbelianGroupType& group,
                                                    const Factored& target);

/// Monic polynomial, coefficients from the constant term upward; the last
/// coefficient is 1.
struct Polynomial {
  std::vector<std::int64_t> coefficients;

  std::size_t degree() const noexcept { return coefficients.empty() ? 0 : coefficients.size() - 1; }
  /// `x^3 + x + 1`
  std::string to_string() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;
};

/// Trial division by every monic polynomial of degree 1..⌊n/2⌋ over F_p.
bool is_irreducible(const Polynomial& f, std::uint64_t p);

/// Smallest monic irreducible of degree n over F_p, ordering candidates by
/// their coefficients from x^{n-1} down to the constant term.
Polynomial find_irreducible(std::uint64_t p, unsigned n);

/// Ones on the subdiagonal, negated coefficients in the last column.
IntMatrix companion_matrix(const Polynomial& f);

}  // namespace reidemeister::spectra
