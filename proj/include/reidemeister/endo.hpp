#pragma once

// Matrix model of endomorphisms of a finite abelian p-group
// P = Z/p^{e_1} ⊕ ... ⊕ Z/p^{e_n} with e nondecreasing. An integer matrix M
// with p^{e_i - e_j} | M_ij (j ≤ i) acts by x ↦ Mx coordinate-wise, and it
// is an automorphism exactly when M is invertible modulo p.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "reidemeister/core.hpp"

namespace reidemeister::endo {

using core::Factored;
using core::IntMatrix;
using core::Integer;

/// A prime together with a nondecreasing vector of positive exponents.
/// The empty exponent vector is the trivial group.
class PGroupType {
 public:
  /// Sorts `exponents`; throws NotPrime or NonPositiveExponent.
  PGroupType(std::uint64_t p, std::vector<unsigned> exponents);

  std::uint64_t prime() const noexcept { return p_; }
  std::span<const unsigned> exponents() const noexcept { return e_; }
  unsigned exponent(std::size_t i) const { return e_[i]; }
  std::size_t rank() const noexcept { return e_.size(); }
  bool is_trivial() const noexcept { return e_.empty(); }

  /// Σ(e); |P| = p^{Σ(e)}.
  unsigned total_exponent() const noexcept;
  Factored order() const;
  /// p^{e_i}, the order of the i-th cyclic summand.
  Integer modulus(std::size_t i) const;
  /// p^{e_n}, or 1 for the trivial group.
  Integer exponent_of_group() const;

  /// `p=2 e=2,3`
  std::string to_string() const;

  friend bool operator==(const PGroupType&, const PGroupType&) = default;
  friend auto operator<=>(const PGroupType&, const PGroupType&) = default;

 private:
  std::uint64_t p_;
  std::vector<unsigned> e_;
};

/// Canonicalizes a raw exponent list into a PGroupType.
PGroupType validate_type(std::uint64_t p, std::span<const long long> raw);

/// Parses `p=2 e=2,3` (tokens separated by whitespace; `e=` may be empty).
PGroupType parse_p_group(std::string_view text);

class GroupElement {
 public:
  /// Reduces coordinate i modulo p^{e_i}.
  GroupElement(PGroupType group, std::vector<Integer> coords);

  const PGroupType& group() const noexcept { return group_; }
  std::span<const Integer> coords() const noexcept { return coords_; }

  friend bool operator==(const GroupElement&, const GroupElement&) = default;

 private:
  PGroupType group_;
  std::vector<Integer> coords_;
};

/// An endomorphism in matrix form. Row i is stored reduced into [0, p^{e_i}),
/// so two matrices describing the same map compare equal.
class EndoMatrix {
 public:
  /// Throws DimensionMismatch for a wrongly sized matrix and
  /// InvalidEndomorphism when a divisibility constraint fails.
  EndoMatrix(PGroupType group, IntMatrix m);

  static EndoMatrix identity(const PGroupType& group);

  const PGroupType& group() const noexcept { return group_; }
  const IntMatrix& matrix() const noexcept { return m_; }

  friend bool operator==(const EndoMatrix&, const EndoMatrix&) = default;

 private:
  struct Trusted {};
  EndoMatrix(PGroupType group, IntMatrix m, Trusted);
  friend class EndoBuilder;

  PGroupType group_;
  IntMatrix m_;
};

/// Builds EndoMatrix values from entries already known to be canonical,
/// skipping validation. Used by the enumerator and by internal constructions.
class EndoBuilder {
 public:
  static EndoMatrix trusted(PGroupType group, IntMatrix m) {
    return EndoMatrix(std::move(group), std::move(m), EndoMatrix::Trusted{});
  }
};

bool is_valid_endo(const PGroupType& group, const IntMatrix& m);
bool is_automorphism(const EndoMatrix& em);

GroupElement apply(const EndoMatrix& em, const GroupElement& x);

/// Matrix of a ∘ b.
EndoMatrix compose(const EndoMatrix& a, const EndoMatrix& b);

/// Matrix of x ↦ i·φ(x); i must be coprime to p.
EndoMatrix scale(const EndoMatrix& em, const Integer& i);

/// |Fix(φ)| = |ker(Id − φ)|, the index of the lattice spanned by the
/// columns of [M − I | diag(p^{e_1}, …, p^{e_n})].
Factored fixed_point_count(const EndoMatrix& em);

/// Exponent k with |Fix(φ)| = p^k.
unsigned fixed_point_exponent(const EndoMatrix& em);

/// Same as fixed_point_count, always through the arbitrary-precision Smith
/// reduction (no p-local fast path).
Factored fixed_point_count_exact(const EndoMatrix& em);

/// Number of twisted conjugacy classes; equals |Fix(φ)| on abelian groups.
Factored reidemeister_number(const EndoMatrix& em);

/// R of 1 ↦ k on Z/p^n, which is gcd(k − 1, p^n).
Factored reidemeister_cyclic(const Integer& k, std::uint64_t p, unsigned n);

/// Entrywise reduction mod p: the induced map on P/pP.
IntMatrix induced_mod_p(const EndoMatrix& em);

/// Direct sum of maps on consecutive summands. The concatenated exponent
/// vector must be nondecreasing (InvalidType otherwise).
EndoMatrix block_diagonal(std::span<const EndoMatrix> parts);

}  // namespace reidemeister::endo
