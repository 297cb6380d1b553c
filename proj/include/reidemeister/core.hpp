#pragma once

// Exact integer matrix arithmetic: Smith and Hermite reduction, lattice
// indices, determinants over prime fields, and factored positive integers.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace reidemeister::core {

using Integer = mpz_class;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix diagonal(std::span<const Integer> values);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<const Integer> entries() const noexcept { return entries_; }

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);

/// Horizontal concatenation [a | b].
IntMatrix hconcat(const IntMatrix& a, const IntMatrix& b);

/// Parses `1,1;2,1`: rows split on `;`, entries on `,`, whitespace ignored.
IntMatrix parse_matrix(std::string_view text);
std::string format_matrix(const IntMatrix& m);

/// Positive integer kept as a prime factorization. The empty map is 1.
class Factored {
 public:
  using Map = std::map<std::uint64_t, unsigned>;

  Factored() = default;
  explicit Factored(Map factors);

  static Factored prime_power(std::uint64_t p, unsigned exponent);
  /// Factors n ≥ 1 by trial division.
  static Factored from_integer(std::uint64_t n);

  const Map& factors() const noexcept { return factors_; }
  unsigned valuation(std::uint64_t p) const;
  bool is_one() const noexcept { return factors_.empty(); }

  Integer value() const;
  std::string decimal() const;
  /// `2^2 * 3`; `1` for the empty factorization.
  std::string factorization() const;

  bool divides(const Factored& other) const;

  friend Factored operator*(const Factored& a, const Factored& b);
  friend bool operator==(const Factored& a, const Factored& b) = default;
  /// Orders by numeric value.
  friend std::strong_ordering operator<=>(const Factored& a, const Factored& b);

 private:
  Map factors_;
};

/// Diagonal of the Smith normal form: each nonzero entry divides the next,
/// zeros last, all entries nonnegative.
std::vector<Integer> smith_invariants(const IntMatrix& m);

/// Index [Zⁿ : L] of the lattice spanned by the columns of an n×m matrix.
/// Throws RankDeficient unless the columns span a rank-n sublattice.
Integer lattice_index(const IntMatrix& generators);

/// Lower-triangular n×n basis (positive diagonal, off-diagonal entries
/// reduced into [0, diagonal)) of the column lattice of an n×m matrix.
IntMatrix hermite_basis(const IntMatrix& generators);

/// Fast path for lattice_index when the lattice is known to contain
/// p^top·Zⁿ: `entries` is an n×m row-major matrix already reduced mod p^top,
/// and the result is k with [Zⁿ : L] = p^k. Requires p^top < 2^62.
unsigned local_index_exponent(std::span<const std::int64_t> entries, std::size_t rows,
                              std::size_t cols, std::uint64_t p, unsigned top);

std::uint64_t det_mod_p(const IntMatrix& m, std::uint64_t p);

// Small number-theory helpers shared by the other modules.
bool is_prime(std::uint64_t n);
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);
Integer power(std::uint64_t base, unsigned exponent);
/// p^exponent if it stays below 2^62, otherwise 0.
std::uint64_t small_power(std::uint64_t base, unsigned exponent);
/// Inverse of a unit modulo q (q ≥ 2).
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t q);
/// Largest k with p^k | value; value must be nonzero.
unsigned valuation(const Integer& value, std::uint64_t p);

}  // namespace reidemeister::core
