#include <algorithm>
#include <optional>

#include "reidemeister/core.hpp"
#include "reidemeister/error.hpp"

namespace reidemeister::core {

namespace {

struct Position {
  std::size_t row;
  std::size_t col;
};

// Smallest nonzero |entry| in the lower-right block starting at (t, t);
// ties go to the lowest row, then the lowest column.
std::optional<Position> smallest_pivot(const IntMatrix& a, std::size_t t) {
  std::optional<Position> best;
  Integer best_abs;
  for (std::size_t i = t; i < a.rows(); ++i) {
    for (std::size_t j = t; j < a.cols(); ++j) {
      if (sgn(a(i, j)) == 0) continue;
      Integer v = abs(a(i, j));
      if (!best || v < best_abs) {
        best = Position{i, j};
        best_abs = std::move(v);
      }
    }
  }
  return best;
}

void add_row_multiple(IntMatrix& a, std::size_t target, std::size_t source, const Integer& factor,
                      std::size_t from_col) {
  for (std::size_t j = from_col; j < a.cols(); ++j) a(target, j) -= factor * a(source, j);
}

void add_col_multiple(IntMatrix& a, std::size_t target, std::size_t source, const Integer& factor,
                      std::size_t from_row) {
  for (std::size_t i = from_row; i < a.rows(); ++i) a(i, target) -= factor * a(i, source);
}

}  // namespace

std::vector<Integer> smith_invariants(const IntMatrix& m) {
  IntMatrix a = m;
  const std::size_t k = std::min(a.rows(), a.cols());
  std::vector<Integer> out(k);
  Integer q;

  for (std::size_t t = 0; t < k; ++t) {
    bool exhausted = false;
    while (true) {
      auto pivot = smallest_pivot(a, t);
      if (!pivot) {
        exhausted = true;
        break;
      }
      a.swap_rows(t, pivot->row);
      a.swap_cols(t, pivot->col);

      bool clear = true;
      for (std::size_t i = t + 1; i < a.rows(); ++i) {
        if (sgn(a(i, t)) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
        add_row_multiple(a, i, t, q, t);
        if (sgn(a(i, t)) != 0) clear = false;
      }
      for (std::size_t j = t + 1; j < a.cols(); ++j) {
        if (sgn(a(t, j)) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
        add_col_multiple(a, j, t, q, t);
        if (sgn(a(t, j)) != 0) clear = false;
      }
      if (!clear) continue;

      // Pivot must divide the whole remaining block.
      std::optional<std::size_t> offending;
      for (std::size_t i = t + 1; i < a.rows() && !offending; ++i) {
        for (std::size_t j = t + 1; j < a.cols(); ++j) {
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            offending = i;
            break;
          }
        }
      }
      if (!offending) break;
      for (std::size_t j = t; j < a.cols(); ++j) a(t, j) += a(*offending, j);
    }
    if (exhausted) break;
    out[t] = abs(a(t, t));
  }
  return out;
}

Integer lattice_index(const IntMatrix& generators) {
  const std::size_t n = generators.rows();
  if (generators.cols() < n) {
    throw Error(ErrorCode::RankDeficient, "fewer generators than the ambient rank");
  }
  Integer index = 1;
  for (const Integer& s : smith_invariants(generators)) {
    if (sgn(s) == 0) throw Error(ErrorCode::RankDeficient, "generators span a lattice of lower rank");
    index *= s;
  }
  return index;
}

IntMatrix hermite_basis(const IntMatrix& generators) {
  IntMatrix a = generators;
  const std::size_t n = a.rows();
  if (a.cols() < n) throw Error(ErrorCode::RankDeficient, "fewer generators than the ambient rank");
  Integer q;

  for (std::size_t i = 0; i < n; ++i) {
    // Euclid across columns i.. until row i has a single nonzero entry.
    while (true) {
      std::optional<std::size_t> best;
      for (std::size_t j = i; j < a.cols(); ++j) {
        if (sgn(a(i, j)) == 0) continue;
        if (!best || abs(a(i, j)) < abs(a(i, *best))) best = j;
      }
      if (!best) throw Error(ErrorCode::RankDeficient, "generators span a lattice of lower rank");
      a.swap_cols(i, *best);
      bool done = true;
      for (std::size_t j = i + 1; j < a.cols(); ++j) {
        if (sgn(a(i, j)) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), a(i, j).get_mpz_t(), a(i, i).get_mpz_t());
        add_col_multiple(a, j, i, q, 0);
        if (sgn(a(i, j)) != 0) done = false;
      }
      if (done) break;
    }
    if (sgn(a(i, i)) < 0) {
      for (std::size_t r = 0; r < n; ++r) a(r, i) = -a(r, i);
    }
    for (std::size_t j = 0; j < i; ++j) {
      mpz_fdiv_q(q.get_mpz_t(), a(i, j).get_mpz_t(), a(i, i).get_mpz_t());
      if (sgn(q) != 0) add_col_multiple(a, j, i, q, 0);
    }
  }

  IntMatrix basis(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) basis(r, c) = a(r, c);
  }
  return basis;
}

unsigned local_index_exponent(std::span<const std::int64_t> entries, std::size_t rows,
                              std::size_t cols, std::uint64_t p, unsigned top) {
  if (entries.size() != rows * cols) throw Error(ErrorCode::DimensionMismatch, "local index input");
  if (rows == 0) return 0;
  const std::uint64_t q = small_power(p, top);
  if (q == 0) throw Error(ErrorCode::OutOfRange, "modulus too large for the local fast path");

  std::vector<std::uint64_t> a(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    std::int64_t v = entries[i] % static_cast<std::int64_t>(q);
    a[i] = static_cast<std::uint64_t>(v < 0 ? v + static_cast<std::int64_t>(q) : v);
  }
  auto mul = [q](std::uint64_t x, std::uint64_t y) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * y % q);
  };
  auto val = [p](std::uint64_t x) {
    unsigned v = 0;
    while (x % p == 0) {
      x /= p;
      ++v;
    }
    return v;
  };

  std::vector<bool> row_used(rows, false), col_used(cols, false);
  unsigned total = 0;
  for (std::size_t step = 0; step < rows; ++step) {
    // Pivot of minimal p-adic valuation among the remaining rows/columns.
    std::size_t pr = rows, pc = cols;
    unsigned best = top;
    for (std::size_t i = 0; i < rows && best > 0; ++i) {
      if (row_used[i]) continue;
      for (std::size_t j = 0; j < cols; ++j) {
        if (col_used[j] || a[i * cols + j] == 0) continue;
        const unsigned v = val(a[i * cols + j]);
        if (v < best) {
          best = v;
          pr = i;
          pc = j;
          if (v == 0) break;
        }
      }
    }
    if (pr == rows) {
      total += top * static_cast<unsigned>(rows - step);
      break;
    }
    total += best;
    const std::uint64_t scale = small_power(p, best);
    const std::uint64_t unit_inv = inverse_mod(a[pr * cols + pc] / scale, q);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == pr || row_used[i] || a[i * cols + pc] == 0) continue;
      const std::uint64_t f = mul(a[i * cols + pc] / scale, unit_inv);
      for (std::size_t j = 0; j < cols; ++j) {
        if (col_used[j]) continue;
        a[i * cols + j] = (a[i * cols + j] + q - mul(f, a[pr * cols + j])) % q;
      }
    }
    row_used[pr] = true;
    col_used[pc] = true;
  }
  return total;
}

}  // namespace reidemeister::core
