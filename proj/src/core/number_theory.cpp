#include <limits>

#include "reidemeister/core.hpp"
#include "reidemeister/error.hpp"

namespace reidemeister::core {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  Integer z;
  mpz_set_ui(z.get_mpz_t(), n);
  // GMP's test is deterministic (BPSW) below 2^64.
  return mpz_probab_prime_p(z.get_mpz_t(), 30) != 0;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::OutOfRange, "cannot factor 0");
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d <= n / d; ++d) {
    if (n % d != 0) continue;
    unsigned k = 0;
    while (n % d == 0) {
      n /= d;
      ++k;
    }
    out.emplace_back(d, k);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

Integer power(std::uint64_t base, unsigned exponent) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, exponent);
  return out;
}

std::uint64_t small_power(std::uint64_t base, unsigned exponent) {
  constexpr std::uint64_t limit = std::uint64_t{1} << 62;
  std::uint64_t out = 1;
  for (unsigned i = 0; i < exponent; ++i) {
    if (out > limit / base) return 0;
    out *= base;
  }
  return out >= limit ? 0 : out;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t q) {
  // Extended Euclid on signed 128-bit to stay clear of overflow.
  __int128 r0 = static_cast<__int128>(q), r1 = static_cast<__int128>(a % q);
  __int128 s0 = 0, s1 = 1;
  while (r1 != 0) {
    __int128 t = r0 / r1;
    __int128 r2 = r0 - t * r1;
    r0 = r1;
    r1 = r2;
    __int128 s2 = s0 - t * s1;
    s0 = s1;
    s1 = s2;
  }
  if (r0 != 1) throw Error(ErrorCode::NotCoprime, "value is not a unit modulo " + std::to_string(q));
  s0 %= static_cast<__int128>(q);
  if (s0 < 0) s0 += q;
  return static_cast<std::uint64_t>(s0);
}

unsigned valuation(const Integer& value, std::uint64_t p) {
  if (sgn(value) == 0) throw Error(ErrorCode::OutOfRange, "valuation of zero");
  Integer rest;
  Integer prime;
  mpz_set_ui(prime.get_mpz_t(), p);
  return static_cast<unsigned>(mpz_remove(rest.get_mpz_t(), value.get_mpz_t(), prime.get_mpz_t()));
}

std::uint64_t det_mod_p(const IntMatrix& m, std::uint64_t p) {
  if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  std::vector<std::uint64_t> a(n * n);
  Integer r;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      mpz_fdiv_r_ui(r.get_mpz_t(), m(i, j).get_mpz_t(), p);
      a[i * n + j] = r.get_ui();
    }
  }
  auto mul = [p](std::uint64_t x, std::uint64_t y) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * y % p);
  };
  std::uint64_t det = 1 % p;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot * n + col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[pivot * n + j], a[col * n + j]);
      det = (p - det) % p;
    }
    const std::uint64_t piv = a[col * n + col];
    det = mul(det, piv);
    const std::uint64_t inv = inverse_mod(piv, p);
    for (std::size_t i = col + 1; i < n; ++i) {
      const std::uint64_t f = mul(a[i * n + col], inv);
      if (f == 0) continue;
      for (std::size_t j = col; j < n; ++j) {
        a[i * n + j] = (a[i * n + j] + p - mul(f, a[col * n + j])) % p;
      }
    }
  }
  return det;
}

}  // namespace reidemeister::core
