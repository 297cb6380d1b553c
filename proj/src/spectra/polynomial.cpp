#include "reidemeister/error.hpp"
#include "reidemeister/spectra.hpp"

namespace reidemeister::spectra {

namespace {

using Coeffs = std::vector<std::uint64_t>;

Coeffs reduce(const Polynomial& f, std::uint64_t p) {
  Coeffs out;
  for (std::int64_t c : f.coefficients) {
    std::int64_t r = c % static_cast<std::int64_t>(p);
    out.push_back(static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(p) : r));
  }
  return out;
}

// Remainder of a modulo a monic divisor over F_p.
Coeffs remainder(Coeffs a, const Coeffs& divisor, std::uint64_t p) {
  const std::size_t dd = divisor.size() - 1;
  while (a.size() > dd) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - dd;
    for (std::size_t i = 0; i <= dd; ++i) {
      a[shift + i] = static_cast<std::uint64_t>(
          (a[shift + i] + static_cast<unsigned __int128>(p - lead) * divisor[i]) % p);
    }
    a.pop_back();
  }
  return a;
}

bool is_zero(const Coeffs& a) {
  for (auto c : a) {
    if (c != 0) return false;
  }
  return true;
}

// Monic polynomial of degree n whose lower coefficients are the base-p
// digits of `index`, the constant term least significant.
Coeffs monic_from_index(std::uint64_t index, unsigned n, std::uint64_t p) {
  Coeffs out(n + 1, 0);
  for (unsigned i = 0; i < n; ++i) {
    out[i] = index % p;
    index /= p;
  }
  out[n] = 1;
  return out;
}

}  // namespace

std::string Polynomial::to_string() const {
  std::string out;
  for (std::size_t k = coefficients.size(); k-- > 0;) {
    const std::int64_t c = coefficients[k];
    if (c == 0) continue;
    std::string term;
    const std::int64_t mag = c < 0 ? -c : c;
    if (k == 0 || mag != 1) term += std::to_string(mag);
    if (k >= 1) term += "x";
    if (k >= 2) term += "^" + std::to_string(k);
    if (out.empty()) {
      out = (c < 0 ? "-" : "") + term;
    } else {
      out += (c < 0 ? " - " : " + ") + term;
    }
  }
  return out.empty() ? "0" : out;
}

bool is_irreducible(const Polynomial& f, std::uint64_t p) {
  const unsigned n = static_cast<unsigned>(f.degree());
  if (n == 0 || f.coefficients.back() != 1) throw Error(ErrorCode::OutOfRange, "expected a monic polynomial of degree >= 1");
  const Coeffs a = reduce(f, p);
  for (unsigned d = 1; d <= n / 2; ++d) {
    const std::uint64_t count = core::small_power(p, d);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      if (is_zero(remainder(a, monic_from_index(idx, d, p), p))) return false;
    }
  }
  return true;
}

Polynomial find_irreducible(std::uint64_t p, unsigned n) {
  if (n == 0) throw Error(ErrorCode::OutOfRange, "degree must be at least 1");
  const std::uint64_t count = core::small_power(p, n);
  if (count == 0) throw Error(ErrorCode::OutOfRange, "search space too large");
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    Polynomial f;
    for (auto c : monic_from_index(idx, n, p)) f.coefficients.push_back(static_cast<std::int64_t>(c));
    if (is_irreducible(f, p)) return f;
  }
  throw Error(ErrorCode::OutOfRange, "no irreducible polynomial found");  // unreachable for prime p
}

IntMatrix companion_matrix(const Polynomial& f) {
  const std::size_t n = f.degree();
  if (n == 0 || f.coefficients.back() != 1) throw Error(ErrorCode::OutOfRange, "expected a monic polynomial of degree >= 1");
  IntMatrix m(n, n);
  for (std::size_t i = 1; i < n; ++i) m(i, i - 1) = 1;
  for (std::size_t i = 0; i < n; ++i) m(i, n - 1) -= f.coefficients[i];
  return m;
}

}  // namespace reidemeister::spectra
