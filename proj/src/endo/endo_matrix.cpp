#include <algorithm>

#include "reidemeister/endo.hpp"
#include "reidemeister/error.hpp"

namespace reidemeister::endo {

namespace {

void check_shape(const PGroupType& group, const IntMatrix& m) {
  const std::size_t n = group.rank();
  if (m.rows() != n || m.cols() != n) {
    throw Error(ErrorCode::DimensionMismatch, "expected a " + std::to_string(n) + "x" +
                                                  std::to_string(n) + " matrix for " +
                                                  group.to_string());
  }
}

void reduce_rows(const PGroupType& group, IntMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const Integer q = group.modulus(i);
    for (std::size_t j = 0; j < m.cols(); ++j) {
      mpz_fdiv_r(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), q.get_mpz_t());
    }
  }
}

}  // namespace

bool is_valid_endo(const PGroupType& group, const IntMatrix& m) {
  if (m.rows() != group.rank() || m.cols() != group.rank()) return false;
  const auto e = group.exponents();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (e[i] == e[j]) continue;
      const Integer step = core::power(group.prime(), e[i] - e[j]);
      if (!mpz_divisible_p(m(i, j).get_mpz_t(), step.get_mpz_t())) return false;
    }
  }
  return true;
}

EndoMatrix::EndoMatrix(PGroupType group, IntMatrix m) : group_(std::move(group)), m_(std::move(m)) {
  check_shape(group_, m_);
  if (!is_valid_endo(group_, m_)) {
    throw Error(ErrorCode::InvalidEndomorphism,
                "matrix violates p^(e_i - e_j) | m_ij for " + group_.to_string());
  }
  reduce_rows(group_, m_);
}

EndoMatrix::EndoMatrix(PGroupType group, IntMatrix m, Trusted)
    : group_(std::move(group)), m_(std::move(m)) {}

EndoMatrix EndoMatrix::identity(const PGroupType& group) {
  IntMatrix m = IntMatrix::identity(group.rank());
  reduce_rows(group, m);
  return EndoMatrix(group, std::move(m), Trusted{});
}

bool is_automorphism(const EndoMatrix& em) {
  if (em.group().is_trivial()) return true;
  return core::det_mod_p(em.matrix(), em.group().prime()) != 0;
}

GroupElement apply(const EndoMatrix& em, const GroupElement& x) {
  if (!(em.group() == x.group())) throw Error(ErrorCode::GroupMismatch, "element of another group");
  const std::size_t n = em.group().rank();
  std::vector<Integer> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out[i] += em.matrix()(i, j) * x.coords()[j];
  }
  return GroupElement(em.group(), std::move(out));
}

EndoMatrix compose(const EndoMatrix& a, const EndoMatrix& b) {
  if (!(a.group() == b.group())) throw Error(ErrorCode::GroupMismatch, "composing maps of different groups");
  return EndoMatrix(a.group(), a.matrix() * b.matrix());
}

EndoMatrix scale(const EndoMatrix& em, const Integer& i) {
  Integer g;
  Integer p;
  mpz_set_ui(p.get_mpz_t(), em.group().prime());
  mpz_gcd(g.get_mpz_t(), i.get_mpz_t(), p.get_mpz_t());
  if (g != 1) throw Error(ErrorCode::NotCoprime, i.get_str() + " is not coprime to p");
  IntMatrix m = em.matrix();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) *= i;
  }
  reduce_rows(em.group(), m);
  return EndoBuilder::trusted(em.group(), std::move(m));
}

unsigned fixed_point_exponent(const EndoMatrix& em) {
  const PGroupType& g = em.group();
  const std::size_t n = g.rank();
  if (n == 0) return 0;
  const std::uint64_t p = g.prime();
  const unsigned top = g.exponents().back();
  const std::uint64_t q = core::small_power(p, top);
  if (q == 0) return core::valuation(fixed_point_count_exact(em).value(), p);

  // [M − I | D] reduced mod p^{e_n}; the lattice contains p^{e_n}·Zⁿ.
  std::vector<std::int64_t> block(n * 2 * n, 0);
  const IntMatrix& m = em.matrix();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::int64_t v = static_cast<std::int64_t>(mpz_get_ui(m(i, j).get_mpz_t()));
      if (i == j) v = (v + static_cast<std::int64_t>(q) - 1) % static_cast<std::int64_t>(q);
      block[i * 2 * n + j] = v;
    }
    block[i * 2 * n + n + i] = static_cast<std::int64_t>(core::small_power(p, g.exponent(i)) % q);
  }
  return core::local_index_exponent(block, n, 2 * n, p, top);
}

Factored fixed_point_count(const EndoMatrix& em) {
  return Factored::prime_power(em.group().prime(), fixed_point_exponent(em));
}

Factored fixed_point_count_exact(const EndoMatrix& em) {
  const PGroupType& g = em.group();
  if (g.is_trivial()) return {};
  std::vector<Integer> moduli;
  for (std::size_t i = 0; i < g.rank(); ++i) moduli.push_back(g.modulus(i));
  const IntMatrix block =
      core::hconcat(em.matrix() - IntMatrix::identity(g.rank()), IntMatrix::diagonal(moduli));
  const Integer index = core::lattice_index(block);
  return Factored::prime_power(g.prime(), index == 1 ? 0 : core::valuation(index, g.prime()));
}

Factored reidemeister_number(const EndoMatrix& em) { return fixed_point_count(em); }

Factored reidemeister_cyclic(const Integer& k, std::uint64_t p, unsigned n) {
  const Integer shifted = k - 1;
  if (sgn(shifted) == 0) return Factored::prime_power(p, n);
  return Factored::prime_power(p, std::min(core::valuation(shifted, p), n));
}

IntMatrix induced_mod_p(const EndoMatrix& em) {
  IntMatrix out = em.matrix();
  const std::uint64_t p = em.group().prime();
  for (std::size_t r = 0; r < out.rows(); ++r) {
    for (std::size_t c = 0; c < out.cols(); ++c) {
      mpz_fdiv_r_ui(out(r, c).get_mpz_t(), out(r, c).get_mpz_t(), p);
    }
  }
  return out;
}

EndoMatrix block_diagonal(std::span<const EndoMatrix> parts) {
  if (parts.empty()) throw Error(ErrorCode::InvalidType, "direct sum of no parts");
  const std::uint64_t p = parts.front().group().prime();
  std::vector<unsigned> e;
  for (const auto& part : parts) {
    if (part.group().prime() != p) throw Error(ErrorCode::GroupMismatch, "parts over different primes");
    const auto pe = part.group().exponents();
    e.insert(e.end(), pe.begin(), pe.end());
  }
  if (!std::is_sorted(e.begin(), e.end())) {
    throw Error(ErrorCode::InvalidType, "summand exponents are not nondecreasing");
  }
  const std::size_t n = e.size();
  IntMatrix m(n, n);
  std::size_t offset = 0;
  for (const auto& part : parts) {
    const std::size_t k = part.group().rank();
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) m(offset + i, offset + j) = part.matrix()(i, j);
    }
    offset += k;
  }
  return EndoBuilder::trusted(PGroupType(p, std::move(e)), std::move(m));
}

}  // namespace reidemeister::endo
