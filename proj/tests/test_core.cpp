#include <random>
#include <set>

#include "doctest.h"
#include "reidemeister/core.hpp"
#include "reidemeister/error.hpp"

using namespace reidemeister;
using core::Factored;
using core::IntMatrix;
using core::Integer;

namespace {

// [Zⁿ : L] for a lattice known to contain N·Zⁿ, by closing the generators
// under addition inside (Z/N)ⁿ. Shares nothing with the Smith code.
std::uint64_t residue_index(const IntMatrix& gens, long N) {
  const std::size_t n = gens.rows();
  auto encode = [&](const std::vector<long>& v) {
    std::uint64_t code = 0;
    for (long x : v) code = code * N + static_cast<std::uint64_t>(((x % N) + N) % N);
    return code;
  };
  std::set<std::uint64_t> seen{0};
  std::vector<std::vector<long>> frontier{std::vector<long>(n, 0)};
  while (!frontier.empty()) {
    auto v = frontier.back();
    frontier.pop_back();
    for (std::size_t c = 0; c < gens.cols(); ++c) {
      std::vector<long> w = v;
      for (std::size_t r = 0; r < n; ++r) w[r] = ((w[r] + gens(r, c).get_si()) % N + N) % N;
      if (seen.insert(encode(w)).second) frontier.push_back(w);
    }
  }
  std::uint64_t total = 1;
  for (std::size_t r = 0; r < n; ++r) total *= N;
  return total / seen.size();
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long lo, long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = dist(rng);
  return m;
}

Integer determinant_of_triangular(const IntMatrix& m) {
  Integer d = 1;
  for (std::size_t i = 0; i < m.rows(); ++i) d *= m(i, i);
  return d;
}

}  // namespace

TEST_CASE("lattice_index examples") {
  CHECK(core::lattice_index(IntMatrix{{2, 0}, {0, 3}}) == 6);
  CHECK(core::lattice_index(IntMatrix::identity(4)) == 1);

  const IntMatrix gens{{2, 1, 0}, {0, 1, 4}};
  CHECK(residue_index(gens, 8) == 2);
  CHECK(core::lattice_index(gens) == 2);
}

TEST_CASE("lattice_index rejects rank-deficient generators") {
  try {
    (void)core::lattice_index(IntMatrix{{1, 2}, {2, 4}});
    FAIL("expected RankDeficient");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RankDeficient);
  }
}

TEST_CASE("smith_invariants examples") {
  CHECK(core::smith_invariants(IntMatrix{{4, 0}, {0, 6}}) == std::vector<Integer>{2, 12});
  CHECK(core::smith_invariants(IntMatrix::identity(3)) == std::vector<Integer>{1, 1, 1});
  CHECK(core::smith_invariants(IntMatrix(2, 2)) == std::vector<Integer>{0, 0});
}

TEST_CASE("det_mod_p examples") {
  CHECK(core::det_mod_p(IntMatrix{{1, 1}, {2, 1}}, 2) == 1);
  for (std::uint64_t p : {2, 3, 5, 7}) CHECK(core::det_mod_p(IntMatrix::identity(3), p) == 1);
  CHECK(core::det_mod_p(IntMatrix{{1, 1}, {1, 1}}, 3) == 0);
  CHECK(core::det_mod_p(IntMatrix{{-1, 0}, {0, 1}}, 5) == 4);
}

TEST_CASE("matrix text round trip") {
  const IntMatrix m = core::parse_matrix(" 1, -2 ; 30,4 ");
  CHECK(m == IntMatrix{{1, -2}, {30, 4}});
  CHECK(core::format_matrix(m) == "1,-2;30,4");
  CHECK(core::parse_matrix("").rows() == 0);
  for (const char* bad : {"1,2;3", "1,,2", "a", "1;2;"}) {
    CHECK_THROWS_AS(core::parse_matrix(bad), Error);
  }
}

TEST_CASE("Factored arithmetic") {
  const Factored twelve = Factored::from_integer(12);
  CHECK(twelve.decimal() == "12");
  CHECK(twelve.factorization() == "2^2 * 3");
  CHECK(twelve.valuation(2) == 2);
  CHECK(Factored::from_integer(1).is_one());
  CHECK(Factored::from_integer(1).factorization() == "1");
  CHECK(Factored::from_integer(4).divides(twelve));
  CHECK_FALSE(Factored::from_integer(8).divides(twelve));
  CHECK(Factored::from_integer(4) * Factored::from_integer(3) == twelve);
  CHECK(Factored::from_integer(5) < Factored::from_integer(6));
  CHECK(Factored::prime_power(2, 100).decimal() == core::power(2, 100).get_str());
  CHECK_THROWS_AS(Factored(Factored::Map{{4, 1}}), Error);
}

TEST_CASE("number theory helpers") {
  CHECK(core::is_prime(2));
  CHECK(core::is_prime(97));
  CHECK_FALSE(core::is_prime(1));
  CHECK_FALSE(core::is_prime(91));
  using PF = std::vector<std::pair<std::uint64_t, unsigned>>;
  CHECK(core::factorize(360) == PF{{2, 3}, {3, 2}, {5, 1}});
  CHECK(core::factorize(1).empty());
  CHECK(core::small_power(3, 4) == 81);
  CHECK(core::small_power(2, 62) == 0);
  CHECK(core::inverse_mod(3, 8) == 3);
  CHECK_THROWS_AS(core::inverse_mod(2, 8), Error);
  CHECK(core::valuation(Integer(48), 2) == 4);
}

TEST_CASE("property: lattice_index agrees with residue closure") {
  std::mt19937_64 rng(0x1a771ce);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 3;
    const long N = std::vector<long>{4, 6, 8, 9, 12}[rng() % 5];
    IntMatrix gens = core::hconcat(random_matrix(rng, n, 1 + rng() % 3, -20, 20),
                                   IntMatrix::diagonal(std::vector<Integer>(n, Integer(N))));
    CHECK(core::lattice_index(gens) == residue_index(gens, N));
  }
}

TEST_CASE("property: Hermite basis determinant equals the index") {
  std::mt19937_64 rng(42);
  int full_rank = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    const IntMatrix gens = random_matrix(rng, n, n + rng() % 3, -9, 9);
    const auto inv = core::smith_invariants(gens);
    if (inv.back() == 0) continue;
    ++full_rank;
    const IntMatrix h = core::hermite_basis(gens);
    CHECK(h.rows() == n);
    CHECK(h.cols() == n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) CHECK(h(i, j) == 0);
    CHECK(determinant_of_triangular(h) == core::lattice_index(gens));
  }
  CHECK(full_rank > 100);
}

TEST_CASE("property: Smith invariants form a divisibility chain") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const IntMatrix m = random_matrix(rng, 1 + rng() % 4, 1 + rng() % 4, -12, 12);
    const auto inv = core::smith_invariants(m);
    for (std::size_t i = 0; i + 1 < inv.size(); ++i) {
      CHECK(inv[i] >= 0);
      if (inv[i + 1] != 0) {
        REQUIRE(inv[i] != 0);
        CHECK(inv[i + 1] % inv[i] == 0);
      }
    }
  }
}

TEST_CASE("property: adding lattice vectors keeps the index") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 3;
    const IntMatrix gens = random_matrix(rng, n, n + 1, -7, 7);
    if (core::smith_invariants(gens).back() == 0) continue;
    const IntMatrix combo = gens * random_matrix(rng, n + 1, 2, -3, 3);
    CHECK(core::lattice_index(core::hconcat(gens, combo)) == core::lattice_index(gens));
  }
}

TEST_CASE("property: p-local index agrees with the exact index") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const std::uint64_t p = std::vector<std::uint64_t>{2, 3, 5}[rng() % 3];
    const unsigned top = 1 + rng() % 4;
    const std::int64_t q = static_cast<std::int64_t>(core::small_power(p, top));
    const std::size_t n = 1 + rng() % 3, m = 1 + rng() % 3;
    std::vector<std::int64_t> flat;
    IntMatrix exact(n, m);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < m; ++c) {
        const std::int64_t v = static_cast<std::int64_t>(rng() % q);
        exact(r, c) = static_cast<long>(v);
        flat.push_back(v);
      }
    const auto full = core::hconcat(exact, IntMatrix::diagonal(std::vector<Integer>(n, Integer(q))));
    const unsigned k = core::local_index_exponent(flat, n, m, p, top);
    CHECK(core::power(p, k) == core::lattice_index(full));
  }
}
