#include <algorithm>
#include <random>

#include "doctest.h"
#include "naive.hpp"
#include "reidemeister/decomposition.hpp"
#include "reidemeister/error.hpp"
#include "reidemeister/spectra.hpp"

using namespace reidemeister;
using core::Factored;
using core::IntMatrix;
using endo::EndoMatrix;
using endo::PGroupType;
using spectra::AbelianGroupType;
using spectra::Polynomial;
using spectra::Spectrum;

namespace {

Factored ppow(std::uint64_t p, unsigned k) { return Factored::prime_power(p, k); }

Spectrum of(std::initializer_list<std::uint64_t> values) {
  Spectrum s;
  for (auto v : values) s.insert(Factored::from_integer(v));
  return s;
}

// Π by element iteration over every μ_i ∘ φ.
std::uint64_t naive_pi(const EndoMatrix& em) {
  const std::uint64_t p = em.group().prime();
  const auto q = naive::moduli(em.group());
  const auto rows = naive::rows_of(em);
  const auto all = naive::elements(q);
  std::uint64_t product = 1;
  for (std::int64_t i = 1; i < static_cast<std::int64_t>(p); ++i) {
    auto scaled = rows;
    for (auto& r : scaled)
      for (auto& x : r) x *= i;
    std::uint64_t fix = 0;
    for (const auto& x : all) fix += naive::apply(scaled, q, x) == x;
    product *= fix;
  }
  return product;
}

// Remainder of a by monic b over Z/p, coefficients low to high.
std::vector<std::int64_t> poly_mod(std::vector<std::int64_t> a, const std::vector<std::int64_t>& b, std::int64_t p) {
  while (a.size() >= b.size()) {
    const std::int64_t lead = a.back() % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] = ((a[shift + k] - lead * b[k]) % p + p) % p;
    a.pop_back();
  }
  return a;
}

bool all_zero(const std::vector<std::int64_t>& v) {
  for (auto x : v)
    if (x != 0) return false;
  return true;
}

std::vector<PGroupType> types_with_sigma_at_most(std::uint64_t p, unsigned max_sigma) {
  std::vector<PGroupType> out;
  std::vector<unsigned> e;
  auto rec = [&](auto&& self, unsigned lo, unsigned sigma) -> void {
    if (!e.empty()) out.emplace_back(p, e);
    for (unsigned v = lo; sigma + v <= max_sigma; ++v) {
      e.push_back(v);
      self(self, v, sigma + v);
      e.pop_back();
    }
  };
  rec(rec, 1, 0);
  return out;
}

}  // namespace

TEST_CASE("product_number examples") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const PGroupType g(2, naive::random_exponents(rng, 3, 8));
    const EndoMatrix em(g, naive::random_endo(rng, g));
    if (endo::is_automorphism(em)) CHECK(spectra::product_number(em) == endo::reidemeister_number(em));
  }
  CHECK(spectra::product_number(EndoMatrix(PGroupType(3, {1}), IntMatrix{{1}})) == ppow(3, 1));
  const EndoMatrix rot(PGroupType(3, {1, 1}), IntMatrix{{0, 2}, {1, 0}});
  CHECK(naive_pi(rot) == 1);
  CHECK(spectra::product_number(rot).is_one());
  CHECK_THROWS_AS(spectra::product_number(EndoMatrix(PGroupType(3, {1}), IntMatrix{{0}})), Error);
}

TEST_CASE("closed-form spectra examples") {
  CHECK(spectra::spec_r_odd_p(PGroupType(3, {2})) == of({1, 3, 9}));
  CHECK(spectra::spec_r_odd_p(PGroupType(5, {})) == of({1}));
  CHECK(spectra::spec_r_odd_p(PGroupType(3, {1, 2})) == of({1, 3, 9, 27}));
  CHECK_THROWS_AS(spectra::spec_r_odd_p(PGroupType(2, {1})), Error);

  CHECK(spectra::spec_p(PGroupType(2, {2, 3})) == of({2, 4, 8, 16, 32}));
  CHECK(spectra::spec_p(PGroupType(3, {1, 1})) == of({1, 3, 9}));
  for (unsigned n = 1; n <= 8; ++n) CHECK(spectra::spec_p(PGroupType(2, {n})) == Spectrum::prime_powers(2, 1, n));

  CHECK(spectra::spec_r_2group(PGroupType(2, {1})) == of({2}));
  CHECK(spectra::spec_r_2group(PGroupType(2, {1, 1})) == of({1, 2, 4}));
  CHECK(spectra::spec_r_2group(PGroupType(2, {1, 3})) == of({4, 8, 16}));
  CHECK_THROWS_AS(spectra::spec_r_2group(PGroupType(3, {1})), Error);
}

TEST_CASE("spec_r_abelian examples") {
  const std::vector<std::uint64_t> z12{4, 3};
  CHECK(spectra::spec_r_abelian(AbelianGroupType::from_cyclic_orders(z12)) == of({2, 4, 6, 12}));
  const std::vector<std::uint64_t> a36{2, 2, 9};
  CHECK(spectra::spec_r_abelian(AbelianGroupType::from_cyclic_orders(a36)) ==
        of({1, 2, 3, 4, 6, 9, 12, 18, 36}));
  const std::vector<std::uint64_t> odd{3, 25, 7};
  Spectrum divisors;
  for (std::uint64_t d = 1; d <= 525; ++d)
    if (525 % d == 0) divisors.insert(Factored::from_integer(d));
  CHECK(spectra::spec_r_abelian(AbelianGroupType::from_cyclic_orders(odd)) == divisors);
  CHECK(spectra::spec_r_abelian(AbelianGroupType{}) == of({1}));
}

TEST_CASE("group specs") {
  const AbelianGroupType a = spectra::parse_group_spec("4,8,3");
  CHECK(a.order() == Factored::from_integer(96));
  CHECK(a.sylow(2) == PGroupType(2, {2, 3}));
  CHECK(a.sylow(3) == PGroupType(3, {1}));
  CHECK(a.sylow(5).is_trivial());
  CHECK(a.to_string() == "Z/4 + Z/8 + Z/3");
  CHECK(spectra::parse_group_spec("p=2 e=2,3").sylow(2) == PGroupType(2, {2, 3}));
  CHECK(spectra::parse_group_spec("6") == spectra::parse_group_spec("2,3"));
  CHECK_THROWS_AS(spectra::parse_group_spec("4,,3"), Error);
  CHECK_THROWS_AS(spectra::parse_group_spec("1"), Error);
}

TEST_CASE("witness examples") {
  const EndoMatrix w1 = spectra::witness(PGroupType(2, {3}), 2);
  CHECK(w1.matrix() == IntMatrix{{5}});
  CHECK(endo::reidemeister_number(w1) == ppow(2, 2));

  const EndoMatrix w2 = spectra::witness(PGroupType(2, {2, 3}), 1);
  CHECK(w2.matrix() == IntMatrix{{1, 1}, {2, 1}});
  CHECK(naive_pi(w2) == 2);

  const EndoMatrix w3 = spectra::witness(PGroupType(3, {1, 1}), 0);
  CHECK(w3.matrix() == IntMatrix{{0, 2}, {1, 0}});
  CHECK(naive_pi(w3) == 1);

  CHECK_THROWS_AS(spectra::witness(PGroupType(2, {2, 3}), 0), Error);
  CHECK_THROWS_AS(spectra::witness(PGroupType(2, {2, 3}), 6), Error);
}

TEST_CASE("witness_abelian examples") {
  const std::vector<std::uint64_t> z12{12};
  const AbelianGroupType a = AbelianGroupType::from_cyclic_orders(z12);
  const auto parts = spectra::witness_abelian(a, Factored::from_integer(6));
  REQUIRE(parts.size() == 2);
  CHECK(endo::reidemeister_number(parts.at(2)) == ppow(2, 1));
  CHECK(endo::reidemeister_number(parts.at(3)) == ppow(3, 1));
  for (const auto& [p, em] : spectra::witness_abelian(a, a.order())) {
    CHECK(em == EndoMatrix::identity(em.group()));
  }

  const std::vector<std::uint64_t> v4{2, 2};
  const auto klein = spectra::witness_abelian(AbelianGroupType::from_cyclic_orders(v4), Factored::from_integer(1));
  // Companion of x²+x+1 with rows reduced mod 2.
  CHECK(klein.at(2).matrix() == IntMatrix{{0, 1}, {1, 1}});
  CHECK(naive::fixed_points(klein.at(2)) == 1);
  CHECK_THROWS_AS(spectra::witness_abelian(a, Factored::from_integer(3)), Error);
}

TEST_CASE("find_irreducible and companion_matrix examples") {
  CHECK(spectra::find_irreducible(2, 2) == Polynomial{{1, 1, 1}});
  CHECK(spectra::find_irreducible(3, 1) == Polynomial{{0, 1}});
  CHECK(spectra::find_irreducible(2, 3) == Polynomial{{1, 1, 0, 1}});
  CHECK(spectra::companion_matrix(Polynomial{{1, 1, 1}}) == IntMatrix{{0, -1}, {1, -1}});
  CHECK(spectra::companion_matrix(Polynomial{{-1, 1}}) == IntMatrix{{1}});
  CHECK(spectra::companion_matrix(Polynomial{{1, 0, 1}}) == IntMatrix{{0, -1}, {1, 0}});
}

TEST_CASE("property: irreducible polynomials have no small factors") {
  for (std::uint64_t p : {2, 3, 5, 7})
    for (unsigned n = 2; n <= (p == 2 ? 10u : 5u); ++n) {
      const Polynomial f = spectra::find_irreducible(p, n);
      REQUIRE(f.degree() == n);
      CHECK(f.coefficients.back() == 1);
      const std::int64_t P = static_cast<std::int64_t>(p);
      for (std::int64_t x = 0; x < P; ++x) {
        std::int64_t value = 0;
        for (auto it = f.coefficients.rbegin(); it != f.coefficients.rend(); ++it) value = (value * x + *it) % P;
        CHECK(value != 0);
      }
      // Every monic divisor candidate of degree 1..n/2.
      for (unsigned k = 1; 2 * k <= n; ++k) {
        std::int64_t count = 1;
        for (unsigned i = 0; i < k; ++i) count *= P;
        for (std::int64_t code = 0; code < count; ++code) {
          std::vector<std::int64_t> g(k + 1, 0);
          g[k] = 1;
          std::int64_t c = code;
          for (unsigned i = 0; i < k; ++i, c /= P) g[i] = c % P;
          CHECK_FALSE(all_zero(poly_mod(f.coefficients, g, P)));
        }
      }
    }
}

TEST_CASE("property: witnesses hit every spectrum value") {
  for (std::uint64_t p : {2, 3, 5}) {
    for (const auto& g : types_with_sigma_at_most(p, p == 2 ? 8 : 5)) {
      const auto dec = decomposition::abc_decompose(g);
      const unsigned lo = static_cast<unsigned>(dec.b + dec.c);
      for (unsigned m = lo; m <= g.total_exponent(); ++m) {
        const EndoMatrix w = spectra::witness(g, m);
        CHECK(endo::is_automorphism(w));
        CHECK(naive_pi(w) == core::small_power(p, m));
      }
      if (p == 2) continue;
      for (unsigned m = 0; m <= g.total_exponent(); ++m) {
        const EndoMatrix wr = spectra::witness_r(g, m);
        CHECK(endo::is_automorphism(wr));
        CHECK(naive::fixed_points(wr) == core::small_power(p, m));
      }
    }
  }
}

TEST_CASE("property: product number is multiplicative over blocks") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint64_t p = std::vector<std::uint64_t>{2, 3, 5}[rng() % 3];
    auto e1 = naive::random_exponents(rng, 2, 3);
    auto e2 = naive::random_exponents(rng, 2, 3);
    std::sort(e1.begin(), e1.end());
    std::sort(e2.begin(), e2.end());
    const unsigned shift = e1.back();
    for (auto& v : e2) v += shift - 1;
    const PGroupType g1(p, e1), g2(p, e2);
    const EndoMatrix a(g1, naive::random_endo(rng, g1));
    const EndoMatrix b(g2, naive::random_endo(rng, g2));
    if (!endo::is_automorphism(a) || !endo::is_automorphism(b)) continue;
    const EndoMatrix ab = endo::block_diagonal(std::vector<EndoMatrix>{a, b});
    CHECK(spectra::product_number(ab) == spectra::product_number(a) * spectra::product_number(b));
  }
}

TEST_CASE("property: spec_r_abelian is the divisor set with the 2-adic floor") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::uint64_t> orders;
    const unsigned k = 1 + rng() % 3;
    for (unsigned i = 0; i < k; ++i) orders.push_back(std::vector<std::uint64_t>{2, 3, 4, 5, 8, 9, 16, 27}[rng() % 8]);
    const AbelianGroupType a = AbelianGroupType::from_cyclic_orders(orders);
    const auto dec = decomposition::abc_decompose(a.sylow(2));
    const unsigned floor2 = static_cast<unsigned>(dec.b + dec.c);
    const std::uint64_t n = a.order().value().get_ui();
    Spectrum expected;
    for (std::uint64_t d = 1; d <= n; ++d) {
      if (n % d != 0) continue;
      if (Factored::from_integer(d).valuation(2) >= floor2) expected.insert(Factored::from_integer(d));
    }
    CHECK(spectra::spec_r_abelian(a) == expected);
  }
}

TEST_CASE("property: odd spec_p sits inside spec_r") {
  for (std::uint64_t p : {3, 5, 7})
    for (const auto& g : types_with_sigma_at_most(p, 8)) {
      const Spectrum sp = spectra::spec_p(g), sr = spectra::spec_r_odd_p(g);
      for (const auto& v : sp.values()) CHECK(sr.contains(v));
      const auto dec = decomposition::abc_decompose(g);
      CHECK((sp == sr) == (dec.b + dec.c == 0));
    }
}
