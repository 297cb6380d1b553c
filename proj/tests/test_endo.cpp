#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "naive.hpp"
#include "reidemeister/endo.hpp"
#include "reidemeister/error.hpp"

using namespace reidemeister;
using core::Factored;
using core::IntMatrix;
using core::Integer;
using endo::EndoMatrix;
using endo::PGroupType;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::ParseError;
}

Factored ppow(std::uint64_t p, unsigned k) { return Factored::prime_power(p, k); }

}  // namespace

TEST_CASE("validate_type examples") {
  const std::vector<long long> raw{3, 2};
  CHECK(endo::validate_type(2, raw) == PGroupType(2, {2, 3}));
  CHECK(endo::validate_type(3, {}).is_trivial());
  const std::vector<long long> one{1};
  CHECK(code_of([&] { endo::validate_type(4, one); }) == ErrorCode::NotPrime);
  const std::vector<long long> zero{0, 1};
  CHECK(code_of([&] { endo::validate_type(2, zero); }) == ErrorCode::NonPositiveExponent);
}

TEST_CASE("type text") {
  const PGroupType g = endo::parse_p_group("p=2 e=3,2");
  CHECK(g.to_string() == "p=2 e=2,3");
  CHECK(g.total_exponent() == 5);
  CHECK(g.order() == ppow(2, 5));
  CHECK(endo::parse_p_group("p=5 e=").is_trivial());
  CHECK(code_of([] { endo::parse_p_group("p=2"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { endo::parse_p_group("q=2 e=1"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { endo::parse_p_group("p=9 e=1"); }) == ErrorCode::NotPrime);
}

TEST_CASE("is_valid_endo examples") {
  CHECK_FALSE(endo::is_valid_endo(PGroupType(2, {1, 2}), IntMatrix{{1, 1}, {1, 1}}));
  CHECK(endo::is_valid_endo(PGroupType(2, {2, 3}), IntMatrix{{1, 1}, {2, 1}}));
  CHECK(endo::is_valid_endo(PGroupType(3, {1, 4, 4}), IntMatrix::identity(3)));
  CHECK_FALSE(endo::is_valid_endo(PGroupType(3, {1, 4}), IntMatrix::identity(3)));
  CHECK(code_of([] { EndoMatrix(PGroupType(2, {1, 2}), IntMatrix{{1, 1}, {1, 1}}); }) ==
        ErrorCode::InvalidEndomorphism);
  CHECK(code_of([] { EndoMatrix(PGroupType(2, {1, 2}), IntMatrix{{1}}); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("is_automorphism examples") {
  CHECK(endo::is_automorphism(EndoMatrix(PGroupType(2, {2, 3}), IntMatrix{{1, 1}, {2, 1}})));
  CHECK(endo::is_automorphism(EndoMatrix::identity(PGroupType(5, {1, 2, 2}))));
  CHECK_FALSE(endo::is_automorphism(EndoMatrix(PGroupType(3, {1, 1}), IntMatrix{{1, 1}, {1, 1}})));
}

TEST_CASE("apply examples") {
  const PGroupType g(2, {2, 3});
  const endo::GroupElement x(g, {0, 4});
  CHECK(endo::apply(EndoMatrix::identity(g), x) == x);
  CHECK(endo::apply(EndoMatrix(g, IntMatrix{{1, 1}, {2, 1}}), x) == x);
  const PGroupType z8(2, {3});
  CHECK(endo::apply(EndoMatrix(z8, IntMatrix{{3}}), endo::GroupElement(z8, {5})) == endo::GroupElement(z8, {7}));
  CHECK(code_of([&] { endo::apply(EndoMatrix::identity(z8), x); }) == ErrorCode::GroupMismatch);
}

TEST_CASE("scale examples") {
  const EndoMatrix em(PGroupType(2, {2, 3}), IntMatrix{{1, 1}, {2, 1}});
  CHECK(endo::scale(em, 1) == em);
  CHECK(endo::scale(EndoMatrix(PGroupType(3, {1}), IntMatrix{{1}}), 2).matrix() == IntMatrix{{2}});
  CHECK(endo::scale(EndoMatrix(PGroupType(5, {2}), IntMatrix{{7}}), 2).matrix() == IntMatrix{{14}});
  CHECK(code_of([] { endo::scale(EndoMatrix(PGroupType(5, {2}), IntMatrix{{7}}), 10); }) == ErrorCode::NotCoprime);
}

TEST_CASE("fixed_point_count examples") {
  const PGroupType g(2, {2, 3});
  CHECK(endo::fixed_point_count(EndoMatrix::identity(g)) == ppow(2, 5));
  CHECK(endo::fixed_point_count(EndoMatrix(g, IntMatrix{{1, 1}, {2, 1}})) == ppow(2, 1));
  CHECK(endo::fixed_point_count(EndoMatrix(PGroupType(2, {3}), IntMatrix{{3}})) == ppow(2, 1));
  CHECK(endo::fixed_point_count(EndoMatrix::identity(PGroupType(7, {}))).is_one());
  CHECK(endo::is_automorphism(EndoMatrix::identity(PGroupType(7, {}))));
}

TEST_CASE("reidemeister_number examples") {
  CHECK(endo::reidemeister_number(EndoMatrix(PGroupType(2, {3}), IntMatrix{{5}})) == ppow(2, 2));
  const PGroupType g(3, {1, 2, 2});
  CHECK(endo::reidemeister_number(EndoMatrix::identity(g)) == g.order());
  CHECK(endo::reidemeister_number(EndoMatrix(PGroupType(3, {1, 1}), IntMatrix{{0, 2}, {1, 0}})).is_one());
}

TEST_CASE("reidemeister_cyclic examples") {
  CHECK(endo::reidemeister_cyclic(3, 2, 3) == ppow(2, 1));
  CHECK(endo::reidemeister_cyclic(1, 5, 2) == ppow(5, 2));
  for (std::uint64_t p : {2, 3, 5})
    for (unsigned n = 1; n <= 4; ++n)
      for (unsigned m = 0; m <= n; ++m) {
        CHECK(endo::reidemeister_cyclic(core::power(p, m) + 1, p, n) == ppow(p, m));
      }
}

TEST_CASE("induced_mod_p examples") {
  CHECK(endo::induced_mod_p(EndoMatrix(PGroupType(2, {2, 3}), IntMatrix{{1, 1}, {2, 1}})) ==
        IntMatrix{{1, 1}, {0, 1}});
  CHECK(endo::induced_mod_p(EndoMatrix::identity(PGroupType(3, {1, 2}))) == IntMatrix::identity(2));
  CHECK(endo::induced_mod_p(EndoMatrix(PGroupType(3, {1, 2}), IntMatrix{{2, 1}, {3, 4}})) ==
        IntMatrix{{2, 1}, {0, 1}});
}

TEST_CASE("block_diagonal") {
  const EndoMatrix a(PGroupType(2, {1}), IntMatrix{{1}});
  const EndoMatrix b(PGroupType(2, {2, 3}), IntMatrix{{1, 1}, {2, 1}});
  const EndoMatrix ab = endo::block_diagonal(std::vector<EndoMatrix>{a, b});
  CHECK(ab.group() == PGroupType(2, {1, 2, 3}));
  CHECK(ab.matrix() == IntMatrix{{1, 0, 0}, {0, 1, 1}, {0, 2, 1}});
  CHECK(code_of([&] { endo::block_diagonal(std::vector<EndoMatrix>{b, a}); }) == ErrorCode::InvalidType);
}

TEST_CASE("property: fixed_point_count matches element iteration") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 400; ++trial) {
    const std::uint64_t p = std::vector<std::uint64_t>{2, 3, 5}[rng() % 3];
    const unsigned cap = p == 2 ? 10 : (p == 3 ? 6 : 4);
    const PGroupType g(p, naive::random_exponents(rng, 4, cap));
    const EndoMatrix em(g, naive::random_endo(rng, g));
    const std::uint64_t brute = naive::fixed_points(em);
    CHECK(endo::fixed_point_count(em) == Factored::from_integer(brute));
    CHECK(endo::fixed_point_count_exact(em) == Factored::from_integer(brute));
  }
}

TEST_CASE("property: fixed_point_count is a power of p dividing |P|") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 400; ++trial) {
    const std::uint64_t p = std::vector<std::uint64_t>{2, 3, 5, 7, 11}[rng() % 5];
    const PGroupType g(p, naive::random_exponents(rng, 6, 30));
    const Factored fix = endo::fixed_point_count(EndoMatrix(g, naive::random_endo(rng, g)));
    CHECK(fix.factors().size() <= 1);
    CHECK(fix.divides(g.order()));
  }
}

TEST_CASE("property: cyclic fixed points follow the gcd law") {
  for (std::uint64_t p : {2, 3, 5, 7})
    for (unsigned n = 1; n <= 4; ++n) {
      const PGroupType g(p, {n});
      const std::int64_t q = static_cast<std::int64_t>(core::small_power(p, n));
      for (std::int64_t k = 0; k < q; ++k) {
        const EndoMatrix em(g, IntMatrix{{static_cast<long>(k)}});
        const auto expected = static_cast<std::uint64_t>(std::gcd(k - 1, q));
        CHECK(endo::fixed_point_count(em) == Factored::from_integer(expected));
        CHECK(endo::fixed_point_count(em) == endo::reidemeister_cyclic(k, p, n));
      }
    }
}

TEST_CASE("property: apply respects composition") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const std::uint64_t p = std::vector<std::uint64_t>{2, 3, 5}[rng() % 3];
    const PGroupType g(p, naive::random_exponents(rng, 4, 12));
    const EndoMatrix a(g, naive::random_endo(rng, g));
    const EndoMatrix b(g, naive::random_endo(rng, g));
    std::vector<Integer> coords;
    for (std::size_t i = 0; i < g.rank(); ++i) coords.emplace_back(static_cast<unsigned long>(rng() % 1000));
    const endo::GroupElement x(g, coords);
    CHECK(endo::apply(endo::compose(a, b), x) == endo::apply(a, endo::apply(b, x)));
  }
}

TEST_CASE("property: automorphism iff bijection") {
  std::mt19937_64 rng(4);
  int autos = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::uint64_t p = std::vector<std::uint64_t>{2, 3}[rng() % 2];
    const PGroupType g(p, naive::random_exponents(rng, 3, p == 2 ? 8 : 5));
    const EndoMatrix em(g, naive::random_endo(rng, g));
    const auto q = naive::moduli(g);
    const auto rows = naive::rows_of(em);
    std::set<naive::Vec> image;
    const auto all = naive::elements(q);
    for (const auto& x : all) image.insert(naive::apply(rows, q, x));
    const bool bijective = image.size() == all.size();
    autos += bijective;
    CHECK(endo::is_automorphism(em) == bijective);
  }
  CHECK(autos > 30);
}
