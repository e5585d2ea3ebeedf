#include <doctest.h>

#include <numeric>
#include <random>

#include "oneunit/padic.hpp"
#include "oracles.hpp"

using namespace oneunit;

namespace {

using Digits = std::vector<std::uint32_t>;

Digits digits_of(const PadicApprox& y) { return {y.digits().begin(), y.digits().end()}; }

PadicApprox pa(std::uint64_t p, Digits d) { return PadicApprox(Prime(p), std::move(d)); }

const std::vector<std::uint32_t> kThueMorse{0, 1, 1, 0, 1, 0, 0, 1, 1, 0, 0, 1, 0, 1, 1, 0};

}  // namespace

TEST_CASE("RationalNum normalizes") {
  CHECK(RationalNum(4, -6) == RationalNum(-2, 3));
  CHECK(RationalNum(0, 5) == RationalNum(0, 1));
  CHECK_THROWS_AS(RationalNum(1, 0), DivisionByZero);
  CHECK(parse_rational("-1/2") == RationalNum(-1, 2));
  CHECK(parse_rational("7") == RationalNum(7));
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("x/3"), ParseError);
  CHECK(to_string(RationalNum(-1, 3)) == "-1/3");
}

TEST_CASE("from_integer") {
  CHECK(digits_of(from_integer(Prime(2), 5, 4)) == Digits{1, 0, 1, 0});
  CHECK(digits_of(from_integer(Prime(3), -2, 4)) == Digits{1, 2, 2, 2});  // 79 mod 81
  CHECK(digits_of(from_integer(Prime(7), 0, 3)) == Digits{0, 0, 0});
  CHECK(digits_of(from_integer(Prime(5), -1, 3)) == Digits{4, 4, 4});
  CHECK_THROWS_AS(from_integer(Prime(5), 1, 0), PrecisionExhausted);
}

TEST_CASE("from_fraction") {
  CHECK(digits_of(from_fraction(Prime(2), RationalNum(1, 3), 4)) == Digits{1, 1, 0, 1});
  CHECK(digits_of(from_fraction(Prime(5), RationalNum(2, 1), 3)) == Digits{2, 0, 0});
  CHECK(digits_of(from_fraction(Prime(3), RationalNum(-1, 2), 5)) == Digits{1, 1, 1, 1, 1});
  CHECK_THROWS_AS(from_fraction(Prime(3), RationalNum(1, 6), 5), DenominatorNotCoprime);
}

TEST_CASE("arithmetic") {
  const Prime two(2);
  CHECK(digits_of(from_integer(two, 5, 4) + from_integer(two, 11, 4)) == Digits{0, 0, 0, 0});
  CHECK(digits_of(unit_inverse(from_integer(Prime(3), 2, 3))) == Digits{2, 1, 1});  // 14
  CHECK(from_fraction(two, RationalNum(1, 3), 4) * from_integer(two, 3, 4) == from_integer(two, 1, 4));
  CHECK_THROWS_AS(unit_inverse(from_integer(Prime(3), 3, 4)), NonUnitExponent);
  CHECK_THROWS_AS(from_integer(two, 1, 3) + from_integer(Prime(3), 1, 3), ModulusMismatch);
  // Mixed precision returns the smaller.
  CHECK((from_integer(two, 3, 8) + from_integer(two, 1, 4)).precision() == 4);
}

TEST_CASE("ring laws and unit inverse on random values") {
  std::mt19937_64 rng(21);
  for (std::uint64_t pv : {2, 3, 5, 7, 65537, 2147483647}) {
    const Prime p(pv);
    for (int t = 0; t < 40; ++t) {
      const std::size_t k = 1 + rng() % 30;
      auto a = oracle::random_padic(rng, p, k);
      auto b = oracle::random_padic(rng, p, k);
      auto c = oracle::random_padic(rng, p, k);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + (-a) == from_integer(p, 0, k));
      if (a.is_unit()) CHECK(a * unit_inverse(a) == from_integer(p, 1, k));
    }
  }
}

TEST_CASE("arithmetic agrees with integers mod p^k") {
  std::mt19937_64 rng(22);
  for (std::uint64_t pv : {2, 3, 5, 7}) {
    const Prime p(pv);
    const std::size_t k = 8;
    const std::uint64_t pk = oracle::ipow(pv, k);
    for (int t = 0; t < 100; ++t) {
      auto x = static_cast<std::int64_t>(rng() % 20001) - 10000;
      auto y = static_cast<std::int64_t>(rng() % 20001) - 10000;
      auto X = from_integer(p, x, k), Y = from_integer(p, y, k);
      CHECK(digits_of(X + Y) == oracle::base_p(oracle::residue(x + y, pk), p.value(), k));
      CHECK(digits_of(X * Y) == oracle::base_p(oracle::residue(x * y, pk), p.value(), k));
      CHECK(digits_of(-X) == oracle::base_p(oracle::residue(-x, pk), p.value(), k));
    }
  }
}

TEST_CASE("binom") {
  const Prime two(2);
  auto five = from_integer(two, 5, 4);
  for (auto y : {from_integer(two, 5, 4), from_fraction(Prime(3), RationalNum(-1, 2), 5)}) {
    CHECK(binom(y, 0).value == 1);
  }
  CHECK(binom(five, 4).value == 1);
  CHECK(binom(five, 2).value == 0);
  // 1/3 = 11 mod 16: C(11, 3) = 165, odd.
  CHECK(binom(from_fraction(two, RationalNum(1, 3), 4), 3).value == 1);
  CHECK_THROWS_AS(binom(five, 16), PrecisionExhausted);
  CHECK_NOTHROW(binom(five, 15));
}

TEST_CASE("binom matches Pascal's triangle for integer y") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    auto rows = oracle::pascal(200, p);
    for (std::int64_t y = 0; y <= 200; ++y) {
      auto Y = from_integer(Prime(p), y, 12);
      for (std::uint64_t n = 0; n <= 200; ++n) {
        const std::uint32_t expect = n <= static_cast<std::uint64_t>(y) ? rows[y][n] : 0;
        CHECK(binom(Y, n).value == expect);
      }
    }
  }
}

TEST_CASE("binom depends only on the digits below the top of n") {
  std::mt19937_64 rng(23);
  for (std::uint64_t pv : {2, 3, 5, 7}) {
    const Prime p(pv);
    for (int t = 0; t < 50; ++t) {
      auto y = oracle::random_padic(rng, p, 10);
      const std::uint64_t n = rng() % 200;
      const std::size_t k = digits_to_cover(p, n + 1);
      Digits perturbed = digits_of(y);
      for (std::size_t i = k; i < perturbed.size(); ++i) perturbed[i] = static_cast<std::uint32_t>(rng() % pv);
      CHECK(binom(y, n) == binom(PadicApprox(p, perturbed), n));
    }
  }
}

TEST_CASE("digits_to_cover") {
  CHECK(digits_to_cover(Prime(2), 0) == 0);
  CHECK(digits_to_cover(Prime(2), 1) == 0);
  CHECK(digits_to_cover(Prime(2), 8) == 3);
  CHECK(digits_to_cover(Prime(2), 9) == 4);
  CHECK(digits_to_cover(Prime(3), 27) == 3);
  CHECK(digits_to_cover(Prime(7), 128) == 3);
  CHECK(digits_to_cover(Prime(2147483647), ~std::uint64_t{0}) == 3);
}

TEST_CASE("is_integer_window") {
  using K = IntegerVerdict::Kind;
  auto v = is_integer_window(pa(3, {1, 2, 2, 2}));
  CHECK(v.kind == K::kNegative);
  CHECK(v.value == -2);
  v = is_integer_window(pa(2, {1, 0, 1, 0, 0, 0}));
  CHECK(v.kind == K::kNonNegative);
  CHECK(v.value == 5);
  CHECK(is_integer_window(from_fraction(Prime(2), RationalNum(1, 3), 8)).kind == K::kNotInteger);
  // 1/5 mod 2^8 ends in a run of two ones; too short for a window of 8.
  CHECK(is_integer_window(from_fraction(Prime(2), RationalNum(1, 5), 8)).kind == K::kNotInteger);
  CHECK(is_integer_window(pa(5, {4, 4})).value == -1);
  CHECK(is_integer_window(pa(5, {0, 0})).value == 0);
  CHECK_THROWS_AS(is_integer_window(pa(5, {0})), PrecisionExhausted);

  for (std::uint64_t pv : {2, 3, 5, 7}) {
    for (std::int64_t y = -300; y <= 300; ++y) {
      auto verdict = is_integer_window(from_integer(Prime(pv), y, 24));
      CHECK(verdict.is_integer());
      CHECK(verdict.value == y);
    }
  }
  CHECK_THROWS_AS(is_integer_window(pa(2147483647, {5, 5, 5, 0, 0, 0})), Overflow);
}

TEST_CASE("detect_digit_period") {
  auto third = from_fraction(Prime(2), RationalNum(1, 3), 16);
  CHECK(detect_digit_period(third, 4, 4) == PeriodReport{1, 2});
  CHECK(detect_digit_period(from_integer(Prime(3), -1, 12), 2, 2) == PeriodReport{0, 1});
  CHECK_FALSE(detect_digit_period(PadicApprox(Prime(2), kThueMorse), 8, 4).has_value());
  CHECK_THROWS_AS(detect_digit_period(third, 9, 4), WindowTooSmall);
}

TEST_CASE("reconstruct_rational") {
  auto third = from_fraction(Prime(2), RationalNum(1, 3), 16);
  CHECK(reconstruct_rational(third, {1, 2}) == RationalNum(1, 3));
  CHECK(reconstruct_rational(from_integer(Prime(3), -1, 12), {0, 1}) == RationalNum(-1));
  auto alt = pa(2, {1, 0, 1, 0, 1, 0, 1, 0, 1, 0});
  CHECK(reconstruct_rational(alt, {0, 2}) == RationalNum(-1, 3));
  CHECK_THROWS_AS(reconstruct_rational(third, {0, 2}), InconsistentReport);
  CHECK_THROWS_AS(reconstruct_rational(third, {10, 10}), InconsistentReport);
}

TEST_CASE("fractions round-trip through digit periods") {
  for (std::uint64_t pv : {2, 3, 5, 7}) {
    const Prime p(pv);
    for (std::int64_t b = 1; b <= 20; ++b) {
      if (b % static_cast<std::int64_t>(pv) == 0) continue;
      for (std::int64_t a = -20; a <= 20; ++a) {
        if (std::gcd(a, b) != 1) continue;
        auto y = from_fraction(p, RationalNum(a, b), 64);
        auto report = detect_digit_period(y, 24, 20);
        REQUIRE(report.has_value());
        CHECK(reconstruct_rational(y, *report) == RationalNum(a, b));
      }
    }
  }
}

TEST_CASE("serialization") {
  auto y = from_integer(Prime(3), -2, 4);
  CHECK(to_string(y) == "p=3;K=4;digits=1,2,2,2");
  CHECK(parse_padic(to_string(y)) == y);
  CHECK(parse_digit_list(Prime(3), "1,2,2,2") == y);
  CHECK_THROWS_AS(parse_padic("p=3;K=3;digits=1,2,2,2"), ParseError);
  CHECK_THROWS_AS(parse_digit_list(Prime(3), "1,3"), ParseError);
}
