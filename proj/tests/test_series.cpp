#include <doctest.h>

#include <random>

#include "oneunit/series.hpp"
#include "oracles.hpp"

using namespace oneunit;

namespace {

TruncSeries s(std::uint64_t p, std::vector<std::uint32_t> c) { return TruncSeries(Prime(p), std::move(c)); }

// Hasse derivative from the definition, with binomials from Pascal's triangle.
TruncSeries hasse_oracle(const TruncSeries& f, std::size_t m) {
  const auto p = f.modulus().value();
  auto rows = oracle::pascal(f.precision(), p);
  std::vector<std::uint32_t> c(f.precision() - m, 0);
  for (std::size_t n = m; n < f.precision(); ++n) c[n - m] = std::uint64_t{rows[n][m]} * f[n] % p;
  return TruncSeries(f.modulus(), std::move(c));
}

// sum a_n h^n with h^n from repeated schoolbook products.
TruncSeries compose_oracle(const TruncSeries& f, const TruncSeries& h) {
  const auto p = f.modulus().value();
  const std::size_t n = f.precision();
  std::vector<std::uint32_t> hc(h.coeffs().begin(), h.coeffs().end());
  std::vector<std::uint32_t> power(n, 0), acc(n, 0);
  power[0] = 1;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) acc[i] = (acc[i] + std::uint64_t{f[k]} * power[i]) % p;
    power = oracle::naive_mul(power, hc, n, p);
  }
  return TruncSeries(f.modulus(), std::move(acc));
}

}  // namespace

TEST_CASE("construction and shape errors") {
  CHECK_THROWS_AS(s(3, {}), ShapeMismatch);
  CHECK_THROWS_AS(s(3, {1, 3}), OutOfRange);
  CHECK_THROWS_AS(mul(s(3, {1, 1}), s(3, {1, 1, 0})), ShapeMismatch);
  CHECK_THROWS_AS(mul(s(3, {1, 1}), s(5, {1, 1})), ModulusMismatch);
  std::vector<std::int64_t> raw{-1, 4, 7};
  CHECK(TruncSeries::from_ints(Prime(3), raw) == s(3, {2, 1, 1}));
}

TEST_CASE("mul") {
  CHECK(mul(s(2, {1, 1, 0, 0}), s(2, {1, 1, 0, 0})) == s(2, {1, 0, 1, 0}));
  auto f = s(2, {1, 0, 1, 1});
  CHECK(mul(TruncSeries::one(Prime(2), 4), f) == f);
  // (1+x)^4 = 1 + 4x + 6x^2 + 4x^3 + x^4 -> 1,1,0,1,1 mod 3
  auto sq = s(3, {1, 2, 1, 0, 0});
  CHECK(mul(sq, sq) == s(3, {1, 1, 0, 1, 1}));
}

TEST_CASE("invert") {
  CHECK(invert(s(2, {1, 1, 0, 0, 0, 0})) == s(2, {1, 1, 1, 1, 1, 1}));
  for (std::uint64_t p : {2, 3, 7}) CHECK(invert(TruncSeries::one(Prime(p), 5)) == TruncSeries::one(Prime(p), 5));
  CHECK(invert(s(3, {1, 1, 0, 0})) == s(3, {1, 2, 1, 2}));
  CHECK_THROWS_AS(invert(s(5, {0, 1, 2})), NonUnitConstantTerm);
}

TEST_CASE("hasse_derivative") {
  auto f = s(2, {1, 1, 0, 1, 1, 0, 0, 1});
  CHECK(hasse_derivative(f, 0) == f);
  CHECK(hasse_derivative(s(2, {1, 1, 0, 0, 1, 1, 0, 0}), 1) == s(2, {1, 0, 0, 0, 1, 0, 0}));
  CHECK(hasse_derivative(s(3, {1, 1, 0, 1, 1}), 3) == s(3, {1, 1}));
  CHECK_THROWS_AS(hasse_derivative(f, 8), PrecisionExhausted);
}

TEST_CASE("frobenius and pth_root") {
  CHECK(frobenius(s(2, {1, 1, 0, 0, 0, 0, 0, 0})) == s(2, {1, 0, 1, 0, 0, 0, 0, 0}));
  CHECK(frobenius(s(3, {1, 1, 1, 0, 0, 0, 0, 0, 0})) == s(3, {1, 0, 0, 1, 0, 0, 1, 0, 0}));
  CHECK(pth_root(s(2, {1, 0, 0, 0, 1, 0, 0, 0})) == s(2, {1, 0, 1, 0}));
  CHECK(pth_root(TruncSeries::one(Prime(3), 9)) == TruncSeries::one(Prime(3), 3));
  CHECK_THROWS_AS(pth_root(s(2, {1, 1, 0, 0})), NotAPthPower);
  // floor((N-1)/p) + 1
  CHECK(pth_root(TruncSeries::one(Prime(3), 10)).precision() == 4);
  CHECK(pth_root(TruncSeries::one(Prime(5), 1)).precision() == 1);
}

TEST_CASE("compose") {
  const Prime two(2);
  auto f = s(2, {1, 0, 1, 1});
  CHECK(compose(f, TruncSeries::variable(two, 4)) == f);
  CHECK(compose(s(2, {1, 1, 0, 0}), s(2, {0, 1, 1, 0})) == s(2, {1, 1, 1, 0}));
  // (1+x)^3 evaluated at (1+x)^3 - 1 is (1+x)^9 = (1+x^8)(1+x) = 1 + x mod x^8.
  auto cube = s(2, {1, 1, 1, 1, 0, 0, 0, 0});
  CHECK(compose(cube, s(2, {0, 1, 1, 1, 0, 0, 0, 0})) == s(2, {1, 1, 0, 0, 0, 0, 0, 0}));
  CHECK_THROWS_AS(compose(f, s(2, {1, 1, 0, 0})), NonzeroConstantInner);
}

TEST_CASE("truncate") {
  CHECK(truncate(s(5, {1, 2, 3, 4}), 2) == s(5, {1, 2}));
  CHECK_THROWS_AS(truncate(s(5, {1, 2}), 3), PrecisionExhausted);
}

TEST_CASE("subst_group_law") {
  auto one = subst_group_law(TruncSeries::one(Prime(3), 4));
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) CHECK(one.at(i, j) == 1u * (i == 0 && j == 0));
  }
  // Over F_2 with N = 2: 1 + x + y + xy
  auto g = subst_group_law(s(2, {1, 1}));
  CHECK(g.at(0, 0) == 1);
  CHECK(g.at(1, 0) == 1);
  CHECK(g.at(0, 1) == 1);
  CHECK(g.at(1, 1) == 1);
  // (1+x)^2 = 1 + x^2 over F_2: f(x+y+xy) = f(x) f(y) in the 3x3 box.
  auto sq = s(2, {1, 0, 1});
  CHECK(subst_group_law(sq) == outer_product(sq, sq));
}

TEST_CASE("serialization") {
  auto f = s(3, {1, 2, 0, 1});
  CHECK(to_string(f) == "p=3;N=4;coeffs=1,2,0,1");
  CHECK(parse_series(to_string(f)) == f);
  CHECK(parse_coeff_list(Prime(3), "1,2,0,1") == f);
  CHECK_THROWS_AS(parse_series("p=3;N=5;coeffs=1,2,0,1"), ParseError);
  CHECK_THROWS_AS(parse_series("p=3;N=2;coeffs=1,3"), ParseError);
  CHECK_THROWS_AS(parse_series("p=3;coeffs=1"), ParseError);
  CHECK_THROWS_AS(parse_series("p=4;N=1;coeffs=1"), InvalidPrime);
  CHECK_THROWS_AS(parse_coeff_list(Prime(3), "1,,2"), ParseError);

  std::mt19937_64 rng(11);
  for (int t = 0; t < 50; ++t) {
    auto g = oracle::random_series(rng, Prime(7), 1 + rng() % 20, false);
    CHECK(parse_series(to_string(g)) == g);
  }
}

TEST_CASE("ring laws and inverse round trip on random series") {
  std::mt19937_64 rng(3);
  for (std::uint64_t pv : {2, 3, 5, 7, 1000003}) {
    const Prime p(pv);
    for (int t = 0; t < 30; ++t) {
      const std::size_t n = 1 + rng() % 24;
      auto a = oracle::random_series(rng, p, n, false);
      auto b = oracle::random_series(rng, p, n, false);
      auto c = oracle::random_series(rng, p, n, false);
      CHECK(a * b == b * a);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a - b + b == a);
      const auto u = oracle::random_series(rng, p, n, true);
      CHECK(u * invert(u) == TruncSeries::one(p, n));
      std::vector<std::uint32_t> ac(a.coeffs().begin(), a.coeffs().end());
      std::vector<std::uint32_t> bc(b.coeffs().begin(), b.coeffs().end());
      const auto ab = a * b;
      CHECK(ab.coeffs().size() == n);
      CHECK(std::vector<std::uint32_t>(ab.coeffs().begin(), ab.coeffs().end()) ==
            oracle::naive_mul(ac, bc, n, static_cast<std::uint32_t>(pv)));
    }
  }
}

TEST_CASE("frobenius is the p-th power; pth_root inverts it") {
  std::mt19937_64 rng(5);
  for (std::uint64_t pv : {2, 3, 5, 7}) {
    const Prime p(pv);
    for (int t = 0; t < 30; ++t) {
      const std::size_t n = 1 + rng() % 40;
      auto f = oracle::random_series(rng, p, n, t % 2 == 0);
      TruncSeries power = TruncSeries::one(p, n);
      for (std::uint64_t k = 0; k < pv; ++k) power = power * f;  // p-fold product
      CHECK(frobenius(f) == power);
      CHECK(pow(f, pv) == power);
      auto root = pth_root(frobenius(f));
      CHECK(root == truncate(f, root.precision()));
    }
  }
}

TEST_CASE("Hasse derivative: definition, composition, product rule") {
  std::mt19937_64 rng(9);
  for (std::uint64_t pv : {2, 3, 5, 7}) {
    const Prime p(pv);
    auto rows = oracle::pascal(64, static_cast<std::uint32_t>(pv));
    for (int t = 0; t < 20; ++t) {
      const std::size_t n = 2 + rng() % 40;
      auto f = oracle::random_series(rng, p, n, false);
      auto g = oracle::random_series(rng, p, n, false);
      for (std::size_t m = 0; m < n; ++m) CHECK(hasse_derivative(f, m) == hasse_oracle(f, m));

      // D^(i) D^(j) f = C(i+j, i) D^(i+j) f
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; i + j < n; ++j) {
          auto lhs = hasse_derivative(hasse_derivative(f, j), i);
          auto rhs = scale(hasse_derivative(f, i + j), FpElement{rows[i + j][i], p});
          CHECK(lhs == rhs);
        }
      }

      // D^(m)(fg) = sum_{i+j=m} D^(i)f D^(j)g at precision N - m
      const auto fg = f * g;
      for (std::size_t m = 0; m < n; ++m) {
        const std::size_t len = n - m;
        TruncSeries sum = TruncSeries::zero(p, len);
        for (std::size_t i = 0; i <= m; ++i) {
          sum = sum + truncate(hasse_derivative(f, i), len) * truncate(hasse_derivative(g, m - i), len);
        }
        CHECK(hasse_derivative(fg, m) == sum);
      }
    }
  }
}

TEST_CASE("compose agrees with the power-sum definition") {
  std::mt19937_64 rng(13);
  for (std::uint64_t pv : {2, 3, 5}) {
    const Prime p(pv);
    for (int t = 0; t < 20; ++t) {
      const std::size_t n = 1 + rng() % 20;
      auto f = oracle::random_series(rng, p, n, false);
      auto hv = oracle::random_series(rng, p, n, false);
      std::vector<std::uint32_t> hc(hv.coeffs().begin(), hv.coeffs().end());
      hc[0] = 0;
      TruncSeries h(p, hc);
      CHECK(compose(f, h) == compose_oracle(f, h));
    }
  }
}

TEST_CASE("subst_group_law matches direct expansion") {
  std::mt19937_64 rng(17);
  for (std::uint64_t pv : {2, 3, 5}) {
    const Prime p(pv);
    for (int t = 0; t < 10; ++t) {
      const std::size_t n = 1 + rng() % 7;
      auto f = oracle::random_series(rng, p, n, false);
      // sum_k a_k (x + y + xy)^k with (x+y+xy)^k = sum C(k,a) C(k-a,b) x^(a+c) y^(b+c)
      // over a + b + c = k, expanded by brute force.
      BivTrunc expect(p, n);
      auto rows = oracle::pascal(3 * n, static_cast<std::uint32_t>(pv));
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t a = 0; a <= k; ++a) {
          for (std::size_t b = 0; a + b <= k; ++b) {
            const std::size_t c = k - a - b;
            const std::size_t i = a + c, j = b + c;
            if (i >= n || j >= n) continue;
            std::uint64_t term = std::uint64_t{rows[k][a]} * rows[k - a][b] % pv * f[k] % pv;
            expect.at(i, j) = static_cast<std::uint32_t>((expect.at(i, j) + term) % pv);
          }
        }
      }
      CHECK(subst_group_law(f) == expect);
    }
  }
}
