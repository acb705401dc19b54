#include <doctest.h>

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <iostream>
#include <set>

#include "bfforms/arithmetic.hpp"
#include "oracles.hpp"

using namespace bfforms;

namespace {

const TruthTable kOr2 = TruthTable::from_bits({0, 1, 1, 1});
const TruthTable kXor2 = TruthTable::from_bits({0, 1, 1, 0});
const TruthTable kAnd2 = TruthTable::from_bits({0, 0, 0, 1});

std::size_t nonzero(const ArithPolynomial& p) {
  std::size_t c = 0;
  for (auto v : p.coeffs) c += v != 0;
  return c;
}

}  // namespace

TEST_SUITE("arithmetic") {
  TEST_CASE("transform examples") {
    // index 1 = x2, 2 = x1, 3 = x1*x2
    CHECK(arithmetic_transform(kOr2, Polarity(2, 0)).coeffs == std::vector<std::int64_t>{0, 1, 1, -1});
    CHECK(arithmetic_transform(kXor2, Polarity(2, 0)).coeffs == std::vector<std::int64_t>{0, 1, 1, -2});
    CHECK(format_arith(arithmetic_transform(kXor2, Polarity(2, 0))) == "x2 + x1 - 2*x1*x2");
    for (std::uint32_t k = 0; k < 8; ++k)
      CHECK(arithmetic_transform(TruthTable::constant(3, true), Polarity(3, k)).coeffs ==
            std::vector<std::int64_t>{1, 0, 0, 0, 0, 0, 0, 0});
  }

  TEST_CASE("evaluation") {
    const ArithPolynomial zero{Polarity(2, 0), std::vector<std::int64_t>(4, 0)};
    for (std::uint32_t r = 0; r < 4; ++r) CHECK(eval_arith(zero, Assignment(2, r)) == 0);
    CHECK(eval_arith(arithmetic_transform(kOr2, Polarity(2, 0)), Assignment::from_values({1, 1})) == 1);
    CHECK(eval_arith(arithmetic_transform(kXor2, Polarity(2, 0)), Assignment::from_values({1, 1})) == 0);
  }

  TEST_CASE("exactness, oracle agreement and coefficient bound over L(3) x all polarities") {
    for (const auto& tt : enumerate_all(3))
      for (std::uint32_t k = 0; k < 8; ++k) {
        const ArithPolynomial p = arithmetic_transform(tt, Polarity(3, k));
        REQUIRE(p.coeffs == oracle::arith_coefficients(3, tt.word(), k));
        for (std::uint32_t r = 0; r < 8; ++r) {
          REQUIRE(eval_arith(p, Assignment(3, r)) == static_cast<std::int64_t>(tt.bit(r)));
          REQUIRE(oracle::arith_value(p.coeffs, 3, k, r) == static_cast<std::int64_t>(tt.bit(r)));
        }
        for (auto c : p.coeffs) REQUIRE(std::llabs(c) <= 8);
      }
  }

  TEST_CASE("butterfly inverse round trip") {
    for (unsigned n = 1; n <= 3; ++n)
      for (const auto& tt : enumerate_all(n))
        for (std::uint32_t k = 0; k < row_count(n); ++k) {
          const ArithPolynomial p = arithmetic_transform(tt, Polarity(n, k));
          const auto values = arithmetic_values(p);
          for (std::uint32_t r = 0; r < row_count(n); ++r) REQUIRE(values[r] == static_cast<std::int64_t>(tt.bit(r)));
          for (unsigned var = 1; var <= n; ++var)
            for (bool neg : {false, true}) {
              auto v = p.coeffs;
              arith_pass(v, n, var, neg);
              arith_pass_inverse(v, n, var, neg);
              REQUIRE(v == p.coeffs);
            }
        }
  }

  TEST_CASE("injectivity per polarity") {
    for (unsigned n = 1; n <= 3; ++n)
      for (std::uint32_t k = 0; k < row_count(n); ++k) {
        std::set<std::vector<std::int64_t>> seen;
        for (const auto& tt : enumerate_all(n)) seen.insert(arithmetic_transform(tt, Polarity(n, k)).coeffs);
        CHECK(seen.size() == enumerate_all(n).size());
      }
  }

  TEST_CASE("complement image") {
    const ArithPolynomial zero{Polarity(2, 0), std::vector<std::int64_t>(4, 0)};
    CHECK(complement_image(zero) == arithmetic_transform(TruthTable::constant(2, true), Polarity(2, 0)));
    const auto or2 = arithmetic_transform(kOr2, Polarity(2, 0));
    CHECK(complement_image(or2).coeffs == std::vector<std::int64_t>{1, -1, -1, 1});
    CHECK(complement_image(or2) == arithmetic_transform(complement(kOr2), Polarity(2, 0)));
    for (unsigned n = 1; n <= 3; ++n)
      for (const auto& tt : enumerate_all(n))
        for (std::uint32_t k = 0; k < row_count(n); ++k) {
          const auto p = arithmetic_transform(tt, Polarity(n, k));
          const auto c = complement_image(p);
          REQUIRE(complement_image(c) == p);
          for (std::uint32_t r = 0; r < row_count(n); ++r)
            REQUIRE(eval_arith(c, Assignment(n, r)) == 1 - eval_arith(p, Assignment(n, r)));
          REQUIRE(image_of(c) == image_complement(image_of(tt)));
        }
  }

  TEST_CASE("best polarity") {
    const auto inv = best_arith_polarity(TruthTable::from_bits({1, 0}), Criterion::S_ad);
    CHECK(inv.polarity.k == 1);
    CHECK(nonzero(inv) == 1);
    CHECK(nonzero(arithmetic_transform(TruthTable::from_bits({1, 0}), Polarity(1, 0))) == 2);
    const auto one = best_arith_polarity(TruthTable::constant(2, true), Criterion::S_ad);
    CHECK(one.polarity.k == 0);
    CHECK(nonzero(one) == 1);
    const auto or2 = best_arith_polarity(kOr2, Criterion::S_ad);
    CHECK(or2.polarity.k == 3);
    CHECK(or2.coeffs == std::vector<std::int64_t>{1, 0, 0, -1});
    CHECK(format_arith(or2) == "1 - ~x1*~x2");
    for (const auto& tt : enumerate_all(3)) {
      const auto all = best_arith_polarity_all(tt);
      for (auto c : kAllCriteria) {
        std::int64_t best = -1;
        std::uint32_t best_k = 0;
        for (std::uint32_t k = 0; k < 8; ++k) {
          const ArithPolynomial p{Polarity(3, k), oracle::arith_coefficients(3, tt.word(), k)};
          if (best < 0 || cost_of_arith(p, 3)[c] < best) {
            best = cost_of_arith(p, 3)[c];
            best_k = k;
          }
        }
        REQUIRE(all[criterion_slot(c)].polarity.k == best_k);
        REQUIRE(best_arith_polarity(tt, c) == all[criterion_slot(c)]);
      }
    }
  }

  TEST_CASE("threshold verification") {
    for (const auto& tt : enumerate_all(3)) CHECK(threshold_verify(arithmetic_transform(tt, Polarity(3, 5)), tt));
    // constant 0.6 against constant 1
    ArithPolynomial fraction{Polarity(2, 0), {3, 0, 0, 0}, 5};
    CHECK(threshold_verify(fraction, TruthTable::constant(2, true)));
    CHECK_FALSE(threshold_verify(fraction, TruthTable::constant(2, false)));
    // exactly one half is neither above nor below
    CHECK_FALSE(threshold_verify(ArithPolynomial{Polarity(1, 0), {1, 0}, 2}, TruthTable::constant(1, true)));
    CHECK_FALSE(threshold_verify(arithmetic_transform(kOr2, Polarity(2, 0)), kAnd2));
    // x1 + x2 over 3 exceeds one half only at (1, 1): AND2 as a two-term threshold form
    CHECK(threshold_verify(ArithPolynomial{Polarity(2, 0), {0, 1, 1, 0}, 3}, kAnd2));
    CHECK(format_arith(ArithPolynomial{Polarity(2, 0), {0, 1, 1, 0}, 3}) == "(x2 + x1)/3");
  }

  TEST_CASE("F-image isomorphism over L(2)") {
    const FImage a{1, {Rational(0), Rational(1)}};
    const FImage b{1, {Rational(1), Rational(0)}};
    CHECK(graphical_disjunction(a, b).values == std::vector<Rational>{1, 1});
    CHECK(graphical_conjunction(a, a) == a);
    for (const auto& f : enumerate_all(2))
      for (const auto& g : enumerate_all(2)) {
        REQUIRE(graphical_disjunction(image_of(f), image_of(g)) == image_of(f | g));
        REQUIRE(graphical_conjunction(image_of(f), image_of(g)) == image_of(f & g));
        REQUIRE(table_of(graphical_disjunction(image_of(f), image_of(g))) == (f | g));
      }
    for (const auto& f : enumerate_all(3)) {
      REQUIRE(image_complement(image_of(f)) == image_of(complement(f)));
      REQUIRE(image_of(arithmetic_transform(f, Polarity(3, 6))) == image_of(f));
    }
    CHECK_THROWS(table_of(FImage{1, {Rational(1, 2), Rational(0)}}));
  }

  TEST_CASE("canonical term counts") {
    // Least nonzero-coefficient count over polarities. Parity needs every
    // non-constant monomial at every polarity, so the worst case is 2^n - 1.
    for (unsigned n = 2; n <= 4; ++n) {
      std::size_t worst = 0;
      std::size_t above = 0;
      for (const auto& tt : enumerate_all(n)) {
        const std::size_t terms = nonzero(best_arith_polarity(tt, Criterion::S_ad));
        worst = std::max(worst, terms);
        above += terms > row_count(n) / 2 + 1;
      }
      MESSAGE("n=" << n << " worst canonical term count " << worst << ", functions above 2^(n-1)+1: " << above);
      CHECK(worst == row_count(n) - 1);
      TruthTable parity = TruthTable::constant(n, false);
      for (unsigned i = 1; i <= n; ++i) parity = parity ^ TruthTable::variable(n, i);
      for (std::uint32_t k = 0; k < row_count(n); ++k) {
        const auto coeffs = oracle::arith_coefficients(n, parity.word(), k);
        // an odd number of inverted literals adds the constant term
        const std::size_t expected = row_count(n) - 1 + (std::popcount(k) % 2);
        CHECK(static_cast<std::size_t>(std::count_if(coeffs.begin(), coeffs.end(), [](auto c) { return c != 0; })) ==
              expected);
      }
    }
  }
}
