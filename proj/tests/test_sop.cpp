#include <doctest.h>

#include <algorithm>

#include "bfforms/cost.hpp"
#include "bfforms/sop.hpp"
#include "oracles.hpp"

using namespace bfforms;

namespace {

std::vector<std::string> texts(const std::vector<Cube>& cubes) {
  std::vector<std::string> out;
  for (const auto& c : cubes) out.push_back(c.to_string());
  return out;
}

const TruthTable kMaj3 = TruthTable::from_bits({0, 0, 0, 1, 0, 1, 1, 1});

std::vector<TruthTable> seeded_l4(std::size_t count, std::uint64_t seed) {
  std::vector<TruthTable> out;
  for (const auto& f : sample_uniform(4, count, seed)) out.push_back(tt_from_index(f));
  return out;
}

}  // namespace

TEST_SUITE("sop") {
  TEST_CASE("cube text and coverage") {
    const Cube c = Cube::from_string("1-0");
    CHECK(c.literal(1) == Cube::Literal::Positive);
    CHECK(c.literal(2) == Cube::Literal::Absent);
    CHECK(c.literal(3) == Cube::Literal::Negative);
    CHECK(c.literal_count() == 2);
    CHECK(c.to_string() == "1-0");
    for (std::uint32_t r = 0; r < 8; ++r) CHECK(c.covers(r) == (r == 4 || r == 6));
    CHECK(Cube::tautology(3).cover_word() == 0xFF);
    CHECK(Cube::minterm(3, 5).to_string() == "101");
    CHECK_THROWS(Cube::from_string("1x"));
    for (const auto& t : oracle::all_cubes(3)) {
      const Cube cube = Cube::from_string(oracle::ternary_text(t));
      CHECK(cube.cover_word() == oracle::ternary_rows(t));
    }
  }

  TEST_CASE("cube order puts absent before negative before positive") {
    CHECK(cube_less(Cube::from_string("-1"), Cube::from_string("01")));
    CHECK(cube_less(Cube::from_string("01"), Cube::from_string("1-")));
    CHECK_FALSE(cube_less(Cube::from_string("1-"), Cube::from_string("1-")));
  }

  TEST_CASE("evaluation") {
    const SopForm empty{3, {}};
    const SopForm one{3, {Cube::tautology(3)}};
    const SopForm maj{3, {Cube::from_string("11-"), Cube::from_string("1-1"), Cube::from_string("-11")}};
    for (std::uint32_t r = 0; r < 8; ++r) {
      CHECK_FALSE(eval_sop(empty, Assignment(3, r)));
      CHECK(eval_sop(one, Assignment(3, r)));
    }
    CHECK(eval_sop(maj, Assignment::from_values({0, 1, 1})));
    CHECK(sop_table(maj) == kMaj3);
    CHECK(format_sop(empty) == "0");
    CHECK(format_sop(one) == "1");
    CHECK(format_sop(SopForm{2, {Cube::from_string("10")}}) == "x1*~x2");
  }

  TEST_CASE("prime implicants") {
    CHECK(texts(prime_implicants(TruthTable::constant(2, true))) == std::vector<std::string>{"--"});
    CHECK(texts(prime_implicants(TruthTable::from_bits({0, 1, 1, 0}))) == std::vector<std::string>{"01", "10"});
    CHECK(texts(prime_implicants(kMaj3)) == std::vector<std::string>{"-11", "1-1", "11-"});
    CHECK_THROWS_AS(prime_implicants(TruthTable::constant(2, false)), std::invalid_argument);
  }

  TEST_CASE("prime implicants match the cube-lattice oracle") {
    for (const auto& tt : enumerate_all(3)) {
      if (tt.is_constant0()) continue;
      REQUIRE(texts(prime_implicants(tt)) == oracle::primes(3, tt.word()));
    }
    for (const auto& tt : seeded_l4(200, 41)) {
      if (tt.is_constant0()) continue;
      REQUIRE(texts(prime_implicants(tt)) == oracle::primes(4, tt.word()));
    }
  }

  TEST_CASE("minimize_sop examples") {
    CHECK(minimize_sop(TruthTable::constant(2, false)).terms.empty());
    CHECK(texts(minimize_sop(TruthTable::constant(2, true)).terms) == std::vector<std::string>{"--"});
    const SopForm maj = minimize_sop(kMaj3);
    CHECK(texts(maj.terms) == std::vector<std::string>{"-11", "1-1", "11-"});
    CHECK(cost_of_sop(maj, 3).s_l == 6);
    CHECK(texts(minimize_sop(TruthTable::from_bits({0, 1, 1, 1})).terms) == std::vector<std::string>{"-1", "1-"});
    // XOR3: the four minterms are all prime and essential
    CHECK(minimize_sop(TruthTable::from_bits({0, 1, 1, 0, 1, 0, 0, 1})).terms.size() == 4);
  }

  TEST_CASE("minimized covers are correct, prime and minimal over L(3)") {
    for (const auto& tt : enumerate_all(3)) {
      const SopForm sop = minimize_sop(tt);
      REQUIRE(sop_table(sop) == tt);
      if (!tt.is_constant0() && !tt.is_constant1()) {
        const auto primes = oracle::primes(3, tt.word());
        for (const auto& c : sop.terms) CHECK(std::binary_search(primes.begin(), primes.end(), c.to_string()));
      }
      REQUIRE(sop.terms.size() == oracle::min_cover_size_for(3, tt.word()));
      CHECK(std::is_sorted(sop.terms.begin(), sop.terms.end(), cube_less));
    }
  }

  TEST_CASE("minimality on seeded L(4) functions") {
    for (const auto& tt : seeded_l4(200, 2024)) {
      const SopForm sop = minimize_sop(tt);
      REQUIRE(sop_table(sop) == tt);
      REQUIRE(sop.terms.size() == oracle::min_cover_size_for(4, tt.word()));
    }
  }

  TEST_CASE("literal count is minimal among minimum-term covers at n = 3") {
    for (const auto& tt : enumerate_all(3)) {
      if (tt.is_constant0() || tt.is_constant1()) continue;
      const auto primes = oracle::primes(3, tt.word());
      const std::size_t m = primes.size();
      const SopForm sop = minimize_sop(tt);
      unsigned best = ~0U;
      for (std::uint32_t mask = 1; mask < (1U << m); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcount(mask)) != sop.terms.size()) continue;
        std::uint64_t acc = 0;
        unsigned lits = 0;
        for (std::size_t i = 0; i < m; ++i)
          if ((mask >> i) & 1U) {
            acc |= Cube::from_string(primes[i]).cover_word();
            lits += Cube::from_string(primes[i]).literal_count();
          }
        if (acc == tt.word()) best = std::min(best, lits);
      }
      REQUIRE(cost_of_sop(sop, 3).s_l == best);
    }
  }

  TEST_CASE("determinism and six-variable input") {
    const TruthTable tt = tt_from_index(4, 0x6B2D);
    CHECK(texts(minimize_sop(tt).terms) == texts(minimize_sop(tt).terms));
    const TruthTable wide(6, 0x8F3C0A5597E1D2B4ULL);
    CHECK(sop_table(minimize_sop(wide)) == wide);
  }

  TEST_CASE("guard") {
    MinimizerOptions opts;
    opts.guard = std::chrono::duration<double>(0.0);
    CHECK_THROWS_AS(minimize_sop(TruthTable(6, 0x8F3C0A5597E1D2B4ULL), opts), GuardExceeded);
  }
}
