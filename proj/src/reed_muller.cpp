#include "bfforms/reed_muller.hpp"

#include <bit>
#include <stdexcept>
#include <vector>

namespace bfforms {

Polarity::Polarity(unsigned n_, std::uint32_t k_) : n(n_), k(k_) {
  check_vars(n_);
  if (k_ >= row_count(n_)) throw DimensionError("polarity integer out of range for n");
}

std::uint64_t davio_pass(std::uint64_t word, unsigned n, unsigned var, bool negative) {
  const unsigned stride = 1U << var_bit(n, var);
  const std::uint64_t hi_mask = projection_word(n, var);
  const std::uint64_t lo = word & ~hi_mask;
  const std::uint64_t hi = word & hi_mask;
  if (!negative) return lo | (hi ^ (lo << stride));
  return (hi >> stride) | (hi ^ (lo << stride));
}

std::uint64_t davio_pass_inverse(std::uint64_t word, unsigned n, unsigned var, bool negative) {
  if (!negative) return davio_pass(word, n, var, false);
  // forward: lo' = hi, hi' = lo ^ hi; so hi = lo', lo = hi' ^ lo'
  const unsigned stride = 1U << var_bit(n, var);
  const std::uint64_t hi_mask = projection_word(n, var);
  const std::uint64_t lo = word & ~hi_mask;
  const std::uint64_t hi = word & hi_mask;
  return ((hi >> stride) ^ lo) | (lo << stride);
}

RmPolynomial fprm_transform(const TruthTable& tt, const Polarity& p) {
  if (p.n != tt.n()) throw DimensionError("polarity and truth table differ in n");
  std::uint64_t w = tt.word();
  for (unsigned i = 1; i <= tt.n(); ++i) w = davio_pass(w, tt.n(), i, p.inverted(i));
  return {p, w & table_mask(tt.n())};
}

TruthTable rm_table(const RmPolynomial& poly) {
  const unsigned n = poly.n();
  std::uint64_t w = poly.coeffs;
  for (unsigned i = n; i >= 1; --i) w = davio_pass_inverse(w, n, i, poly.polarity.inverted(i));
  return {n, w & table_mask(n)};
}

bool eval_rm(const RmPolynomial& poly, const Assignment& a) {
  if (a.n() != poly.n()) throw DimensionError("assignment and polynomial differ in n");
  const std::uint32_t literals = a.row_index() ^ poly.polarity.k;
  bool acc = false;
  for (std::uint64_t rest = poly.coeffs; rest; rest &= rest - 1) {
    const auto j = static_cast<std::uint32_t>(std::countr_zero(rest));
    if ((j & ~literals) == 0) acc = !acc;
  }
  return acc;
}

RmPolynomial best_polarity(const TruthTable& tt, Criterion criterion) {
  RmPolynomial best;
  std::int64_t best_cost = -1;
  for (std::uint32_t k = 0; k < tt.size(); ++k) {
    auto poly = fprm_transform(tt, Polarity(tt.n(), k));
    const auto cost = cost_of_rm(poly, tt.n())[criterion];
    if (best_cost < 0 || cost < best_cost) {
      best = poly;
      best_cost = cost;
    }
  }
  return best;
}

std::array<RmPolynomial, kCriterionCount> best_polarity_all(const TruthTable& tt) {
  std::array<RmPolynomial, kCriterionCount> best{};
  std::array<std::int64_t, kCriterionCount> best_cost{};
  best_cost.fill(-1);
  for (std::uint32_t k = 0; k < tt.size(); ++k) {
    auto poly = fprm_transform(tt, Polarity(tt.n(), k));
    const auto cost = cost_of_rm(poly, tt.n());
    for (auto c : kAllCriteria) {
      const auto s = criterion_slot(c);
      if (best_cost[s] < 0 || cost[c] < best_cost[s]) {
        best[s] = poly;
        best_cost[s] = cost[c];
      }
    }
  }
  return best;
}

std::uint64_t fprm_count(unsigned n) {
  if (n < 1) throw std::invalid_argument("fprm_count requires n >= 1");
  if (n >= 6) throw std::overflow_error("2^n * 2^(2^n) does not fit 64 bits for n >= 6");
  return std::uint64_t{1} << (n + (1U << n));
}

std::uint64_t class_power(unsigned n, unsigned k) {
  if (k > n) throw std::invalid_argument("class_power requires 0 <= k <= n");
  // row m of the recurrence, built from row m-1
  std::vector<std::uint64_t> row{1};
  for (unsigned m = 1; m <= n; ++m) {
    std::vector<std::uint64_t> next(m + 1);
    next[0] = next[m] = 1;
    for (unsigned j = 1; j < m; ++j) {
      if (row[j] > UINT64_MAX - row[j - 1]) throw std::overflow_error("class_power overflow");
      next[j] = row[j] + row[j - 1];
    }
    row = std::move(next);
  }
  return row[k];
}

std::string monomial_text(unsigned n, std::uint32_t j, const Polarity& p) {
  if (j == 0) return "1";
  std::string out;
  for (unsigned i = 1; i <= n; ++i) {
    if (!((j >> var_bit(n, i)) & 1U)) continue;
    if (!out.empty()) out += "*";
    if (p.inverted(i)) out += "~";
    out += "x" + std::to_string(i);
  }
  return out;
}

std::string format_rm(const RmPolynomial& poly) {
  if (poly.coeffs == 0) return "0";
  std::string out;
  for (std::uint32_t j = 0; j < row_count(poly.n()); ++j) {
    if (!poly.coeff(j)) continue;
    if (!out.empty()) out += " ^ ";
    out += monomial_text(poly.n(), j, poly.polarity);
  }
  return out;
}

}  // namespace bfforms
