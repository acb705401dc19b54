#include "bfforms/cost.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

#include "bfforms/arithmetic.hpp"
#include "bfforms/reed_muller.hpp"
#include "bfforms/sop.hpp"

namespace bfforms {

std::string_view criterion_name(Criterion c) {
  switch (c) {
    case Criterion::S_ad: return "S_ad";
    case Criterion::S_sh: return "S_sh";
    case Criterion::S_L: return "S_L";
    case Criterion::S_s: return "S_s";
    case Criterion::S_ac: return "S_ac";
  }
  return "?";
}

std::optional<Criterion> parse_criterion(std::string_view text) {
  std::string key;
  for (char ch : text)
    if (ch != '_') key += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  auto lookup = [](std::string_view k) -> std::optional<Criterion> {
    if (k == "ad") return Criterion::S_ad;
    if (k == "sh") return Criterion::S_sh;
    if (k == "l") return Criterion::S_L;
    if (k == "s") return Criterion::S_s;
    if (k == "ac") return Criterion::S_ac;
    return std::nullopt;
  };
  if (auto c = lookup(key)) return c;
  if (key.size() > 1 && key[0] == 's') return lookup(std::string_view(key).substr(1));
  return std::nullopt;
}

std::int64_t CostVector::operator[](Criterion c) const {
  switch (c) {
    case Criterion::S_ad: return s_ad;
    case Criterion::S_sh: return s_sh;
    case Criterion::S_L: return s_l;
    case Criterion::S_s: return s_s;
    case Criterion::S_ac: return s_ac;
  }
  return 0;
}

CostVector make_cost(RailFactor rail, unsigned n, std::int64_t summands, std::int64_t conjunctions,
                     std::int64_t literals) {
  const std::int64_t row_width = static_cast<std::int64_t>(rail) * n;
  return {summands, conjunctions, literals, row_width * summands, row_width * conjunctions};
}

bool cost_invariants_hold(const CostVector& c, RailFactor rail, unsigned n) {
  const std::int64_t row_width = static_cast<std::int64_t>(rail) * n;
  return c.s_sh >= 0 && c.s_sh <= c.s_ad && c.s_ad <= c.s_sh + 1 && c.s_l >= 0 &&
         c.s_l <= static_cast<std::int64_t>(n) * c.s_sh && c.s_s == row_width * c.s_ad && c.s_ac == row_width * c.s_sh;
}

CostVector cost_of_sop(const SopForm& sop, unsigned n) {
  std::int64_t conjunctions = 0;
  std::int64_t literals = 0;
  for (const auto& cube : sop.terms) {
    const auto lits = cube.literal_count();
    literals += lits;
    if (lits) ++conjunctions;
  }
  return make_cost(RailFactor::Dual, n, static_cast<std::int64_t>(sop.terms.size()), conjunctions, literals);
}

CostVector cost_of_rm(const RmPolynomial& poly, unsigned n) {
  const std::int64_t summands = std::popcount(poly.coeffs);
  std::int64_t literals = 0;
  for (std::uint64_t rest = poly.coeffs & ~std::uint64_t{1}; rest; rest &= rest - 1)
    literals += std::popcount(static_cast<unsigned>(std::countr_zero(rest)));
  return make_cost(RailFactor::Single, n, summands, summands - (poly.coeffs & 1U), literals);
}

CostVector cost_of_arith(const ArithPolynomial& poly, unsigned n) {
  std::int64_t summands = 0;
  std::int64_t conjunctions = 0;
  std::int64_t literals = 0;
  for (std::uint32_t j = 0; j < poly.coeffs.size(); ++j) {
    if (poly.coeffs[j] == 0) continue;
    ++summands;
    if (j) {
      ++conjunctions;
      literals += std::popcount(j);
    }
  }
  return make_cost(RailFactor::Single, n, summands, conjunctions, literals);
}

std::string to_string(const CostVector& c) {
  return "(S_ad=" + std::to_string(c.s_ad) + ", S_sh=" + std::to_string(c.s_sh) + ", S_L=" + std::to_string(c.s_l) +
         ", S_s=" + std::to_string(c.s_s) + ", S_ac=" + std::to_string(c.s_ac) + ")";
}

}  // namespace bfforms
