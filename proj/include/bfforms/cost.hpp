#pragma once

/// \file cost.hpp
/// The five PLA quality criteria and the PLM1 area model.
///
/// A classical (AND-OR) realization needs every input on both rails, so each
/// PLM1 row spans 2n columns; the XOR and arithmetic forms use a fixed
/// polarity per variable and a single rail, n columns per row.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace bfforms {

struct SopForm;
struct RmPolynomial;
struct ArithPolynomial;

enum class Criterion : std::uint8_t { S_ad, S_sh, S_L, S_s, S_ac };

inline constexpr std::array<Criterion, 5> kAllCriteria = {Criterion::S_ad, Criterion::S_sh, Criterion::S_L,
                                                          Criterion::S_s, Criterion::S_ac};
inline constexpr std::size_t kCriterionCount = kAllCriteria.size();

constexpr std::size_t criterion_slot(Criterion c) { return static_cast<std::size_t>(c); }
std::string_view criterion_name(Criterion c);
/// Accepts "S_ad", "s_ad", "Sad", "ad" and so on.
std::optional<Criterion> parse_criterion(std::string_view text);

enum class RailFactor : std::uint8_t { Single = 1, Dual = 2 };

struct CostVector {
  std::int64_t s_ad = 0;  ///< summands: PLM2 inputs
  std::int64_t s_sh = 0;  ///< summands carrying at least one literal: active PLM1 rows
  std::int64_t s_l = 0;   ///< literal occurrences
  std::int64_t s_s = 0;   ///< PLM1 overall area
  std::int64_t s_ac = 0;  ///< PLM1 active-element area

  std::int64_t operator[](Criterion c) const;
  friend bool operator==(const CostVector&, const CostVector&) = default;
};

/// Builds the vector from the three counts; areas follow rail * n * rows.
CostVector make_cost(RailFactor rail, unsigned n, std::int64_t summands, std::int64_t conjunctions,
                     std::int64_t literals);

/// Checks s_sh <= s_ad <= s_sh + 1, s_l <= n*s_sh and the area formulas.
bool cost_invariants_hold(const CostVector& c, RailFactor rail, unsigned n);

CostVector cost_of_sop(const SopForm& sop, unsigned n);
CostVector cost_of_rm(const RmPolynomial& poly, unsigned n);
CostVector cost_of_arith(const ArithPolynomial& poly, unsigned n);

std::string to_string(const CostVector& c);

}  // namespace bfforms
