#pragma once

/// \file sop.hpp
/// Exact two-level sum-of-products minimization.
///
/// Prime implicants come from the Quine-McCluskey merge tables. The cover is
/// then chosen exactly over the prime-implicant chart (Petrick's problem)
/// with a branch-and-bound search, under the total objective
///   (term count, literal count, lexicographic cube list).
///
/// Cube order: a cube is written as its PLA input string over x_1..x_n using
/// '-' for an absent variable, '0' for a negative and '1' for a positive
/// literal. Cubes compare by those strings character-wise with
/// '-' < '0' < '1' (ASCII order). Covers are kept sorted ascending and
/// compare lexicographically as sequences.

#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "bfforms/truth_table.hpp"

namespace bfforms {

/// Product term. `care` has bit var_bit(n, i) set when x_i is present and
/// `value` holds the required input value at each present position.
struct Cube {
  unsigned n = 0;
  std::uint32_t care = 0;
  std::uint32_t value = 0;

  static Cube tautology(unsigned n) { return {n, 0, 0}; }
  static Cube minterm(unsigned n, std::uint32_t row) { return {n, row_count(n) - 1, row}; }
  /// Parses a PLA input string such as "1-0".
  static Cube from_string(const std::string& text);

  enum class Literal : std::uint8_t { Absent, Negative, Positive };
  Literal literal(unsigned i) const;

  unsigned literal_count() const;
  bool covers(std::uint32_t row) const { return (row & care) == value; }
  /// Rows covered, as a truth-table word.
  std::uint64_t cover_word() const;
  std::string to_string() const;

  friend bool operator==(const Cube& a, const Cube& b) {
    return a.n == b.n && a.care == b.care && a.value == b.value;
  }
};

/// Order documented above.
bool cube_less(const Cube& a, const Cube& b);

struct SopForm {
  unsigned n = 0;
  std::vector<Cube> terms;  ///< empty means constant 0
};

bool eval_sop(const SopForm& sop, const Assignment& a);
TruthTable sop_table(const SopForm& sop);
/// "x1*~x2 + x3"; constant cover prints as "0" or "1".
std::string format_sop(const SopForm& sop);

class GuardExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct MinimizerOptions {
  /// Wall-clock budget per minimize_sop call.
  std::chrono::duration<double> guard{30.0};
  /// Reads BFFORMS_GUARD_SECS when set, otherwise the default above.
  static MinimizerOptions from_environment();
};

/// Exactly the prime implicants of tt, sorted by cube order. Throws
/// std::invalid_argument on the constant-0 function.
std::vector<Cube> prime_implicants(const TruthTable& tt);

/// Minimum cover under the documented objective. Throws GuardExceeded when
/// the search would overrun the time guard.
SopForm minimize_sop(const TruthTable& tt, const MinimizerOptions& options = MinimizerOptions::from_environment());

}  // namespace bfforms
