#pragma once

/// \file reed_muller.hpp
/// Fixed-polarity Reed-Muller (XOR-of-AND) polynomials.
///
/// Term j of a polynomial is the AND of the variables x_i whose bit
/// var_bit(n, i) is set in j; each variable enters directly or inverted as the
/// polarity vector says. Term 0 is the constant 1.

#include <array>
#include <cstdint>
#include <string>

#include "bfforms/cost.hpp"
#include "bfforms/truth_table.hpp"

namespace bfforms {

/// Polarity vector V_k. Bit var_bit(n, i) of k is 1 when x_i appears only
/// inverted, so k is read MSB-first as (x~_1 ... x~_n). k = 0 is positive
/// polarity, k = 2^n - 1 negative polarity.
struct Polarity {
  unsigned n = 0;
  std::uint32_t k = 0;

  Polarity() = default;
  Polarity(unsigned n, std::uint32_t k);
  bool inverted(unsigned i) const { return (k >> var_bit(n, i)) & 1U; }

  friend bool operator==(const Polarity&, const Polarity&) = default;
};

struct RmPolynomial {
  Polarity polarity;
  std::uint64_t coeffs = 0;  ///< bit j is a_j

  unsigned n() const { return polarity.n; }
  bool coeff(std::uint32_t j) const { return (coeffs >> j) & 1U; }
  friend bool operator==(const RmPolynomial&, const RmPolynomial&) = default;
};

/// In-place GF(2) butterfly for one variable over a packed coefficient word.
/// Positive Davio (f = f0 ^ x f2) when `negative` is false, negative Davio
/// (f = f1 ^ ~x f2) otherwise.
std::uint64_t davio_pass(std::uint64_t word, unsigned n, unsigned var, bool negative);
/// Inverse of davio_pass.
std::uint64_t davio_pass_inverse(std::uint64_t word, unsigned n, unsigned var, bool negative);

RmPolynomial fprm_transform(const TruthTable& tt, const Polarity& p);
/// Truth table reproduced by the polynomial (the inverse transform).
TruthTable rm_table(const RmPolynomial& poly);
bool eval_rm(const RmPolynomial& poly, const Assignment& a);

/// Scans all 2^n polarities, each transformed from scratch; returns the
/// cheapest polynomial under `criterion`, ties to the lowest k.
///
/// A Gray-code walk could update the coefficients incrementally between
/// neighbouring polarities; at n <= 6 the plain scan costs < 64 transforms.
RmPolynomial best_polarity(const TruthTable& tt, Criterion criterion);
/// best_polarity for every criterion in one scan, indexed by criterion_slot.
std::array<RmPolynomial, kCriterionCount> best_polarity_all(const TruthTable& tt);

/// 2^n * 2^(2^n); throws std::overflow_error when it does not fit 64 bits.
std::uint64_t fprm_count(unsigned n);
/// Number of RM terms with exactly k literals, from the recurrence
/// E(n,0) = E(n,n) = 1, E(n,1) = n, E(n,k) = E(n-1,k) + E(n-1,k-1).
std::uint64_t class_power(unsigned n, unsigned k);

/// Text of monomial j, e.g. "x1*~x3"; j = 0 is "1".
std::string monomial_text(unsigned n, std::uint32_t j, const Polarity& p);

/// "1 ^ ~x1*~x2"; the zero polynomial prints as "0".
std::string format_rm(const RmPolynomial& poly);

}  // namespace bfforms
