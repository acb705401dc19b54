#pragma once

/// \file arithmetic.hpp
/// Arithmetic (S-basis) polynomials: integer-coefficient series whose value
/// on every assignment is the function value.
///
/// Monomial j is the product of the polarity-adjusted variables selected by
/// the bits of j, exactly as for Reed-Muller terms; the sum is ordinary
/// integer addition. A canonical polynomial is unique per (function,
/// polarity) and takes only the values 0 and 1.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "bfforms/cost.hpp"
#include "bfforms/rational.hpp"
#include "bfforms/reed_muller.hpp"
#include "bfforms/truth_table.hpp"

namespace bfforms {

struct ArithPolynomial {
  Polarity polarity;
  std::vector<std::int64_t> coeffs;  ///< C_j, size 2^n
  /// Polynomial value is (sum C_j S_j) / scale. Canonical transforms use 1;
  /// larger scales let threshold candidates carry fractional coefficients.
  std::int64_t scale = 1;

  unsigned n() const { return polarity.n; }
  friend bool operator==(const ArithPolynomial&, const ArithPolynomial&) = default;
};

/// One integer butterfly over a value vector of length 2^n, in place.
/// Positive step: (lo, hi) -> (lo, hi - lo). Negative step, for x~ = 1 - x:
/// (lo, hi) -> (hi, lo - hi).
void arith_pass(std::vector<std::int64_t>& v, unsigned n, unsigned var, bool negative);
void arith_pass_inverse(std::vector<std::int64_t>& v, unsigned n, unsigned var, bool negative);

ArithPolynomial arithmetic_transform(const TruthTable& tt, const Polarity& p);
/// Values of the series (unscaled) on rows 0 .. 2^n - 1.
std::vector<std::int64_t> arithmetic_values(const ArithPolynomial& poly);

/// Unscaled series value sum C_j S_j(a); the true value is this / scale.
std::int64_t eval_arith(const ArithPolynomial& poly, const Assignment& a);

/// Polynomial of 1 - value: C_0 -> scale - C_0, every other C_j negated.
ArithPolynomial complement_image(const ArithPolynomial& poly);

/// Cheapest canonical polynomial over all polarities, ties to lowest k.
ArithPolynomial best_arith_polarity(const TruthTable& tt, Criterion criterion);
std::array<ArithPolynomial, kCriterionCount> best_arith_polarity_all(const TruthTable& tt);

/// True iff value > 1/2 wherever tt is 1 and value < 1/2 wherever tt is 0.
/// Compares 2 * sum against scale in integers; requires scale > 0.
bool threshold_verify(const ArithPolynomial& candidate, const TruthTable& tt);

/// "x1 + x2 - 2*x1*x2"; a non-unit scale prints as "(...)/scale".
std::string format_arith(const ArithPolynomial& poly);

/// Piecewise-constant image: one value per unit interval [j, j + 1).
struct FImage {
  unsigned n = 0;
  std::vector<Rational> values;

  friend bool operator==(const FImage&, const FImage&) = default;
};

FImage image_of(const TruthTable& tt);
FImage image_of(const ArithPolynomial& poly);
/// Inverse of image_of(tt); throws std::invalid_argument unless every value is 0 or 1.
TruthTable table_of(const FImage& image);

/// 0.5 * [a + b + |a - b|], the pointwise maximum.
FImage graphical_disjunction(const FImage& a, const FImage& b);
/// 0.5 * [a + b - |a - b|], the pointwise minimum.
FImage graphical_conjunction(const FImage& a, const FImage& b);
/// 1 - image, pointwise.
FImage image_complement(const FImage& image);

}  // namespace bfforms
