#include "bfforms/arithmetic.hpp"

#include <stdexcept>

namespace bfforms {

void arith_pass(std::vector<std::int64_t>& v, unsigned n, unsigned var, bool negative) {
  const std::uint32_t stride = std::uint32_t{1} << var_bit(n, var);
  for (std::uint32_t r = 0; r < row_count(n); ++r) {
    if (r & stride) continue;
    const std::int64_t lo = v[r];
    const std::int64_t hi = v[r | stride];
    if (negative) {
      v[r] = hi;
      v[r | stride] = lo - hi;
    } else {
      v[r | stride] = hi - lo;
    }
  }
}

void arith_pass_inverse(std::vector<std::int64_t>& v, unsigned n, unsigned var, bool negative) {
  const std::uint32_t stride = std::uint32_t{1} << var_bit(n, var);
  for (std::uint32_t r = 0; r < row_count(n); ++r) {
    if (r & stride) continue;
    const std::int64_t lo = v[r];
    const std::int64_t hi = v[r | stride];
    if (negative) {
      v[r] = hi + lo;
      v[r | stride] = lo;
    } else {
      v[r | stride] = hi + lo;
    }
  }
}

ArithPolynomial arithmetic_transform(const TruthTable& tt, const Polarity& p) {
  if (p.n != tt.n()) throw DimensionError("polarity and truth table differ in n");
  std::vector<std::int64_t> v(tt.size());
  for (std::uint32_t r = 0; r < tt.size(); ++r) v[r] = tt.bit(r);
  for (unsigned i = 1; i <= tt.n(); ++i) arith_pass(v, tt.n(), i, p.inverted(i));
  return {p, std::move(v), 1};
}

std::vector<std::int64_t> arithmetic_values(const ArithPolynomial& poly) {
  auto v = poly.coeffs;
  for (unsigned i = 1; i <= poly.n(); ++i) arith_pass_inverse(v, poly.n(), i, poly.polarity.inverted(i));
  return v;
}

std::int64_t eval_arith(const ArithPolynomial& poly, const Assignment& a) {
  if (a.n() != poly.n()) throw DimensionError("assignment and polynomial differ in n");
  const std::uint32_t literals = a.row_index() ^ poly.polarity.k;
  std::int64_t sum = 0;
  for (std::uint32_t j = 0; j < poly.coeffs.size(); ++j)
    if (poly.coeffs[j] != 0 && (j & ~literals) == 0) sum += poly.coeffs[j];
  return sum;
}

ArithPolynomial complement_image(const ArithPolynomial& poly) {
  ArithPolynomial out = poly;
  for (auto& c : out.coeffs) c = -c;
  out.coeffs[0] += poly.scale;
  return out;
}

namespace {
template <typename Better>
void consider(const TruthTable& tt, Better&& better) {
  for (std::uint32_t k = 0; k < tt.size(); ++k) better(arithmetic_transform(tt, Polarity(tt.n(), k)));
}
}  // namespace

ArithPolynomial best_arith_polarity(const TruthTable& tt, Criterion criterion) {
  ArithPolynomial best;
  std::int64_t best_cost = -1;
  consider(tt, [&](ArithPolynomial poly) {
    const auto cost = cost_of_arith(poly, tt.n())[criterion];
    if (best_cost < 0 || cost < best_cost) {
      best = std::move(poly);
      best_cost = cost;
    }
  });
  return best;
}

std::array<ArithPolynomial, kCriterionCount> best_arith_polarity_all(const TruthTable& tt) {
  std::array<ArithPolynomial, kCriterionCount> best{};
  std::array<std::int64_t, kCriterionCount> best_cost{};
  best_cost.fill(-1);
  consider(tt, [&](const ArithPolynomial& poly) {
    const auto cost = cost_of_arith(poly, tt.n());
    for (auto c : kAllCriteria) {
      const auto s = criterion_slot(c);
      if (best_cost[s] < 0 || cost[c] < best_cost[s]) {
        best[s] = poly;
        best_cost[s] = cost[c];
      }
    }
  });
  return best;
}

bool threshold_verify(const ArithPolynomial& candidate, const TruthTable& tt) {
  if (candidate.n() != tt.n()) throw DimensionError("polynomial and truth table differ in n");
  if (candidate.scale <= 0) throw std::invalid_argument("polynomial scale must be positive");
  for (std::uint32_t r = 0; r < tt.size(); ++r) {
    const std::int64_t twice = 2 * eval_arith(candidate, Assignment(tt.n(), r));
    if (tt.bit(r) ? !(twice > candidate.scale) : !(twice < candidate.scale)) return false;
  }
  return true;
}

std::string format_arith(const ArithPolynomial& poly) {
  std::string out;
  for (std::uint32_t j = 0; j < poly.coeffs.size(); ++j) {
    const std::int64_t c = poly.coeffs[j];
    if (c == 0) continue;
    const std::int64_t mag = c < 0 ? -c : c;
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (j == 0)
      out += std::to_string(mag);
    else
      out += (mag == 1 ? "" : std::to_string(mag) + "*") + monomial_text(poly.n(), j, poly.polarity);
  }
  if (out.empty()) out = "0";
  if (poly.scale != 1) out = "(" + out + ")/" + std::to_string(poly.scale);
  return out;
}

FImage image_of(const TruthTable& tt) {
  FImage img{tt.n(), {}};
  img.values.reserve(tt.size());
  for (std::uint32_t r = 0; r < tt.size(); ++r) img.values.emplace_back(tt.bit(r) ? 1 : 0);
  return img;
}

FImage image_of(const ArithPolynomial& poly) {
  FImage img{poly.n(), {}};
  for (auto v : arithmetic_values(poly)) img.values.emplace_back(v, poly.scale);
  return img;
}

TruthTable table_of(const FImage& image) {
  std::uint64_t w = 0;
  for (std::size_t r = 0; r < image.values.size(); ++r) {
    const auto& v = image.values[r];
    if (v == Rational(1))
      w |= std::uint64_t{1} << r;
    else if (v != Rational(0))
      throw std::invalid_argument("F-image value is not Boolean");
  }
  return {image.n, w};
}

namespace {
template <typename Op>
FImage pointwise(const FImage& a, const FImage& b, Op op) {
  if (a.n != b.n || a.values.size() != b.values.size()) throw DimensionError("F-images differ in n");
  FImage out{a.n, {}};
  out.values.reserve(a.values.size());
  for (std::size_t r = 0; r < a.values.size(); ++r) out.values.push_back(op(a.values[r], b.values[r]));
  return out;
}
}  // namespace

FImage graphical_disjunction(const FImage& a, const FImage& b) {
  return pointwise(a, b, [](const Rational& x, const Rational& y) { return Rational(1, 2) * (x + y + abs(x - y)); });
}

FImage graphical_conjunction(const FImage& a, const FImage& b) {
  return pointwise(a, b, [](const Rational& x, const Rational& y) { return Rational(1, 2) * (x + y - abs(x - y)); });
}

FImage image_complement(const FImage& image) {
  FImage out = image;
  for (auto& v : out.values) v = Rational(1) - v;
  return out;
}

}  // namespace bfforms
