#include "bfforms/truth_table.hpp"

#include <cctype>
#include <string_view>

namespace bfforms {

void check_vars(unsigned n, unsigned max) {
  if (n < 1 || n > max)
    throw DimensionError("variable count " + std::to_string(n) + " outside supported range [1, " +
                         std::to_string(max) + "]");
}

Assignment::Assignment(unsigned n, std::uint32_t row) : n_(n), row_(row) {
  check_vars(n);
  if (row >= row_count(n)) throw DimensionError("assignment row index out of range");
}

Assignment Assignment::from_values(const std::vector<int>& values) {
  const auto n = static_cast<unsigned>(values.size());
  check_vars(n);
  std::uint32_t row = 0;
  for (unsigned s = 1; s <= n; ++s) {
    const int v = values[s - 1];
    if (v != 0 && v != 1) throw std::invalid_argument("assignment values must be 0 or 1");
    row |= static_cast<std::uint32_t>(v) << var_bit(n, s);
  }
  return {n, row};
}

TruthTable::TruthTable(unsigned n, std::uint64_t word) : n_(n), word_(word) {
  check_vars(n);
  if (word & ~table_mask(n)) throw DimensionError("function index out of range for n");
}

TruthTable TruthTable::from_bits(const std::vector<int>& bits) {
  const auto size = bits.size();
  unsigned n = 0;
  while (n <= kMaxVars && row_count(n) < size) ++n;
  if (n > kMaxVars || row_count(n) != size || n == 0)
    throw DimensionError("truth table length must be 2^n with 1 <= n <= 6");
  std::uint64_t word = 0;
  for (std::size_t j = 0; j < size; ++j) {
    if (bits[j] != 0 && bits[j] != 1) throw std::invalid_argument("truth table bits must be 0 or 1");
    if (bits[j]) word |= std::uint64_t{1} << j;
  }
  return {n, word};
}

TruthTable TruthTable::constant(unsigned n, bool value) {
  check_vars(n);
  return {n, value ? table_mask(n) : 0};
}

TruthTable TruthTable::variable(unsigned n, unsigned i) {
  check_vars(n);
  if (i < 1 || i > n) throw DimensionError("variable index out of range");
  return {n, projection(n, i)};
}

std::vector<int> TruthTable::bits() const {
  std::vector<int> out(size());
  for (std::uint32_t j = 0; j < size(); ++j) out[j] = bit(j);
  return out;
}

TruthTable tt_from_index(unsigned n, std::uint64_t index) { return {n, index}; }
TruthTable tt_from_index(FunctionIndex index) { return {index.n, index.index}; }
FunctionIndex index_of(const TruthTable& tt) { return tt.index(); }

bool evaluate(const TruthTable& tt, const Assignment& a) {
  if (a.n() != tt.n()) throw DimensionError("assignment and truth table differ in n");
  return tt.bit(a.row_index());
}

TruthTable complement(const TruthTable& tt) { return {tt.n(), ~tt.word() & table_mask(tt.n())}; }

namespace {
void same_n(const TruthTable& a, const TruthTable& b) {
  if (a.n() != b.n()) throw DimensionError("truth tables differ in n");
}
}  // namespace

TruthTable operator|(const TruthTable& a, const TruthTable& b) {
  same_n(a, b);
  return {a.n(), a.word() | b.word()};
}
TruthTable operator&(const TruthTable& a, const TruthTable& b) {
  same_n(a, b);
  return {a.n(), a.word() & b.word()};
}
TruthTable operator^(const TruthTable& a, const TruthTable& b) {
  same_n(a, b);
  return {a.n(), a.word() ^ b.word()};
}

std::string to_hex(const TruthTable& tt) {
  static constexpr char digits[] = "0123456789ABCDEF";
  std::uint64_t w = tt.word();
  if (w == 0) return "0";
  std::string out;
  while (w) {
    out.insert(out.begin(), digits[w & 0xF]);
    w >>= 4;
  }
  return out;
}

TruthTable tt_from_hex(unsigned n, const std::string& hex) {
  check_vars(n);
  std::string_view s = hex;
  if (s.size() >= 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) s.remove_prefix(2);
  if (s.empty() || s.size() > 16) throw std::invalid_argument("malformed hex truth table '" + hex + "'");
  std::uint64_t w = 0;
  for (char c : s) {
    const int u = std::toupper(static_cast<unsigned char>(c));
    int d;
    if (u >= '0' && u <= '9')
      d = u - '0';
    else if (u >= 'A' && u <= 'F')
      d = u - 'A' + 10;
    else
      throw std::invalid_argument("malformed hex truth table '" + hex + "'");
    w = (w << 4) | static_cast<std::uint64_t>(d);
  }
  if (w & ~table_mask(n))
    throw std::invalid_argument("hex truth table '" + hex + "' exceeds 2^n bits for n=" + std::to_string(n));
  return {n, w};
}

FunctionRange::FunctionRange(unsigned n) : n_(n), count_(0) {
  check_vars(n, kMaxEnumerateVars);
  count_ = std::uint64_t{1} << row_count(n);
}

FunctionRange enumerate_all(unsigned n) { return FunctionRange(n); }

std::vector<FunctionIndex> sample_uniform(unsigned n, std::uint64_t count, std::uint64_t seed) {
  check_vars(n);
  if (count == 0) throw std::invalid_argument("sample count must be >= 1");
  SplitMix64 rng(seed);
  const auto mask = table_mask(n);
  std::vector<FunctionIndex> out;
  out.reserve(count);
  for (std::uint64_t k = 0; k < count; ++k) out.push_back({n, rng.next() & mask});
  return out;
}

}  // namespace bfforms
