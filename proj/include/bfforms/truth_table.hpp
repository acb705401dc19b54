#pragma once

/// \file truth_table.hpp
/// Canonical truth tables of single-output Boolean functions.
///
/// Row ordering is MSB-first: for an assignment (x_1, ..., x_n) the row index
/// is  x = sum_{s=1..n} x_s * 2^(n-s),  so x_1 is the most significant bit of
/// the row index and x_n the least significant. Every other module of the
/// library inherits this convention (cube masks, polynomial term indices and
/// polarity integers all use the same bit positions).
///
/// A table with n <= 6 variables fits in one 64-bit word: bit j of the word is
/// the function value on row j. The same word, read as an unsigned integer, is
/// the FunctionIndex of the function, which numbers L(n) canonically.

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace bfforms {

inline constexpr unsigned kMaxVars = 6;
/// Largest n accepted by the exhaustive sweep.
inline constexpr unsigned kMaxEnumerateVars = 4;
/// Largest n accepted by sampled sweeps.
inline constexpr unsigned kMaxSweepVars = 5;

class DimensionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Number of rows 2^n.
constexpr std::uint32_t row_count(unsigned n) { return std::uint32_t{1} << n; }

/// Mask with the low 2^n bits set; the set of valid table words.
constexpr std::uint64_t table_mask(unsigned n) {
  return n >= 6 ? ~std::uint64_t{0} : (std::uint64_t{1} << row_count(n)) - 1;
}

/// Bit position of variable x_i (1-based) inside a row index.
constexpr unsigned var_bit(unsigned n, unsigned i) { return n - i; }

/// Table word of the projection x_i: rows whose bit for x_i is 1.
constexpr std::uint64_t projection(unsigned n, unsigned i) {
  std::uint64_t word = 0;
  const unsigned b = var_bit(n, i);
  for (std::uint32_t r = 0; r < row_count(n); ++r)
    if ((r >> b) & 1U) word |= std::uint64_t{1} << r;
  return word;
}

namespace detail {
struct ProjectionTable {
  std::uint64_t word[kMaxVars + 1][kMaxVars + 1]{};
  constexpr ProjectionTable() {
    for (unsigned n = 1; n <= kMaxVars; ++n)
      for (unsigned i = 1; i <= n; ++i) word[n][i] = projection(n, i);
  }
};
inline constexpr ProjectionTable kProjections{};
}  // namespace detail

/// Table lookup of projection(n, i).
inline std::uint64_t projection_word(unsigned n, unsigned i) { return detail::kProjections.word[n][i]; }

void check_vars(unsigned n, unsigned max = kMaxVars);

/// FunctionIndex: the integer whose binary digits are the truth-table bits.
struct FunctionIndex {
  unsigned n = 0;
  std::uint64_t index = 0;

  friend bool operator==(const FunctionIndex&, const FunctionIndex&) = default;
  friend auto operator<=>(const FunctionIndex&, const FunctionIndex&) = default;
};

/// One input assignment (x_1, ..., x_n).
class Assignment {
public:
  Assignment(unsigned n, std::uint32_t row);
  static Assignment from_values(const std::vector<int>& values);

  unsigned n() const { return n_; }
  std::uint32_t row_index() const { return row_; }
  /// Value of x_i, 1-based.
  int value(unsigned i) const { return static_cast<int>((row_ >> var_bit(n_, i)) & 1U); }

private:
  unsigned n_;
  std::uint32_t row_;
};

class TruthTable {
public:
  TruthTable() = default;
  /// Throws DimensionError when n is unsupported or word has bits above 2^n.
  TruthTable(unsigned n, std::uint64_t word);

  static TruthTable from_bits(const std::vector<int>& bits);
  static TruthTable constant(unsigned n, bool value);
  static TruthTable variable(unsigned n, unsigned i);

  unsigned n() const { return n_; }
  std::uint32_t size() const { return row_count(n_); }
  std::uint64_t word() const { return word_; }
  FunctionIndex index() const { return {n_, word_}; }

  bool bit(std::uint32_t row) const { return (word_ >> row) & 1U; }
  std::vector<int> bits() const;
  unsigned ones() const { return static_cast<unsigned>(std::popcount(word_)); }
  bool is_constant0() const { return word_ == 0; }
  bool is_constant1() const { return word_ == table_mask(n_); }

  friend bool operator==(const TruthTable&, const TruthTable&) = default;

private:
  unsigned n_ = 0;
  std::uint64_t word_ = 0;
};

TruthTable tt_from_index(unsigned n, std::uint64_t index);
TruthTable tt_from_index(FunctionIndex index);
FunctionIndex index_of(const TruthTable& tt);

bool evaluate(const TruthTable& tt, const Assignment& a);
TruthTable complement(const TruthTable& tt);
TruthTable operator|(const TruthTable& a, const TruthTable& b);
TruthTable operator&(const TruthTable& a, const TruthTable& b);
TruthTable operator^(const TruthTable& a, const TruthTable& b);

/// Hex text of the FunctionIndex (uppercase, no prefix, no leading zeros).
std::string to_hex(const TruthTable& tt);
/// Parses hex (optional 0x prefix); throws std::invalid_argument.
TruthTable tt_from_hex(unsigned n, const std::string& hex);

/// Forward range over L(n) in FunctionIndex order.
class FunctionRange {
public:
  class iterator {
  public:
    using value_type = TruthTable;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    iterator(unsigned n, std::uint64_t pos) : n_(n), pos_(pos) {}
    TruthTable operator*() const { return TruthTable(n_, pos_); }
    iterator& operator++() {
      ++pos_;
      return *this;
    }
    iterator operator++(int) {
      auto tmp = *this;
      ++pos_;
      return tmp;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.pos_ == b.pos_; }

  private:
    unsigned n_ = 0;
    std::uint64_t pos_ = 0;
  };

  explicit FunctionRange(unsigned n);
  iterator begin() const { return {n_, 0}; }
  iterator end() const { return {n_, count_}; }
  std::uint64_t size() const { return count_; }

private:
  unsigned n_;
  std::uint64_t count_;
};

/// All 2^(2^n) functions; rejects n >= 5.
FunctionRange enumerate_all(unsigned n);

/// SplitMix64 (Steele, Lea, Flood 2014). State advances by the golden-ratio
/// increment 0x9E3779B97F4A7C15; output mixing uses the multipliers
/// 0xBF58476D1CE4E5B9 and 0x94D049BB133111EB with shifts 30, 27, 31.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

private:
  std::uint64_t state_;
};

/// Draws `count` indices i.i.d. uniform over [0, 2^(2^n)) with replacement.
/// Draw k is the k-th SplitMix64 output for `seed`, masked to the low 2^n bits;
/// the range is a power of two so masking is exactly uniform.
std::vector<FunctionIndex> sample_uniform(unsigned n, std::uint64_t count, std::uint64_t seed);

}  // namespace bfforms
