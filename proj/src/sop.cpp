#include "bfforms/sop.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdlib>
#include <string_view>

namespace bfforms {

namespace {

using Word = std::uint64_t;

char literal_char(Cube::Literal lit) {
  switch (lit) {
    case Cube::Literal::Absent: return '-';
    case Cube::Literal::Negative: return '0';
    case Cube::Literal::Positive: return '1';
  }
  return '?';
}

}  // namespace

Cube Cube::from_string(const std::string& text) {
  const auto n = static_cast<unsigned>(text.size());
  check_vars(n);
  Cube c{n, 0, 0};
  for (unsigned i = 1; i <= n; ++i) {
    const std::uint32_t bit = std::uint32_t{1} << var_bit(n, i);
    switch (text[i - 1]) {
      case '-': break;
      case '0': c.care |= bit; break;
      case '1':
        c.care |= bit;
        c.value |= bit;
        break;
      default: throw std::invalid_argument("cube string may only contain '0', '1', '-'");
    }
  }
  return c;
}

Cube::Literal Cube::literal(unsigned i) const {
  const unsigned b = var_bit(n, i);
  if (!((care >> b) & 1U)) return Literal::Absent;
  return ((value >> b) & 1U) ? Literal::Positive : Literal::Negative;
}

unsigned Cube::literal_count() const { return static_cast<unsigned>(std::popcount(care)); }

std::uint64_t Cube::cover_word() const {
  Word w = table_mask(n);
  for (unsigned i = 1; i <= n; ++i) {
    switch (literal(i)) {
      case Literal::Absent: break;
      case Literal::Positive: w &= projection_word(n, i); break;
      case Literal::Negative: w &= ~projection_word(n, i); break;
    }
  }
  return w & table_mask(n);
}

std::string Cube::to_string() const {
  std::string s(n, '-');
  for (unsigned i = 1; i <= n; ++i) s[i - 1] = literal_char(literal(i));
  return s;
}

bool cube_less(const Cube& a, const Cube& b) {
  if (a.n != b.n) return a.n < b.n;
  for (unsigned i = 1; i <= a.n; ++i) {
    const auto la = static_cast<int>(a.literal(i));
    const auto lb = static_cast<int>(b.literal(i));
    if (la != lb) return la < lb;
  }
  return false;
}

bool eval_sop(const SopForm& sop, const Assignment& a) {
  if (a.n() != sop.n) throw DimensionError("assignment and cover differ in n");
  return std::any_of(sop.terms.begin(), sop.terms.end(), [&](const Cube& c) { return c.covers(a.row_index()); });
}

TruthTable sop_table(const SopForm& sop) {
  Word w = 0;
  for (const auto& c : sop.terms) w |= c.cover_word();
  return {sop.n, w};
}

std::string format_sop(const SopForm& sop) {
  if (sop.terms.empty()) return "0";
  std::string out;
  for (std::size_t t = 0; t < sop.terms.size(); ++t) {
    if (t) out += " + ";
    const Cube& c = sop.terms[t];
    if (c.literal_count() == 0) {
      out += "1";
      continue;
    }
    bool first = true;
    for (unsigned i = 1; i <= c.n; ++i) {
      const auto lit = c.literal(i);
      if (lit == Cube::Literal::Absent) continue;
      if (!first) out += "*";
      first = false;
      if (lit == Cube::Literal::Negative) out += "~";
      out += "x" + std::to_string(i);
    }
  }
  return out;
}

MinimizerOptions MinimizerOptions::from_environment() {
  static const MinimizerOptions cached = [] {
    MinimizerOptions o;
    if (const char* env = std::getenv("BFFORMS_GUARD_SECS")) {
      char* end = nullptr;
      const double secs = std::strtod(env, &end);
      if (end != env && secs > 0) o.guard = std::chrono::duration<double>(secs);
    }
    return o;
  }();
  return cached;
}

std::vector<Cube> prime_implicants(const TruthTable& tt) {
  if (tt.is_constant0()) throw std::invalid_argument("constant-0 function has no implicants");
  const unsigned n = tt.n();

  std::vector<Cube> level;
  for (std::uint32_t r = 0; r < tt.size(); ++r)
    if (tt.bit(r)) level.push_back(Cube::minterm(n, r));

  std::vector<Cube> primes;
  while (!level.empty()) {
    std::vector<char> merged(level.size(), 0);
    std::vector<Cube> next;
    for (std::size_t a = 0; a < level.size(); ++a) {
      for (std::size_t b = a + 1; b < level.size(); ++b) {
        if (level[a].care != level[b].care) continue;
        const std::uint32_t diff = level[a].value ^ level[b].value;
        if (std::popcount(diff) != 1) continue;
        merged[a] = merged[b] = 1;
        next.push_back({n, level[a].care & ~diff, level[a].value & ~diff});
      }
    }
    for (std::size_t a = 0; a < level.size(); ++a)
      if (!merged[a]) primes.push_back(level[a]);

    std::sort(next.begin(), next.end(), cube_less);
    next.erase(std::unique(next.begin(), next.end()), next.end());
    level = std::move(next);
  }
  std::sort(primes.begin(), primes.end(), cube_less);
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  return primes;
}

namespace {

/// Set of prime indices. The largest prime count over L(6) is 92.
class PrimeSet {
public:
  static constexpr std::size_t kWords = 2;
  static constexpr std::size_t kCapacity = 64 * kWords;

  static PrimeSet all(std::size_t count) {
    PrimeSet s;
    for (std::size_t i = 0; i < count; ++i) s.insert(i);
    return s;
  }
  void insert(std::size_t i) { words_[i >> 6] |= Word{1} << (i & 63); }
  void erase(std::size_t i) { words_[i >> 6] &= ~(Word{1} << (i & 63)); }
  bool contains(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  /// Removes every index <= i.
  void erase_through(std::size_t i) {
    for (std::size_t w = 0; w < kWords; ++w) {
      const std::size_t lo = w * 64;
      if (i >= lo + 63)
        words_[w] = 0;
      else if (i >= lo)
        words_[w] &= ~((Word{2} << (i - lo)) - 1);
    }
  }

private:
  std::array<Word, kWords> words_{};
};

class CoverSearch {
public:
  CoverSearch(const TruthTable& tt, std::vector<Cube> primes, const MinimizerOptions& options)
      : tt_(tt), primes_(std::move(primes)), options_(options), start_(std::chrono::steady_clock::now()) {
    if (primes_.size() > PrimeSet::kCapacity) throw GuardExceeded("prime implicant chart too large");
    for (std::size_t p = 0; p < primes_.size(); ++p) {
      cover_.push_back(primes_[p].cover_word());
      lits_.push_back(primes_[p].literal_count());
      for (std::uint32_t r = 0; r < tt.size(); ++r)
        if ((cover_.back() >> r) & 1U) covering_[r].push_back(static_cast<std::uint16_t>(p));
    }
  }

  SopForm run() {
    const PrimeSet everything = PrimeSet::all(primes_.size());
    optimize(tt_.word(), everything, 0, 0);

    // Lex-least cover among those reaching the optimum: fix the smallest
    // feasible next prime, one position at a time.
    SopForm result{tt_.n(), {}};
    Word uncovered = tt_.word();
    unsigned terms_left = best_terms_;
    unsigned lits_left = best_lits_;
    std::size_t next_candidate = 0;
    while (uncovered) {
      bool placed = false;
      for (std::size_t p = next_candidate; p < primes_.size() && !placed; ++p) {
        if (lits_[p] > lits_left) continue;
        PrimeSet later = everything;
        later.erase_through(p);
        if (feasible(uncovered & ~cover_[p], later, terms_left - 1, lits_left - lits_[p])) {
          result.terms.push_back(primes_[p]);
          uncovered &= ~cover_[p];
          --terms_left;
          lits_left -= lits_[p];
          next_candidate = p + 1;
          placed = true;
        }
      }
      if (!placed) throw std::logic_error("cover reconstruction failed");
    }
    return result;
  }

private:
  struct Bound {
    unsigned terms = 0;
    unsigned lits = 0;
    int branch_row = -1;
    std::size_t branch_width = 0;
  };

  // Greedy set of uncovered rows no two of which share an allowed prime.
  // Each needs its own term, so the set size bounds the remaining terms and
  // the sum of their cheapest covers bounds the remaining literals. Also
  // picks the most constrained row for branching.
  Bound bound(Word uncovered, const PrimeSet& allowed) const {
    Bound b;
    std::size_t best_width = SIZE_MAX;
    for (Word rest = uncovered; rest; rest &= rest - 1) {
      const auto r = static_cast<unsigned>(std::countr_zero(rest));
      std::size_t width = 0;
      for (auto p : covering_[r])
        if (allowed.contains(p)) ++width;
      if (width < best_width) {
        best_width = width;
        b.branch_row = static_cast<int>(r);
      }
    }
    b.branch_width = best_width;
    if (best_width == 0) return b;

    for (Word rest = uncovered; rest;) {
      const auto r = static_cast<unsigned>(std::countr_zero(rest));
      Word reach = 0;
      unsigned cheapest = ~0U;
      for (auto p : covering_[r]) {
        if (!allowed.contains(p)) continue;
        reach |= cover_[p];
        cheapest = std::min(cheapest, lits_[p]);
      }
      ++b.terms;
      b.lits += cheapest;
      // reach is exactly the set of rows sharing an allowed prime with r
      rest &= ~reach;
    }
    return b;
  }

  void tick() {
    if ((nodes_++ & 1023U) != 0) return;
    if (std::chrono::steady_clock::now() - start_ > options_.guard)
      throw GuardExceeded("minimizer time guard exceeded for function 0x" + to_hex(tt_));
  }

  void optimize(Word uncovered, PrimeSet allowed, unsigned terms, unsigned lits) {
    tick();
    if (!uncovered) {
      if (terms < best_terms_ || (terms == best_terms_ && lits < best_lits_)) {
        best_terms_ = terms;
        best_lits_ = lits;
      }
      return;
    }
    const Bound b = bound(uncovered, allowed);
    if (b.branch_width == 0) return;
    const unsigned t = terms + b.terms;
    const unsigned l = lits + b.lits;
    if (t > best_terms_ || (t == best_terms_ && l >= best_lits_)) return;
    for (auto p : covering_[static_cast<unsigned>(b.branch_row)]) {
      if (!allowed.contains(p)) continue;
      allowed.erase(p);
      optimize(uncovered & ~cover_[p], allowed, terms + 1, lits + lits_[p]);
    }
  }

  bool feasible(Word uncovered, PrimeSet allowed, unsigned terms_left, unsigned lits_left) {
    tick();
    if (!uncovered) return true;
    if (terms_left == 0) return false;
    const Bound b = bound(uncovered, allowed);
    if (b.branch_width == 0 || b.terms > terms_left || b.lits > lits_left) return false;
    for (auto p : covering_[static_cast<unsigned>(b.branch_row)]) {
      if (!allowed.contains(p)) continue;
      allowed.erase(p);
      if (lits_[p] <= lits_left && feasible(uncovered & ~cover_[p], allowed, terms_left - 1, lits_left - lits_[p]))
        return true;
    }
    return false;
  }

  TruthTable tt_;
  std::vector<Cube> primes_;
  std::vector<Word> cover_;
  std::vector<unsigned> lits_;
  std::array<std::vector<std::uint16_t>, 64> covering_{};
  MinimizerOptions options_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t nodes_ = 0;
  unsigned best_terms_ = ~0U;
  unsigned best_lits_ = ~0U;
};

}  // namespace

SopForm minimize_sop(const TruthTable& tt, const MinimizerOptions& options) {
  if (tt.is_constant0()) return {tt.n(), {}};
  if (tt.is_constant1()) return {tt.n(), {Cube::tautology(tt.n())}};
  return CoverSearch(tt, prime_implicants(tt), options).run();
}

}  // namespace bfforms
