#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "threedot/rat.hpp"

namespace threedot {

// Outcomes are packed words: two bits per letter, letter 0 in the low bits.
// Alphabets up to 4 letters and up to 31 letters per word fit in a uint64_t,
// which covers every table built here (binary cells and ternary alphabets).
using Word = uint64_t;

constexpr int kMaxPackedCells = 31;

inline int word_get(Word w, int i) { return static_cast<int>((w >> (2 * i)) & 3u); }
inline Word word_set(Word w, int i, int v) {
  return (w & ~(Word(3) << (2 * i))) | (Word(v) << (2 * i));
}
std::string word_string(Word w, int cells);

// Exact finite distribution over packed words. `arity`/`word_len` carry the
// slot structure when the table is a joining of several word coordinates
// (cells == arity * word_len); plain tables use arity 1.
class JointDist {
 public:
  JointDist() = default;
  JointDist(int cells, int alphabet, std::vector<std::pair<Word, Rat>> table,
            int arity = 1);

  int cells() const { return cells_; }
  int alphabet() const { return alphabet_; }
  int arity() const { return arity_; }
  int word_len() const { return arity_ ? cells_ / arity_ : 0; }
  const std::vector<std::pair<Word, Rat>>& table() const { return table_; }

  Rat prob(Word w) const;
  long long support_size() const { return static_cast<long long>(table_.size()); }
  Rat total_mass() const;
  bool uniform_on_support() const;

  // Projection onto the listed letters, in the listed order.
  JointDist marginal(const std::vector<int>& keep) const;
  // Marginal of one slot of a structured joining table.
  JointDist slot_marginal(int slot) const;

  // Law of independent concatenation (letters of `b` appended after `a`).
  static JointDist product(const JointDist& a, const JointDist& b);

  Rat tv(const JointDist& other) const;  // half the l1 distance
  bool operator==(const JointDist& other) const;

  JointDist with_arity(int arity) const;

 private:
  int cells_ = 0;
  int alphabet_ = 2;
  int arity_ = 1;
  std::vector<std::pair<Word, Rat>> table_;  // sorted by word, positive mass
};

// Empirical counterpart used by the samplers and the statistical checks.
class EmpiricalDist {
 public:
  EmpiricalDist(int cells, int alphabet) : cells_(cells), alphabet_(alphabet) {}

  void add(Word w, uint64_t n = 1);
  int cells() const { return cells_; }
  int alphabet() const { return alphabet_; }
  uint64_t total() const { return total_; }
  const std::map<Word, uint64_t>& counts() const { return counts_; }

  double freq(Word w) const;
  double tv(const EmpiricalDist& other) const;
  double tv(const JointDist& exact) const;

  // Per-cell tolerance |p_hat - p| <= 5*sqrt(p(1-p)/N) against an exact law;
  // cells with p == 0 must have zero counts.
  bool within_five_sigma(const JointDist& exact) const;

 private:
  int cells_;
  int alphabet_;
  uint64_t total_ = 0;
  std::map<Word, uint64_t> counts_;
};

double five_sigma_tolerance(double p, double n);

}  // namespace threedot
