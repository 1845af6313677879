#include "threedot/dist.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdio>

namespace threedot {

std::string exact_string(const Rat& r) {
  long long num = r.numerator();
  long long den = r.denominator();
  if (den == 1) return std::to_string(num);
  if ((den & (den - 1)) == 0) {  // power of two: emit num/2^k
    int k = 0;
    for (long long d = den; d > 1; d >>= 1) ++k;
    return std::to_string(num) + "/2^" + std::to_string(k);
  }
  return std::to_string(num) + "/" + std::to_string(den);
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string word_string(Word w, int cells) {
  std::string s(static_cast<size_t>(cells), '0');
  for (int i = 0; i < cells; ++i) s[static_cast<size_t>(i)] = static_cast<char>('0' + word_get(w, i));
  return s;
}

JointDist::JointDist(int cells, int alphabet, std::vector<std::pair<Word, Rat>> table,
                     int arity)
    : cells_(cells), alphabet_(alphabet), arity_(arity), table_(std::move(table)) {
  std::sort(table_.begin(), table_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  // merge duplicates, drop zero mass
  std::vector<std::pair<Word, Rat>> merged;
  merged.reserve(table_.size());
  for (const auto& [w, p] : table_) {
    if (!merged.empty() && merged.back().first == w) {
      merged.back().second += p;
    } else {
      merged.emplace_back(w, p);
    }
  }
  std::erase_if(merged, [](const auto& e) { return e.second == Rat(0); });
  table_ = std::move(merged);
}

Rat JointDist::prob(Word w) const {
  auto it = std::lower_bound(table_.begin(), table_.end(), w,
                             [](const auto& e, Word key) { return e.first < key; });
  if (it != table_.end() && it->first == w) return it->second;
  return Rat(0);
}

Rat JointDist::total_mass() const {
  Rat s(0);
  for (const auto& [w, p] : table_) s += p;
  return s;
}

bool JointDist::uniform_on_support() const {
  for (const auto& [w, p] : table_)
    if (p != table_.front().second) return false;
  return true;
}

JointDist JointDist::marginal(const std::vector<int>& keep) const {
  std::map<Word, Rat> acc;
  for (const auto& [w, p] : table_) {
    Word m = 0;
    for (size_t t = 0; t < keep.size(); ++t)
      m = word_set(m, static_cast<int>(t), word_get(w, keep[t]));
    acc[m] += p;
  }
  std::vector<std::pair<Word, Rat>> tbl(acc.begin(), acc.end());
  return JointDist(static_cast<int>(keep.size()), alphabet_, std::move(tbl));
}

JointDist JointDist::slot_marginal(int slot) const {
  int len = word_len();
  std::vector<int> keep(static_cast<size_t>(len));
  for (int i = 0; i < len; ++i) keep[static_cast<size_t>(i)] = slot * len + i;
  return marginal(keep);
}

JointDist JointDist::product(const JointDist& a, const JointDist& b) {
  assert(a.alphabet_ == b.alphabet_);
  std::vector<std::pair<Word, Rat>> tbl;
  tbl.reserve(a.table_.size() * b.table_.size());
  for (const auto& [wa, pa] : a.table_)
    for (const auto& [wb, pb] : b.table_)
      tbl.emplace_back(wa | (wb << (2 * a.cells_)), pa * pb);
  return JointDist(a.cells_ + b.cells_, a.alphabet_, std::move(tbl));
}

Rat JointDist::tv(const JointDist& other) const {
  assert(cells_ == other.cells_ && alphabet_ == other.alphabet_);
  Rat sum(0);
  size_t i = 0, j = 0;
  while (i < table_.size() || j < other.table_.size()) {
    if (j >= other.table_.size() ||
        (i < table_.size() && table_[i].first < other.table_[j].first)) {
      sum += table_[i].second;
      ++i;
    } else if (i >= table_.size() || other.table_[j].first < table_[i].first) {
      sum += other.table_[j].second;
      ++j;
    } else {
      sum += boost::abs(table_[i].second - other.table_[j].second);
      ++i;
      ++j;
    }
  }
  return sum / 2;
}

bool JointDist::operator==(const JointDist& other) const {
  return cells_ == other.cells_ && alphabet_ == other.alphabet_ &&
         table_ == other.table_;
}

JointDist JointDist::with_arity(int arity) const {
  JointDist d = *this;
  assert(arity > 0 && d.cells_ % arity == 0);
  d.arity_ = arity;
  return d;
}

void EmpiricalDist::add(Word w, uint64_t n) {
  counts_[w] += n;
  total_ += n;
}

double EmpiricalDist::freq(Word w) const {
  if (total_ == 0) return 0.0;
  auto it = counts_.find(w);
  return it == counts_.end() ? 0.0
                             : static_cast<double>(it->second) / static_cast<double>(total_);
}

double EmpiricalDist::tv(const EmpiricalDist& other) const {
  double sum = 0.0;
  for (const auto& [w, c] : counts_) {
    (void)c;
    sum += std::abs(freq(w) - other.freq(w));
  }
  for (const auto& [w, c] : other.counts_) {
    (void)c;
    if (!counts_.contains(w)) sum += std::abs(freq(w) - other.freq(w));
  }
  return sum / 2.0;
}

double EmpiricalDist::tv(const JointDist& exact) const {
  double sum = 0.0;
  for (const auto& [w, c] : counts_) {
    (void)c;
    sum += std::abs(freq(w) - to_double(exact.prob(w)));
  }
  for (const auto& [w, p] : exact.table())
    if (!counts_.contains(w)) sum += to_double(p);
  return sum / 2.0;
}

double five_sigma_tolerance(double p, double n) {
  return 5.0 * std::sqrt(p * (1.0 - p) / n);
}

bool EmpiricalDist::within_five_sigma(const JointDist& exact) const {
  double n = static_cast<double>(total_);
  for (const auto& [w, c] : counts_) {
    (void)c;
    double p = to_double(exact.prob(w));
    if (p == 0.0) return false;  // impossible word was observed
    if (std::abs(freq(w) - p) > five_sigma_tolerance(p, n)) return false;
  }
  for (const auto& [w, p] : exact.table()) {
    if (!counts_.contains(w) &&
        to_double(p) > five_sigma_tolerance(to_double(p), n))
      return false;
  }
  return true;
}

}  // namespace threedot
