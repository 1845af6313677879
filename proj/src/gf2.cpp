#include "threedot/gf2.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace threedot {

BitExpr BitExpr::one() {
  BitExpr e;
  e.constant_ = true;
  return e;
}

BitExpr BitExpr::seed(SeedId id) {
  BitExpr e;
  e.support_.push_back(id);
  return e;
}

BitExpr& BitExpr::operator^=(const BitExpr& other) {
  if (other.support_.empty()) {
    constant_ ^= other.constant_;
    return *this;
  }
  std::vector<SeedId> merged;
  merged.reserve(support_.size() + other.support_.size());
  auto a = support_.begin(), ae = support_.end();
  auto b = other.support_.begin(), be = other.support_.end();
  while (a != ae && b != be) {
    if (*a < *b) {
      merged.push_back(*a++);
    } else if (*b < *a) {
      merged.push_back(*b++);
    } else {
      ++a;  // shared seed cancels
      ++b;
    }
  }
  merged.insert(merged.end(), a, ae);
  merged.insert(merged.end(), b, be);
  support_ = std::move(merged);
  constant_ ^= other.constant_;
  return *this;
}

BitExpr BitExpr::flipped() const {
  BitExpr e = *this;
  e.constant_ = !e.constant_;
  return e;
}

namespace {

// Column registry: maps the distinct seeds of a call to dense bit positions.
struct ColumnIndex {
  std::map<SeedId, int> cols;
  int n = 0;
  int col(SeedId id) {
    auto [it, inserted] = cols.try_emplace(id, n);
    if (inserted) ++n;
    return it->second;
  }
};

using PackedRow = std::vector<uint64_t>;

PackedRow pack_row(const BitExpr& e, ColumnIndex& idx, int words) {
  PackedRow row(static_cast<size_t>(words), 0);
  for (SeedId s : e.support()) {
    int c = idx.col(s);
    row[static_cast<size_t>(c >> 6)] ^= 1ull << (c & 63);
  }
  return row;
}

bool row_zero(const PackedRow& r) {
  for (uint64_t w : r)
    if (w) return false;
  return true;
}

int lowest_set(const PackedRow& r) {
  for (size_t i = 0; i < r.size(); ++i)
    if (r[i]) return static_cast<int>(i * 64) + std::countr_zero(r[i]);
  return -1;
}

void xor_into(PackedRow& dst, const PackedRow& src) {
  for (size_t i = 0; i < src.size(); ++i) dst[i] ^= src[i];
}

// Incremental eliminator over bit-packed rows; rhs bits ride along so the
// same pass answers both rank and consistency questions.
struct Eliminator {
  std::vector<std::pair<PackedRow, int>> pivots;  // reduced rows with rhs

  // Reduces (row, rhs) against the pivots. Returns false when the row reduces
  // to 0 == 1 (inconsistency); otherwise inserts a new pivot if independent.
  bool add(PackedRow row, int rhs) {
    for (const auto& [p, prhs] : pivots) {
      int bit = lowest_set(p);
      if (bit >= 0 && (row[static_cast<size_t>(bit >> 6)] >> (bit & 63)) & 1) {
        xor_into(row, p);
        rhs ^= prhs;
      }
    }
    if (row_zero(row)) return rhs == 0;
    pivots.emplace_back(std::move(row), rhs);
    return true;
  }

  int rank() const { return static_cast<int>(pivots.size()); }
};

}  // namespace

int rank_of(std::span<const BitExpr> exprs) {
  ColumnIndex idx;
  for (const auto& e : exprs)
    for (SeedId s : e.support()) idx.col(s);
  int words = std::max(1, (idx.n + 63) / 64);
  Eliminator elim;
  for (const auto& e : exprs) elim.add(pack_row(e, idx, words), 0);
  return elim.rank();
}

bool rank_independent(std::span<const BitExpr> group_a, std::span<const BitExpr> group_b) {
  std::vector<BitExpr> both(group_a.begin(), group_a.end());
  both.insert(both.end(), group_b.begin(), group_b.end());
  return rank_of(both) == rank_of(group_a) + rank_of(group_b);
}

Rat system_probability(const AffineSystem& sys) {
  ColumnIndex idx;
  for (const auto& [e, bit] : sys.rows) {
    (void)bit;
    for (SeedId s : e.support()) idx.col(s);
  }
  int words = std::max(1, (idx.n + 63) / 64);
  Eliminator elim;
  for (const auto& [e, bit] : sys.rows) {
    int rhs = (bit ^ (e.constant_term() ? 1 : 0)) & 1;
    if (!elim.add(pack_row(e, idx, words), rhs)) return Rat(0);
  }
  return Rat(1, 1ll << elim.rank());
}

JointDist joint_distribution(std::span<const BitExpr> exprs, int bound) {
  int k = static_cast<int>(exprs.size());
  if (k > bound)
    throw LengthBoundError("joint_distribution over " + std::to_string(k) +
                           " coordinates exceeds bound " + std::to_string(bound));
  if (k > kMaxPackedCells)
    throw LengthBoundError("joint_distribution cannot pack " + std::to_string(k) +
                           " coordinates");

  // Column vectors of the seeds-to-outcomes map, one k-bit vector per seed.
  std::map<SeedId, uint32_t> columns;
  uint32_t constants = 0;
  for (int i = 0; i < k; ++i) {
    if (exprs[static_cast<size_t>(i)].constant_term()) constants |= 1u << i;
    for (SeedId s : exprs[static_cast<size_t>(i)].support())
      columns[s] ^= 1u << i;
  }

  // Basis of the image space.
  std::vector<uint32_t> basis;
  for (auto& [s, v] : columns) {
    (void)s;
    uint32_t r = v;
    for (uint32_t b : basis) r = std::min(r, r ^ b);
    if (r) basis.push_back(r);
  }
  int rank = static_cast<int>(basis.size());

  std::vector<std::pair<Word, Rat>> table;
  table.reserve(1ull << rank);
  Rat mass(1, 1ll << rank);
  for (uint64_t m = 0; m < (1ull << rank); ++m) {
    uint32_t v = constants;
    for (int b = 0; b < rank; ++b)
      if ((m >> b) & 1) v ^= basis[static_cast<size_t>(b)];
    Word w = 0;
    for (int i = 0; i < k; ++i)
      if ((v >> i) & 1) w = word_set(w, i, 1);
    table.emplace_back(w, mass);
  }
  return JointDist(k, 2, std::move(table));
}

bool are_independent(std::span<const BitExpr> group_a, std::span<const BitExpr> group_b,
                     int bound) {
  int k = static_cast<int>(group_a.size() + group_b.size());
  if (k > bound)
    throw LengthBoundError("are_independent over " + std::to_string(k) +
                           " coordinates exceeds bound " + std::to_string(bound));
  return rank_independent(group_a, group_b);
}

}  // namespace threedot
