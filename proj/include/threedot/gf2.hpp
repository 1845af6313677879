#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "threedot/dist.hpp"
#include "threedot/errors.hpp"
#include "threedot/rat.hpp"

namespace threedot {

// Joint tables are capped at this many coordinates; beyond it callers are
// expected to sample.
constexpr int kJointLengthBound = 24;

// Identity of one fair coin toss. Equal ids are the same toss, distinct ids
// are independent. The tag says which seeding scheme the toss belongs to and
// the index is the coordinate within that scheme.
struct SeedId {
  int32_t tag = 0;
  int64_t index = 0;
  auto operator<=>(const SeedId&) const = default;
};

enum SeedTag : int32_t {
  kSeedFieldRow = 0,     // 2-D field, horizontal axis cell (index, 0)
  kSeedFieldColumn = 1,  // 2-D field, lower vertical axis cell (0, index<0)
  kSeedBlockCoin = 2,    // 1-D block process, coin at an absolute position
  kSeedFree = 3,         // scratch seeds for tests and examples
  kSeedFreeB = 4,
};

// Affine functional over seed bits: value = constant XOR (sum of support).
// Support is kept sorted and duplicate-free, so XOR is symmetric difference
// and a seed appearing twice cancels.
class BitExpr {
 public:
  BitExpr() = default;  // the zero expression

  static BitExpr zero() { return BitExpr(); }
  static BitExpr one();
  static BitExpr seed(SeedId id);
  static BitExpr seed(int32_t tag, int64_t index) { return seed(SeedId{tag, index}); }

  BitExpr& operator^=(const BitExpr& other);
  friend BitExpr operator^(BitExpr a, const BitExpr& b) { return a ^= b; }

  BitExpr flipped() const;  // constant toggled

  bool is_zero() const { return !constant_ && support_.empty(); }
  bool constant_term() const { return constant_; }
  const std::vector<SeedId>& support() const { return support_; }

  bool operator==(const BitExpr&) const = default;

 private:
  std::vector<SeedId> support_;
  bool constant_ = false;
};

// Conjunction of affine constraints "expression == required bit".
struct AffineSystem {
  std::vector<std::pair<BitExpr, int>> rows;
  void require(BitExpr e, int bit) { rows.emplace_back(std::move(e), bit); }
};

// GF(2) rank of the homogeneous parts (constants ignored).
int rank_of(std::span<const BitExpr> exprs);

// rank(A ∪ B) == rank(A) + rank(B); no size bound, scales to large groups.
bool rank_independent(std::span<const BitExpr> group_a, std::span<const BitExpr> group_b);

// Exact satisfaction probability: 0 if inconsistent, else 2^-rank.
Rat system_probability(const AffineSystem& sys);

// Exact law of the vector of expressions over {0,1}^k. The support is the
// affine image of the seed space, every outcome carrying mass 2^-rank.
// Throws LengthBoundError when k exceeds the bound.
JointDist joint_distribution(std::span<const BitExpr> exprs, int bound = kJointLengthBound);

// Independence of two groups via rank additivity (equivalent to the
// distribution-level product check). Bounded per the joint-table contract;
// use rank_independent directly for large groups.
bool are_independent(std::span<const BitExpr> group_a, std::span<const BitExpr> group_b,
                     int bound = kJointLengthBound);

}  // namespace threedot
