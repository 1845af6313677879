#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "threedot/dist.hpp"
#include "threedot/gf2.hpp"

namespace threedot {

struct Cell {
  int64_t i = 0;
  int64_t j = 0;
  auto operator<=>(const Cell&) const = default;
};

// Rectangle of cells (i0+di, j0+dj), 0 <= di < w, 0 <= dj < h. Cell order for
// word packing and text output is raster order: top row (largest j) first,
// then left to right.
struct Window2D {
  int64_t i0 = 0;
  int64_t j0 = 0;
  int64_t w = 1;
  int64_t h = 1;

  static Window2D square(int64_t i0, int64_t j0, int64_t side) {
    return Window2D{i0, j0, side, side};
  }
  std::vector<Cell> cells() const;
};

// The plane field cut out by the local parity rule
//
//   xi(i,j) + xi(i+1,j) + xi(i,j+1) = 0   (mod 2),
//
// seeded by independent fair coins on the horizontal axis (i,0) and on the
// lower vertical axis (0,j), j < 0. Rows above the axis are forced upward by
// the rule; each row below the axis is completed rightward and leftward from
// its vertical seed. Every cell is an explicit XOR of seed coins, so window
// probabilities are exact.
//
// Memoization holds every cell ever requested and is unbounded; far cells
// have large supports (parity-of-binomials growth), so callers should keep
// their coordinate ranges deliberate. Requests are served by a transient
// row walk that only retains the requested cells. Safe for concurrent use;
// requests are serialized by an internal lock.
class CellGrid2D {
 public:
  BitExpr cell_expr(int64_t i, int64_t j);
  std::vector<BitExpr> cell_exprs(const std::vector<Cell>& cells);

  size_t memo_size() const;

 private:
  mutable std::mutex mu_;
  std::map<Cell, BitExpr> memo_;
};

// Exact law of a window; uniform on its support by construction. Throws
// LengthBoundError when the window has more than `bound` cells.
JointDist window_distribution(CellGrid2D& grid, const Window2D& w,
                              int bound = kJointLengthBound);

// The three wedges that depend on disjoint seed sets: the left wedge
// {i<0, 0<j<-i} sees only axis coins left of the origin, the lower wedge
// {j<0, 0<i<-j} only the vertical coins, and the open upper-right quadrant
// {i>0, j>0} only axis coins at i>=0.
enum class Region { LeftWedge, LowerWedge, UpperQuadrant };

std::optional<Region> region_of(int64_t i, int64_t j);
bool window_in_region(const Window2D& w, Region r);
// Corners in [-range, range]^2 whose len x len window lies inside the region.
std::vector<Cell> region_window_corners(Region r, int64_t len, int64_t range);

// True iff every pair of len x len windows placed inside two distinct regions
// (corners on the test lattice [-range, range]^2) is exactly independent.
bool region_independence_check(CellGrid2D& grid, int64_t len, int64_t range = 8);

// Exact joint law of the cells (0,0), (2^n,0), (0,2^n) plus the two
// independence verdicts: pairwise holds at every n, mutual never does.
struct TripleWitness {
  JointDist dist;
  bool pairwise_independent = false;
  bool mutually_independent = false;
};
TripleWitness triple_dependence_witness(CellGrid2D& grid, int n);

// One sampled realization restricted to a rectangle; deterministic in
// rng_seed and satisfying the parity rule at every interior triple.
struct BitMatrix {
  int64_t w = 0;
  int64_t h = 0;
  std::vector<uint8_t> bits;  // raster order, top row first

  int at(int64_t x, int64_t y_from_top) const {
    return bits[static_cast<size_t>(y_from_top * w + x)];
  }
};

BitMatrix sample_field(const Window2D& rect, uint64_t rng_seed);
Word sample_window_word(const Window2D& rect, uint64_t rng_seed);
std::string to_pbm(const BitMatrix& m);

}  // namespace threedot
