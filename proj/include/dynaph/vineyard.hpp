#pragma once

#include <iosfwd>
#include <vector>

#include "dynaph/filtration.hpp"
#include "dynaph/reduce.hpp"

namespace dynaph {

/// Ordered list of adjacent exchanges; entry i means "swap positions i, i+1"
/// (0-based). Ordered by crossing time of the inducing homotopy.
struct TranspositionSchedule {
  int m = 0;
  std::vector<int> swaps;
};

/// row position -> column position currently owning that low, or -1.
/// Acceleration structure for bulk transposition runs; reads are uncounted.
class LowIndex {
 public:
  explicit LowIndex(const Decomposition& dec);
  int owner(int row) const { return owner_[row]; }
  void set(int row, int col) { owner_[row] = col; }

 private:
  std::vector<int> owner_;
};

struct TransposeStats {
  int r_adds = 0;
  int v_adds = 0;
};

/// Exchange filtration positions i, i+1 while keeping the decomposition
/// valid; at most 2 column additions per matrix. The swap must preserve face
/// order (checked against D; throws input_error otherwise).
TransposeStats transpose(Decomposition& dec, int i, LowIndex* idx = nullptr);

/// Adjacent transpositions induced by the straight-line homotopy between the
/// two orders, ordered by crossing time (ties: lower position first).
/// Length equals the Kendall-tau distance between the orders.
TranspositionSchedule straight_line_schedule(const Filtration& k0, const Filtration& k1);

/// Apply a schedule in order; valid decomposition after every swap.
/// Returns the counter delta over R and V.
OpCounter run_vineyard(Decomposition& dec, const TranspositionSchedule& schedule);

// Schedule dump: header `transpositions m=<m> count=<k>`, one 1-based
// position per line.
void write_transpositions(std::ostream& out, const TranspositionSchedule& s);
TranspositionSchedule read_transpositions(std::istream& in);

}  // namespace dynaph
