#pragma once

#include "dynaph/reduce.hpp"

namespace dynaph {

struct MoveStats {
  /// Column additions applied to R (always equal on V for move operations).
  int adds = 0;
};

/// Relocate the simplex at position i to position j > i, shifting the
/// interval down by one. Validity may fail mid-move but holds on return.
/// Cost: at most 2|i-j| column additions per matrix. The move must preserve
/// face order (throws input_error otherwise).
MoveStats move_right(Decomposition& dec, int i, int j);

/// Relocate the simplex at position i to position j < i, shifting the
/// interval up by one. Same contract as move_right.
MoveStats move_left(Decomposition& dec, int i, int j);

/// Predicted column-addition count per matrix for Move(i, j), without
/// mutating dec. Exact: equals the realized count when the move executes.
int donor_trace(const Decomposition& dec, int i, int j);

}  // namespace dynaph
