#include "dynaph/moves.hpp"

#include <algorithm>
#include <vector>

namespace dynaph {

namespace {

struct Donor {
  int low = PermutableMatrix::none;
  std::vector<int> r_rows, v_rows;  // original row ids (stable under perms)
};

// Chain the donor through the given columns left to right: each column gets
// the current donor added; whenever the replaced column had a smaller low,
// its saved copy becomes the new donor (an empty column wins outright).
Donor restore_right(Decomposition& dec, const std::vector<int>& cols, MoveStats& st) {
  PermutableMatrix& r = dec.r();
  PermutableMatrix& v = dec.v();
  Donor d;
  d.low = r.low(cols[0]);
  d.r_rows = r.column_rows(r.orig_col_at(cols[0]));
  d.v_rows = v.column_rows(v.orig_col_at(cols[0]));
  for (std::size_t t = 1; t < cols.size(); ++t) {
    const int k = cols[t];
    const int k_low = r.low(k);
    auto k_r = r.column_rows(r.orig_col_at(k));
    auto k_v = v.column_rows(v.orig_col_at(k));
    r.add_rows(k, d.r_rows);
    v.add_rows(k, d.v_rows);
    ++st.adds;
    if (k_low < d.low) {
      d.low = k_low;
      d.r_rows = std::move(k_r);
      d.v_rows = std::move(k_v);
    }
  }
  return d;
}

// Left-to-right eliminations among the columns left in conflict after the
// move permutation: the relocation only disturbs lows at or right of the
// landing position, so a single completion sweep restores reducedness.
// Conflicts may cascade; each addition is a genuine pivot collision.
void restore_left(Decomposition& dec, MoveStats& st) {
  PermutableMatrix& r = dec.r();
  PermutableMatrix& v = dec.v();
  const int m = dec.size();
  std::vector<int> owner(m, -1);
  for (int j = 0; j < m; ++j) {
    int l = r.low_uncounted(j);
    while (l != PermutableMatrix::none && owner[l] != -1) {
      r.add_column(j, owner[l]);
      v.add_column(j, owner[l]);
      ++st.adds;
      l = r.low_uncounted(j);
    }
    if (l != PermutableMatrix::none) owner[l] = j;
  }
}

}  // namespace

MoveStats move_right(Decomposition& dec, int i, int j) {
  require(i >= 0 && j < dec.size() && i < j, "move_right: need 0 <= i < j < m");
  require(dec.move_is_face_safe(i, j),
          "move_right: relocation would place a face after its coface");
  PermutableMatrix& r = dec.r();
  PermutableMatrix& v = dec.v();
  MoveStats st;

  // Columns whose V entry in row i would break upper triangularity after the
  // move; V[i,i] = 1 so the moved column itself seeds the donor.
  const std::vector<int> cols_v = v.nonzero_in_row(i, i, j);
  // Columns whose low falls in the moved window and carry a row-i entry in R.
  std::vector<int> cols_r;
  for (int c = i + 1; c < dec.size(); ++c) {
    int l = r.low_uncounted(c);
    if (l >= i && l <= j && r.entry(i, c)) cols_r.push_back(c);
  }

  Donor d = restore_right(dec, cols_v, st);
  if (!cols_r.empty()) restore_right(dec, cols_r, st);

  dec.apply_move_permutation(i, j);
  // The moved column receives the donor; a pointer swap, not a column op.
  r.set_column(r.orig_col_at(j), std::move(d.r_rows));
  v.set_column(v.orig_col_at(j), std::move(d.v_rows));
  ensure(st.adds <= 2 * (j - i), "move_right exceeded its 2|i-j| column budget");
  return st;
}

MoveStats move_left(Decomposition& dec, int i, int j) {
  require(j >= 0 && i < dec.size() && j < i, "move_left: need 0 <= j < i < m");
  require(dec.move_is_face_safe(i, j),
          "move_left: relocation would place the simplex before one of its faces");
  PermutableMatrix& r = dec.r();
  PermutableMatrix& v = dec.v();
  MoveStats st;

  // Cancel the V entries of column i in rows [j, i) from the bottom up, so
  // the moved column permutes to an upper-triangular position.
  for (;;) {
    int k = PermutableMatrix::none;
    for (int p : v.column_positions(i))
      if (p >= j && p < i) k = std::max(k, p);
    ++v.counter().entry_queries;
    if (k == PermutableMatrix::none) break;
    r.add_column(i, k);
    v.add_column(i, k);
    ++st.adds;
  }

  dec.apply_move_permutation(i, j);
  restore_left(dec, st);
  ensure(st.adds <= 2 * (i - j), "move_left exceeded its 2|i-j| column budget");
  return st;
}

int donor_trace(const Decomposition& dec, int i, int j) {
  require(i != j, "donor_trace: i and j must differ");
  if (i < j) {
    // One pass over V's row i and R's lows, mirroring move_right's sets.
    int n_v = 0;
    for (int c = i; c <= j; ++c)
      if (dec.v().entry_uncounted(i, c)) ++n_v;
    int n_r = 0;
    for (int c = i + 1; c < dec.size(); ++c) {
      int l = dec.r().low_uncounted(c);
      if (l >= i && l <= j && dec.r().entry_uncounted(i, c)) ++n_r;
    }
    return std::max(n_v - 1, 0) + std::max(n_r - 1, 0);
  }
  // Left moves can cascade, so the exact count comes from a scratch replay.
  Decomposition scratch(dec);
  return move_left(scratch, i, j).adds;
}

}  // namespace dynaph
