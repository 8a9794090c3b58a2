#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dynaph/common.hpp"

namespace dynaph {

/// Instrumentation record for the cost model: column additions are the unit
/// events, entry queries and permutation applications are tracked separately.
struct OpCounter {
  std::uint64_t col_ops = 0;
  std::uint64_t entry_queries = 0;
  std::uint64_t perms_applied = 0;

  /// Unit O(m)-class events: column additions plus permutation applications.
  /// The strategy cost comparisons are stated over this combined count.
  std::uint64_t unit_ops() const { return col_ops + perms_applied; }

  OpCounter& operator+=(const OpCounter& o) {
    col_ops += o.col_ops;
    entry_queries += o.entry_queries;
    perms_applied += o.perms_applied;
    return *this;
  }
  friend OpCounter operator+(OpCounter a, const OpCounter& b) { return a += b; }
  friend OpCounter operator-(OpCounter a, const OpCounter& b) {
    a.col_ops -= b.col_ops;
    a.entry_queries -= b.entry_queries;
    a.perms_applied -= b.perms_applied;
    return a;
  }
  bool operator==(const OpCounter&) const = default;
};

/// Square sparse matrix over GF(2) whose rows and columns can be permuted
/// cheaply: each column stores a sorted set of *original* row ids and all
/// position logic is routed through two indirection arrays. Permutations
/// therefore never touch the column payloads, and an adjacent exchange is a
/// constant-time update of the indirection.
///
/// All public position arguments are 0-based current positions.
class PermutableMatrix {
 public:
  static constexpr int none = -1;

  PermutableMatrix() : m_(0) {}
  explicit PermutableMatrix(int m);
  static PermutableMatrix identity(int m);

  int size() const { return m_; }

  // --- column operations and queries -----------------------------------

  /// target <- target xor source. target == source is forbidden (it would
  /// silently zero the column). Counts one column operation.
  void add_column(int target, int source);

  /// target <- target xor the given original-row-id set (a saved donor
  /// column). Counts one column operation.
  void add_rows(int target, const std::vector<int>& orig_rows);

  /// Current row position of the lowest nonzero entry of column j, or `none`
  /// for an empty column. Counts one entry query.
  int low(int j) const;

  /// Nonzero status of the entry at (row i, column j). Counts one entry query.
  bool entry(int i, int j) const;

  /// Column positions in [c0, c1] whose entry in row i is nonzero.
  /// Counts one entry query per column touched.
  std::vector<int> nonzero_in_row(int i, int c0, int c1) const;

  /// True iff column j has no nonzero entries. Counts one entry query.
  bool column_empty(int j) const;

  int column_nnz(int j) const { return static_cast<int>(cols_[pos_to_col_[j]].size()); }

  // --- structure (original-id space, used when assembling a matrix) ----

  /// Replace the stored row-id set of the column with original id `orig_col`.
  /// `orig_rows` must be strictly increasing. Does not count as a column op.
  void set_column(int orig_col, std::vector<int> orig_rows);

  // --- permutations ------------------------------------------------------

  /// Exchange current row positions i and i+1. O(1); counts one permutation.
  void swap_rows(int i);
  /// Exchange current column positions i and i+1. O(1); counts one permutation.
  void swap_columns(int i);

  /// Reposition rows (or columns): to_new[p] is the new position of the
  /// content currently at position p. Counts one permutation.
  void apply_row_permutation(const std::vector<int>& to_new);
  void apply_col_permutation(const std::vector<int>& to_new);

  // --- raw views (no counting; used by builders, validation, oracles) ---

  int row_position(int orig_row) const { return row_to_pos_[orig_row]; }
  int col_position(int orig_col) const { return col_to_pos_[orig_col]; }
  int orig_row_at(int pos) const { return pos_to_row_[pos]; }
  int orig_col_at(int pos) const { return pos_to_col_[pos]; }
  const std::vector<int>& column_rows(int orig_col) const { return cols_[orig_col]; }

  /// Sorted current row positions of column at current position j (no counting).
  std::vector<int> column_positions(int j) const;

  /// Uncounted variants used internally and by validation code.
  int low_uncounted(int j) const;
  bool entry_uncounted(int i, int j) const;

  /// Dense 0/1 snapshot in current permutation order, row-major.
  std::vector<std::vector<std::uint8_t>> dense() const;
  /// Debug dump format: dense 0/1 grid in current permutation order.
  std::string dump() const;

  /// Bitwise equality of content under the current permutations.
  bool equal_content(const PermutableMatrix& other) const;

  OpCounter& counter() { return counter_; }
  const OpCounter& counter() const { return counter_; }

 private:
  int m_;
  std::vector<std::vector<int>> cols_;  // orig col id -> sorted orig row ids
  std::vector<int> row_to_pos_, pos_to_row_;
  std::vector<int> col_to_pos_, pos_to_col_;
  mutable OpCounter counter_;
};

}  // namespace dynaph
