#include "dynaph/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace dynaph {

PermutableMatrix::PermutableMatrix(int m)
    : m_(m), cols_(m), row_to_pos_(m), pos_to_row_(m), col_to_pos_(m), pos_to_col_(m) {
  std::iota(row_to_pos_.begin(), row_to_pos_.end(), 0);
  std::iota(pos_to_row_.begin(), pos_to_row_.end(), 0);
  std::iota(col_to_pos_.begin(), col_to_pos_.end(), 0);
  std::iota(pos_to_col_.begin(), pos_to_col_.end(), 0);
}

PermutableMatrix PermutableMatrix::identity(int m) {
  PermutableMatrix a(m);
  for (int k = 0; k < m; ++k) a.cols_[k] = {k};
  return a;
}

void PermutableMatrix::add_column(int target, int source) {
  require(target >= 0 && target < m_ && source >= 0 && source < m_, "column index out of range");
  require(target != source, "add_column: target must differ from source");
  const auto& src = cols_[pos_to_col_[source]];
  auto& dst = cols_[pos_to_col_[target]];
  std::vector<int> out;
  out.reserve(src.size() + dst.size());
  std::set_symmetric_difference(dst.begin(), dst.end(), src.begin(), src.end(),
                                std::back_inserter(out));
  dst = std::move(out);
  ++counter_.col_ops;
}

void PermutableMatrix::add_rows(int target, const std::vector<int>& orig_rows) {
  require(target >= 0 && target < m_, "column index out of range");
  auto& dst = cols_[pos_to_col_[target]];
  std::vector<int> out;
  out.reserve(orig_rows.size() + dst.size());
  std::set_symmetric_difference(dst.begin(), dst.end(), orig_rows.begin(), orig_rows.end(),
                                std::back_inserter(out));
  dst = std::move(out);
  ++counter_.col_ops;
}

int PermutableMatrix::low(int j) const {
  ++counter_.entry_queries;
  return low_uncounted(j);
}

int PermutableMatrix::low_uncounted(int j) const {
  const auto& col = cols_[pos_to_col_[j]];
  int best = none;
  for (int r : col) best = std::max(best, row_to_pos_[r]);
  return best;
}

bool PermutableMatrix::entry(int i, int j) const {
  ++counter_.entry_queries;
  return entry_uncounted(i, j);
}

bool PermutableMatrix::entry_uncounted(int i, int j) const {
  const auto& col = cols_[pos_to_col_[j]];
  return std::binary_search(col.begin(), col.end(), pos_to_row_[i]);
}

std::vector<int> PermutableMatrix::nonzero_in_row(int i, int c0, int c1) const {
  std::vector<int> hits;
  for (int c = c0; c <= c1; ++c) {
    ++counter_.entry_queries;
    if (entry_uncounted(i, c)) hits.push_back(c);
  }
  return hits;
}

bool PermutableMatrix::column_empty(int j) const {
  ++counter_.entry_queries;
  return cols_[pos_to_col_[j]].empty();
}

void PermutableMatrix::set_column(int orig_col, std::vector<int> orig_rows) {
  require(std::is_sorted(orig_rows.begin(), orig_rows.end()) &&
              std::adjacent_find(orig_rows.begin(), orig_rows.end()) == orig_rows.end(),
          "set_column: row ids must be strictly increasing");
  cols_[orig_col] = std::move(orig_rows);
}

void PermutableMatrix::swap_rows(int i) {
  const int a = pos_to_row_[i], b = pos_to_row_[i + 1];
  std::swap(pos_to_row_[i], pos_to_row_[i + 1]);
  std::swap(row_to_pos_[a], row_to_pos_[b]);
  ++counter_.perms_applied;
}

void PermutableMatrix::swap_columns(int i) {
  const int a = pos_to_col_[i], b = pos_to_col_[i + 1];
  std::swap(pos_to_col_[i], pos_to_col_[i + 1]);
  std::swap(col_to_pos_[a], col_to_pos_[b]);
  ++counter_.perms_applied;
}

namespace {
void compose(std::vector<int>& to_pos, std::vector<int>& pos_to, const std::vector<int>& p) {
  for (int& pos : to_pos) pos = p[pos];
  for (std::size_t id = 0; id < to_pos.size(); ++id) pos_to[to_pos[id]] = static_cast<int>(id);
}
}  // namespace

void PermutableMatrix::apply_row_permutation(const std::vector<int>& to_new) {
  require(static_cast<int>(to_new.size()) == m_, "permutation size mismatch");
  compose(row_to_pos_, pos_to_row_, to_new);
  ++counter_.perms_applied;
}

void PermutableMatrix::apply_col_permutation(const std::vector<int>& to_new) {
  require(static_cast<int>(to_new.size()) == m_, "permutation size mismatch");
  compose(col_to_pos_, pos_to_col_, to_new);
  ++counter_.perms_applied;
}

std::vector<int> PermutableMatrix::column_positions(int j) const {
  const auto& col = cols_[pos_to_col_[j]];
  std::vector<int> out;
  out.reserve(col.size());
  for (int r : col) out.push_back(row_to_pos_[r]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<std::uint8_t>> PermutableMatrix::dense() const {
  std::vector<std::vector<std::uint8_t>> grid(m_, std::vector<std::uint8_t>(m_, 0));
  for (int c = 0; c < m_; ++c)
    for (int r : cols_[c]) grid[row_to_pos_[r]][col_to_pos_[c]] = 1;
  return grid;
}

std::string PermutableMatrix::dump() const {
  std::ostringstream os;
  auto grid = dense();
  for (int i = 0; i < m_; ++i) {
    for (int j = 0; j < m_; ++j) {
      if (j) os << ' ';
      os << int(grid[i][j]);
    }
    os << '\n';
  }
  return os.str();
}

bool PermutableMatrix::equal_content(const PermutableMatrix& other) const {
  if (m_ != other.m_) return false;
  for (int j = 0; j < m_; ++j)
    if (column_positions(j) != other.column_positions(j)) return false;
  return true;
}

}  // namespace dynaph
