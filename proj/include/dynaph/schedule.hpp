#pragma once

#include <cstdint>
#include <iosfwd>
#include <set>
#include <vector>

#include "dynaph/vineyard.hpp"

namespace dynaph {

/// Permutation of [m] in one-line notation: image()[i] is the value at
/// index i. The inverse is materialized lazily.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> image);
  static Permutation identity(int m);

  int size() const { return static_cast<int>(image_.size()); }
  int operator[](int i) const { return image_[i]; }
  const std::vector<int>& image() const { return image_; }
  const std::vector<int>& inverse() const;

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.image_ == b.image_;
  }

 private:
  std::vector<int> image_;
  mutable std::vector<int> inverse_;
};

/// Number of index pairs ordered oppositely by p and q (Kendall-tau).
std::int64_t kendall_distance(const Permutation& p, const Permutation& q);

/// Sum over symbols of absolute positional displacement (Spearman footrule).
std::int64_t spearman_distance(const Permutation& p, const Permutation& q);

/// One maximal-length strictly increasing subsequence of the values
/// (patience sorting; only the length is contractual).
std::vector<int> lis(const std::vector<int>& seq);

/// A longest common subsequence of p and q as symbols, via LIS of the
/// target-rank array q^{-1} o p.
std::vector<int> lcs_via_lis(const Permutation& p, const Permutation& q);

struct Move {
  int from = 0;
  int to = 0;
  friend bool operator==(const Move&, const Move&) = default;
};

/// Ordered list of moves transforming the source order into the target;
/// every move grows the common subsequence by exactly one.
struct MoveSchedule {
  int m = 0;
  std::vector<Move> moves;
  Permutation source, target;
};

/// Signed displacement of every symbol from its target position; the running
/// total of absolute values equals the Spearman distance to the target.
class DisplacementLedger {
 public:
  DisplacementLedger() = default;
  /// Displacements of w[t] = rank of the symbol at position t in the target.
  explicit DisplacementLedger(const std::vector<int>& w);

  std::int64_t total() const { return total_; }
  int displacement(int symbol) const { return disp_[symbol]; }

  /// Change of total() if the symbol at position i moved to j (three-case
  /// update applied to a scratch view; O(|i-j|)).
  std::int64_t delta(int i, int j, const std::vector<int>& w) const;
  /// Commit the move to the ledger (positions handled by the caller's w).
  void apply(int i, int j, const std::vector<int>& w);

 private:
  std::vector<int> disp_;  // by symbol
  std::int64_t total_ = 0;
};

/// Incremental state for sorting one order into another by LCS-valid moves.
/// Driven by the target-rank array w (w[t] = target position of the element
/// currently at t, i.e. the reindexing bijection between two filtrations).
/// Exposes the per-round candidate moves so callers can pick by symbol
/// order, by greedy displacement, or subject to external constraints.
class LcsSorter {
 public:
  explicit LcsSorter(std::vector<int> target_rank_by_position);

  struct Candidate {
    int symbol;  // target rank of the simplex being placed
    int from;
    int to;
  };

  bool done() const { return pending_.empty(); }
  int remaining() const { return static_cast<int>(pending_.size()); }
  /// All valid moves this round, ascending by symbol.
  std::vector<Candidate> candidates() const;
  /// Post-move Spearman distance to the target if c were applied.
  std::int64_t spearman_after(const Candidate& c) const;
  std::int64_t spearman_total() const { return ledger_.total(); }
  void apply(const Candidate& c);

 private:
  Candidate locate(int symbol) const;

  std::vector<int> w_;    // position -> target rank
  std::vector<int> pos_;  // target rank -> position
  std::set<int> placed_;  // ranks in the current common subsequence
  std::set<int> pending_;
  DisplacementLedger ledger_;
};

/// Minimal-cardinality schedule of d = m - |LCS(p,q)| moves; symbols are
/// placed in ascending target order, each adjacent to its LCS predecessor
/// window edge (leftmost slot on right-moves, rightmost on left-moves).
MoveSchedule lcs_sort(const Permutation& p, const Permutation& q);

/// Same size d, but each step picks the LCS-valid move minimizing the
/// post-move Spearman distance to the target.
MoveSchedule greedy_schedule(const Permutation& p, const Permutation& q);

/// Collapse maximal ascending runs (i,i+1)(i+1,i+2)...(j-1,j) into single
/// moves i -> j; everything else passes through as an adjacent move.
MoveSchedule coarsen_transpositions(const TranspositionSchedule& s);

// Schedule file: header `moves m=<m> count=<d>`, then one 1-based `i j` pair
// per line.
void write_schedule(std::ostream& out, const MoveSchedule& s);
MoveSchedule read_schedule(std::istream& in);

}  // namespace dynaph
