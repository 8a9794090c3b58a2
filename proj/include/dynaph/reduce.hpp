#pragma once

#include <atomic>
#include <iosfwd>
#include <limits>
#include <vector>

#include "dynaph/matrix.hpp"

namespace dynaph {

struct PersistencePair {
  int birth = 0;
  int death = -1;  // -1: essential class
  int dim = 0;
  double birth_grade = std::numeric_limits<double>::quiet_NaN();
  double death_grade = std::numeric_limits<double>::quiet_NaN();

  bool essential() const { return death < 0; }
  friend bool operator==(const PersistencePair& a, const PersistencePair& b) {
    return a.birth == b.birth && a.death == b.death && a.dim == b.dim;
  }
};

/// Birth/death pairs in filtration-index coordinates (0-based internally),
/// canonically sorted by (dim, birth). Grade coordinates are filled on demand.
struct PersistenceDiagram {
  std::vector<PersistencePair> pairs;

  void canonicalize();
  /// Index-level exact equality (grades ignored).
  friend bool operator==(const PersistenceDiagram& a, const PersistenceDiagram& b) {
    return a.pairs == b.pairs;
  }
};

/// The (R, V) pair against a fixed boundary matrix D, all three permuted in
/// lockstep so that I1 reads R = D V in every coordinate frame.
class Decomposition {
 public:
  Decomposition() = default;
  Decomposition(PermutableMatrix d, std::vector<int> dims_by_orig);
  ~Decomposition();
  Decomposition(const Decomposition&);
  Decomposition(Decomposition&&) noexcept;
  Decomposition& operator=(const Decomposition&);
  Decomposition& operator=(Decomposition&&) noexcept;

  int size() const { return d_.size(); }
  const PermutableMatrix& d() const { return d_; }
  PermutableMatrix& r() { return r_; }
  const PermutableMatrix& r() const { return r_; }
  PermutableMatrix& v() { return v_; }
  const PermutableMatrix& v() const { return v_; }

  int dim_at(int pos) const { return dims_[d_.orig_row_at(pos)]; }
  /// Original index (row id of D) of the simplex at a current position.
  int orig_at(int pos) const { return d_.orig_row_at(pos); }
  int position_of_orig(int orig) const { return d_.row_position(orig); }

  /// Swap positions i, i+1 of D, R, V (rows and columns alike).
  void transpose_positions(int i);
  /// Relocate position i to j, shifting the interval by one.
  void apply_move_permutation(int i, int j);

  /// Face-order preconditions, read off D without touching counters.
  bool transpose_is_face_safe(int i) const;
  bool move_is_face_safe(int i, int j) const;

  /// Combined instrumentation over R and V.
  OpCounter counters() const { return r_.counter() + v_.counter(); }

  static long live_instances() { return live_.load(); }

 private:
  void acquire();
  void release();

  PermutableMatrix d_, r_, v_;
  std::vector<int> dims_;
  static std::atomic<long> live_;
};

/// Standard left-to-right column reduction (every R operation mirrored on V).
Decomposition reduce(PermutableMatrix d, std::vector<int> dims_by_orig);

/// Full check of the decomposition invariants: R = D V over GF(2), V
/// full-rank upper triangular, R reduced. Does not touch counters.
bool validate(const Decomposition& dec);

/// Read pairs off the low entries of R. Requires a valid decomposition.
PersistenceDiagram extract_pairs(const Decomposition& dec);

/// Fill grade coordinates from grades indexed by current position.
void apply_grades(PersistenceDiagram& dgm, const std::vector<double>& grade_by_position);

/// beta_p at position k = #{pairs of dim p with birth <= k < death}.
std::vector<int> betti_curve(const PersistenceDiagram& dgm, int p, int m);

/// Betti number at a grade threshold (pairs must carry grade coordinates).
int betti_at_grade(const PersistenceDiagram& dgm, int p, double eps);

// Diagram CSV: dim,birth_index,death_index,birth_grade,death_grade with
// `inf` for essential deaths. Indices are written 1-based.
void write_diagram_csv(std::ostream& out, const PersistenceDiagram& dgm);
PersistenceDiagram read_diagram_csv(std::istream& in);

}  // namespace dynaph
