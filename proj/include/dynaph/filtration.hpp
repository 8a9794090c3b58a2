#pragma once

#include <array>
#include <atomic>
#include <iosfwd>
#include <optional>
#include <vector>

#include "dynaph/matrix.hpp"

namespace dynaph {

/// Abstract simplex: strictly increasing list of non-negative vertex ids.
struct Simplex {
  std::vector<int> vertices;

  Simplex() = default;
  Simplex(std::initializer_list<int> vs) : vertices(vs) {}
  explicit Simplex(std::vector<int> vs) : vertices(std::move(vs)) {}

  int dimension() const { return static_cast<int>(vertices.size()) - 1; }
  bool valid() const;
  /// The dim+1 codimension-1 faces (empty for vertices).
  std::vector<Simplex> facets() const;

  auto operator<=>(const Simplex&) const = default;
};

/// Essential simplexwise filtration: a totally ordered list of simplices with
/// non-decreasing grades in which every face precedes its cofaces.
/// Immutable after construction.
class Filtration {
 public:
  Filtration() = default;
  /// Validates the simplexwise invariants; throws input_error on violation.
  Filtration(std::vector<Simplex> simplices, std::vector<double> grades);
  ~Filtration();
  Filtration(const Filtration&);
  Filtration(Filtration&&) noexcept;
  Filtration& operator=(const Filtration&);
  Filtration& operator=(Filtration&&) noexcept;

  int size() const { return static_cast<int>(simplices_.size()); }
  const Simplex& simplex(int pos) const { return simplices_[pos]; }
  double grade(int pos) const { return grades_[pos]; }
  int dimension(int pos) const { return simplices_[pos].dimension(); }
  const std::vector<Simplex>& simplices() const { return simplices_; }
  const std::vector<double>& grades() const { return grades_; }

  /// Position of a simplex, or nullopt if absent.
  std::optional<int> position_of(const Simplex& s) const;

  bool same_simplex_set(const Filtration& other) const;

  /// Number of non-empty Filtration objects currently alive. Used by the
  /// engine tests to check the online memory contract.
  static long live_instances() { return live_.load(); }

 private:
  void acquire();
  void release();

  std::vector<Simplex> simplices_;
  std::vector<double> grades_;
  static std::atomic<long> live_;
};

/// Sort simplices into the canonical simplexwise refinement: by grade, then
/// dimension, then lexicographic vertex order. Returns a valid Filtration.
Filtration make_simplexwise(std::vector<Simplex> simplices, std::vector<double> grades);

/// Discrete 1-parameter family: members share one simplex set, only the
/// order (and grades) differ.
class FiltrationFamily {
 public:
  FiltrationFamily() = default;
  explicit FiltrationFamily(std::vector<Filtration> members);

  int size() const { return static_cast<int>(members_.size()); }
  const Filtration& member(int i) const { return members_[i]; }
  const std::vector<Filtration>& members() const { return members_; }

  /// Reindexing bijection from member i to member i+1.
  std::vector<int> bijection(int i) const;

 private:
  std::vector<Filtration> members_;
};

/// Vietoris-Rips filtration of a point cloud (Euclidean) or a distance
/// matrix: all simplices with diameter <= eps_max and dimension <= dim_max,
/// graded by diameter.
Filtration build_rips(const std::vector<std::vector<double>>& points, double eps_max, int dim_max);
Filtration build_rips_from_distances(const std::vector<std::vector<double>>& dist, double eps_max,
                                     int dim_max);

/// Lower-star filtration of a grayscale image over the Freudenthal
/// triangulation of the grid (diagonal fixed lower-left to upper-right);
/// each simplex graded by the max of its vertices' pixel values.
Filtration build_lower_star(const std::vector<std::vector<double>>& image);

/// Permutation q with q[position of s in a] = position of s in b.
std::vector<int> reindex_bijection(const Filtration& a, const Filtration& b);

/// m x m boundary matrix over GF(2): column j holds the codimension-1 faces
/// of simplex j at their filtration positions. Strictly upper triangular.
PermutableMatrix boundary_matrix(const Filtration& k);

// --- file formats ---------------------------------------------------------

/// Text format, one simplex per line: `grade v0 v1 ... vk`. Lines are sorted
/// on load per the simplexwise tie-break rule.
Filtration read_filtration(std::istream& in);
Filtration read_filtration_file(const std::string& path);
void write_filtration(std::ostream& out, const Filtration& k);

/// CSV point cloud, one point per row.
std::vector<std::vector<double>> read_point_cloud_csv(std::istream& in);

/// Grid of reals: plain CSV, or PGM (P2) grayscale.
std::vector<std::vector<double>> read_image_csv(std::istream& in);
std::vector<std::vector<double>> read_image_pgm(std::istream& in);
std::vector<std::vector<double>> read_image_file(const std::string& path);

}  // namespace dynaph
