#include "dynaph/reduce.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

namespace dynaph {

std::atomic<long> Decomposition::live_{0};

void PersistenceDiagram::canonicalize() {
  std::sort(pairs.begin(), pairs.end(), [](const PersistencePair& a, const PersistencePair& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    if (a.birth != b.birth) return a.birth < b.birth;
    return a.death < b.death;
  });
}

void Decomposition::acquire() {
  if (d_.size() > 0) live_.fetch_add(1);
}
void Decomposition::release() {
  if (d_.size() > 0) live_.fetch_sub(1);
}

Decomposition::Decomposition(PermutableMatrix d, std::vector<int> dims_by_orig)
    : d_(std::move(d)), r_(d_.size()), v_(PermutableMatrix::identity(d_.size())),
      dims_(std::move(dims_by_orig)) {
  require(static_cast<int>(dims_.size()) == d_.size(), "decomposition: one dimension per simplex");
  acquire();
}

Decomposition::~Decomposition() { release(); }
Decomposition::Decomposition(const Decomposition& o)
    : d_(o.d_), r_(o.r_), v_(o.v_), dims_(o.dims_) {
  acquire();
}
Decomposition::Decomposition(Decomposition&& o) noexcept
    : d_(std::move(o.d_)), r_(std::move(o.r_)), v_(std::move(o.v_)), dims_(std::move(o.dims_)) {
  // inherits o's slot in the live count; o ends empty and uncounted
  o.d_ = PermutableMatrix();
}
Decomposition& Decomposition::operator=(const Decomposition& o) {
  if (this != &o) {
    release();
    d_ = o.d_;
    r_ = o.r_;
    v_ = o.v_;
    dims_ = o.dims_;
    acquire();
  }
  return *this;
}
Decomposition& Decomposition::operator=(Decomposition&& o) noexcept {
  if (this != &o) {
    release();
    d_ = std::move(o.d_);
    r_ = std::move(o.r_);
    v_ = std::move(o.v_);
    dims_ = std::move(o.dims_);
    o.d_ = PermutableMatrix();
  }
  return *this;
}

void Decomposition::transpose_positions(int i) {
  for (PermutableMatrix* mat : {&d_, &r_, &v_}) {
    mat->swap_rows(i);
    mat->swap_columns(i);
  }
}

namespace {
std::vector<int> move_permutation(int m, int i, int j) {
  // to_new[p]: new position of content currently at p.
  std::vector<int> p(m);
  for (int k = 0; k < m; ++k) p[k] = k;
  if (i < j) {
    p[i] = j;
    for (int k = i + 1; k <= j; ++k) p[k] = k - 1;
  } else {
    p[i] = j;
    for (int k = j; k < i; ++k) p[k] = k + 1;
  }
  return p;
}
}  // namespace

void Decomposition::apply_move_permutation(int i, int j) {
  auto p = move_permutation(size(), i, j);
  for (PermutableMatrix* mat : {&d_, &r_, &v_}) {
    mat->apply_row_permutation(p);
    mat->apply_col_permutation(p);
  }
}

bool Decomposition::transpose_is_face_safe(int i) const {
  return !d_.entry_uncounted(i, i + 1);
}

bool Decomposition::move_is_face_safe(int i, int j) const {
  if (i == j) return true;
  if (i < j) {
    for (int k = i + 1; k <= j; ++k)
      if (d_.entry_uncounted(i, k)) return false;  // sigma_i is a face of a crossed simplex
  } else {
    for (int k = j; k < i; ++k)
      if (d_.entry_uncounted(k, i)) return false;  // a crossed simplex is a face of sigma_i
  }
  return true;
}

Decomposition reduce(PermutableMatrix d, std::vector<int> dims_by_orig) {
  Decomposition dec(std::move(d), std::move(dims_by_orig));
  const int m = dec.size();
  PermutableMatrix& r = dec.r();
  PermutableMatrix& v = dec.v();
  // R starts as a copy of D, V as the identity.
  for (int orig = 0; orig < m; ++orig) r.set_column(orig, dec.d().column_rows(orig));

  std::vector<int> low_owner(m, -1);  // row position -> column position owning that low
  for (int j = 0; j < m; ++j) {
    int l = r.low(j);
    while (l != PermutableMatrix::none && low_owner[l] != -1) {
      const int i = low_owner[l];
      r.add_column(j, i);
      v.add_column(j, i);
      l = r.low(j);
    }
    if (l != PermutableMatrix::none) low_owner[l] = j;
  }
  return dec;
}

bool validate(const Decomposition& dec) {
  const int m = dec.size();
  const PermutableMatrix& d = dec.d();
  const PermutableMatrix& r = dec.r();
  const PermutableMatrix& v = dec.v();

  // I2a: V full-rank upper triangular (unit diagonal over GF(2)).
  for (int j = 0; j < m; ++j) {
    bool diag = false;
    for (int p : v.column_positions(j)) {
      if (p > j) return false;
      if (p == j) diag = true;
    }
    if (!diag) return false;
  }
  // I2b: R reduced -- nonzero columns have pairwise distinct lows.
  std::vector<char> seen(m, 0);
  for (int j = 0; j < m; ++j) {
    int l = r.low_uncounted(j);
    if (l == PermutableMatrix::none) continue;
    if (seen[l]) return false;
    seen[l] = 1;
  }
  // I1: R = D V over GF(2), checked column by column in current coordinates.
  std::vector<std::uint8_t> acc(m);
  for (int j = 0; j < m; ++j) {
    std::fill(acc.begin(), acc.end(), 0);
    for (int c : v.column_positions(j))
      for (int i : d.column_positions(c)) acc[i] ^= 1;
    for (int i : r.column_positions(j)) acc[i] ^= 1;
    for (int i = 0; i < m; ++i)
      if (acc[i]) return false;
  }
  return true;
}

PersistenceDiagram extract_pairs(const Decomposition& dec) {
  const int m = dec.size();
  const PermutableMatrix& r = dec.r();
  std::vector<char> is_death_row(m, 0);
  std::vector<int> low_of(m, PermutableMatrix::none);
  for (int j = 0; j < m; ++j) {
    int l = r.low_uncounted(j);
    low_of[j] = l;
    if (l != PermutableMatrix::none) {
      ensure(!is_death_row[l], "extract_pairs: R is not reduced");
      is_death_row[l] = 1;
    }
  }
  PersistenceDiagram dgm;
  for (int j = 0; j < m; ++j) {
    if (low_of[j] != PermutableMatrix::none) {
      PersistencePair p;
      p.birth = low_of[j];
      p.death = j;
      p.dim = dec.dim_at(low_of[j]);
      dgm.pairs.push_back(p);
    } else if (!is_death_row[j]) {
      PersistencePair p;
      p.birth = j;
      p.death = -1;
      p.dim = dec.dim_at(j);
      dgm.pairs.push_back(p);
    }
  }
  dgm.canonicalize();
  return dgm;
}

void apply_grades(PersistenceDiagram& dgm, const std::vector<double>& grade_by_position) {
  for (PersistencePair& p : dgm.pairs) {
    p.birth_grade = grade_by_position[p.birth];
    p.death_grade =
        p.essential() ? std::numeric_limits<double>::infinity() : grade_by_position[p.death];
  }
}

std::vector<int> betti_curve(const PersistenceDiagram& dgm, int p, int m) {
  std::vector<int> diff(m + 1, 0);
  for (const PersistencePair& pr : dgm.pairs) {
    if (pr.dim != p) continue;
    diff[pr.birth] += 1;
    diff[pr.essential() ? m : pr.death] -= 1;
  }
  std::vector<int> curve(m, 0);
  int run = 0;
  for (int k = 0; k < m; ++k) {
    run += diff[k];
    curve[k] = run;
  }
  return curve;
}

int betti_at_grade(const PersistenceDiagram& dgm, int p, double eps) {
  int n = 0;
  for (const PersistencePair& pr : dgm.pairs)
    if (pr.dim == p && pr.birth_grade <= eps && !(pr.death_grade <= eps)) ++n;
  return n;
}

void write_diagram_csv(std::ostream& out, const PersistenceDiagram& dgm) {
  out << "dim,birth_index,death_index,birth_grade,death_grade\n";
  for (const PersistencePair& p : dgm.pairs) {
    out << p.dim << ',' << (p.birth + 1) << ',';
    if (p.essential())
      out << "inf";
    else
      out << (p.death + 1);
    out << ',';
    if (std::isnan(p.birth_grade))
      out << (p.birth + 1);
    else
      out << p.birth_grade;
    out << ',';
    if (p.essential())
      out << "inf";
    else if (std::isnan(p.death_grade))
      out << (p.death + 1);
    else
      out << p.death_grade;
    out << '\n';
  }
}

PersistenceDiagram read_diagram_csv(std::istream& in) {
  PersistenceDiagram dgm;
  std::string line;
  bool header = true;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (header) {
      header = false;
      if (line.rfind("dim,", 0) == 0) continue;
    }
    std::istringstream ls(line);
    std::string tok;
    std::vector<std::string> cells;
    while (std::getline(ls, tok, ',')) cells.push_back(tok);
    require(cells.size() == 5, "diagram csv: expected 5 columns on line " + std::to_string(lineno));
    PersistencePair p;
    try {
      p.dim = std::stoi(cells[0]);
      p.birth = std::stoi(cells[1]) - 1;
      p.death = (cells[2] == "inf") ? -1 : std::stoi(cells[2]) - 1;
      p.birth_grade = std::stod(cells[3]);
      p.death_grade =
          (cells[4] == "inf") ? std::numeric_limits<double>::infinity() : std::stod(cells[4]);
    } catch (const std::exception&) {
      throw input_error("diagram csv: bad value on line " + std::to_string(lineno));
    }
    dgm.pairs.push_back(p);
  }
  dgm.canonicalize();
  return dgm;
}

}  // namespace dynaph
