#include "dynaph/filtration.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace dynaph {

std::atomic<long> Filtration::live_{0};

bool Simplex::valid() const {
  if (vertices.empty()) return false;
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i)
    if (vertices[i] >= vertices[i + 1]) return false;
  return vertices.front() >= 0;
}

std::vector<Simplex> Simplex::facets() const {
  std::vector<Simplex> out;
  if (dimension() == 0) return out;
  for (std::size_t skip = 0; skip < vertices.size(); ++skip) {
    Simplex f;
    f.vertices.reserve(vertices.size() - 1);
    for (std::size_t i = 0; i < vertices.size(); ++i)
      if (i != skip) f.vertices.push_back(vertices[i]);
    out.push_back(std::move(f));
  }
  return out;
}

void Filtration::acquire() {
  if (!simplices_.empty()) live_.fetch_add(1);
}
void Filtration::release() {
  if (!simplices_.empty()) live_.fetch_sub(1);
}

Filtration::Filtration(std::vector<Simplex> simplices, std::vector<double> grades)
    : simplices_(std::move(simplices)), grades_(std::move(grades)) {
  require(simplices_.size() == grades_.size(), "filtration: one grade per simplex required");
  std::map<Simplex, int> pos;
  for (int k = 0; k < size(); ++k) {
    const Simplex& s = simplices_[k];
    require(s.valid(), "filtration: simplex vertices must be strictly increasing and non-empty");
    require(pos.emplace(s, k).second, "filtration: duplicate simplex");
    if (k > 0) require(grades_[k - 1] <= grades_[k], "filtration: grades must be non-decreasing");
    for (const Simplex& f : s.facets()) {
      auto it = pos.find(f);
      require(it != pos.end() && it->second < k,
              "filtration: face must precede coface (position " + std::to_string(k) + ")");
    }
  }
  acquire();
}

Filtration::~Filtration() { release(); }
Filtration::Filtration(const Filtration& o) : simplices_(o.simplices_), grades_(o.grades_) {
  acquire();
}
Filtration::Filtration(Filtration&& o) noexcept
    : simplices_(std::move(o.simplices_)), grades_(std::move(o.grades_)) {
  // inherits o's slot in the live count; o ends empty and uncounted
  o.simplices_.clear();
  o.grades_.clear();
}
Filtration& Filtration::operator=(const Filtration& o) {
  if (this != &o) {
    release();
    simplices_ = o.simplices_;
    grades_ = o.grades_;
    acquire();
  }
  return *this;
}
Filtration& Filtration::operator=(Filtration&& o) noexcept {
  if (this != &o) {
    release();
    simplices_ = std::move(o.simplices_);
    grades_ = std::move(o.grades_);
    o.simplices_.clear();
    o.grades_.clear();
  }
  return *this;
}

std::optional<int> Filtration::position_of(const Simplex& s) const {
  // Linear scan is avoided: callers needing bulk lookups build their own map,
  // this accessor exists for spot checks in tests and io.
  for (int k = 0; k < size(); ++k)
    if (simplices_[k] == s) return k;
  return std::nullopt;
}

bool Filtration::same_simplex_set(const Filtration& other) const {
  if (size() != other.size()) return false;
  std::vector<Simplex> a = simplices_, b = other.simplices_;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

Filtration make_simplexwise(std::vector<Simplex> simplices, std::vector<double> grades) {
  require(simplices.size() == grades.size(), "one grade per simplex required");
  std::vector<int> order(simplices.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (grades[a] != grades[b]) return grades[a] < grades[b];
    if (simplices[a].dimension() != simplices[b].dimension())
      return simplices[a].dimension() < simplices[b].dimension();
    return simplices[a].vertices < simplices[b].vertices;
  });
  std::vector<Simplex> ss;
  std::vector<double> gg;
  ss.reserve(order.size());
  gg.reserve(order.size());
  for (int i : order) {
    ss.push_back(std::move(simplices[i]));
    gg.push_back(grades[i]);
  }
  return Filtration(std::move(ss), std::move(gg));
}

FiltrationFamily::FiltrationFamily(std::vector<Filtration> members) : members_(std::move(members)) {
  for (std::size_t i = 1; i < members_.size(); ++i)
    require(members_[0].same_simplex_set(members_[i]),
            "family: member " + std::to_string(i) + " has a different simplex set");
}

std::vector<int> FiltrationFamily::bijection(int i) const {
  require(i >= 0 && i + 1 < size(), "family: bijection index out of range");
  return reindex_bijection(members_[i], members_[i + 1]);
}

namespace {

// Incremental expansion: extend each simplex by common neighbors above its
// largest vertex, keeping diameter <= eps.
void expand(std::vector<int>& cur, double cur_diam, int dim_max, double eps,
            const std::vector<std::vector<double>>& dist,
            const std::vector<std::vector<int>>& nbrs, std::vector<Simplex>& simplices,
            std::vector<double>& grades) {
  simplices.emplace_back(cur);
  grades.push_back(cur_diam);
  if (static_cast<int>(cur.size()) - 1 >= dim_max) return;
  for (int v : nbrs[cur.back()]) {
    double d = cur_diam;
    bool ok = true;
    for (int u : cur) {
      if (dist[u][v] > eps) {
        ok = false;
        break;
      }
      d = std::max(d, dist[u][v]);
    }
    if (!ok) continue;
    cur.push_back(v);
    expand(cur, d, dim_max, eps, dist, nbrs, simplices, grades);
    cur.pop_back();
  }
}

}  // namespace

Filtration build_rips_from_distances(const std::vector<std::vector<double>>& dist, double eps_max,
                                     int dim_max) {
  const int n = static_cast<int>(dist.size());
  require(dim_max >= 0, "rips: dim_max must be non-negative");
  for (int i = 0; i < n; ++i) {
    require(static_cast<int>(dist[i].size()) == n, "rips: distance matrix must be square");
    for (int j = 0; j < n; ++j) {
      require(dist[i][j] >= 0.0, "rips: distances must be non-negative");
      require(dist[i][j] == dist[j][i], "rips: distance matrix must be symmetric");
    }
  }
  std::vector<std::vector<int>> nbrs(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (dist[i][j] <= eps_max) nbrs[i].push_back(j);

  std::vector<Simplex> simplices;
  std::vector<double> grades;
  for (int v = 0; v < n; ++v) {
    std::vector<int> cur{v};
    expand(cur, 0.0, dim_max, eps_max, dist, nbrs, simplices, grades);
  }
  return make_simplexwise(std::move(simplices), std::move(grades));
}

Filtration build_rips(const std::vector<std::vector<double>>& points, double eps_max,
                      int dim_max) {
  const int n = static_cast<int>(points.size());
  std::vector<std::vector<double>> dist(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) {
    require(points[i].size() == points[0].size(), "rips: points must share one dimension");
    for (int j = i + 1; j < n; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < points[i].size(); ++k) {
        double d = points[i][k] - points[j][k];
        s += d * d;
      }
      dist[i][j] = dist[j][i] = std::sqrt(s);
    }
  }
  return build_rips_from_distances(dist, eps_max, dim_max);
}

Filtration build_lower_star(const std::vector<std::vector<double>>& image) {
  const int h = static_cast<int>(image.size());
  require(h >= 2, "lower_star: image must be at least 2x2");
  const int w = static_cast<int>(image[0].size());
  require(w >= 2, "lower_star: image must be at least 2x2");
  for (const auto& row : image) require(static_cast<int>(row.size()) == w, "lower_star: ragged image");

  auto id = [w](int r, int c) { return r * w + c; };
  auto val = [&](int v) { return image[v / w][v % w]; };

  std::vector<Simplex> simplices;
  std::vector<double> grades;
  auto push = [&](std::vector<int> vs) {
    std::sort(vs.begin(), vs.end());
    double g = val(vs[0]);
    for (int v : vs) g = std::max(g, val(v));
    simplices.emplace_back(std::move(vs));
    grades.push_back(g);
  };

  for (int r = 0; r < h; ++r)
    for (int c = 0; c < w; ++c) push({id(r, c)});
  for (int r = 0; r < h; ++r)
    for (int c = 0; c + 1 < w; ++c) push({id(r, c), id(r, c + 1)});
  for (int r = 0; r + 1 < h; ++r)
    for (int c = 0; c < w; ++c) push({id(r, c), id(r + 1, c)});
  // Cell diagonal: lower-left (r+1, c) to upper-right (r, c+1), fixed globally.
  for (int r = 0; r + 1 < h; ++r)
    for (int c = 0; c + 1 < w; ++c) {
      push({id(r + 1, c), id(r, c + 1)});
      push({id(r, c), id(r, c + 1), id(r + 1, c)});
      push({id(r + 1, c), id(r, c + 1), id(r + 1, c + 1)});
    }
  return make_simplexwise(std::move(simplices), std::move(grades));
}

std::vector<int> reindex_bijection(const Filtration& a, const Filtration& b) {
  require(a.size() == b.size(), "reindex: filtrations differ in size");
  std::map<Simplex, int> pos_b;
  for (int k = 0; k < b.size(); ++k) pos_b.emplace(b.simplex(k), k);
  std::vector<int> q(a.size());
  for (int k = 0; k < a.size(); ++k) {
    auto it = pos_b.find(a.simplex(k));
    require(it != pos_b.end(), "reindex: simplex sets differ");
    q[k] = it->second;
  }
  return q;
}

PermutableMatrix boundary_matrix(const Filtration& k) {
  const int m = k.size();
  std::map<Simplex, int> pos;
  for (int j = 0; j < m; ++j) pos.emplace(k.simplex(j), j);
  PermutableMatrix d(m);
  for (int j = 0; j < m; ++j) {
    std::vector<int> rows;
    for (const Simplex& f : k.simplex(j).facets()) rows.push_back(pos.at(f));
    std::sort(rows.begin(), rows.end());
    d.set_column(j, std::move(rows));
  }
  return d;
}

// --- file formats ---------------------------------------------------------

Filtration read_filtration(std::istream& in) {
  std::vector<Simplex> simplices;
  std::vector<double> grades;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    double g;
    if (!(ls >> g)) {
      // allow blank lines and comments
      std::istringstream probe(line);
      std::string tok;
      if (!(probe >> tok) || tok[0] == '#') continue;
      throw input_error("filtration file: bad grade on line " + std::to_string(lineno));
    }
    std::vector<int> vs;
    int v;
    while (ls >> v) {
      require(v >= 0, "filtration file: negative vertex on line " + std::to_string(lineno));
      vs.push_back(v);
    }
    if (!ls.eof())
      throw input_error("filtration file: trailing garbage on line " + std::to_string(lineno));
    if (vs.empty())
      throw input_error("filtration file: simplex missing vertices on line " +
                        std::to_string(lineno));
    std::sort(vs.begin(), vs.end());
    simplices.emplace_back(std::move(vs));
    grades.push_back(g);
  }
  require(!simplices.empty(), "filtration file: no simplices");
  return make_simplexwise(std::move(simplices), std::move(grades));
}

Filtration read_filtration_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), "cannot open filtration file: " + path);
  return read_filtration(in);
}

void write_filtration(std::ostream& out, const Filtration& k) {
  for (int j = 0; j < k.size(); ++j) {
    out << k.grade(j);
    for (int v : k.simplex(j).vertices) out << ' ' << v;
    out << '\n';
  }
}

std::vector<std::vector<double>> read_point_cloud_csv(std::istream& in) {
  std::vector<std::vector<double>> pts;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::vector<double> row;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) {
      try {
        row.push_back(std::stod(cell));
      } catch (const std::exception&) {
        throw input_error("point cloud csv: bad number on line " + std::to_string(lineno));
      }
    }
    if (row.empty()) continue;
    if (!pts.empty())
      require(row.size() == pts[0].size(),
              "point cloud csv: inconsistent dimension on line " + std::to_string(lineno));
    pts.push_back(std::move(row));
  }
  require(!pts.empty(), "point cloud csv: no points");
  return pts;
}

std::vector<std::vector<double>> read_image_csv(std::istream& in) {
  auto grid = read_point_cloud_csv(in);
  return grid;
}

std::vector<std::vector<double>> read_image_pgm(std::istream& in) {
  std::string magic;
  in >> magic;
  require(magic == "P2", "pgm: only plain P2 grayscale is supported");
  auto next_int = [&in]() {
    // skip comments
    std::string tok;
    while (in >> tok) {
      if (tok[0] == '#') {
        std::string rest;
        std::getline(in, rest);
            continue;
      }
      return std::stoi(tok);
    }
    throw input_error("pgm: truncated header");
  };
  int w = next_int(), h = next_int(), maxval = next_int();
  require(w >= 2 && h >= 2 && maxval > 0, "pgm: bad dimensions");
  std::vector<std::vector<double>> img(h, std::vector<double>(w));
  for (int r = 0; r < h; ++r)
    for (int c = 0; c < w; ++c) {
      int v;
      if (!(in >> v)) throw input_error("pgm: truncated pixel data");
      img[r][c] = static_cast<double>(v) / maxval;
    }
  return img;
}

std::vector<std::vector<double>> read_image_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), "cannot open image file: " + path);
  if (path.size() >= 4 && path.substr(path.size() - 4) == ".pgm") return read_image_pgm(in);
  return read_image_csv(in);
}

}  // namespace dynaph
