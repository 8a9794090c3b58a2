// Independent reference implementations used only by the test suites. These
// deliberately avoid the library's sparse/permuted code paths: dense GF(2)
// matrices, textbook algorithms, quadratic dynamic programming.
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "dynaph/filtration.hpp"
#include "dynaph/reduce.hpp"
#include "dynaph/schedule.hpp"

namespace oracle {

using Dense = std::vector<std::vector<std::uint8_t>>;  // row-major

// Textbook pHcol on a dense matrix; returns the diagram in index coords.
inline dynaph::PersistenceDiagram dense_reduce_pairs(Dense d, const std::vector<int>& dims) {
  const int m = static_cast<int>(d.size());
  auto low = [&](int j) {
    for (int i = m - 1; i >= 0; --i)
      if (d[i][j]) return i;
    return -1;
  };
  std::vector<int> lows(m, -1);
  for (int j = 0; j < m; ++j) {
    int l = low(j);
    for (;;) {
      if (l == -1) break;
      int owner = -1;
      for (int k = 0; k < j; ++k)
        if (lows[k] == l) {
          owner = k;
          break;
        }
      if (owner == -1) break;
      for (int i = 0; i < m; ++i) d[i][j] = d[i][j] ^ d[i][owner];
      l = low(j);
    }
    lows[j] = l;
  }
  dynaph::PersistenceDiagram dgm;
  std::vector<char> death_row(m, 0);
  for (int j = 0; j < m; ++j)
    if (lows[j] != -1) death_row[lows[j]] = 1;
  for (int j = 0; j < m; ++j) {
    if (lows[j] != -1)
      dgm.pairs.push_back({lows[j], j, dims[lows[j]], 0, 0});
    else if (!death_row[j])
      dgm.pairs.push_back({j, -1, dims[j], 0, 0});
  }
  dgm.canonicalize();
  return dgm;
}

// Diagram of the boundary matrix in its *current* permutation order.
inline dynaph::PersistenceDiagram fresh_pairs(const dynaph::Decomposition& dec) {
  const int m = dec.size();
  Dense d(m, std::vector<std::uint8_t>(m, 0));
  for (int j = 0; j < m; ++j)
    for (int i : dec.d().column_positions(j)) d[i][j] = 1;
  std::vector<int> dims(m);
  for (int k = 0; k < m; ++k) dims[k] = dec.dim_at(k);
  return dense_reduce_pairs(std::move(d), dims);
}

// Classic O(m^2) LCS table over two symbol sequences.
inline int lcs_dp(const std::vector<int>& a, const std::vector<int>& b) {
  const int n = static_cast<int>(a.size()), m = static_cast<int>(b.size());
  std::vector<std::vector<int>> t(n + 1, std::vector<int>(m + 1, 0));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= m; ++j)
      t[i][j] = (a[i - 1] == b[j - 1]) ? t[i - 1][j - 1] + 1
                                       : std::max(t[i - 1][j], t[i][j - 1]);
  return t[n][m];
}

// GF(2) Gaussian elimination; returns the rank. Columns of `mat` are vectors.
inline int gf2_rank(Dense mat) {
  if (mat.empty()) return 0;
  const int rows = static_cast<int>(mat.size());
  const int cols = static_cast<int>(mat[0].size());
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (mat[r][c]) {
        pivot = r;
        break;
      }
    if (pivot == -1) continue;
    std::swap(mat[rank], mat[pivot]);
    for (int r = 0; r < rows; ++r)
      if (r != rank && mat[r][c])
        for (int cc = c; cc < cols; ++cc) mat[r][cc] ^= mat[rank][cc];
    ++rank;
  }
  return rank;
}

// Basis of the null space of `mat` (columns of the result), GF(2).
inline Dense gf2_null_space(Dense mat, int cols) {
  const int rows = static_cast<int>(mat.size());
  std::vector<int> pivot_col;
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (mat[r][c]) {
        pivot = r;
        break;
      }
    if (pivot == -1) continue;
    std::swap(mat[rank], mat[pivot]);
    for (int r = 0; r < rows; ++r)
      if (r != rank && mat[r][c])
        for (int cc = 0; cc < cols; ++cc) mat[r][cc] ^= mat[rank][cc];
    pivot_col.push_back(c);
    ++rank;
  }
  std::vector<char> is_pivot(cols, 0);
  for (int c : pivot_col) is_pivot[c] = 1;
  Dense basis;  // one row per null vector; transposed below
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<std::uint8_t> vec(cols, 0);
    vec[free] = 1;
    for (int r = 0; r < rank; ++r)
      if (mat[r][free]) vec[pivot_col[r]] = 1;
    basis.push_back(std::move(vec));
  }
  // transpose to column-vectors
  Dense out(cols, std::vector<std::uint8_t>(basis.size(), 0));
  for (std::size_t v = 0; v < basis.size(); ++v)
    for (int c = 0; c < cols; ++c) out[c][v] = basis[v][c];
  return out;
}

// Rank of the inclusion-induced map H_p(K_a) -> H_p(K_b) for sublevel sets of
// a filtration at grades a <= b, by brute-force linear algebra:
//   rank = dim Z_p(a) - dim(Z_p(a) cap B_p(b))
//        = rank [N_a | del_{p+1}(b)] - rank del_{p+1}(b).
inline int persistent_rank(const dynaph::Filtration& f, int p, double a, double b) {
  const int m = f.size();
  std::vector<int> p_simplices_b, pm1_simplices_b, pp1_simplices_b;
  for (int k = 0; k < m; ++k) {
    if (f.grade(k) > b) continue;
    if (f.dimension(k) == p) p_simplices_b.push_back(k);
    if (f.dimension(k) == p - 1) pm1_simplices_b.push_back(k);
    if (f.dimension(k) == p + 1) pp1_simplices_b.push_back(k);
  }
  std::vector<int> col_of(m, -1), row_of(m, -1);
  for (std::size_t c = 0; c < p_simplices_b.size(); ++c) col_of[p_simplices_b[c]] = static_cast<int>(c);
  for (std::size_t r = 0; r < pm1_simplices_b.size(); ++r)
    row_of[pm1_simplices_b[r]] = static_cast<int>(r);

  // del_p over K_a's p-simplices (columns restricted to grade <= a).
  std::vector<int> p_cols_a;
  for (int k : p_simplices_b)
    if (f.grade(k) <= a) p_cols_a.push_back(k);
  Dense del_p(pm1_simplices_b.size(), std::vector<std::uint8_t>(p_cols_a.size(), 0));
  for (std::size_t c = 0; c < p_cols_a.size(); ++c)
    for (const dynaph::Simplex& face : f.simplex(p_cols_a[c]).facets()) {
      auto pos = f.position_of(face);
      del_p[row_of[*pos]][c] = 1;
    }
  Dense null_basis = gf2_null_space(del_p, static_cast<int>(p_cols_a.size()));
  const int dim_z_a = null_basis.empty() ? 0 : static_cast<int>(null_basis[0].size());

  // del_{p+1} over K_b, rows indexed by K_b's p-simplices.
  Dense del_pp1(p_simplices_b.size(), std::vector<std::uint8_t>(pp1_simplices_b.size(), 0));
  for (std::size_t c = 0; c < pp1_simplices_b.size(); ++c)
    for (const dynaph::Simplex& face : f.simplex(pp1_simplices_b[c]).facets()) {
      auto pos = f.position_of(face);
      del_pp1[col_of[*pos]][c] = 1;
    }
  const int rank_b = gf2_rank(del_pp1);

  // Embed the null basis into K_b's p-chain space and concatenate.
  Dense joint(p_simplices_b.size(),
              std::vector<std::uint8_t>(dim_z_a + pp1_simplices_b.size(), 0));
  for (int v = 0; v < dim_z_a; ++v)
    for (std::size_t c = 0; c < p_cols_a.size(); ++c)
      if (null_basis[c][v]) joint[col_of[p_cols_a[c]]][v] = 1;
  for (std::size_t c = 0; c < pp1_simplices_b.size(); ++c)
    for (std::size_t r = 0; r < p_simplices_b.size(); ++r)
      joint[r][dim_z_a + c] = del_pp1[r][c];
  const int rank_joint = gf2_rank(joint);

  return rank_joint - rank_b;
}

// --- random instances -------------------------------------------------------

// Random geometric filtration: 2D points, Rips at a radius chosen so the
// size stays at or below max_m, dimension <= 2.
inline dynaph::Filtration random_filtration(std::mt19937_64& rng, int max_m = 40) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (;;) {
    const int n = 4 + static_cast<int>(rng() % 6);
    std::vector<std::vector<double>> pts(n, std::vector<double>(2));
    for (auto& p : pts) {
      p[0] = unit(rng);
      p[1] = unit(rng);
    }
    const double eps = 0.3 + 0.4 * unit(rng);
    auto f = dynaph::build_rips(pts, eps, 2);
    if (f.size() <= max_m && f.size() >= 6) return f;
  }
}

// Random face-respecting regrade of the same complex: each simplex gets
// max(facet grades) + U(0,1), then the simplexwise refinement.
inline dynaph::Filtration random_regrade(const dynaph::Filtration& f, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  // grades computed in increasing-dimension order so facets are ready
  std::vector<int> order(f.size());
  for (int k = 0; k < f.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return f.dimension(a) < f.dimension(b); });
  std::map<dynaph::Simplex, double> grade;
  for (int k : order) {
    double g = unit(rng);
    for (const dynaph::Simplex& face : f.simplex(k).facets()) g = std::max(g, grade.at(face) + 1e-9);
    grade[f.simplex(k)] = g;
  }
  std::vector<dynaph::Simplex> ss = f.simplices();
  std::vector<double> gg;
  gg.reserve(ss.size());
  for (const auto& s : ss) gg.push_back(grade.at(s));
  return dynaph::make_simplexwise(std::move(ss), std::move(gg));
}

// A random face-safe move (or adjacent transposition when |i-j| = 1).
inline std::optional<std::pair<int, int>> random_valid_move(const dynaph::Decomposition& dec,
                                                            std::mt19937_64& rng,
                                                            int attempts = 64) {
  const int m = dec.size();
  for (int a = 0; a < attempts; ++a) {
    int i = static_cast<int>(rng() % m);
    int j = static_cast<int>(rng() % m);
    if (i == j) continue;
    if (dec.move_is_face_safe(i, j)) return std::make_pair(i, j);
  }
  return std::nullopt;
}

inline dynaph::Permutation random_permutation(int m, std::mt19937_64& rng) {
  std::vector<int> img(m);
  for (int i = 0; i < m; ++i) img[i] = i;
  std::shuffle(img.begin(), img.end(), rng);
  return dynaph::Permutation(std::move(img));
}

}  // namespace oracle
