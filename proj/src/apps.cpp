#include "dynaph/apps.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <ostream>
#include <random>
#include <thread>

namespace dynaph {

// --- annulus ---------------------------------------------------------------

std::vector<std::vector<double>> annulus_image(const AnnulusParams& p, int t) {
  require(p.frames >= 1 && t >= 0 && t < p.frames, "annulus: frame out of range");
  const int n = p.grid;
  const double r =
      p.frames == 1 ? p.r_start : p.r_start + (p.r_end - p.r_start) * t / (p.frames - 1);
  std::vector<std::vector<double>> img(n, std::vector<double>(n));
  for (int row = 0; row < n; ++row)
    for (int col = 0; col < n; ++col) {
      const double x = static_cast<double>(col) / (n - 1);
      const double y = static_cast<double>(row) / (n - 1);
      const double d = std::hypot(x - p.cx, y - p.cy);
      img[row][col] = std::clamp(std::abs(d - r), 0.0, 1.0);
    }
  return img;
}

Filtration annulus_frame(const AnnulusParams& p, int t) {
  return build_lower_star(annulus_image(p, t));
}

FiltrationFamily gen_annulus(const AnnulusParams& p) {
  std::vector<Filtration> members;
  members.reserve(p.frames);
  for (int t = 0; t < p.frames; ++t) members.push_back(annulus_frame(p, t));
  return FiltrationFamily(std::move(members));
}

FamilySource annulus_source(const AnnulusParams& p) {
  int t = 0;
  return [p, t]() mutable -> std::optional<Filtration> {
    if (t >= p.frames) return std::nullopt;
    return annulus_frame(p, t++);
  };
}

std::vector<int> annulus_snapshot_frames(int frames) {
  // First frame, three interior picks bracketing the cycle phase, last frame.
  require(frames >= 5, "annulus: need at least 5 frames for snapshots");
  const int last = frames - 1;
  return {0, static_cast<int>(std::lround(0.3 * last)), static_cast<int>(std::lround(0.5 * last)),
          static_cast<int>(std::lround(0.7 * last)), last};
}

// --- boids ------------------------------------------------------------------

namespace {

inline double wrap01(double x) {
  x = std::fmod(x, 1.0);
  return x < 0 ? x + 1.0 : x;
}

// Signed toroidal displacement from a to b, each component in [-0.5, 0.5).
inline std::array<double, 2> torus_delta(const std::array<double, 2>& a,
                                         const std::array<double, 2>& b) {
  std::array<double, 2> d{b[0] - a[0], b[1] - a[1]};
  for (double& c : d) {
    if (c >= 0.5) c -= 1.0;
    if (c < -0.5) c += 1.0;
  }
  return d;
}

}  // namespace

double torus_distance(const std::array<double, 2>& a, const std::array<double, 2>& b) {
  const auto d = torus_delta(a, b);
  return std::hypot(d[0], d[1]);
}

std::vector<std::vector<std::array<double, 2>>> gen_boids(const BoidParams& p,
                                                          std::uint64_t seed) {
  require(p.agents >= 1 && p.samples >= 1, "boids: positive counts required");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);

  const int n = p.agents;
  std::vector<std::array<double, 2>> x(n), v(n);
  for (int i = 0; i < n; ++i) x[i] = {unit(rng), unit(rng)};
  for (int i = 0; i < n; ++i) {
    const double a = angle(rng);
    const double s = p.min_speed + (p.max_speed - p.min_speed) * unit(rng);
    v[i] = {s * std::cos(a), s * std::sin(a)};
  }

  std::vector<std::vector<std::array<double, 2>>> trail;
  trail.push_back(x);
  std::vector<double> travelled(n, 0.0);
  double max_travel = 0.0;

  int step = 0;
  while (max_travel < p.wraps && step < p.max_steps) {
    std::vector<std::array<double, 2>> nx(n), nv(n);
    for (int i = 0; i < n; ++i) {
      std::array<double, 2> coh{0, 0}, ali{0, 0}, sep{0, 0};
      int nnear = 0;
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        const auto d = torus_delta(x[i], x[j]);
        const double dist = std::hypot(d[0], d[1]);
        if (dist < p.perception) {
          coh[0] += d[0];
          coh[1] += d[1];
          ali[0] += v[j][0];
          ali[1] += v[j][1];
          ++nnear;
        }
        if (dist < p.separation_radius && dist > 1e-9) {
          const double push = (p.separation_radius - dist) / dist;
          sep[0] -= d[0] * push;
          sep[1] -= d[1] * push;
        }
      }
      std::array<double, 2> acc{0, 0};
      if (nnear > 0) {
        acc[0] += p.w_cohesion * coh[0] / nnear + p.w_alignment * (ali[0] / nnear - v[i][0]);
        acc[1] += p.w_cohesion * coh[1] / nnear + p.w_alignment * (ali[1] / nnear - v[i][1]);
      }
      acc[0] += p.w_separation * sep[0];
      acc[1] += p.w_separation * sep[1];

      nv[i] = {v[i][0] + p.dt * acc[0], v[i][1] + p.dt * acc[1]};
      const double speed = std::hypot(nv[i][0], nv[i][1]);
      double clamped = std::clamp(speed, p.min_speed, p.max_speed);
      if (speed > 1e-12) {
        nv[i][0] *= clamped / speed;
        nv[i][1] *= clamped / speed;
      } else {
        nv[i] = {p.min_speed, 0.0};
      }
      nx[i] = {wrap01(x[i][0] + p.dt * nv[i][0]), wrap01(x[i][1] + p.dt * nv[i][1])};
      travelled[i] += p.dt * std::hypot(nv[i][0], nv[i][1]);
      max_travel = std::max(max_travel, travelled[i]);
    }
    x = std::move(nx);
    v = std::move(nv);
    trail.push_back(x);
    ++step;
  }

  // `samples` evenly spaced snapshots across the recorded trajectory.
  std::vector<std::vector<std::array<double, 2>>> out;
  out.reserve(p.samples);
  const std::size_t last = trail.size() - 1;
  for (int k = 0; k < p.samples; ++k) {
    const std::size_t idx =
        p.samples == 1 ? 0 : static_cast<std::size_t>(std::llround(
                                 static_cast<double>(k) * last / (p.samples - 1)));
    out.push_back(trail[idx]);
  }
  return out;
}

std::vector<std::vector<double>> torus_distance_matrix(
    const std::vector<std::array<double, 2>>& pts) {
  const int n = static_cast<int>(pts.size());
  std::vector<std::vector<double>> d(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) d[i][j] = d[j][i] = torus_distance(pts[i], pts[j]);
  return d;
}

Filtration boid_frame(const std::vector<std::array<double, 2>>& pts) {
  // Full 2-skeleton so every family member shares one simplex set.
  return build_rips_from_distances(torus_distance_matrix(pts),
                                   std::numeric_limits<double>::infinity(), 2);
}

FamilySource boid_source(const BoidParams& p, std::uint64_t seed) {
  auto samples = gen_boids(p, seed);
  std::size_t t = 0;
  return [samples = std::move(samples), t]() mutable -> std::optional<Filtration> {
    if (t >= samples.size()) return std::nullopt;
    return boid_frame(samples[t++]);
  };
}

// --- crocker ----------------------------------------------------------------

std::vector<std::vector<int>> crocker(const std::vector<PersistenceDiagram>& dgms, int p,
                                      const std::vector<double>& eps_grid) {
  std::vector<std::vector<int>> out(dgms.size(), std::vector<int>(eps_grid.size(), 0));
  for (std::size_t t = 0; t < dgms.size(); ++t)
    for (std::size_t e = 0; e < eps_grid.size(); ++e)
      out[t][e] = betti_at_grade(dgms[t], p, eps_grid[e]);
  return out;
}

CrockerStack crocker_stack(const std::vector<PersistenceDiagram>& dgms, int p,
                           const std::vector<double>& eps_grid,
                           const std::vector<double>& alpha_grid, int jobs) {
  for (double a : alpha_grid) require(a >= 0.0, "crocker stack: alpha must be non-negative");
  CrockerStack s;
  s.eps = eps_grid;
  s.alpha = alpha_grid;
  s.rank.assign(dgms.size(),
                std::vector<std::vector<int>>(alpha_grid.size(),
                                              std::vector<int>(eps_grid.size(), 0)));
  auto fill = [&](std::size_t t) {
    for (std::size_t a = 0; a < alpha_grid.size(); ++a)
      for (std::size_t e = 0; e < eps_grid.size(); ++e) {
        const double lo = eps_grid[e] - alpha_grid[a];
        const double hi = eps_grid[e] + alpha_grid[a];
        int n = 0;
        for (const PersistencePair& pr : dgms[t].pairs)
          if (pr.dim == p && pr.birth_grade <= lo && !(pr.death_grade <= hi)) ++n;
        s.rank[t][a][e] = n;
      }
  };
  if (jobs <= 1) {
    for (std::size_t t = 0; t < dgms.size(); ++t) fill(t);
    return s;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (int w = 0; w < jobs; ++w)
    pool.emplace_back([&] {
      for (std::size_t t = next.fetch_add(1); t < dgms.size(); t = next.fetch_add(1)) fill(t);
    });
  for (auto& th : pool) th.join();
  return s;
}

void write_crocker_csv(std::ostream& out, const CrockerStack& s) {
  out << "t,eps,alpha,rank\n";
  for (int t = 0; t < s.times(); ++t)
    for (std::size_t a = 0; a < s.alpha.size(); ++a)
      for (std::size_t e = 0; e < s.eps.size(); ++e)
        out << t << ',' << s.eps[e] << ',' << s.alpha[a] << ',' << s.rank[t][a][e] << '\n';
}

std::vector<double> linspace(double lo, double hi, int n) {
  require(n >= 1, "linspace: need at least one sample");
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) out[i] = n == 1 ? lo : lo + (hi - lo) * i / (n - 1);
  return out;
}

}  // namespace dynaph
