#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>

#include "dynaph/engine.hpp"

namespace dynaph {

inline constexpr std::uint64_t default_seed = 0x9e3779b97f4a7c15ull;

// --- expanding annulus video (9x9 lower-star family) ----------------------

struct AnnulusParams {
  int frames = 10;
  int grid = 9;
  double r_start = 0.0;
  double r_end = 0.78;
  // Center offset off the lattice so pixel distances are generic.
  double cx = 0.5 + 1.0 / 64.0;
  double cy = 0.5 - 1.0 / 128.0;
};

/// Pixel intensities of frame t: |dist(pixel, center) - r(t)| clamped to [0,1],
/// with r linear in the frame index.
std::vector<std::vector<double>> annulus_image(const AnnulusParams& p, int t);
Filtration annulus_frame(const AnnulusParams& p, int t);
FiltrationFamily gen_annulus(const AnnulusParams& p);
/// Streaming source over the frames (keeps one frame alive at a time).
FamilySource annulus_source(const AnnulusParams& p);

/// Grade threshold and frame picks at which the family's Betti triples
/// reproduce the expanding-annulus event sequence (frames scale with n).
inline constexpr double annulus_snapshot_eps = 0.18;
std::vector<int> annulus_snapshot_frames(int frames);

// --- flat-torus boid flock -------------------------------------------------

struct BoidParams {
  int agents = 20;
  int samples = 60;
  double wraps = 5.0;  // run until some agent has travelled this far
  double dt = 0.05;
  double perception = 0.25;
  double separation_radius = 0.08;
  double w_cohesion = 1.1;
  double w_separation = 2.4;
  double w_alignment = 0.9;
  double max_speed = 0.30;
  double min_speed = 0.06;
  int max_steps = 200000;
};

double torus_distance(const std::array<double, 2>& a, const std::array<double, 2>& b);

/// Deterministic trajectories under cohesion/separation/alignment rules on
/// the unit torus; returns `samples` evenly spaced snapshots.
std::vector<std::vector<std::array<double, 2>>> gen_boids(const BoidParams& p,
                                                          std::uint64_t seed);

std::vector<std::vector<double>> torus_distance_matrix(
    const std::vector<std::array<double, 2>>& pts);

/// Fixed-simplex-set member for one snapshot: the full 2-skeleton on the
/// agents, graded by toroidal diameter.
Filtration boid_frame(const std::vector<std::array<double, 2>>& pts);
FamilySource boid_source(const BoidParams& p, std::uint64_t seed);

// --- crocker plots and stacks ----------------------------------------------

/// crocker[t][e] = #{pairs of dim p at time t with birth <= eps[e] < death}.
/// Diagrams must be in grade coordinates.
std::vector<std::vector<int>> crocker(const std::vector<PersistenceDiagram>& dgms, int p,
                                      const std::vector<double>& eps_grid);

/// Grid of ranks of the (eps-alpha) -> (eps+alpha) structure maps; monotone
/// non-increasing in alpha at fixed (t, eps).
struct CrockerStack {
  std::vector<double> eps;
  std::vector<double> alpha;
  std::vector<std::vector<std::vector<int>>> rank;  // [t][a][e]

  int times() const { return static_cast<int>(rank.size()); }
};

/// jobs > 1 computes the timepoints in parallel.
CrockerStack crocker_stack(const std::vector<PersistenceDiagram>& dgms, int p,
                           const std::vector<double>& eps_grid,
                           const std::vector<double>& alpha_grid, int jobs = 1);

/// Long-form CSV: t,eps,alpha,rank.
void write_crocker_csv(std::ostream& out, const CrockerStack& s);

std::vector<double> linspace(double lo, double hi, int n);

}  // namespace dynaph
