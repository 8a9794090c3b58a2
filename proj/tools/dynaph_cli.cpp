// Command-line front end: build filtrations, run the family strategies,
// emit diagrams, schedules, cost reports, and crocker CSVs.
//
// Exit codes: 0 success, 2 input error, 3 internal invariant failure.

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "dynaph/apps.hpp"
#include "dynaph/engine.hpp"
#include "dynaph/moves.hpp"

namespace fs = std::filesystem;
using namespace dynaph;

namespace {

std::uint64_t resolve_seed(std::uint64_t cli_seed, bool seed_given) {
  if (seed_given) return cli_seed;
  if (const char* env = std::getenv("DYNAPH_SEED")) return std::strtoull(env, nullptr, 10);
  return default_seed;
}

std::vector<double> parse_grid(const std::string& spec) {
  // "lo:hi:n" or a single value
  const auto c1 = spec.find(':');
  if (c1 == std::string::npos) return {std::stod(spec)};
  const auto c2 = spec.find(':', c1 + 1);
  require(c2 != std::string::npos, "grid spec must be lo:hi:n or a single value: " + spec);
  const double lo = std::stod(spec.substr(0, c1));
  const double hi = std::stod(spec.substr(c1 + 1, c2 - c1 - 1));
  const int n = std::stoi(spec.substr(c2 + 1));
  return linspace(lo, hi, n);
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  require(out.good(), "cannot write file: " + path);
  out << content;
}

struct FamilyOptions {
  std::vector<std::string> files;
  std::string gen;
  int frames = 10;
  int samples = 60;
  int agents = 20;
  std::string strategy = "moves";
  std::uint64_t seed = 0;
  bool seed_given = false;
  int jobs = 1;
  std::string out_dir;
  std::string report_path;
  std::string schedule_path;
};

FamilySource make_source(const FamilyOptions& opt) {
  if (opt.gen == "annulus") {
    AnnulusParams p;
    p.frames = opt.frames;
    return annulus_source(p);
  }
  if (opt.gen == "boids") {
    BoidParams p;
    p.samples = opt.samples;
    p.agents = opt.agents;
    return boid_source(p, resolve_seed(opt.seed, opt.seed_given));
  }
  require(opt.gen.empty(), "unknown generator: " + opt.gen);
  require(!opt.files.empty(), "family: give filtration files or --gen");
  auto files = opt.files;
  std::size_t next = 0;
  return [files, next]() mutable -> std::optional<Filtration> {
    if (next >= files.size()) return std::nullopt;
    return read_filtration_file(files[next++]);
  };
}

void write_diagrams(const FamilyResult& r, const std::string& out_dir) {
  if (out_dir.empty()) return;
  fs::create_directories(out_dir);
  for (std::size_t t = 0; t < r.diagrams.size(); ++t) {
    std::ostringstream name;
    name << "dgm_" << std::setw(3) << std::setfill('0') << t << ".csv";
    std::ostringstream body;
    write_diagram_csv(body, r.diagrams[t]);
    write_file((fs::path(out_dir) / name.str()).string(), body.str());
  }
}

int cmd_reduce(const std::string& input, const std::string& output, const std::string& coords) {
  Filtration f = read_filtration_file(input);
  std::vector<int> dims(f.size());
  for (int k = 0; k < f.size(); ++k) dims[k] = f.dimension(k);
  Decomposition dec = reduce(boundary_matrix(f), dims);
  ensure(validate(dec), "reduction produced an invalid decomposition");
  PersistenceDiagram dgm = extract_pairs(dec);
  if (coords == "grade") apply_grades(dgm, f.grades());
  std::ostringstream body;
  write_diagram_csv(body, dgm);
  if (output.empty())
    std::cout << body.str();
  else
    write_file(output, body.str());
  return 0;
}

int cmd_family(const FamilyOptions& opt) {
  FamilyResult result;
  if (!opt.schedule_path.empty()) {
    require(opt.files.size() == 2 && opt.gen.empty(),
            "--schedule needs exactly two filtration files");
    Filtration k0 = read_filtration_file(opt.files[0]);
    Filtration k1 = read_filtration_file(opt.files[1]);
    std::ifstream in(opt.schedule_path);
    require(in.good(), "cannot open schedule file: " + opt.schedule_path);
    result = run_schedule(k0, k1, read_schedule(in));
  } else {
    result = run_family(make_source(opt), strategy_from_name(opt.strategy), opt.jobs);
  }
  write_diagrams(result, opt.out_dir);
  const std::string report = cost_report_csv(report_rows(opt.strategy, result));
  if (opt.report_path.empty())
    std::cout << report;
  else
    write_file(opt.report_path, report);
  return 0;
}

int cmd_schedule(const std::string& file_a, const std::string& file_b, const std::string& output,
                 bool greedy) {
  Filtration a = read_filtration_file(file_a);
  Filtration b = read_filtration_file(file_b);
  MoveSchedule s = face_safe_schedule(a, b, greedy);

  // Predicted cost: donor traces along the schedule, advanced on a scratch
  // decomposition.
  std::vector<int> dims(a.size());
  for (int k = 0; k < a.size(); ++k) dims[k] = a.dimension(k);
  Decomposition dec = reduce(boundary_matrix(a), dims);
  std::uint64_t predicted = 0;
  for (const Move& mv : s.moves) {
    predicted += static_cast<std::uint64_t>(donor_trace(dec, mv.from, mv.to));
    if (mv.from < mv.to)
      move_right(dec, mv.from, mv.to);
    else
      move_left(dec, mv.from, mv.to);
  }

  std::ostringstream body;
  write_schedule(body, s);
  if (output.empty())
    std::cout << body.str();
  else
    write_file(output, body.str());
  std::cout << "m=" << s.m << " lcs=" << (s.m - static_cast<int>(s.moves.size()))
            << " count=" << s.moves.size() << " predicted_col_ops=" << predicted << '\n';
  return 0;
}

struct CrockerOptions {
  std::string gen;
  std::string diagrams_dir;
  int dim = 1;
  std::string eps = "0:0.3:31";
  std::string alpha = "0";
  int samples = 60;
  int agents = 20;
  std::uint64_t seed = 0;
  bool seed_given = false;
  int jobs = 1;
  std::string out;
};

int cmd_crocker(const CrockerOptions& opt) {
  std::vector<PersistenceDiagram> dgms;
  if (!opt.diagrams_dir.empty()) {
    require(fs::is_directory(opt.diagrams_dir), "not a directory: " + opt.diagrams_dir);
    std::vector<fs::path> paths;
    for (const auto& e : fs::directory_iterator(opt.diagrams_dir))
      if (e.path().extension() == ".csv") paths.push_back(e.path());
    std::sort(paths.begin(), paths.end());
    require(!paths.empty(), "no diagram csv files in " + opt.diagrams_dir);
    for (const auto& p : paths) {
      std::ifstream in(p);
      dgms.push_back(read_diagram_csv(in));
    }
  } else {
    require(opt.gen == "boids", "crocker: give --diagrams or --gen=boids");
    BoidParams p;
    p.samples = opt.samples;
    p.agents = opt.agents;
    dgms = run_moves(boid_source(p, resolve_seed(opt.seed, opt.seed_given))).diagrams;
  }
  CrockerStack s =
      crocker_stack(dgms, opt.dim, parse_grid(opt.eps), parse_grid(opt.alpha), opt.jobs);
  std::ostringstream body;
  write_crocker_csv(body, s);
  if (opt.out.empty())
    std::cout << body.str();
  else
    write_file(opt.out, body.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dynaph: dynamic persistent homology via move schedules"};
  app.require_subcommand(1);

  // reduce
  std::string rd_input, rd_output, rd_coords = "index";
  CLI::App* rd = app.add_subcommand("reduce", "reduce one filtration and emit its diagram");
  rd->add_option("input", rd_input, "filtration file")->required();
  rd->add_option("-o,--output", rd_output, "diagram csv (stdout when omitted)");
  rd->add_option("--coords", rd_coords, "index|grade coordinates")
      ->check(CLI::IsMember({"index", "grade"}));

  // family
  FamilyOptions fam;
  CLI::App* fm = app.add_subcommand("family", "sweep a family of filtrations");
  fm->add_option("files", fam.files, "filtration files (shared simplex set)");
  fm->add_option("--gen", fam.gen, "generator: annulus|boids");
  fm->add_option("--frames", fam.frames, "annulus frame count");
  fm->add_option("--samples", fam.samples, "boid timepoint count");
  fm->add_option("--agents", fam.agents, "boid agent count");
  fm->add_option("--strategy", fam.strategy, "naive|vineyard|moves|greedy")
      ->check(CLI::IsMember({"naive", "vineyard", "moves", "greedy"}));
  auto* fam_seed = fm->add_option("--seed", fam.seed, "generator seed (or DYNAPH_SEED)");
  fm->add_option("--jobs", fam.jobs, "parallel reductions for --strategy=naive");
  fm->add_option("--out-dir", fam.out_dir, "directory for per-member diagram csvs");
  fm->add_option("--report", fam.report_path, "cost report csv (stdout when omitted)");
  fm->add_option("--schedule", fam.schedule_path, "pre-computed move schedule file");

  // schedule
  std::string sc_a, sc_b, sc_out;
  bool sc_greedy = false;
  CLI::App* sc = app.add_subcommand("schedule", "move schedule between two filtrations");
  sc->add_option("first", sc_a, "filtration file")->required();
  sc->add_option("second", sc_b, "filtration file")->required();
  sc->add_option("-o,--output", sc_out, "schedule file (stdout when omitted)");
  sc->add_flag("--greedy", sc_greedy, "pick moves by the Spearman proxy");

  // crocker
  CrockerOptions cr;
  CLI::App* ck = app.add_subcommand("crocker", "crocker stack csv from diagrams");
  ck->add_option("--gen", cr.gen, "generator: boids");
  ck->add_option("--diagrams", cr.diagrams_dir, "directory of diagram csvs (grade coords)");
  ck->add_option("--dim", cr.dim, "homology dimension");
  ck->add_option("--eps", cr.eps, "scale grid lo:hi:n or a single value");
  ck->add_option("--alpha", cr.alpha, "smoothing grid lo:hi:n or a single value");
  ck->add_option("--samples", cr.samples, "boid timepoint count");
  ck->add_option("--agents", cr.agents, "boid agent count");
  auto* cr_seed = ck->add_option("--seed", cr.seed, "generator seed (or DYNAPH_SEED)");
  ck->add_option("--jobs", cr.jobs, "parallel timepoints for the stack");
  ck->add_option("-o,--output", cr.out, "output csv (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  fam.seed_given = fam_seed->count() > 0;
  cr.seed_given = cr_seed->count() > 0;

  try {
    if (rd->parsed()) return cmd_reduce(rd_input, rd_output, rd_coords);
    if (fm->parsed()) return cmd_family(fam);
    if (sc->parsed()) return cmd_schedule(sc_a, sc_b, sc_out, sc_greedy);
    if (ck->parsed()) return cmd_crocker(cr);
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const invariant_error& e) {
    std::cerr << "invariant failure: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
