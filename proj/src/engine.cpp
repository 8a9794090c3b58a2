#include "dynaph/engine.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <thread>

namespace dynaph {

Strategy strategy_from_name(const std::string& name) {
  if (name == "naive") return Strategy::naive;
  if (name == "vineyard") return Strategy::vineyard;
  if (name == "moves") return Strategy::moves;
  if (name == "greedy") return Strategy::greedy;
  throw input_error("unknown strategy: " + name);
}

const char* strategy_name(Strategy s) {
  switch (s) {
    case Strategy::naive: return "naive";
    case Strategy::vineyard: return "vineyard";
    case Strategy::moves: return "moves";
    case Strategy::greedy: return "greedy";
  }
  return "?";
}

FamilySource family_source(const FiltrationFamily& fam) {
  int next = 0;
  return [&fam, next]() mutable -> std::optional<Filtration> {
    if (next >= fam.size()) return std::nullopt;
    return fam.member(next++);
  };
}

namespace {

std::vector<int> dims_by_position(const Filtration& f) {
  std::vector<int> dims(f.size());
  for (int k = 0; k < f.size(); ++k) dims[k] = f.dimension(k);
  return dims;
}

struct ResidencyWatch {
  long filt = 0, dec = 0;
  void sample() {
    filt = std::max(filt, Filtration::live_instances());
    dec = std::max(dec, Decomposition::live_instances());
  }
};

void snapshot(FamilyResult& res, const Decomposition& dec, const Filtration& f) {
  PersistenceDiagram dgm = extract_pairs(dec);
  apply_grades(dgm, f.grades());
  res.diagrams.push_back(std::move(dgm));
  res.cumulative.push_back(dec.counters());
}

// Shared skeleton of the two dynamic strategies: reduce the first member,
// then advance member to member with the supplied update step.
template <typename Step>
FamilyResult run_dynamic(FamilySource& src, Step step) {
  auto first = src();
  require(first.has_value(), "family: no members");
  FamilyResult res;
  ResidencyWatch watch;
  Filtration cur = std::move(*first);
  Decomposition dec = reduce(boundary_matrix(cur), dims_by_position(cur));
  watch.sample();
  snapshot(res, dec, cur);
  res.schedule_sizes.push_back(0);

  int member = 1;
  for (;;) {
    auto next = src();
    if (!next.has_value()) break;
    watch.sample();
    std::size_t ops;
    try {
      ops = step(dec, cur, *next);
    } catch (const input_error& e) {
      throw input_error("family member " + std::to_string(member) + ": " + e.what());
    }
    cur = std::move(*next);
    next.reset();
    watch.sample();
    snapshot(res, dec, cur);
    res.schedule_sizes.push_back(ops);
    ++member;
  }
  res.total = dec.counters();
  res.peak_filtrations = watch.filt;
  res.peak_decompositions = watch.dec;
  return res;
}

}  // namespace

namespace {

// Current order bookkeeping for face checks while a schedule is generated:
// facet relations are fixed in k0-index space, only positions move.
struct OrderTracker {
  std::vector<std::vector<int>> facets;  // orig id -> sorted facet orig ids
  std::vector<int> orig_at;              // position -> orig id

  explicit OrderTracker(const Filtration& k0) : facets(k0.size()), orig_at(k0.size()) {
    std::map<Simplex, int> pos;
    for (int k = 0; k < k0.size(); ++k) pos.emplace(k0.simplex(k), k);
    for (int k = 0; k < k0.size(); ++k) {
      for (const Simplex& f : k0.simplex(k).facets()) facets[k].push_back(pos.at(f));
      std::sort(facets[k].begin(), facets[k].end());
      orig_at[k] = k;
    }
  }

  bool face_safe(int from, int to) const {
    const int sigma = orig_at[from];
    if (from < to) {
      for (int k = from + 1; k <= to; ++k) {
        const auto& fs = facets[orig_at[k]];
        if (std::binary_search(fs.begin(), fs.end(), sigma)) return false;
      }
    } else {
      const auto& fs = facets[sigma];
      for (int k = to; k < from; ++k)
        if (std::binary_search(fs.begin(), fs.end(), orig_at[k])) return false;
    }
    return true;
  }

  void apply(int from, int to) {
    if (from < to)
      std::rotate(orig_at.begin() + from, orig_at.begin() + from + 1, orig_at.begin() + to + 1);
    else
      std::rotate(orig_at.begin() + to, orig_at.begin() + from, orig_at.begin() + from + 1);
  }
};

MoveSchedule face_safe_schedule_impl(const Filtration& k0, const Filtration& k1, bool greedy) {
  const std::vector<int> w = reindex_bijection(k0, k1);
  LcsSorter sorter(w);
  OrderTracker tracker(k0);
  MoveSchedule s;
  s.m = k0.size();
  s.source = Permutation::identity(k0.size());
  s.target = Permutation(std::vector<int>(w));
  while (!sorter.done()) {
    auto cands = sorter.candidates();
    if (greedy) {
      std::vector<std::pair<std::int64_t, std::size_t>> order(cands.size());
      for (std::size_t k = 0; k < cands.size(); ++k)
        order[k] = {sorter.spearman_after(cands[k]), k};
      std::sort(order.begin(), order.end());
      std::vector<LcsSorter::Candidate> sorted;
      sorted.reserve(cands.size());
      for (auto& [after, k] : order) sorted.push_back(cands[k]);
      cands = std::move(sorted);
    }
    const LcsSorter::Candidate* pick = nullptr;
    for (const auto& c : cands) {
      if (tracker.face_safe(c.from, c.to)) {
        pick = &c;
        break;
      }
    }
    ensure(pick != nullptr, "no face-safe LCS-valid move available");
    s.moves.push_back({pick->from, pick->to});
    tracker.apply(pick->from, pick->to);
    sorter.apply(*pick);
  }
  return s;
}

}  // namespace

MoveSchedule face_safe_schedule(const Filtration& k0, const Filtration& k1, bool greedy) {
  return face_safe_schedule_impl(k0, k1, greedy);
}

FamilyResult run_moves(FamilySource src, bool greedy) {
  return run_dynamic(src, [greedy](Decomposition& dec, const Filtration& cur,
                                   const Filtration& next) -> std::size_t {
    MoveSchedule sched = face_safe_schedule_impl(cur, next, greedy);
    for (const Move& mv : sched.moves) {
      if (mv.from < mv.to)
        move_right(dec, mv.from, mv.to);
      else
        move_left(dec, mv.from, mv.to);
    }
    return sched.moves.size();
  });
}

FamilyResult run_vineyard_family(FamilySource src) {
  return run_dynamic(
      src, [](Decomposition& dec, const Filtration& cur, const Filtration& next) -> std::size_t {
        TranspositionSchedule sched = straight_line_schedule(cur, next);
        run_vineyard(dec, sched);
        return sched.swaps.size();
      });
}

FamilyResult run_naive(FamilySource src, int jobs) {
  FamilyResult res;
  ResidencyWatch watch;
  jobs = std::max(jobs, 1);
  bool done = false;
  while (!done) {
    // Pull a batch and reduce members in parallel; results stay in order.
    std::vector<Filtration> batch;
    for (int k = 0; k < jobs; ++k) {
      auto f = src();
      if (!f.has_value()) {
        done = true;
        break;
      }
      batch.push_back(std::move(*f));
    }
    watch.sample();
    std::vector<Decomposition> decs(batch.size());
    if (jobs == 1 || batch.size() <= 1) {
      for (std::size_t k = 0; k < batch.size(); ++k)
        decs[k] = reduce(boundary_matrix(batch[k]), dims_by_position(batch[k]));
    } else {
      std::vector<std::thread> pool;
      for (std::size_t k = 0; k < batch.size(); ++k)
        pool.emplace_back([&, k] {
          decs[k] = reduce(boundary_matrix(batch[k]), dims_by_position(batch[k]));
        });
      for (auto& t : pool) t.join();
    }
    watch.sample();
    for (std::size_t k = 0; k < batch.size(); ++k) {
      res.total += decs[k].counters();
      snapshot(res, decs[k], batch[k]);
      res.cumulative.back() = res.total;
      res.schedule_sizes.push_back(0);
    }
  }
  require(!res.diagrams.empty(), "family: no members");
  res.peak_filtrations = watch.filt;
  res.peak_decompositions = watch.dec;
  return res;
}

FamilyResult run_family(FamilySource src, Strategy s, int jobs) {
  switch (s) {
    case Strategy::naive: return run_naive(std::move(src), jobs);
    case Strategy::vineyard: return run_vineyard_family(std::move(src));
    case Strategy::moves: return run_moves(std::move(src), false);
    case Strategy::greedy: return run_moves(std::move(src), true);
  }
  throw input_error("bad strategy");
}

FamilyResult run_schedule(const Filtration& k0, const Filtration& k1, const MoveSchedule& s) {
  require(s.m == k0.size(), "schedule size does not match the filtration");
  FamilyResult res;
  Decomposition dec = reduce(boundary_matrix(k0), dims_by_position(k0));
  snapshot(res, dec, k0);
  res.schedule_sizes.push_back(0);
  for (const Move& mv : s.moves) {
    if (mv.from < mv.to)
      move_right(dec, mv.from, mv.to);
    else
      move_left(dec, mv.from, mv.to);
  }
  // The schedule must land exactly on k1's order.
  const std::vector<int> q = reindex_bijection(k0, k1);
  for (int pos = 0; pos < k0.size(); ++pos)
    require(q[dec.orig_at(pos)] == pos, "schedule does not transform the first order into the second");
  snapshot(res, dec, k1);
  res.schedule_sizes.push_back(s.moves.size());
  res.total = dec.counters();
  return res;
}

std::vector<CostReportRow> report_rows(const std::string& name, const FamilyResult& r) {
  std::vector<CostReportRow> rows;
  for (std::size_t t = 0; t < r.cumulative.size(); ++t)
    rows.push_back({name, static_cast<int>(t), r.cumulative[t]});
  return rows;
}

std::string cost_report_csv(const std::vector<CostReportRow>& rows) {
  std::ostringstream os;
  os << "strategy,member_index,col_ops_cum,queries_cum,perms_cum\n";
  for (const auto& row : rows)
    os << row.strategy << ',' << row.member << ',' << row.cum.col_ops << ','
       << row.cum.entry_queries << ',' << row.cum.perms_applied << '\n';
  return os.str();
}

}  // namespace dynaph
