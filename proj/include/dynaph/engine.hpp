#pragma once

#include <functional>
#include <optional>
#include <string>

#include "dynaph/filtration.hpp"
#include "dynaph/moves.hpp"
#include "dynaph/schedule.hpp"
#include "dynaph/vineyard.hpp"

namespace dynaph {

enum class Strategy { naive, vineyard, moves, greedy };

Strategy strategy_from_name(const std::string& name);
const char* strategy_name(Strategy s);

/// Sequential pull of family members; returns nullopt when exhausted. Lets
/// the sweep run online with at most two filtrations resident.
using FamilySource = std::function<std::optional<Filtration>()>;

FamilySource family_source(const FiltrationFamily& fam);

struct FamilyResult {
  std::vector<PersistenceDiagram> diagrams;  // per member, grade coords filled
  std::vector<OpCounter> cumulative;         // counters after each member
  std::vector<std::size_t> schedule_sizes;   // moves/transpositions into each member
  OpCounter total;
  long peak_filtrations = 0;
  long peak_decompositions = 0;
};

/// Reduce every member independently from scratch.
FamilyResult run_naive(FamilySource src, int jobs = 1);

/// Reduce once, then sweep the family by LCS-valid move schedules
/// (ascending-symbol order by default, Spearman-greedy when `greedy`).
FamilyResult run_moves(FamilySource src, bool greedy = false);

/// Reduce once, then maintain the decomposition across the straight-line
/// transposition schedule between consecutive members.
FamilyResult run_vineyard_family(FamilySource src);

FamilyResult run_family(FamilySource src, Strategy s, int jobs = 1);

/// Minimal LCS-valid move schedule from k0's order to k1's, restricted to
/// face-order-preserving moves so it can execute on a live decomposition.
/// This is exactly the schedule run_moves plays between consecutive members.
MoveSchedule face_safe_schedule(const Filtration& k0, const Filtration& k1, bool greedy = false);

/// Apply a pre-computed move schedule between exactly two members.
FamilyResult run_schedule(const Filtration& k0, const Filtration& k1, const MoveSchedule& s);

struct CostReportRow {
  std::string strategy;
  int member = 0;
  OpCounter cum;
};

std::vector<CostReportRow> report_rows(const std::string& name, const FamilyResult& r);
/// CSV: strategy,member_index,col_ops_cum,queries_cum,perms_cum
std::string cost_report_csv(const std::vector<CostReportRow>& rows);

}  // namespace dynaph
