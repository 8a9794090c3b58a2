#include "dynaph/schedule.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>

namespace dynaph {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  std::vector<char> seen(image_.size(), 0);
  for (int v : image_) {
    require(v >= 0 && v < size() && !seen[v], "permutation: image must be a bijection on [m]");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int m) {
  std::vector<int> img(m);
  for (int i = 0; i < m; ++i) img[i] = i;
  return Permutation(std::move(img));
}

const std::vector<int>& Permutation::inverse() const {
  if (inverse_.empty() && !image_.empty()) {
    inverse_.resize(image_.size());
    for (int i = 0; i < size(); ++i) inverse_[image_[i]] = i;
  }
  return inverse_;
}

namespace {

// Inversions by merge sort.
std::int64_t count_inversions(std::vector<int>& a) {
  const int n = static_cast<int>(a.size());
  if (n < 2) return 0;
  std::vector<int> buf(n);
  std::int64_t inv = 0;
  for (int width = 1; width < n; width *= 2) {
    for (int lo = 0; lo + width < n; lo += 2 * width) {
      const int mid = lo + width, hi = std::min(lo + 2 * width, n);
      int i = lo, j = mid, k = lo;
      while (i < mid && j < hi) {
        if (a[i] <= a[j])
          buf[k++] = a[i++];
        else {
          inv += mid - i;
          buf[k++] = a[j++];
        }
      }
      while (i < mid) buf[k++] = a[i++];
      while (j < hi) buf[k++] = a[j++];
      std::copy(buf.begin() + lo, buf.begin() + hi, a.begin() + lo);
    }
  }
  return inv;
}

std::vector<int> lis_indices(const std::vector<int>& seq) {
  const int n = static_cast<int>(seq.size());
  std::vector<int> tail_idx;  // tail_idx[len]: index of smallest tail of an IS of length len+1
  std::vector<int> first_at;  // first index to achieve each length (leftmost chain)
  std::vector<int> parent(n, -1);
  for (int i = 0; i < n; ++i) {
    auto it = std::lower_bound(tail_idx.begin(), tail_idx.end(), seq[i],
                               [&](int idx, int v) { return seq[idx] < v; });
    if (it != tail_idx.begin()) parent[i] = *(it - 1);
    if (it == tail_idx.end()) {
      tail_idx.push_back(i);
      first_at.push_back(i);
    } else {
      *it = i;
    }
  }
  std::vector<int> out;
  if (first_at.empty()) return out;
  for (int i = first_at.back(); i != -1; i = parent[i]) out.push_back(i);
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace

std::int64_t kendall_distance(const Permutation& p, const Permutation& q) {
  require(p.size() == q.size(), "kendall: length mismatch");
  // Inversions of the relative permutation q^{-1} o p, the same object the
  // Spearman footrule sums over; this keeps the two sandwiched within a
  // factor of two.
  std::vector<int> w(p.size());
  for (int t = 0; t < p.size(); ++t) w[t] = q.inverse()[p[t]];
  return count_inversions(w);
}

std::int64_t spearman_distance(const Permutation& p, const Permutation& q) {
  require(p.size() == q.size(), "spearman: length mismatch");
  std::int64_t s = 0;
  for (int v = 0; v < p.size(); ++v)
    s += std::abs(static_cast<std::int64_t>(p.inverse()[v]) - q.inverse()[v]);
  return s;
}

std::vector<int> lis(const std::vector<int>& seq) {
  std::vector<int> out;
  for (int i : lis_indices(seq)) out.push_back(seq[i]);
  return out;
}

std::vector<int> lcs_via_lis(const Permutation& p, const Permutation& q) {
  require(p.size() == q.size(), "lcs: length mismatch");
  std::vector<int> w(p.size());
  for (int t = 0; t < p.size(); ++t) w[t] = q.inverse()[p[t]];
  std::vector<int> symbols;
  for (int t : lis_indices(w)) symbols.push_back(p[t]);
  return symbols;
}

DisplacementLedger::DisplacementLedger(const std::vector<int>& w) : disp_(w.size()) {
  for (int t = 0; t < static_cast<int>(w.size()); ++t) {
    disp_[w[t]] = t - w[t];
    total_ += std::abs(static_cast<std::int64_t>(t) - w[t]);
  }
}

std::int64_t DisplacementLedger::delta(int i, int j, const std::vector<int>& w) const {
  auto iabs = [](std::int64_t x) { return x < 0 ? -x : x; };
  const int sigma = w[i];
  std::int64_t d = iabs(static_cast<std::int64_t>(j) - sigma) - iabs(disp_[sigma]);
  if (i < j) {
    for (int t = i + 1; t <= j; ++t) {
      const int tau = w[t];
      d += iabs(disp_[tau] - 1) - iabs(disp_[tau]);
    }
  } else {
    for (int t = j; t < i; ++t) {
      const int tau = w[t];
      d += iabs(disp_[tau] + 1) - iabs(disp_[tau]);
    }
  }
  return d;
}

void DisplacementLedger::apply(int i, int j, const std::vector<int>& w) {
  total_ += delta(i, j, w);
  const int sigma = w[i];
  disp_[sigma] = j - sigma;
  if (i < j)
    for (int t = i + 1; t <= j; ++t) disp_[w[t]] -= 1;
  else
    for (int t = j; t < i; ++t) disp_[w[t]] += 1;
}

LcsSorter::LcsSorter(std::vector<int> target_rank_by_position)
    : w_(std::move(target_rank_by_position)), pos_(w_.size()), ledger_(w_) {
  {
    std::vector<char> seen(w_.size(), 0);
    for (int v : w_) {
      require(v >= 0 && v < static_cast<int>(w_.size()) && !seen[v],
              "sorter: target ranks must form a bijection");
      seen[v] = 1;
    }
  }
  for (int t = 0; t < static_cast<int>(w_.size()); ++t) pos_[w_[t]] = t;
  for (int v : lis(w_)) placed_.insert(v);
  for (int v : w_)
    if (!placed_.count(v)) pending_.insert(v);
}

LcsSorter::Candidate LcsSorter::locate(int symbol) const {
  const int m = static_cast<int>(w_.size());
  const int i = pos_[symbol];
  auto it = placed_.lower_bound(symbol);
  const int i_n = (it == placed_.end()) ? m : pos_[*it];
  const int i_p = (it == placed_.begin()) ? -1 : pos_[*std::prev(it)];
  if (i < i_p) return {symbol, i, i_p};
  ensure(i > i_n, "sorter: symbol already sits inside its window");
  return {symbol, i, i_n};
}

std::vector<LcsSorter::Candidate> LcsSorter::candidates() const {
  std::vector<Candidate> out;
  out.reserve(pending_.size());
  for (int symbol : pending_) out.push_back(locate(symbol));
  return out;
}

std::int64_t LcsSorter::spearman_after(const Candidate& c) const {
  return ledger_.total() + ledger_.delta(c.from, c.to, w_);
}

void LcsSorter::apply(const Candidate& c) {
  ensure(pending_.count(c.symbol) != 0, "sorter: unknown candidate");
  ledger_.apply(c.from, c.to, w_);
  if (c.from < c.to)
    std::rotate(w_.begin() + c.from, w_.begin() + c.from + 1, w_.begin() + c.to + 1);
  else
    std::rotate(w_.begin() + c.to, w_.begin() + c.from, w_.begin() + c.from + 1);
  const int lo = std::min(c.from, c.to), hi = std::max(c.from, c.to);
  for (int t = lo; t <= hi; ++t) pos_[w_[t]] = t;
  pending_.erase(c.symbol);
  placed_.insert(c.symbol);
}

namespace {

MoveSchedule sort_with(const Permutation& p, const Permutation& q, bool greedy) {
  require(p.size() == q.size(), "schedule: length mismatch");
  std::vector<int> w(p.size());
  for (int t = 0; t < p.size(); ++t) w[t] = q.inverse()[p[t]];
  LcsSorter sorter(std::move(w));
  MoveSchedule s;
  s.m = p.size();
  s.source = p;
  s.target = q;
  while (!sorter.done()) {
    auto cands = sorter.candidates();
    const LcsSorter::Candidate* pick = &cands.front();
    if (greedy) {
      std::int64_t best = sorter.spearman_after(*pick);
      for (const auto& c : cands) {
        const std::int64_t after = sorter.spearman_after(c);
        if (after < best) {
          best = after;
          pick = &c;
        }
      }
    }
    s.moves.push_back({pick->from, pick->to});
    sorter.apply(*pick);
  }
  return s;
}

}  // namespace

MoveSchedule lcs_sort(const Permutation& p, const Permutation& q) {
  return sort_with(p, q, false);
}

MoveSchedule greedy_schedule(const Permutation& p, const Permutation& q) {
  return sort_with(p, q, true);
}

MoveSchedule coarsen_transpositions(const TranspositionSchedule& s) {
  MoveSchedule out;
  out.m = s.m;
  out.source = Permutation::identity(s.m);
  std::size_t t = 0;
  while (t < s.swaps.size()) {
    const int start = s.swaps[t];
    int end = start;
    while (t + 1 < s.swaps.size() && s.swaps[t + 1] == end + 1) {
      ++end;
      ++t;
    }
    out.moves.push_back({start, end + 1});
    ++t;
  }
  // target = composite of the swaps applied to the identity
  std::vector<int> order(s.m);
  for (int i = 0; i < s.m; ++i) order[i] = i;
  for (int i : s.swaps) std::swap(order[i], order[i + 1]);
  if (s.m > 0) out.target = Permutation(std::move(order));
  return out;
}

void write_schedule(std::ostream& out, const MoveSchedule& s) {
  out << "moves m=" << s.m << " count=" << s.moves.size() << '\n';
  for (const Move& mv : s.moves) out << (mv.from + 1) << ' ' << (mv.to + 1) << '\n';
}

MoveSchedule read_schedule(std::istream& in) {
  std::string header;
  require(static_cast<bool>(std::getline(in, header)), "schedule file: missing header");
  MoveSchedule s;
  std::size_t count = 0;
  if (std::sscanf(header.c_str(), "moves m=%d count=%zu", &s.m, &count) != 2)
    throw input_error("schedule file: bad header");
  int i, j;
  while (in >> i >> j) {
    require(i >= 1 && i <= s.m && j >= 1 && j <= s.m && i != j,
            "schedule file: move out of range");
    s.moves.push_back({i - 1, j - 1});
  }
  require(s.moves.size() == count, "schedule file: count mismatch");
  return s;
}

}  // namespace dynaph
