#include "dynaph/vineyard.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <optional>
#include <ostream>
#include <queue>
#include <sstream>

namespace dynaph {

LowIndex::LowIndex(const Decomposition& dec) : owner_(dec.size(), -1) {
  for (int j = 0; j < dec.size(); ++j) {
    int l = dec.r().low_uncounted(j);
    if (l != PermutableMatrix::none) owner_[l] = j;
  }
}

namespace {

// Column positions whose low may have changed across a transposition at i:
// the two swapped columns, columns modified by additions, and the previous
// owners of rows i, i+1. Rebuilds the owner entries for rows i and i+1.
void refresh_low_index(LowIndex& idx, const Decomposition& dec, int i,
                       std::vector<int> touched) {
  touched.push_back(i);
  touched.push_back(i + 1);
  idx.set(i, -1);
  idx.set(i + 1, -1);
  for (int c : touched) {
    if (c < 0) continue;
    int l = dec.r().low_uncounted(c);
    if (l != PermutableMatrix::none) idx.set(l, c);
  }
}

}  // namespace

TransposeStats transpose(Decomposition& dec, int i, LowIndex* idx) {
  require(i >= 0 && i + 1 < dec.size(), "transpose: position out of range");
  require(dec.transpose_is_face_safe(i),
          "transpose: swap would place a face after its coface (position " + std::to_string(i) +
              ")");
  PermutableMatrix& r = dec.r();
  PermutableMatrix& v = dec.v();
  TransposeStats st;

  const bool pos_i = r.column_empty(i);
  const bool pos_i1 = r.column_empty(i + 1);

  if (pos_i && pos_i1) {
    if (v.entry(i, i + 1)) {
      v.add_column(i + 1, i);
      ++st.v_adds;
    }
    // Columns paired with rows i and i+1, if any.
    int k, l;
    if (idx) {
      k = idx->owner(i);
      l = idx->owner(i + 1);
    } else {
      k = l = -1;
      for (int c = i + 1; c < dec.size(); ++c) {
        int lw = r.low_uncounted(c);
        if (lw == i) k = c;
        if (lw == i + 1) l = c;
      }
    }
    if (k != -1 && l != -1 && r.entry(i, l)) {
      dec.transpose_positions(i);
      const int a = std::min(k, l), b = std::max(k, l);
      r.add_column(b, a);
      v.add_column(b, a);
      ++st.r_adds;
      ++st.v_adds;
      if (idx) refresh_low_index(*idx, dec, i, {k, l});
      return st;
    }
    dec.transpose_positions(i);
    if (idx) refresh_low_index(*idx, dec, i, {k, l});
    return st;
  }

  if (!pos_i && !pos_i1) {
    if (v.entry(i, i + 1)) {
      const int low_i = r.low(i);
      const int low_i1 = r.low(i + 1);
      r.add_column(i + 1, i);
      v.add_column(i + 1, i);
      ++st.r_adds;
      ++st.v_adds;
      dec.transpose_positions(i);
      if (low_i > low_i1) {
        r.add_column(i + 1, i);
        v.add_column(i + 1, i);
        ++st.r_adds;
        ++st.v_adds;
      }
      if (idx) refresh_low_index(*idx, dec, i, {});
      return st;
    }
    dec.transpose_positions(i);
    if (idx) refresh_low_index(*idx, dec, i, {});
    return st;
  }

  if (!pos_i && pos_i1) {
    if (v.entry(i, i + 1)) {
      r.add_column(i + 1, i);
      v.add_column(i + 1, i);
      dec.transpose_positions(i);
      r.add_column(i + 1, i);
      v.add_column(i + 1, i);
      st.r_adds += 2;
      st.v_adds += 2;
      if (idx) refresh_low_index(*idx, dec, i, {idx->owner(i + 1)});
      return st;
    }
    dec.transpose_positions(i);
    if (idx) refresh_low_index(*idx, dec, i, {idx->owner(i + 1)});
    return st;
  }

  // pos_i && !pos_i1
  if (v.entry(i, i + 1)) {
    // col_R(i) is zero, so only V changes.
    v.add_column(i + 1, i);
    ++st.v_adds;
  }
  dec.transpose_positions(i);
  if (idx) refresh_low_index(*idx, dec, i, {idx->owner(i)});
  return st;
}

TranspositionSchedule straight_line_schedule(const Filtration& k0, const Filtration& k1) {
  const std::vector<int> q = reindex_bijection(k0, k1);
  const int m = k0.size();
  TranspositionSchedule out;
  out.m = m;

  // Kinetic bubble sort on linear position trajectories: simplex s moves from
  // position s (its k0 index) to q[s]. An inverted adjacent pair swaps at its
  // crossing time tau = num/den; comparisons are exact over integers.
  std::vector<int> cur(m);
  for (int s = 0; s < m; ++s) cur[s] = s;

  struct Event {
    long long num, den;  // crossing time
    int position;
    bool operator>(const Event& o) const {
      const long long lhs = num * o.den, rhs = o.num * den;
      if (lhs != rhs) return lhs > rhs;
      return position > o.position;
    }
  };
  std::priority_queue<Event, std::vector<Event>, std::greater<Event>> heap;

  auto crossing = [&](int p) -> std::optional<Event> {
    const int u = cur[p], w = cur[p + 1];
    if (q[u] < q[w]) return std::nullopt;  // not inverted
    const long long num = w - u;           // pos0 difference (w starts later)
    const long long den = num - (static_cast<long long>(q[w]) - q[u]);
    return Event{num, den, p};
  };

  for (int p = 0; p + 1 < m; ++p)
    if (auto e = crossing(p)) heap.push(*e);

  while (!heap.empty()) {
    Event e = heap.top();
    heap.pop();
    auto now = crossing(e.position);
    if (!now) continue;  // stale entry
    if (now->num != e.num || now->den != e.den) {
      heap.push(*now);
      continue;
    }
    std::swap(cur[e.position], cur[e.position + 1]);
    out.swaps.push_back(e.position);
    if (e.position > 0)
      if (auto left = crossing(e.position - 1)) heap.push(*left);
    if (e.position + 2 < m)
      if (auto right = crossing(e.position + 1)) heap.push(*right);
  }
  return out;
}

OpCounter run_vineyard(Decomposition& dec, const TranspositionSchedule& schedule) {
  const OpCounter before = dec.counters();
  LowIndex idx(dec);
  for (int i : schedule.swaps) transpose(dec, i, &idx);
  return dec.counters() - before;
}

void write_transpositions(std::ostream& out, const TranspositionSchedule& s) {
  out << "transpositions m=" << s.m << " count=" << s.swaps.size() << '\n';
  for (int i : s.swaps) out << (i + 1) << '\n';
}

TranspositionSchedule read_transpositions(std::istream& in) {
  std::string header;
  require(static_cast<bool>(std::getline(in, header)), "transposition file: missing header");
  TranspositionSchedule s;
  std::size_t count = 0;
  if (std::sscanf(header.c_str(), "transpositions m=%d count=%zu", &s.m, &count) != 2)
    throw input_error("transposition file: bad header");
  int i;
  while (in >> i) {
    require(i >= 1 && i < s.m, "transposition file: position out of range");
    s.swaps.push_back(i - 1);
  }
  require(s.swaps.size() == count, "transposition file: count mismatch");
  return s;
}

}  // namespace dynaph
