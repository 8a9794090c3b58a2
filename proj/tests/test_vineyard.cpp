#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "dynaph/schedule.hpp"
#include "dynaph/vineyard.hpp"
#include "oracles.hpp"

using namespace dynaph;

namespace {

Filtration triangle_filtration() {
  std::vector<Simplex> ss{{0}, {1}, {2}, {0, 2}, {1, 2}, {0, 1}};
  std::vector<double> gg{0, 0, 0, 1, 1, 1};
  return Filtration(std::move(ss), std::move(gg));
}

Decomposition reduce_filtration(const Filtration& f) {
  std::vector<int> dims(f.size());
  for (int k = 0; k < f.size(); ++k) dims[k] = f.dimension(k);
  return reduce(boundary_matrix(f), dims);
}

}  // namespace

TEST_CASE("exchanging a and b costs one pre- and one post-permutation op each") {
  Decomposition dec = reduce_filtration(triangle_filtration());
  const OpCounter r0 = dec.r().counter(), v0 = dec.v().counter();
  TransposeStats st = transpose(dec, 3);
  CHECK(st.r_adds == 2);
  CHECK(st.v_adds == 2);
  CHECK(dec.r().counter().col_ops - r0.col_ops == 2);
  CHECK(dec.v().counter().col_ops - v0.col_ops == 2);
  CHECK(validate(dec));
  CHECK(extract_pairs(dec) == oracle::fresh_pairs(dec));
}

TEST_CASE("no-interaction swap is a pure permutation") {
  // two far-apart vertices at the front of the triangle filtration
  Decomposition dec = reduce_filtration(triangle_filtration());
  const OpCounter before = dec.counters();
  TransposeStats st = transpose(dec, 0);  // u, v both positive, V[0,1] = 0
  CHECK(st.r_adds == 0);
  CHECK(st.v_adds == 0);
  CHECK(dec.counters().col_ops == before.col_ops);
  CHECK(validate(dec));
}

TEST_CASE("face-order violating swap is rejected before mutation") {
  Decomposition dec = reduce_filtration(triangle_filtration());
  // position 2 is w, position 3 is a = (u, w): swapping would break face order
  Decomposition copy = dec;
  CHECK_THROWS_AS(transpose(dec, 2), input_error);
  CHECK(dec.r().equal_content(copy.r()));
  CHECK(dec.v().equal_content(copy.v()));
}

TEST_CASE("1000 random valid swaps keep the decomposition valid and oracle-exact") {
  std::mt19937_64 rng(101);
  int swaps_done = 0;
  while (swaps_done < 1000) {
    Filtration f = oracle::random_filtration(rng);
    Decomposition dec = reduce_filtration(f);
    LowIndex idx(dec);
    for (int step = 0; step < 40 && swaps_done < 1000; ++step) {
      const int i = static_cast<int>(rng() % (dec.size() - 1));
      if (!dec.transpose_is_face_safe(i)) continue;
      TransposeStats st = transpose(dec, i, &idx);
      CHECK(st.r_adds <= 2);
      CHECK(st.v_adds <= 2);
      REQUIRE(validate(dec));
      REQUIRE(extract_pairs(dec) == oracle::fresh_pairs(dec));
      ++swaps_done;
    }
  }
}

TEST_CASE("straight-line schedule between identical filtrations is empty") {
  Filtration f = triangle_filtration();
  TranspositionSchedule s = straight_line_schedule(f, f);
  CHECK(s.swaps.empty());
}

TEST_CASE("reversing the order yields m(m-1)/2 transpositions") {
  std::vector<Simplex> fwd{{0}, {1}, {2}, {3}, {4}};
  std::vector<Simplex> rev{{4}, {3}, {2}, {1}, {0}};
  Filtration k0(fwd, {1, 2, 3, 4, 5});
  Filtration k1(rev, {1, 2, 3, 4, 5});
  TranspositionSchedule s = straight_line_schedule(k0, k1);
  CHECK(static_cast<int>(s.swaps.size()) == 5 * 4 / 2);
}

TEST_CASE("schedule length equals the Kendall distance of the reindexing") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    Filtration a = oracle::random_filtration(rng);
    Filtration b = oracle::random_regrade(a, rng);
    TranspositionSchedule s = straight_line_schedule(a, b);
    Permutation w(reindex_bijection(a, b));
    CHECK(static_cast<std::int64_t>(s.swaps.size()) ==
          kendall_distance(Permutation::identity(a.size()), w));
  }
}

TEST_CASE("applying the schedule to one order yields the other") {
  std::mt19937_64 rng(77);
  Filtration a = oracle::random_filtration(rng);
  Filtration b = oracle::random_regrade(a, rng);
  TranspositionSchedule s = straight_line_schedule(a, b);
  std::vector<int> order(a.size());
  for (int k = 0; k < a.size(); ++k) order[k] = k;
  for (int i : s.swaps) std::swap(order[i], order[i + 1]);
  const std::vector<int> q = reindex_bijection(a, b);
  for (int pos = 0; pos < a.size(); ++pos) CHECK(q[order[pos]] == pos);
}

TEST_CASE("run_vineyard stays valid across a whole homotopy and reaches the target") {
  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 10; ++trial) {
    Filtration a = oracle::random_filtration(rng);
    Filtration b = oracle::random_regrade(a, rng);
    Decomposition dec = reduce_filtration(a);
    TranspositionSchedule s = straight_line_schedule(a, b);
    run_vineyard(dec, s);
    CHECK(validate(dec));
    CHECK(extract_pairs(dec) == oracle::fresh_pairs(dec));
  }
}

TEST_CASE("empty schedule leaves the decomposition and counters unchanged") {
  Decomposition dec = reduce_filtration(triangle_filtration());
  const OpCounter before = dec.counters();
  OpCounter delta = run_vineyard(dec, TranspositionSchedule{6, {}});
  CHECK(delta.col_ops == 0);
  CHECK(dec.counters().col_ops == before.col_ops);
}

TEST_CASE("transposition dump round trip") {
  TranspositionSchedule s{6, {0, 3, 2, 2}};
  std::ostringstream os;
  write_transpositions(os, s);
  CHECK(os.str().rfind("transpositions m=6 count=4", 0) == 0);
  std::istringstream is(os.str());
  TranspositionSchedule back = read_transpositions(is);
  CHECK(back.m == s.m);
  CHECK(back.swaps == s.swaps);
}
