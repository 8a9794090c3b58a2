#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dynaph/moves.hpp"
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

TEST_CASE("moving edge a to the position of c costs 2 ops per matrix, vineyards 4") {
  // the move
  Decomposition dec = reduce_filtration(triangle_filtration());
  const OpCounter r0 = dec.r().counter(), v0 = dec.v().counter();
  MoveStats st = move_right(dec, 3, 5);
  CHECK(st.adds == 2);
  CHECK(dec.r().counter().col_ops - r0.col_ops == 2);
  CHECK(dec.v().counter().col_ops - v0.col_ops == 2);
  CHECK(validate(dec));
  CHECK(extract_pairs(dec) == oracle::fresh_pairs(dec));

  // the equivalent vineyard path: (3,4) then (4,5)
  Decomposition vy = reduce_filtration(triangle_filtration());
  const OpCounter vr0 = vy.r().counter(), vv0 = vy.v().counter();
  transpose(vy, 3);
  transpose(vy, 4);
  CHECK(vy.r().counter().col_ops - vr0.col_ops == 4);
  CHECK(vy.v().counter().col_ops - vv0.col_ops == 4);
  CHECK(validate(vy));
  // both routes land on the same filtration order and the same pairs
  CHECK(extract_pairs(vy) == extract_pairs(dec));
}

TEST_CASE("donor column ends empty in the worked example") {
  // after the a -> c move the relocated column is the empty donor
  Decomposition dec = reduce_filtration(triangle_filtration());
  move_right(dec, 3, 5);
  CHECK(dec.r().column_positions(5).empty());
}

TEST_CASE("non-interacting adjacent move is a pure permutation") {
  Decomposition dec = reduce_filtration(triangle_filtration());
  const OpCounter before = dec.counters();
  MoveStats st = move_right(dec, 0, 1);  // u past v: V[0,1] = 0, no pairs involved
  CHECK(st.adds == 0);
  CHECK(dec.counters().col_ops == before.col_ops);
  CHECK(validate(dec));
}

TEST_CASE("face-order violating moves are rejected pre-mutation") {
  Decomposition dec = reduce_filtration(triangle_filtration());
  Decomposition copy = dec;
  CHECK_THROWS_AS(move_right(dec, 2, 4), input_error);  // w past its cofaces a, b
  CHECK_THROWS_AS(move_left(dec, 3, 2), input_error);   // a before its vertex w
  CHECK(dec.r().equal_content(copy.r()));
  CHECK(dec.v().equal_content(copy.v()));
}

TEST_CASE("move_left inverts the worked example and restores the original pairs") {
  Decomposition dec = reduce_filtration(triangle_filtration());
  const PersistenceDiagram original = extract_pairs(dec);
  move_right(dec, 3, 5);
  move_left(dec, 5, 3);
  CHECK(validate(dec));
  CHECK(extract_pairs(dec) == original);
  // the filtration order as a whole returns to the identity
  for (int pos = 0; pos < dec.size(); ++pos) CHECK(dec.orig_at(pos) == pos);
}

TEST_CASE("move_left by one position matches the transposition outcome") {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 50; ++trial) {
    Filtration f = oracle::random_filtration(rng);
    Decomposition a = reduce_filtration(f);
    Decomposition b = a;
    const int i = 1 + static_cast<int>(rng() % (f.size() - 1));
    if (!a.transpose_is_face_safe(i - 1)) continue;
    move_left(a, i, i - 1);
    transpose(b, i - 1);
    CHECK(validate(a));
    CHECK(extract_pairs(a) == extract_pairs(b));
  }
}

TEST_CASE("randomized moves: validity, oracle pairs, and the 2|i-j| budget") {
  std::mt19937_64 rng(202);
  int done = 0;
  while (done < 400) {
    Filtration f = oracle::random_filtration(rng);
    Decomposition dec = reduce_filtration(f);
    for (int step = 0; step < 20 && done < 400; ++step) {
      auto mv = oracle::random_valid_move(dec, rng);
      if (!mv) break;
      const auto [i, j] = *mv;
      const OpCounter r0 = dec.r().counter();
      MoveStats st = i < j ? move_right(dec, i, j) : move_left(dec, i, j);
      const int width = std::abs(i - j);
      CHECK(st.adds <= 2 * width);
      CHECK(dec.r().counter().col_ops - r0.col_ops == static_cast<std::uint64_t>(st.adds));
      REQUIRE(validate(dec));
      REQUIRE(extract_pairs(dec) == oracle::fresh_pairs(dec));
      ++done;
    }
  }
}

TEST_CASE("donor_trace predicts the realized cost exactly") {
  std::mt19937_64 rng(303);
  int done = 0;
  while (done < 300) {
    Filtration f = oracle::random_filtration(rng);
    Decomposition dec = reduce_filtration(f);
    for (int step = 0; step < 15 && done < 300; ++step) {
      auto mv = oracle::random_valid_move(dec, rng);
      if (!mv) break;
      const auto [i, j] = *mv;
      const int predicted = donor_trace(dec, i, j);
      MoveStats st = i < j ? move_right(dec, i, j) : move_left(dec, i, j);
      CHECK(predicted == st.adds);
      ++done;
    }
  }
}

TEST_CASE("creator/destroyer status outside the moved interval never changes") {
  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 60; ++trial) {
    Filtration f = oracle::random_filtration(rng);
    Decomposition dec = reduce_filtration(f);
    auto mv = oracle::random_valid_move(dec, rng);
    if (!mv) continue;
    const auto [i, j] = *mv;
    const int lo = std::min(i, j), hi = std::max(i, j);
    // status by original simplex id, before and after
    std::vector<char> before(dec.size());
    for (int pos = 0; pos < dec.size(); ++pos)
      before[dec.orig_at(pos)] = dec.r().column_positions(pos).empty() ? 1 : 0;
    if (i < j)
      move_right(dec, i, j);
    else
      move_left(dec, i, j);
    for (int pos = 0; pos < dec.size(); ++pos) {
      if (pos >= lo && pos <= hi) continue;
      const char now = dec.r().column_positions(pos).empty() ? 1 : 0;
      CHECK(now == before[dec.orig_at(pos)]);
    }
  }
}

TEST_CASE("donor_trace of a zero-interaction move is 0 and does not mutate") {
  Decomposition dec = reduce_filtration(triangle_filtration());
  Decomposition copy = dec;
  CHECK(donor_trace(dec, 0, 1) == 0);
  CHECK(dec.r().equal_content(copy.r()));
  CHECK(dec.v().equal_content(copy.v()));
}
