#include "domino/cycles.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "domino/insertion.hpp"
#include "testsupport.hpp"

using namespace domino;

namespace {

// left and right members of the rank-0 pair of (-2,1)
DominoTableau flat() {
  return DominoTableau::make(0, {make_domino(1, {1, 1}, {1, 2}),
                                 make_domino(2, {2, 1}, {2, 2})});
}
DominoTableau tall() {
  return DominoTableau::make(0, {make_domino(1, {1, 1}, {2, 1}),
                                 make_domino(2, {1, 2}, {2, 2})});
}

// smallest tableau with a closed cycle: {2,3} swaps corners in place
DominoTableau corner() {
  return DominoTableau::make(0, {make_domino(1, {1, 1}, {2, 1}),
                                 make_domino(2, {1, 2}, {1, 3}),
                                 make_domino(3, {2, 2}, {2, 3})});
}

}  // namespace

TEST_CASE("moved dominoes pivot on their fixed square") {
  CHECK(moved_domino(1, flat()) == make_domino(1, {1, 2}, {1, 3}));
  CHECK(moved_domino(2, flat()) == make_domino(2, {2, 1}, {3, 1}));
  CHECK(moved_domino(1, tall()) == make_domino(1, {2, 1}, {3, 1}));
  CHECK(moved_domino(2, tall()) == make_domino(2, {1, 2}, {1, 3}));
  CHECK_THROWS_AS(moved_domino(7, flat()), Error);
}

TEST_CASE("moved dominoes keep exactly the fixed square") {
  for (int n = 1; n <= 3; ++n)
    for (int rank : {0, 1, 2})
      for (const DominoTableau& t : testsupport::reachable_tableaux(n, rank))
        for (const Domino& d : t.dominoes()) {
          Domino moved = moved_domino(d.label, t);
          Square fixed = is_fixed_square(rank, d.first) ? d.first : d.second;
          CHECK(moved.covers(fixed));
          Square other = moved.first == fixed ? moved.second : moved.first;
          CHECK_FALSE(d.covers(other));
        }
}

TEST_CASE("cycles of the rank 0 example are singletons") {
  CHECK(cycle_through(1, flat()) == Cycle{1});
  CHECK(cycle_through(2, flat()) == Cycle{2});
  CHECK(all_cycles(flat()) == std::vector<Cycle>{{1}, {2}});
  CHECK(all_cycles(tall()) == std::vector<Cycle>{{1}, {2}});
  CHECK(all_cycles(DominoTableau::empty(2)).empty());
  CHECK_THROWS_AS(cycle_through(3, flat()), Error);
}

TEST_CASE("the corner tableau has a two-label cycle") {
  CHECK(all_cycles(corner()) == std::vector<Cycle>{{1}, {2, 3}});
  CHECK(cycle_through(3, corner()) == Cycle{2, 3});
}

TEST_CASE("cycles partition the labels") {
  for (int n = 1; n <= 3; ++n)
    for (int rank : {0, 1, 2})
      for (const DominoTableau& t : testsupport::reachable_tableaux(n, rank)) {
        std::vector<int> seen;
        for (const Cycle& c : all_cycles(t))
          seen.insert(seen.end(), c.begin(), c.end());
        std::sort(seen.begin(), seen.end());
        std::vector<int> expected(n);
        std::iota(expected.begin(), expected.end(), 1);
        CHECK(seen == expected);
      }
}

TEST_CASE("moving through replaces exactly the cycle members") {
  DominoTableau moved = move_through(flat(), {1});
  CHECK(moved.domino(1) == make_domino(1, {1, 2}, {1, 3}));
  CHECK(moved.domino(2) == flat().domino(2));
  CHECK(moved.core_extension() == std::vector<Square>{{1, 1}});
  CHECK(moved.is_standard());
  CHECK(moved.rank() == 0);
}

TEST_CASE("move_through rejects label sets that are not cycles") {
  CHECK_THROWS_AS(move_through(flat(), {1, 2}), Error);
  CHECK_THROWS_AS(move_through(flat(), {}), Error);
  CHECK_THROWS_AS(move_through(flat(), {1, 1}), Error);
  CHECK_THROWS_AS(move_through(flat(), {3}), Error);
  CHECK_THROWS_AS(move_through(corner(), {2}), Error);
}

TEST_CASE("moving through a cycle twice restores the tableau") {
  for (int n = 1; n <= 3; ++n)
    for (int rank : {0, 1, 2})
      for (const DominoTableau& t : testsupport::reachable_tableaux(n, rank))
        for (const Cycle& c : all_cycles(t)) {
          DominoTableau once = move_through(t, c);
          CHECK(cycle_through(c.front(), once) == c);
          CHECK(move_through(once, c) == t);
        }
}

TEST_CASE("classification separates open and closed cycles") {
  CycleClass c1 = classify_cycle(flat(), {1});
  CHECK(c1.kind == CycleKind::open);
  CHECK(c1.back == Square{1, 1});
  CHECK(c1.front == Square{1, 3});
  CycleClass c2 = classify_cycle(flat(), {2});
  CHECK(c2.kind == CycleKind::open);
  CHECK(c2.back == Square{2, 2});
  CHECK(c2.front == Square{3, 1});
  CycleClass d1 = classify_cycle(tall(), {1});
  CHECK(d1.back == Square{1, 1});
  CHECK(d1.front == Square{3, 1});
  CycleClass d2 = classify_cycle(tall(), {2});
  CHECK(d2.back == Square{2, 2});
  CHECK(d2.front == Square{1, 3});

  CycleClass closed = classify_cycle(corner(), {2, 3});
  CHECK(closed.kind == CycleKind::closed);
  CHECK_FALSE(closed.back.has_value());
  CHECK_FALSE(closed.front.has_value());
}

TEST_CASE("open cycles move one square, closed cycles none") {
  for (int n = 1; n <= 3; ++n)
    for (int rank : {0, 1, 2})
      for (const DominoTableau& t : testsupport::reachable_tableaux(n, rank))
        for (const Cycle& c : all_cycles(t)) {
          CycleClass cls = classify_cycle(t, c);
          if (cls.kind == CycleKind::open) {
            CHECK(cls.back.has_value());
            CHECK(cls.front.has_value());
            CHECK(t.covers(*cls.back));
            CHECK_FALSE(t.covers(*cls.front));
          } else {
            CHECK(move_through(t, c).covered_squares() == t.covered_squares());
          }
        }
}

TEST_CASE("move_through_set applies whole cycle sets") {
  DominoTableau both = move_through_set(flat(), {{1}, {2}});
  CHECK(both.domino(1) == make_domino(1, {1, 2}, {1, 3}));
  CHECK(both.domino(2) == make_domino(2, {2, 1}, {3, 1}));
  CHECK(move_through_set(flat(), {}) == flat());
  CHECK_THROWS_AS(move_through_set(flat(), {{1, 2}}), Error);
  CHECK_THROWS_AS(move_through_set(flat(), {{1}, {1}}), Error);
}

TEST_CASE("moving through cycle subsets is order independent") {
  for (int n = 1; n <= 3; ++n)
    for (int rank : {0, 1})
      for (const DominoTableau& t : testsupport::reachable_tableaux(n, rank)) {
        std::vector<Cycle> cycles = all_cycles(t);
        int count = static_cast<int>(cycles.size());
        for (int mask = 0; mask < (1 << count); ++mask) {
          std::vector<Cycle> subset;
          for (int b = 0; b < count; ++b)
            if (mask & (1 << b)) subset.push_back(cycles[b]);
          DominoTableau reference = move_through_set(t, subset);
          std::sort(subset.begin(), subset.end());
          do {
            DominoTableau sequential = t;
            for (const Cycle& c : subset)
              sequential = move_through(sequential, c);
            CHECK(sequential == reference);
          } while (std::next_permutation(subset.begin(), subset.end()));
        }
      }
}

TEST_CASE("delta squares and delta cycles of the examples") {
  CHECK(delta_cycles(flat()) == std::vector<Cycle>{{1}});
  CHECK(delta_cycles(tall()) == std::vector<Cycle>{{1}});
  CHECK(delta_cycles(DominoTableau::empty(4)).empty());

  DominoTableau t4 = validate_tableau(
      2, {make_domino(1, {1, 3}, {1, 4}), make_domino(2, {2, 2}, {2, 3}),
          make_domino(3, {3, 1}, {4, 1}), make_domino(4, {3, 2}, {3, 3})});
  CHECK(all_cycles(t4) == std::vector<Cycle>{{1}, {2}, {3}, {4}});
  CHECK(delta_cycles(t4) == std::vector<Cycle>{{1}, {2}, {3}});
}

TEST_CASE("moving through the delta cycles clears the diagonal") {
  for (int n = 1; n <= 3; ++n)
    for (int rank : {0, 1, 2})
      for (const DominoTableau& t : testsupport::reachable_tableaux(n, rank)) {
        for (const Cycle& c : delta_cycles(t))
          CHECK(classify_cycle(t, c).kind == CycleKind::open);
        DominoTableau cleared = move_through_set(t, delta_cycles(t));
        CHECK(cleared.delta_squares().empty());
      }
}
