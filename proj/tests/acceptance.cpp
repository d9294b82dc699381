// Acceptance suite: one line per criterion, nonzero exit when any fails.
// Criteria mix frozen worked examples with exhaustive checks over whole
// hyperoctahedral groups at desk scale.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "domino/cli.hpp"
#include "domino/io.hpp"
#include "domino/rankmaps.hpp"
#include "testsupport.hpp"

using namespace domino;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
};

void fail(Outcome& outcome, const std::string& message) {
  outcome.passed = false;
  if (outcome.detail.empty()) outcome.detail = message;
}

std::string show(const SignedPermutation& sigma) {
  return "window '" + format_window(sigma) + "'";
}

DominoTableau tab(int rank, const std::vector<Domino>& dominoes) {
  return validate_tableau(rank, dominoes);
}

// The four stages of inserting 2 -4 -3 1 at rank 2, frozen.
TableauPair ladder_stage(int k) {
  std::vector<std::vector<Domino>> lefts = {
      {make_domino(2, {1, 3}, {1, 4})},
      {make_domino(2, {1, 3}, {1, 4}), make_domino(4, {3, 1}, {4, 1})},
      {make_domino(2, {1, 3}, {1, 4}), make_domino(3, {3, 1}, {4, 1}),
       make_domino(4, {2, 2}, {3, 2})},
      {make_domino(1, {1, 3}, {1, 4}), make_domino(2, {2, 2}, {2, 3}),
       make_domino(3, {3, 1}, {4, 1}), make_domino(4, {3, 2}, {3, 3})}};
  std::vector<std::vector<Domino>> rights = {
      {make_domino(1, {1, 3}, {1, 4})},
      {make_domino(1, {1, 3}, {1, 4}), make_domino(2, {3, 1}, {4, 1})},
      {make_domino(1, {1, 3}, {1, 4}), make_domino(2, {3, 1}, {4, 1}),
       make_domino(3, {2, 2}, {3, 2})},
      {make_domino(1, {1, 3}, {1, 4}), make_domino(2, {3, 1}, {4, 1}),
       make_domino(3, {2, 2}, {3, 2}), make_domino(4, {2, 3}, {3, 3})}};
  // staged left members carry the original values as labels, so they are
  // standard only at the final stage
  return TableauPair(DominoTableau::make(2, lefts[k - 1]),
                     tab(2, rights[k - 1]));
}

Outcome criterion_worked_insertion() {
  Outcome outcome;
  std::istringstream in;
  std::ostringstream out, err;
  int status = run({"rs", "--rank", "2", "2 -4 -3 1"}, in, out, err);
  if (status != 0) fail(outcome, "CLI exited with " + std::to_string(status));
  std::string expected =
      "left:\n0 0 1 1\n0 2 2\n3 4 4\n3\nright:\n0 0 1 1\n0 3 4\n2 3 4\n2\n";
  if (out.str() != expected) fail(outcome, "CLI output differs");

  SignedPermutation sigma = SignedPermutation::from_window({2, -4, -3, 1});
  for (int k = 1; k <= 4; ++k)
    if (rs_partial(sigma, 2, k) != ladder_stage(k))
      fail(outcome, "stage " + std::to_string(k) + " differs");
  if (robinson_schensted(sigma, 2) != ladder_stage(4))
    fail(outcome, "full insertion differs from stage 4");
  return outcome;
}

Outcome criterion_worked_mmt() {
  Outcome outcome;
  SignedPermutation sigma = SignedPermutation::from_window({-2, 1});
  TableauPair pair = robinson_schensted(sigma, 0);

  DominoTableau left = tab(0, {make_domino(1, {1, 1}, {1, 2}),
                               make_domino(2, {2, 1}, {2, 2})});
  DominoTableau right = tab(0, {make_domino(1, {1, 1}, {2, 1}),
                                make_domino(2, {1, 2}, {2, 2})});
  if (pair != TableauPair(left, right)) fail(outcome, "rank-0 pair differs");

  std::vector<Cycle> singletons = {{1}, {2}};
  if (all_cycles(left) != singletons) fail(outcome, "left cycles differ");
  if (all_cycles(right) != singletons) fail(outcome, "right cycles differ");
  if (delta_cycles(left) != std::vector<Cycle>{{1}})
    fail(outcome, "left diagonal cycles differ");
  if (delta_cycles(right) != std::vector<Cycle>{{1}})
    fail(outcome, "right diagonal cycles differ");

  std::vector<ExtendedCyclePair> joined = gamma(pair);
  if (joined.size() != 1 || joined[0].in_left != singletons ||
      joined[0].in_right != singletons)
    fail(outcome, "gamma does not join all cycles");

  DominoTableau lifted_left = tab(1, {make_domino(1, {1, 2}, {1, 3}),
                                      make_domino(2, {2, 1}, {3, 1})});
  DominoTableau lifted_right = tab(1, {make_domino(1, {2, 1}, {3, 1}),
                                       make_domino(2, {1, 2}, {1, 3})});
  TableauPair lifted(lifted_left, lifted_right);
  if (mmt(pair) != lifted) fail(outcome, "mmt output differs");
  if (robinson_schensted(sigma, 1) != lifted)
    fail(outcome, "rank-1 insertion differs");
  return outcome;
}

Outcome criterion_rank_relation() {
  Outcome outcome;
  std::uint64_t total = 0;
  std::uint64_t expected = 0;
  for (int n = 0; n <= 5; ++n) {
    expected += HyperoctahedralGroup(n).order() * 5;
    for (int rank = 0; rank <= 4; ++rank) {
      VerificationReport report = verify_all(n, rank, 1);
      total += report.checked;
      if (!report.ok())
        fail(outcome, "n=" + std::to_string(n) +
                          " rank=" + std::to_string(rank) + ": " +
                          show(report.failures.front().sigma) + ": " +
                          report.failures.front().mismatch);
    }
  }
  if (total != expected)
    fail(outcome, "ran " + std::to_string(total) + " checks, expected " +
                      std::to_string(expected));
  return outcome;
}

Outcome criterion_bijectivity() {
  Outcome outcome;
  for (int n = 0; n <= 4; ++n) {
    HyperoctahedralGroup group(n);
    for (int rank = 0; rank <= 3; ++rank) {
      std::set<std::pair<DominoTableau, DominoTableau>> image;
      for (std::uint64_t index = 0; index < group.order(); ++index) {
        TableauPair pair = robinson_schensted(group.element(index), rank);
        image.emplace(pair.left(), pair.right());
      }
      std::string where =
          " at n=" + std::to_string(n) + " rank=" + std::to_string(rank);
      if (image.size() != group.order()) {
        fail(outcome, "not injective" + where);
        continue;
      }

      std::map<Shape, std::vector<DominoTableau>> by_shape;
      for (const DominoTableau& tableau :
           testsupport::standard_tableaux(n, rank))
        by_shape[tableau.shape()].push_back(tableau);
      std::set<std::pair<DominoTableau, DominoTableau>> expected;
      for (const auto& [shape, members] : by_shape)
        for (const DominoTableau& a : members)
          for (const DominoTableau& b : members) expected.emplace(a, b);
      if (image != expected)
        fail(outcome, "image is not every same-shape pair" + where);
    }
  }
  return outcome;
}

Outcome criterion_inverse_symmetry() {
  Outcome outcome;
  for (int n = 0; n <= 5; ++n) {
    HyperoctahedralGroup group(n);
    for (std::uint64_t index = 0; index < group.order(); ++index) {
      SignedPermutation sigma = group.element(index);
      SignedPermutation inverse = sigma.inverse();
      for (int rank = 0; rank <= 4; ++rank) {
        TableauPair pair = robinson_schensted(sigma, rank);
        TableauPair swapped(pair.right(), pair.left());
        if (robinson_schensted(inverse, rank) != swapped) {
          fail(outcome, show(sigma) + " rank " + std::to_string(rank));
          break;
        }
        if (sigma.is_involution() && pair.left() != pair.right()) {
          fail(outcome, show(sigma) + " is an involution but left != right");
          break;
        }
      }
    }
  }
  return outcome;
}

Outcome criterion_round_trip() {
  Outcome outcome;
  for (int n = 0; n <= 5; ++n) {
    HyperoctahedralGroup group(n);
    for (std::uint64_t index = 0; index < group.order(); ++index) {
      SignedPermutation sigma = group.element(index);
      for (int rank = 0; rank <= 4; ++rank)
        if (rs_inverse(robinson_schensted(sigma, rank)) != sigma) {
          fail(outcome, show(sigma) + " rank " + std::to_string(rank));
          break;
        }
    }
  }
  return outcome;
}

Outcome criterion_moving_through() {
  Outcome outcome;
  for (int rank = 0; rank <= 3 && outcome.passed; ++rank) {
    for (const DominoTableau& tableau : testsupport::reachable_tableaux(4, rank)) {
      std::string where = " in a rank-" + std::to_string(rank) + " tableau";

      // (a) a domino and its alternate position share exactly the fixed square
      for (int label : tableau.labels()) {
        const Domino& original = tableau.domino(label);
        Domino moved = moved_domino(label, tableau);
        std::vector<Square> shared;
        for (Square s : {original.first, original.second})
          if (moved.covers(s)) shared.push_back(s);
        if (shared.size() != 1 || !is_fixed_square(rank, shared[0]))
          fail(outcome, "domino " + std::to_string(label) +
                            " does not pivot on its fixed square" + where);
      }

      // (b) the cycles partition the labels
      std::vector<Cycle> cycles = all_cycles(tableau);
      std::vector<int> collected;
      for (const Cycle& c : cycles) collected.insert(collected.end(), c.begin(), c.end());
      std::sort(collected.begin(), collected.end());
      if (collected != tableau.labels())
        fail(outcome, "cycles do not partition the labels" + where);

      for (const Cycle& c : cycles) {
        // (c) moving through keeps the tableau valid, standard and same-rank
        DominoTableau moved = move_through(tableau, c);
        if (moved.rank() != rank || !moved.is_standard() ||
            moved.labels() != tableau.labels())
          fail(outcome, "moving through broke the tableau" + where);

        // (e) square accounting by cycle class
        CycleClass cls = classify_cycle(tableau, c);
        std::set<Square> before = tableau.covered_squares();
        std::set<Square> after = moved.covered_squares();
        std::vector<Square> vacated, added;
        std::set_difference(before.begin(), before.end(), after.begin(),
                            after.end(), std::back_inserter(vacated));
        std::set_difference(after.begin(), after.end(), before.begin(),
                            before.end(), std::back_inserter(added));
        bool balanced =
            cls.kind == CycleKind::closed
                ? vacated.empty() && added.empty()
                : vacated.size() == 1 && added.size() == 1 &&
                      vacated[0] == *cls.back && added[0] == *cls.front;
        if (!balanced) fail(outcome, "square accounting is off" + where);
      }

      // (d) moving through a set of cycles is order independent
      int count = static_cast<int>(cycles.size());
      for (int mask = 0; mask < (1 << count); ++mask) {
        std::vector<Cycle> subset;
        for (int i = 0; i < count; ++i)
          if (mask & (1 << i)) subset.push_back(cycles[i]);
        DominoTableau reference = move_through_set(tableau, subset);
        std::vector<int> order(subset.size());
        std::iota(order.begin(), order.end(), 0);
        do {
          DominoTableau stepped = tableau;
          for (int i : order) stepped = move_through(stepped, subset[i]);
          if (stepped != reference) {
            fail(outcome, "cycle order changed the result" + where);
            break;
          }
        } while (std::next_permutation(order.begin(), order.end()));
      }
      if (!outcome.passed) break;
    }
  }
  return outcome;
}

Outcome criterion_involutions() {
  Outcome outcome;
  for (int n = 0; n <= 5; ++n) {
    for (const SignedPermutation& sigma : testsupport::involutions(n)) {
      for (int rank = 0; rank <= 4; ++rank) {
        TableauPair pair = robinson_schensted(sigma, rank);
        std::string where = show(sigma) + " rank " + std::to_string(rank);
        if (pair.left() != pair.right()) {
          fail(outcome, where + ": pair members differ");
          continue;
        }
        DominoTableau stepped = t_step(pair.left());
        if (stepped != robinson_schensted(sigma, rank + 1).left())
          fail(outcome, where + ": t_step misses the next rank");
        if (mmt(pair) != TableauPair(stepped, stepped))
          fail(outcome, where + ": mmt differs from the doubled t_step");

        for (const ExtendedCyclePair& component :
             correspondence_components(pair)) {
          bool lone_closed =
              component.in_left.size() + component.in_right.size() == 1;
          bool mirrored_open = component.in_left.size() == 1 &&
                               component.in_left == component.in_right;
          if (!lone_closed && !mirrored_open)
            fail(outcome, where + ": an extended cycle holds several cycles");
        }
      }
    }
  }
  return outcome;
}

Outcome criterion_stabilization() {
  Outcome outcome;
  std::string report = "ranks:";
  for (int n = 0; n <= 4; ++n) {
    std::optional<int> rank = stabilization_rank(n);
    report += " n=" + std::to_string(n) + "->" +
              (rank ? std::to_string(*rank) : std::string("none"));
    if (!rank) {
      outcome.passed = false;
      continue;
    }
    if (*rank > 2 * n) outcome.passed = false;

    // beyond the found rank, consecutive-rank left tableaux must agree
    HyperoctahedralGroup group(n);
    for (int r = *rank; r <= 2 * n; ++r)
      for (std::uint64_t index = 0; index < group.order(); ++index) {
        SignedPermutation sigma = group.element(index);
        if (robinson_schensted(sigma, r).left().dominoes() !=
            robinson_schensted(sigma, r + 1).left().dominoes())
          outcome.passed = false;
      }
  }
  outcome.detail = report;
  if (!outcome.passed)
    outcome.detail +=
        " ; no rank at or below 2n clears gamma for n >= 1: every nonempty"
        " tableau keeps a domino on the diagonal next to the core";
  return outcome;
}

Outcome criterion_serialization() {
  Outcome outcome;
  for (int n = 0; n <= 5; ++n)
    for (int rank = 0; rank <= 4; ++rank)
      for (const DominoTableau& tableau :
           testsupport::reachable_tableaux(n, rank)) {
        nlohmann::json doc = nlohmann::json::parse(serialize(tableau).dump());
        if (deserialize_tableau(doc) != tableau) {
          fail(outcome, "round trip changed a tableau at n=" +
                            std::to_string(n) + " rank=" + std::to_string(rank));
          break;
        }
      }

  SignedPermutation sigma = SignedPermutation::from_window({2, -4, -3, 1});
  SignedPermutation small = SignedPermutation::from_window({-2, 1});
  std::vector<std::pair<std::string, DominoTableau>> goldens;
  for (int k = 1; k <= 4; ++k) {
    TableauPair stage = rs_partial(sigma, 2, k);
    goldens.emplace_back("rank2_T" + std::to_string(k) + ".txt", stage.left());
    goldens.emplace_back("rank2_S" + std::to_string(k) + ".txt", stage.right());
  }
  TableauPair flat = robinson_schensted(small, 0);
  TableauPair lifted = robinson_schensted(small, 1);
  goldens.emplace_back("rank0_T.txt", flat.left());
  goldens.emplace_back("rank0_S.txt", flat.right());
  goldens.emplace_back("rank1_T.txt", lifted.left());
  goldens.emplace_back("rank1_S.txt", lifted.right());

  for (const auto& [name, tableau] : goldens) {
    std::ifstream file(std::string(FIXTURES_DIR) + "/" + name,
                       std::ios::binary);
    if (!file) {
      fail(outcome, "missing golden file " + name);
      continue;
    }
    std::ostringstream content;
    content << file.rdbuf();
    if (render_ascii(tableau).str() != content.str())
      fail(outcome, "render differs from " + name);
  }
  return outcome;
}

struct Criterion {
  int number;
  double budget_seconds;
  Outcome (*body)();
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, 1.0, criterion_worked_insertion},
      {2, 1.0, criterion_worked_mmt},
      {3, 60.0, criterion_rank_relation},
      {4, 30.0, criterion_bijectivity},
      {5, 60.0, criterion_inverse_symmetry},
      {6, 60.0, criterion_round_trip},
      {7, 120.0, criterion_moving_through},
      {8, 30.0, criterion_involutions},
      {9, 30.0, criterion_stabilization},
      {10, 10.0, criterion_serialization},
  };

  bool all_passed = true;
  for (const Criterion& criterion : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = criterion.body();
    } catch (const std::exception& e) {
      outcome.passed = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (elapsed > criterion.budget_seconds) {
      outcome.passed = false;
      std::string over = "exceeded the " +
                         std::to_string(criterion.budget_seconds) +
                         "s budget";
      outcome.detail = outcome.detail.empty() ? over
                                              : outcome.detail + " ; " + over;
    }
    all_passed = all_passed && outcome.passed;
    std::printf("criterion %d: %s (%.2fs)%s%s\n", criterion.number,
                outcome.passed ? "PASS" : "FAIL", elapsed,
                outcome.detail.empty() ? "" : " ", outcome.detail.c_str());
    std::fflush(stdout);
  }
  return all_passed ? 0 : 1;
}
