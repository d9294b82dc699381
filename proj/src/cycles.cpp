#include "domino/cycles.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

namespace domino {

namespace {

// Disjoint set forest over domino indices.
class UnionFind {
 public:
  explicit UnionFind(std::size_t size) : parent_(size) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void merge(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

bool squares_overlap(const Domino& a, const Domino& b) {
  return a.first == b.first || a.first == b.second || a.second == b.first ||
         a.second == b.second;
}

Cycle normalized_cycle(const Cycle& cycle, const DominoTableau& tableau) {
  if (cycle.empty()) throw Error("cycle must not be empty");
  Cycle c = cycle;
  std::sort(c.begin(), c.end());
  if (std::adjacent_find(c.begin(), c.end()) != c.end())
    throw Error("cycle contains a repeated label");
  for (int label : c)
    if (!tableau.has_label(label))
      throw Error("label " + std::to_string(label) +
                  " does not occur in the tableau");
  return c;
}

}  // namespace

Domino moved_domino(int label, const DominoTableau& tableau) {
  const Domino& d = tableau.domino(label);
  bool first_fixed = is_fixed_square(tableau.rank(), d.first);
  bool second_fixed = is_fixed_square(tableau.rank(), d.second);
  if (first_fixed == second_fixed)
    throw Error("internal: domino must cover exactly one fixed square");
  Square fixed = first_fixed ? d.first : d.second;
  Square other = first_fixed ? d.second : d.first;
  int i = fixed.row;
  int j = fixed.col;
  ExtendedLabel k = ExtendedLabel::finite(label);

  Square target;
  if (other == Square{i + 1, j} || other == Square{i, j - 1}) {
    // The variable square lies below or to the left of the fixed one.
    ExtendedLabel corner = tableau.label_at(i - 1, j + 1);
    if (corner == k)
      throw Error("internal: degenerate comparison in moved_domino");
    target = k < corner ? Square{i - 1, j} : Square{i, j + 1};
  } else if (other == Square{i - 1, j} || other == Square{i, j + 1}) {
    ExtendedLabel corner = tableau.label_at(i + 1, j - 1);
    if (corner == k)
      throw Error("internal: degenerate comparison in moved_domino");
    target = k < corner ? Square{i, j - 1} : Square{i + 1, j};
  } else {
    throw Error("internal: malformed domino");
  }
  return make_domino(label, fixed, target);
}

Cycle cycle_through(int label, const DominoTableau& tableau) {
  if (!tableau.has_label(label))
    throw Error("label " + std::to_string(label) +
                " does not occur in the tableau");
  for (const Cycle& c : all_cycles(tableau))
    if (std::binary_search(c.begin(), c.end(), label)) return c;
  throw Error("internal: label missing from the cycle decomposition");
}

std::vector<Cycle> all_cycles(const DominoTableau& tableau) {
  const std::vector<Domino>& dominoes = tableau.dominoes();
  std::size_t n = dominoes.size();
  std::vector<Domino> moved;
  moved.reserve(n);
  for (const Domino& d : dominoes) moved.push_back(moved_domino(d.label, tableau));

  UnionFind components(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b) continue;
      if (squares_overlap(dominoes[a], moved[b]) ||
          squares_overlap(moved[a], dominoes[b]))
        components.merge(a, b);
    }

  std::map<std::size_t, Cycle> grouped;
  for (std::size_t a = 0; a < n; ++a)
    grouped[components.find(a)].push_back(dominoes[a].label);
  std::vector<Cycle> cycles;
  cycles.reserve(grouped.size());
  for (auto& [root, labels] : grouped) {
    std::sort(labels.begin(), labels.end());
    cycles.push_back(std::move(labels));
  }
  std::sort(cycles.begin(), cycles.end(),
            [](const Cycle& a, const Cycle& b) { return a.front() < b.front(); });
  return cycles;
}

DominoTableau move_through(const DominoTableau& tableau, const Cycle& cycle) {
  Cycle c = normalized_cycle(cycle, tableau);
  if (cycle_through(c.front(), tableau) != c)
    throw Error("label set is not a cycle of the tableau");

  std::vector<Domino> dominoes;
  dominoes.reserve(tableau.size());
  for (const Domino& d : tableau.dominoes()) {
    if (std::binary_search(c.begin(), c.end(), d.label))
      dominoes.push_back(moved_domino(d.label, tableau));
    else
      dominoes.push_back(d);
  }
  return DominoTableau::make(tableau.rank(), dominoes,
                             DominoTableau::CorePolicy::allow_extension);
}

CycleClass classify_cycle(const DominoTableau& tableau, const Cycle& cycle) {
  DominoTableau moved = move_through(tableau, cycle);
  const std::set<Square>& before = tableau.covered_squares();
  const std::set<Square>& after = moved.covered_squares();

  std::vector<Square> vacated;
  std::set_difference(before.begin(), before.end(), after.begin(), after.end(),
                      std::back_inserter(vacated));
  std::vector<Square> gained;
  std::set_difference(after.begin(), after.end(), before.begin(), before.end(),
                      std::back_inserter(gained));

  if (vacated.empty() && gained.empty()) return {CycleKind::closed, {}, {}};
  if (vacated.size() == 1 && gained.size() == 1)
    return {CycleKind::open, vacated.front(), gained.front()};
  throw Error("internal: moving through a cycle changed more than one square");
}

DominoTableau move_through_set(const DominoTableau& tableau,
                               const std::vector<Cycle>& cycles) {
  std::vector<Cycle> known = all_cycles(tableau);
  std::vector<Cycle> pending;
  pending.reserve(cycles.size());
  for (const Cycle& c : cycles) {
    Cycle normalized = normalized_cycle(c, tableau);
    if (std::find(known.begin(), known.end(), normalized) == known.end())
      throw Error("label set is not a cycle of the tableau");
    pending.push_back(std::move(normalized));
  }
  std::sort(pending.begin(), pending.end(),
            [](const Cycle& a, const Cycle& b) { return a.front() < b.front(); });
  for (std::size_t a = 1; a < pending.size(); ++a)
    if (pending[a] == pending[a - 1]) throw Error("cycle listed twice");

  DominoTableau current = tableau;
  for (const Cycle& c : pending) current = move_through(current, c);
  return current;
}

std::vector<Cycle> delta_cycles(const DominoTableau& tableau) {
  std::vector<Square> delta = tableau.delta_squares();
  std::set<Square> on_diagonal(delta.begin(), delta.end());
  std::vector<Cycle> result;
  for (const Cycle& c : all_cycles(tableau)) {
    bool touches = false;
    for (int label : c) {
      const Domino& d = tableau.domino(label);
      if (on_diagonal.count(d.first) || on_diagonal.count(d.second)) {
        touches = true;
        break;
      }
    }
    if (touches) result.push_back(c);
  }
  return result;
}

}  // namespace domino
