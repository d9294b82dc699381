#include "domino/extended.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <tuple>
#include <vector>

namespace domino {

namespace {

struct CycleNode {
  bool left = false;
  Cycle cycle;
  CycleClass cls;
};

int smallest_label(const ExtendedCyclePair& extended) {
  int best = std::numeric_limits<int>::max();
  for (const Cycle& c : extended.in_left) best = std::min(best, c.front());
  for (const Cycle& c : extended.in_right) best = std::min(best, c.front());
  return best;
}

void sort_cycles(std::vector<Cycle>& cycles) {
  std::sort(cycles.begin(), cycles.end(),
            [](const Cycle& a, const Cycle& b) { return a.front() < b.front(); });
}

}  // namespace

std::vector<ExtendedCyclePair> correspondence_components(const TableauPair& pair) {
  std::vector<CycleNode> nodes;
  for (const Cycle& c : all_cycles(pair.left()))
    nodes.push_back({true, c, classify_cycle(pair.left(), c)});
  for (const Cycle& c : all_cycles(pair.right()))
    nodes.push_back({false, c, classify_cycle(pair.right(), c)});

  std::vector<std::size_t> parent(nodes.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&parent](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };

  for (std::size_t a = 0; a < nodes.size(); ++a)
    for (std::size_t b = a + 1; b < nodes.size(); ++b) {
      if (nodes[a].left == nodes[b].left) continue;
      if (nodes[a].cls.kind != CycleKind::open ||
          nodes[b].cls.kind != CycleKind::open)
        continue;
      if (nodes[a].cls.back == nodes[b].cls.back ||
          nodes[a].cls.front == nodes[b].cls.front)
        parent[find(a)] = find(b);
    }

  std::map<std::size_t, std::vector<std::size_t>> grouped;
  for (std::size_t i = 0; i < nodes.size(); ++i) grouped[find(i)].push_back(i);

  std::vector<ExtendedCyclePair> components;
  for (auto& [root, members] : grouped) {
    ExtendedCyclePair component;
    std::vector<Square> backs_left, backs_right, fronts_left, fronts_right;
    bool open = false;
    for (std::size_t i : members) {
      const CycleNode& node = nodes[i];
      (node.left ? component.in_left : component.in_right).push_back(node.cycle);
      if (node.cls.kind == CycleKind::open) {
        open = true;
        (node.left ? backs_left : backs_right).push_back(*node.cls.back);
        (node.left ? fronts_left : fronts_right).push_back(*node.cls.front);
      }
    }
    if (open) {
      if (component.in_left.empty() || component.in_right.empty())
        throw Error("internal: open cycle without a partner across the pair");
      std::sort(backs_left.begin(), backs_left.end());
      std::sort(backs_right.begin(), backs_right.end());
      std::sort(fronts_left.begin(), fronts_left.end());
      std::sort(fronts_right.begin(), fronts_right.end());
      if (backs_left != backs_right || fronts_left != fronts_right)
        throw Error("internal: mismatched cycle boundaries across the pair");
    }
    sort_cycles(component.in_left);
    sort_cycles(component.in_right);
    components.push_back(std::move(component));
  }
  std::sort(components.begin(), components.end(),
            [](const ExtendedCyclePair& a, const ExtendedCyclePair& b) {
              return std::tuple(smallest_label(a), a.in_left, a.in_right) <
                     std::tuple(smallest_label(b), b.in_left, b.in_right);
            });
  return components;
}

std::vector<Cycle> extended_cycle(int label, const DominoTableau& left,
                                  const DominoTableau& right) {
  TableauPair pair(left, right);
  Cycle c = cycle_through(label, left);
  for (const ExtendedCyclePair& component : correspondence_components(pair))
    if (std::find(component.in_left.begin(), component.in_left.end(), c) !=
        component.in_left.end())
      return component.in_left;
  throw Error("internal: cycle missing from the correspondence components");
}

TableauPair move_through_pair(const TableauPair& pair,
                              const ExtendedCyclePair& extended) {
  std::vector<ExtendedCyclePair> components = correspondence_components(pair);
  if (std::find(components.begin(), components.end(), extended) ==
      components.end())
    throw Error("not an extended cycle of the pair");
  return TableauPair(move_through_set(pair.left(), extended.in_left),
                     move_through_set(pair.right(), extended.in_right));
}

std::vector<ExtendedCyclePair> gamma(const TableauPair& pair) {
  std::vector<Cycle> left_delta = delta_cycles(pair.left());
  std::vector<Cycle> right_delta = delta_cycles(pair.right());
  auto meets = [](const std::vector<Cycle>& cycles,
                  const std::vector<Cycle>& delta) {
    for (const Cycle& c : cycles)
      if (std::find(delta.begin(), delta.end(), c) != delta.end()) return true;
    return false;
  };

  std::vector<ExtendedCyclePair> result;
  for (const ExtendedCyclePair& component : correspondence_components(pair))
    if (meets(component.in_left, left_delta) ||
        meets(component.in_right, right_delta))
      result.push_back(component);
  return result;
}

TableauPair mmt(const TableauPair& pair) {
  int rank = pair.rank();
  for (const DominoTableau* side : {&pair.left(), &pair.right()})
    for (const Cycle& c : delta_cycles(*side))
      if (classify_cycle(*side, c).kind == CycleKind::closed)
        throw Error("a closed cycle meets the diagonal next to the core");

  std::vector<Cycle> move_left, move_right;
  for (const ExtendedCyclePair& component : gamma(pair)) {
    move_left.insert(move_left.end(), component.in_left.begin(),
                     component.in_left.end());
    move_right.insert(move_right.end(), component.in_right.begin(),
                      component.in_right.end());
  }
  DominoTableau left = move_through_set(pair.left(), move_left);
  DominoTableau right = move_through_set(pair.right(), move_right);
  if (!left.delta_squares().empty() || !right.delta_squares().empty())
    throw Error("internal: moving through gamma left the diagonal covered");
  return TableauPair(DominoTableau::make(rank + 1, left.dominoes()),
                     DominoTableau::make(rank + 1, right.dominoes()));
}

}  // namespace domino
