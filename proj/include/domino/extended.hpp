#pragma once

#include "domino/cycles.hpp"
#include "domino/insertion.hpp"

#include <vector>

namespace domino {

// A family of cycles of the two members of a same-shape pair that is closed
// under sharing vacated or newly covered squares across the pair. A closed
// cycle forms a family on its own, with the other side empty.
struct ExtendedCyclePair {
  std::vector<Cycle> in_left;
  std::vector<Cycle> in_right;

  friend bool operator==(const ExtendedCyclePair&,
                         const ExtendedCyclePair&) = default;
};

// Partition of the cycles of both members into extended cycles, ordered by
// the smallest label occurring on either side.
std::vector<ExtendedCyclePair> correspondence_components(const TableauPair& pair);

// The cycles of the left member belonging to the extended cycle through the
// given label of the left member.
std::vector<Cycle> extended_cycle(int label, const DominoTableau& left,
                                  const DominoTableau& right);

// Move both members through their parts of an extended cycle. The result is
// again a same-shape pair.
TableauPair move_through_pair(const TableauPair& pair,
                              const ExtendedCyclePair& extended);

// Extended cycles containing a cycle that touches the diagonal just outside
// the core on either side.
std::vector<ExtendedCyclePair> gamma(const TableauPair& pair);

// Move through all extended cycles in gamma, then raise the rank by one.
TableauPair mmt(const TableauPair& pair);

}  // namespace domino
