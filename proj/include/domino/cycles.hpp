#pragma once

#include "domino/core.hpp"

#include <optional>
#include <vector>

namespace domino {

// Labels whose dominoes have to move together, sorted ascending.
using Cycle = std::vector<int>;

enum class CycleKind { closed, open };

// Classification of a cycle by the effect of moving through it: a closed
// cycle leaves the set of covered squares unchanged, an open cycle vacates
// one square (back) and covers one new square (front).
struct CycleClass {
  CycleKind kind = CycleKind::closed;
  std::optional<Square> back;
  std::optional<Square> front;

  friend bool operator==(const CycleClass&, const CycleClass&) = default;
};

// Alternate position D'(label) of a domino, keeping its fixed square.
Domino moved_domino(int label, const DominoTableau& tableau);

// The cycle containing the given label.
Cycle cycle_through(int label, const DominoTableau& tableau);

// All cycles, ordered by smallest label.
std::vector<Cycle> all_cycles(const DominoTableau& tableau);

// Replace every domino of the cycle by its alternate position.
DominoTableau move_through(const DominoTableau& tableau, const Cycle& cycle);

CycleClass classify_cycle(const DominoTableau& tableau, const Cycle& cycle);

// Move through each cycle of the set in turn, smallest label first.
// The cycles must be cycles of the given tableau.
DominoTableau move_through_set(const DominoTableau& tableau,
                               const std::vector<Cycle>& cycles);

// Cycles whose dominoes touch the diagonal just outside the core.
std::vector<Cycle> delta_cycles(const DominoTableau& tableau);

}  // namespace domino
