#pragma once

#include "domino/extended.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace domino {

struct VerificationFailure {
  SignedPermutation sigma;
  std::string mismatch;
};

struct VerificationReport {
  int n = 0;
  int rank = 0;
  std::uint64_t checked = 0;
  std::vector<VerificationFailure> failures;

  bool ok() const { return failures.empty(); }
};

// Whether moving the rank-r image of sigma through gamma and raising the
// rank reproduces the rank-(r+1) image.
bool verify_relation(const SignedPermutation& sigma, int rank);

// Check verify_relation for every element of the group of signed
// permutations of degree n, optionally fanning out over worker threads.
VerificationReport verify_all(int n, int rank, int threads = 1);

// Move a single tableau through its cycles on the diagonal next to the
// core, then raise the rank by one.
DominoTableau t_step(const DominoTableau& tableau);

// Carry a standard tableau to the given rank through the group: invert the
// diagonal pair and insert the result at the target rank.
DominoTableau t_map(const DominoTableau& tableau, int to_rank);

// Smallest rank at which gamma is empty for every degree-n pair from that
// rank on up to the ceiling (default 2n). Empty optional when no such rank
// exists below the ceiling.
std::optional<int> stabilization_rank(int n, int ceiling = -1);

}  // namespace domino
