#pragma once

#include "domino/core.hpp"

namespace domino {

// One letter of a signed permutation: position k holds value with a sign.
struct InsertionTriple {
  int value = 0;
  int position = 0;
  int sign = 1;

  friend auto operator<=>(const InsertionTriple&, const InsertionTriple&) = default;
};

// Same-rank, same-shape tableau pair.  The right member is the tracking
// tableau and is standard; the left member may carry a general label set
// while a permutation is only partially inserted.
class TableauPair {
 public:
  TableauPair() = default;  // empty rank-0 pair
  TableauPair(DominoTableau left, DominoTableau right);
  static TableauPair empty(int rank);

  const DominoTableau& left() const { return left_; }
  const DominoTableau& right() const { return right_; }
  int rank() const { return left_.rank(); }
  int size() const { return left_.size(); }

  friend bool operator==(const TableauPair&, const TableauPair&) = default;

 private:
  DominoTableau left_;
  DominoTableau right_;
};

// Inserts one value into a tableau: a value above every present label enters
// at the end of row 1 (sign +1) or column 1 (sign -1); otherwise every larger
// label is removed and replayed in increasing order, each landing on its old
// squares when they are free, sliding diagonally off the one square that is
// taken, or starting the next row or column when both are taken.
DominoTableau insert_domino(const InsertionTriple& triple,
                            const DominoTableau& tableau);

// Adds a domino with the given label on the two squares by which `after`
// grew out of `before`.
DominoTableau track_right(const DominoTableau& right, const Shape& before,
                          const Shape& after, int label);

// One insertion step on a pair: insert into the left member and record the
// shape growth in the right member.  The triple's position must be the next
// tracking label.
TableauPair insert_pair(const TableauPair& pair, const InsertionTriple& triple);

// The rank-r correspondence: inserts the letters of sigma in order, starting
// from the empty pair of the given rank.
TableauPair robinson_schensted(const SignedPermutation& sigma, int rank);

// The pair after inserting only the first `count` letters.
TableauPair rs_partial(const SignedPermutation& sigma, int rank, int count);

struct ReverseStep {
  TableauPair pair;
  InsertionTriple triple;
};

// Inverse of one insert_pair step: removes the top tracking domino and
// un-bumps the left tableau, returning the smaller pair and the extracted
// letter.  insert_pair(step.pair, step.triple) reproduces the input exactly.
ReverseStep reverse_insert(const TableauPair& pair);

// Full inverse of robinson_schensted.
SignedPermutation rs_inverse(const TableauPair& pair);

}  // namespace domino
