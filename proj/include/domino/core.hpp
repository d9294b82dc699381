#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace domino {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// 1-based matrix coordinates: row 1 is the top row, column 1 the left column.
struct Square {
  int row = 0;
  int col = 0;
  friend auto operator<=>(const Square&, const Square&) = default;
};

inline int diagonal(Square s) { return s.row + s.col; }

std::string to_string(Square s);

// A square is fixed when row+col and the rank have opposite parity.
inline bool is_fixed_square(int rank, Square s) {
  return ((s.row + s.col) & 1) != (rank & 1);
}

enum class Orientation { horizontal, vertical };

// Weakly decreasing row lengths, no trailing zeros.
class Shape {
 public:
  Shape() = default;
  explicit Shape(std::vector<int> rows);

  std::size_t row_count() const { return rows_.size(); }
  int row_length(int row) const;  // 1-based; 0 past the last row
  int column_height(int col) const;
  int total_squares() const;
  bool contains(Square s) const;
  bool contains(const Shape& inner) const;
  std::vector<Square> squares() const;  // row-major
  const std::vector<int>& rows() const { return rows_; }

  friend auto operator<=>(const Shape&, const Shape&) = default;

 private:
  std::vector<int> rows_;
};

std::string to_string(const Shape& shape);

// Staircase (rank, rank-1, ..., 1) of zero-labeled squares.
Shape core_shape(int rank);

// Two adjacent squares sharing one label; `first` precedes `second` in
// (row, col) order, so `first` is the left resp. top square.
struct Domino {
  int label = 0;
  Square first;
  Square second;
  Orientation orientation = Orientation::horizontal;

  bool covers(Square s) const { return s == first || s == second; }
  friend auto operator<=>(const Domino&, const Domino&) = default;
};

Domino make_domino(int label, Square a, Square b);

std::string to_string(const Domino& d);

// Label of an arbitrary square position under the boundary conventions:
// zero on the core and off the board to the left or above, infinity on
// positive positions outside the diagram.
class ExtendedLabel {
 public:
  static ExtendedLabel zero() { return {Kind::zero, 0}; }
  static ExtendedLabel finite(int value);
  static ExtendedLabel infinity() { return {Kind::infinity, 0}; }

  bool is_zero() const { return kind_ == Kind::zero; }
  bool is_finite() const { return kind_ == Kind::finite; }
  bool is_infinity() const { return kind_ == Kind::infinity; }
  int value() const;

  friend auto operator<=>(const ExtendedLabel&, const ExtendedLabel&) = default;

 private:
  enum class Kind { zero = 0, finite = 1, infinity = 2 };
  ExtendedLabel(Kind k, int v) : kind_(k), value_(v) {}

  Kind kind_;
  int value_;
};

std::string to_string(const ExtendedLabel& label);

// Rank-r domino tableau: the staircase core plus labeled dominoes whose union
// is a Young diagram, with labels weakly increasing along rows and down
// columns.  Labels are distinct positive integers; a tableau is standard when
// they are exactly 1..n.
//
// Moving a cycle through the diagonal adjacent to the core can vacate one of
// its squares, which then counts as part of the core.  CorePolicy controls
// whether such intermediate states are accepted; strict validation requires
// the core to be exactly the staircase.
class DominoTableau {
 public:
  enum class CorePolicy { strict, allow_extension };

  DominoTableau() = default;  // empty rank-0 tableau
  static DominoTableau empty(int rank);
  static DominoTableau make(int rank, std::vector<Domino> dominoes,
                            CorePolicy policy = CorePolicy::strict);
  static std::optional<DominoTableau> try_make(
      int rank, std::vector<Domino> dominoes,
      CorePolicy policy = CorePolicy::strict);

  int rank() const { return rank_; }
  int size() const { return static_cast<int>(dominoes_.size()); }
  const std::vector<Domino>& dominoes() const { return dominoes_; }
  std::vector<int> labels() const;
  bool has_label(int label) const;
  const Domino& domino(int label) const;
  bool is_standard() const;
  const std::vector<Square>& core_extension() const { return extension_; }
  const Shape& shape() const { return shape_; }
  ExtendedLabel label_at(int row, int col) const;
  bool covers(Square s) const;
  std::set<Square> covered_squares() const;
  // Covered squares on the diagonal row+col == rank+2.
  std::vector<Square> delta_squares() const;

  friend bool operator==(const DominoTableau& a, const DominoTableau& b) {
    return a.rank_ == b.rank_ && a.dominoes_ == b.dominoes_;
  }
  friend auto operator<=>(const DominoTableau& a, const DominoTableau& b) {
    if (auto c = a.rank_ <=> b.rank_; c != 0) return c;
    return a.dominoes_ <=> b.dominoes_;
  }

 private:
  int rank_ = 0;
  std::vector<Domino> dominoes_;   // sorted by label
  std::map<Square, int> grid_;     // domino squares only
  std::vector<Square> extension_;  // vacated squares kept as core
  Shape shape_;
};

// Full validation requiring standard labels 1..n; the entry point for
// externally supplied tableaux.
DominoTableau validate_tableau(int rank, std::vector<Domino> dominoes);

// Element of the hyperoctahedral group: position k holds (value, sign) with
// the values forming a permutation of 1..n.
class SignedPermutation {
 public:
  SignedPermutation() = default;  // the element of H_0
  static SignedPermutation from_window(const std::vector<int>& window);

  int size() const { return static_cast<int>(values_.size()); }
  int value_at(int position) const;  // 1-based
  int sign_at(int position) const;
  std::vector<int> window() const;

  SignedPermutation inverse() const;
  bool is_involution() const;

  friend auto operator<=>(const SignedPermutation&,
                          const SignedPermutation&) = default;

 private:
  std::vector<int> values_;
  std::vector<int> signs_;
};

std::string to_string(const SignedPermutation& sigma);

// Enumeration of H_n in a deterministic order with random access, so that
// scans can be partitioned across workers by index range.
class HyperoctahedralGroup {
 public:
  explicit HyperoctahedralGroup(int n);

  int degree() const { return n_; }
  std::uint64_t order() const { return order_; }  // 2^n * n!
  SignedPermutation element(std::uint64_t index) const;
  std::vector<SignedPermutation> elements() const;

 private:
  int n_;
  std::uint64_t order_;
};

}  // namespace domino
