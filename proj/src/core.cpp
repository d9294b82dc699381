#include "domino/core.hpp"

#include <algorithm>
#include <sstream>

namespace domino {

std::string to_string(Square s) {
  return "(" + std::to_string(s.row) + "," + std::to_string(s.col) + ")";
}

Shape::Shape(std::vector<int> rows) : rows_(std::move(rows)) {
  while (!rows_.empty() && rows_.back() == 0) rows_.pop_back();
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i] <= 0) throw Error("shape: row length must be positive");
    if (i > 0 && rows_[i] > rows_[i - 1])
      throw Error("shape: row lengths must be weakly decreasing");
  }
}

int Shape::row_length(int row) const {
  if (row < 1 || row > static_cast<int>(rows_.size())) return 0;
  return rows_[row - 1];
}

int Shape::column_height(int col) const {
  int h = 0;
  for (int len : rows_) {
    if (len >= col)
      ++h;
    else
      break;
  }
  return h;
}

int Shape::total_squares() const {
  int total = 0;
  for (int len : rows_) total += len;
  return total;
}

bool Shape::contains(Square s) const {
  return s.row >= 1 && s.col >= 1 && s.col <= row_length(s.row);
}

bool Shape::contains(const Shape& inner) const {
  for (std::size_t i = 0; i < inner.rows_.size(); ++i) {
    if (i >= rows_.size() || inner.rows_[i] > rows_[i]) return false;
  }
  return true;
}

std::vector<Square> Shape::squares() const {
  std::vector<Square> out;
  for (int i = 1; i <= static_cast<int>(rows_.size()); ++i)
    for (int j = 1; j <= rows_[i - 1]; ++j) out.push_back({i, j});
  return out;
}

std::string to_string(const Shape& shape) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < shape.rows().size(); ++i) {
    if (i) os << ",";
    os << shape.rows()[i];
  }
  os << "]";
  return os.str();
}

Shape core_shape(int rank) {
  if (rank < 0) throw Error("rank must be nonnegative");
  std::vector<int> rows;
  for (int len = rank; len >= 1; --len) rows.push_back(len);
  return Shape(rows);
}

Domino make_domino(int label, Square a, Square b) {
  if (label <= 0) throw Error("domino label must be positive");
  if (b < a) std::swap(a, b);
  if (a.row < 1 || a.col < 1)
    throw Error("domino " + std::to_string(label) + " leaves the board at " +
                to_string(a));
  Orientation orientation;
  if (b.row == a.row && b.col == a.col + 1) {
    orientation = Orientation::horizontal;
  } else if (b.col == a.col && b.row == a.row + 1) {
    orientation = Orientation::vertical;
  } else {
    throw Error("domino " + std::to_string(label) + " squares " + to_string(a) +
                " and " + to_string(b) + " are not adjacent");
  }
  return Domino{label, a, b, orientation};
}

std::string to_string(const Domino& d) {
  return std::to_string(d.label) + "@" + to_string(d.first) + to_string(d.second);
}

ExtendedLabel ExtendedLabel::finite(int value) {
  if (value <= 0) throw Error("finite extended label must be positive");
  return {Kind::finite, value};
}

int ExtendedLabel::value() const {
  if (!is_finite()) throw Error("extended label has no finite value");
  return value_;
}

std::string to_string(const ExtendedLabel& label) {
  if (label.is_zero()) return "0";
  if (label.is_infinity()) return "inf";
  return std::to_string(label.value());
}

DominoTableau DominoTableau::empty(int rank) {
  return make(rank, {}, CorePolicy::strict);
}

DominoTableau DominoTableau::make(int rank, std::vector<Domino> dominoes,
                                  CorePolicy policy) {
  if (rank < 0) throw Error("rank must be nonnegative");
  std::sort(dominoes.begin(), dominoes.end(),
            [](const Domino& a, const Domino& b) { return a.label < b.label; });

  DominoTableau t;
  t.rank_ = rank;

  for (const Domino& d : dominoes) {
    // Re-derive the normalized form; rejects bad adjacency and cross-checks
    // the stored orientation.
    Domino canonical = make_domino(d.label, d.first, d.second);
    if (canonical != d)
      throw Error("domino " + std::to_string(d.label) +
                  " is not in normalized form");
    for (Square s : {d.first, d.second}) {
      if (diagonal(s) < rank + 2)
        throw Error("square " + to_string(s) + " of domino " +
                    std::to_string(d.label) + " lies in the core");
      auto [it, inserted] = t.grid_.emplace(s, d.label);
      if (!inserted)
        throw Error("square " + to_string(s) + " is covered twice (labels " +
                    std::to_string(it->second) + " and " +
                    std::to_string(d.label) + ")");
    }
    if (!t.dominoes_.empty() && t.dominoes_.back().label == d.label)
      throw Error("label " + std::to_string(d.label) + " used twice");
    t.dominoes_.push_back(canonical);
  }

  // Row extents of core plus dominoes.
  std::map<int, int> max_col;  // row -> rightmost occupied column
  std::map<int, int> max_row;  // col -> lowest occupied row
  for (int i = 1; i <= rank; ++i) {
    max_col[i] = rank + 1 - i;
    max_row[rank + 1 - i] = std::max(max_row[rank + 1 - i], i);
  }
  for (const auto& [s, label] : t.grid_) {
    max_col[s.row] = std::max(max_col[s.row], s.col);
    max_row[s.col] = std::max(max_row[s.col], s.row);
  }

  // A vacated square on the diagonal row+col == rank+2 still counts as core
  // when the diagram continues past it to the right or below.
  if (policy == CorePolicy::allow_extension) {
    for (int i = 1; i <= rank + 1; ++i) {
      int j = rank + 2 - i;
      if (j < 1) continue;
      Square s{i, j};
      if (t.grid_.count(s)) continue;
      bool dominated = (max_col.count(i) && max_col.at(i) > j) ||
                       (max_row.count(j) && max_row.at(j) > i);
      if (dominated) {
        t.extension_.push_back(s);
        max_col[i] = std::max(max_col[i], j);
        max_row[j] = std::max(max_row[j], i);
      }
    }
  }

  // The union of core, extension and domino squares must be a left-justified
  // Young diagram.
  std::vector<int> row_lengths;
  {
    int last_row = max_col.empty() ? 0 : max_col.rbegin()->first;
    row_lengths.assign(last_row, 0);
    for (const auto& [row, len] : max_col) row_lengths[row - 1] = len;
  }
  auto occupied = [&](Square s) {
    if (s.row >= 1 && s.col >= 1 && diagonal(s) < rank + 2) return true;
    if (t.grid_.count(s)) return true;
    return std::find(t.extension_.begin(), t.extension_.end(), s) !=
           t.extension_.end();
  };
  int expected_squares = 0;
  for (std::size_t i = 0; i < row_lengths.size(); ++i) {
    if (row_lengths[i] == 0 ||
        (i > 0 && row_lengths[i] > row_lengths[i - 1]))
      throw Error("core and dominoes do not form a Young diagram");
    for (int j = 1; j <= row_lengths[i]; ++j)
      if (!occupied({static_cast<int>(i) + 1, j}))
        throw Error("core and dominoes do not form a Young diagram");
    expected_squares += row_lengths[i];
  }
  int core_squares = core_shape(rank).total_squares();
  if (expected_squares != core_squares + static_cast<int>(t.extension_.size()) +
                              2 * static_cast<int>(t.dominoes_.size()))
    throw Error("core and dominoes do not form a Young diagram");
  t.shape_ = Shape(row_lengths);

  // Weak increase along rows and down columns.  Labels are distinct, so the
  // comparison is strict between different dominoes and an equality can only
  // come from the two halves of one domino.
  for (const auto& [s, label] : t.grid_) {
    for (Square next : {Square{s.row, s.col + 1}, Square{s.row + 1, s.col}}) {
      auto it = t.grid_.find(next);
      if (it != t.grid_.end() && it->second < label)
        throw Error("labels do not increase towards " + to_string(next));
    }
  }

  return t;
}

std::optional<DominoTableau> DominoTableau::try_make(int rank,
                                                     std::vector<Domino> dominoes,
                                                     CorePolicy policy) {
  try {
    return make(rank, std::move(dominoes), policy);
  } catch (const Error&) {
    return std::nullopt;
  }
}

std::vector<int> DominoTableau::labels() const {
  std::vector<int> out;
  out.reserve(dominoes_.size());
  for (const Domino& d : dominoes_) out.push_back(d.label);
  return out;
}

bool DominoTableau::has_label(int label) const {
  return std::any_of(dominoes_.begin(), dominoes_.end(),
                     [&](const Domino& d) { return d.label == label; });
}

const Domino& DominoTableau::domino(int label) const {
  for (const Domino& d : dominoes_)
    if (d.label == label) return d;
  throw Error("no domino labeled " + std::to_string(label));
}

bool DominoTableau::is_standard() const {
  for (std::size_t i = 0; i < dominoes_.size(); ++i)
    if (dominoes_[i].label != static_cast<int>(i) + 1) return false;
  return true;
}

ExtendedLabel DominoTableau::label_at(int row, int col) const {
  if (row <= 0 || col <= 0) return ExtendedLabel::zero();
  if (row + col < rank_ + 2) return ExtendedLabel::zero();
  auto it = grid_.find({row, col});
  if (it != grid_.end()) return ExtendedLabel::finite(it->second);
  if (std::find(extension_.begin(), extension_.end(), Square{row, col}) !=
      extension_.end())
    return ExtendedLabel::zero();
  return ExtendedLabel::infinity();
}

bool DominoTableau::covers(Square s) const { return grid_.count(s) > 0; }

std::set<Square> DominoTableau::covered_squares() const {
  std::set<Square> out;
  for (const auto& [s, label] : grid_) out.insert(s);
  return out;
}

std::vector<Square> DominoTableau::delta_squares() const {
  std::vector<Square> out;
  for (const auto& [s, label] : grid_)
    if (diagonal(s) == rank_ + 2) out.push_back(s);
  std::sort(out.begin(), out.end());
  return out;
}

DominoTableau validate_tableau(int rank, std::vector<Domino> dominoes) {
  DominoTableau t = DominoTableau::make(rank, std::move(dominoes),
                                        DominoTableau::CorePolicy::strict);
  if (!t.is_standard())
    throw Error("labels are not exactly 1.." + std::to_string(t.size()));
  return t;
}

SignedPermutation SignedPermutation::from_window(const std::vector<int>& window) {
  SignedPermutation sigma;
  int n = static_cast<int>(window.size());
  std::vector<bool> seen(n + 1, false);
  for (int entry : window) {
    int value = entry < 0 ? -entry : entry;
    if (value == 0) throw Error("signed permutation entries must be nonzero");
    if (value > n)
      throw Error("entry " + std::to_string(entry) + " out of range for n=" +
                  std::to_string(n));
    if (seen[value])
      throw Error("value " + std::to_string(value) + " appears twice");
    seen[value] = true;
    sigma.values_.push_back(value);
    sigma.signs_.push_back(entry < 0 ? -1 : 1);
  }
  return sigma;
}

int SignedPermutation::value_at(int position) const {
  if (position < 1 || position > size())
    throw Error("position " + std::to_string(position) + " out of range");
  return values_[position - 1];
}

int SignedPermutation::sign_at(int position) const {
  if (position < 1 || position > size())
    throw Error("position " + std::to_string(position) + " out of range");
  return signs_[position - 1];
}

std::vector<int> SignedPermutation::window() const {
  std::vector<int> out;
  out.reserve(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i)
    out.push_back(values_[i] * signs_[i]);
  return out;
}

// Each triple (value, position, sign) of sigma becomes (position, value, sign)
// of the inverse.
SignedPermutation SignedPermutation::inverse() const {
  SignedPermutation inv;
  inv.values_.assign(values_.size(), 0);
  inv.signs_.assign(values_.size(), 1);
  for (std::size_t k = 0; k < values_.size(); ++k) {
    inv.values_[values_[k] - 1] = static_cast<int>(k) + 1;
    inv.signs_[values_[k] - 1] = signs_[k];
  }
  return inv;
}

bool SignedPermutation::is_involution() const { return *this == inverse(); }

std::string to_string(const SignedPermutation& sigma) {
  std::ostringstream os;
  os << "(";
  auto window = sigma.window();
  for (std::size_t i = 0; i < window.size(); ++i) {
    if (i) os << ",";
    os << window[i];
  }
  os << ")";
  return os.str();
}

namespace {

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

}  // namespace

HyperoctahedralGroup::HyperoctahedralGroup(int n) : n_(n) {
  if (n < 0) throw Error("degree must be nonnegative");
  if (n > 16) throw Error("degree too large to enumerate");
  order_ = factorial(n) << n;
}

SignedPermutation HyperoctahedralGroup::element(std::uint64_t index) const {
  if (index >= order_) throw Error("element index out of range");
  std::uint64_t perm_index = index >> n_;
  std::uint64_t sign_mask = index & ((std::uint64_t{1} << n_) - 1);

  std::vector<int> remaining;
  for (int v = 1; v <= n_; ++v) remaining.push_back(v);
  std::vector<int> window(n_);
  for (int k = 0; k < n_; ++k) {
    std::uint64_t f = factorial(n_ - 1 - k);
    int d = static_cast<int>(perm_index / f);
    perm_index %= f;
    int value = remaining[d];
    remaining.erase(remaining.begin() + d);
    bool negative = (sign_mask >> k) & 1;
    window[k] = negative ? -value : value;
  }
  return SignedPermutation::from_window(window);
}

std::vector<SignedPermutation> HyperoctahedralGroup::elements() const {
  std::vector<SignedPermutation> out;
  out.reserve(order_);
  for (std::uint64_t i = 0; i < order_; ++i) out.push_back(element(i));
  return out;
}

}  // namespace domino
