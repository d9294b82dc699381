#include "domino/insertion.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace domino {

TableauPair::TableauPair(DominoTableau left, DominoTableau right)
    : left_(std::move(left)), right_(std::move(right)) {
  if (left_.rank() != right_.rank())
    throw Error("pair members have different ranks");
  if (left_.size() != right_.size())
    throw Error("pair members have different sizes");
  if (left_.shape() != right_.shape())
    throw Error("pair members have different shapes " +
                to_string(left_.shape()) + " and " + to_string(right_.shape()));
  if (!right_.is_standard())
    throw Error("pair: the tracking member must be standard");
}

TableauPair TableauPair::empty(int rank) {
  return TableauPair(DominoTableau::empty(rank), DominoTableau::empty(rank));
}

namespace {

// Transient placement state for a bumping chain.  Every intermediate
// configuration is itself a tableau, so the end of a row or column can be
// read off its rightmost or lowest occupied square.
class Workspace {
 public:
  Workspace(int rank, const std::vector<Domino>& dominoes) : rank_(rank) {
    for (const Domino& d : dominoes) add(d);
  }

  void add(const Domino& d) {
    place(d.first, d.label);
    place(d.second, d.label);
    dominoes_.emplace(d.label, d);
  }

  bool covered(Square s) const { return grid_.count(s) > 0; }

  // First free column of the row, past the core and any dominoes.
  int row_end(int row) const {
    int last = std::max(0, rank_ + 1 - row);
    for (const auto& [s, label] : grid_)
      if (s.row == row) last = std::max(last, s.col);
    return last + 1;
  }

  int col_end(int col) const {
    int last = std::max(0, rank_ + 1 - col);
    for (const auto& [s, label] : grid_)
      if (s.col == col) last = std::max(last, s.row);
    return last + 1;
  }

  std::vector<Domino> dominoes() const {
    std::vector<Domino> out;
    out.reserve(dominoes_.size());
    for (const auto& [label, d] : dominoes_) out.push_back(d);
    return out;
  }

 private:
  void place(Square s, int label) {
    if (s.row >= 1 && s.col >= 1 && diagonal(s) < rank_ + 2)
      throw Error("internal: insertion placed label " + std::to_string(label) +
                  " on core square " + to_string(s));
    if (!grid_.emplace(s, label).second)
      throw Error("internal: insertion placed label " + std::to_string(label) +
                  " on occupied square " + to_string(s));
  }

  int rank_;
  std::map<Square, int> grid_;
  std::map<int, Domino> dominoes_;
};

}  // namespace

DominoTableau insert_domino(const InsertionTriple& triple,
                            const DominoTableau& tableau) {
  if (triple.value <= 0) throw Error("inserted value must be positive");
  if (triple.sign != 1 && triple.sign != -1)
    throw Error("sign must be +1 or -1");
  if (tableau.has_label(triple.value))
    throw Error("value " + std::to_string(triple.value) +
                " is already a label of the tableau");
  if (!tableau.core_extension().empty())
    throw Error("insertion requires a tableau without core extension");

  std::vector<Domino> kept, bumped;
  for (const Domino& d : tableau.dominoes())
    (d.label < triple.value ? kept : bumped).push_back(d);

  // The inserted value exceeds every label that remains, so it enters at the
  // end of row 1 or column 1.
  Workspace w(tableau.rank(), kept);
  if (triple.sign > 0) {
    int c = w.row_end(1);
    w.add(make_domino(triple.value, {1, c}, {1, c + 1}));
  } else {
    int r = w.col_end(1);
    w.add(make_domino(triple.value, {r, 1}, {r + 1, 1}));
  }

  // Replay the larger labels in increasing order.
  for (const Domino& d : bumped) {
    bool first_taken = w.covered(d.first);
    bool second_taken = w.covered(d.second);
    if (!first_taken && !second_taken) {
      w.add(d);
    } else if (first_taken != second_taken) {
      Square s = first_taken ? d.first : d.second;
      if (d.orientation == Orientation::horizontal)
        w.add(make_domino(d.label, {s.row, s.col + 1}, {s.row + 1, s.col + 1}));
      else
        w.add(make_domino(d.label, {s.row + 1, s.col}, {s.row + 1, s.col + 1}));
    } else if (d.orientation == Orientation::horizontal) {
      int row = d.first.row + 1;
      int c = w.row_end(row);
      w.add(make_domino(d.label, {row, c}, {row, c + 1}));
    } else {
      int col = d.first.col + 1;
      int r = w.col_end(col);
      w.add(make_domino(d.label, {r, col}, {r + 1, col}));
    }
  }

  return DominoTableau::make(tableau.rank(), w.dominoes());
}

DominoTableau track_right(const DominoTableau& right, const Shape& before,
                          const Shape& after, int label) {
  std::vector<Square> added;
  for (Square s : after.squares())
    if (!before.contains(s)) added.push_back(s);
  if (!after.contains(before) || added.size() != 2)
    throw Error("shapes do not differ by one domino");
  std::vector<Domino> dominoes = right.dominoes();
  dominoes.push_back(make_domino(label, added[0], added[1]));
  return DominoTableau::make(right.rank(), std::move(dominoes));
}

TableauPair insert_pair(const TableauPair& pair, const InsertionTriple& triple) {
  if (triple.position != pair.size() + 1)
    throw Error("triple position " + std::to_string(triple.position) +
                " is not the next tracking label");
  DominoTableau left = insert_domino(triple, pair.left());
  DominoTableau right = track_right(pair.right(), pair.left().shape(),
                                    left.shape(), triple.position);
  return TableauPair(std::move(left), std::move(right));
}

TableauPair robinson_schensted(const SignedPermutation& sigma, int rank) {
  return rs_partial(sigma, rank, sigma.size());
}

TableauPair rs_partial(const SignedPermutation& sigma, int rank, int count) {
  if (count < 0 || count > sigma.size())
    throw Error("prefix length out of range");
  TableauPair pair = TableauPair::empty(rank);
  for (int k = 1; k <= count; ++k)
    pair = insert_pair(pair, {sigma.value_at(k), k, sigma.sign_at(k)});
  return pair;
}

namespace {

// Occupancy of the core plus the dominoes of T labeled below a bound; this is
// exactly the configuration the replay had reached when the bounding label
// was re-inserted.
class Prefix {
 public:
  Prefix(const DominoTableau& t, int below) : rank_(t.rank()) {
    for (const Domino& d : t.dominoes()) {
      if (d.label >= below) break;
      covered_.insert(d.first);
      covered_.insert(d.second);
    }
  }

  bool covers(Square s) const { return covered_.count(s) > 0; }

  bool covers_or_core(Square s) const {
    if (s.row >= 1 && s.col >= 1 && diagonal(s) < rank_ + 2) return true;
    return covers(s);
  }

  int row_end(int row) const {
    int last = std::max(0, rank_ + 1 - row);
    for (Square s : covered_)
      if (s.row == row) last = std::max(last, s.col);
    return last + 1;
  }

  int col_end(int col) const {
    int last = std::max(0, rank_ + 1 - col);
    for (Square s : covered_)
      if (s.col == col) last = std::max(last, s.row);
    return last + 1;
  }

  const std::set<Square>& covered() const { return covered_; }

 private:
  int rank_;
  std::set<Square> covered_;
};

bool within(const std::set<Square>& target, Square a, Square b) {
  return target.count(a) > 0 && target.count(b) > 0;
}

// Positions the domino labeled l can have occupied before the insertion that
// left it on its current squares: unchanged, the two diagonal-slide
// preimages, or any fully covered pair in the previous row or column when the
// current squares end the next one.
std::vector<Domino> previous_positions(const Domino& d, const Prefix& q,
                                       const std::set<Square>& target) {
  std::vector<Domino> out;
  int l = d.label;
  Square a = d.first;
  if (within(target, d.first, d.second)) out.push_back(d);

  if (d.orientation == Orientation::vertical) {
    Square left{a.row, a.col - 1};
    if (a.col >= 2 && q.covers(left)) {
      if (within(target, left, a)) out.push_back(make_domino(l, left, a));
      Square left2{a.row, a.col - 2};
      if (a.col >= 3 && !q.covers_or_core(left2) && within(target, left2, left))
        out.push_back(make_domino(l, left2, left));
    }
    if (a.col >= 2 && a.row == q.col_end(a.col)) {
      for (Square s : q.covered()) {
        if (s.col != a.col - 1) continue;
        Square below{s.row + 1, s.col};
        if (q.covers(below) && within(target, s, below))
          out.push_back(make_domino(l, s, below));
      }
    }
  } else {
    Square up{a.row - 1, a.col};
    if (a.row >= 2 && q.covers(up)) {
      if (within(target, up, a)) out.push_back(make_domino(l, up, a));
      Square up2{a.row - 2, a.col};
      if (a.row >= 3 && !q.covers_or_core(up2) && within(target, up2, up))
        out.push_back(make_domino(l, up2, up));
    }
    if (a.row >= 2 && a.col == q.row_end(a.row)) {
      for (Square s : q.covered()) {
        if (s.row != a.row - 1) continue;
        Square right{s.row, s.col + 1};
        if (q.covers(right) && within(target, s, right))
          out.push_back(make_domino(l, s, right));
      }
    }
  }

  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void assemble(const std::vector<std::vector<Domino>>& options, std::size_t idx,
              std::vector<Domino>* chosen, std::set<Square>* used,
              const std::vector<Domino>& base,
              std::vector<std::vector<Domino>>* assemblies) {
  if (idx == options.size()) {
    std::vector<Domino> dominoes = base;
    dominoes.insert(dominoes.end(), chosen->begin(), chosen->end());
    assemblies->push_back(std::move(dominoes));
    return;
  }
  for (const Domino& o : options[idx]) {
    if (used->count(o.first) || used->count(o.second)) continue;
    used->insert(o.first);
    used->insert(o.second);
    chosen->push_back(o);
    assemble(options, idx + 1, chosen, used, base, assemblies);
    chosen->pop_back();
    used->erase(o.first);
    used->erase(o.second);
  }
}

}  // namespace

// The forward step is undone by searching the bounded set of configurations
// that could have produced the left tableau.  The extracted value is the
// label whose domino sits at the end of row 1 or column 1 once everything
// above it is accounted for; each larger label is tried on the preimages of
// the placement rules.  The removed tracking domino tells which two squares
// the insertion added, which together with a forward re-insertion filters the
// candidates down to the unique preimage.
ReverseStep reverse_insert(const TableauPair& pair) {
  const DominoTableau& t = pair.left();
  const DominoTableau& s = pair.right();
  int n = s.size();
  if (n == 0) throw Error("cannot reverse an empty pair");
  if (!s.is_standard()) throw Error("right tableau must be standard");

  const Domino& top = s.domino(n);
  std::set<Square> target = t.covered_squares();
  for (Square sq : {top.first, top.second}) {
    if (target.erase(sq) == 0)
      throw Error("shape difference square " + to_string(sq) +
                  " is not covered in the left tableau");
  }

  std::vector<Domino> s_prev(s.dominoes().begin(), s.dominoes().end() - 1);
  DominoTableau right_prev = DominoTableau::make(s.rank(), std::move(s_prev));

  const std::vector<Domino>& ds = t.dominoes();
  std::vector<ReverseStep> found;
  for (std::size_t vi = 0; vi < ds.size(); ++vi) {
    const Domino& dv = ds[vi];
    Prefix qv(t, dv.label);
    int sign;
    if (dv.orientation == Orientation::horizontal && dv.first.row == 1 &&
        dv.first.col == qv.row_end(1))
      sign = 1;
    else if (dv.orientation == Orientation::vertical && dv.first.col == 1 &&
             dv.first.row == qv.col_end(1))
      sign = -1;
    else
      continue;

    std::vector<Domino> base(ds.begin(), ds.begin() + vi);
    std::set<Square> used;
    bool viable = true;
    for (const Domino& b : base) {
      if (!target.count(b.first) || !target.count(b.second)) {
        viable = false;
        break;
      }
      used.insert(b.first);
      used.insert(b.second);
    }
    if (!viable) continue;

    std::vector<std::vector<Domino>> options;
    for (std::size_t li = vi + 1; li < ds.size() && viable; ++li) {
      options.push_back(previous_positions(ds[li], Prefix(t, ds[li].label), target));
      if (options.back().empty()) viable = false;
    }
    if (!viable) continue;

    std::vector<std::vector<Domino>> assemblies;
    std::vector<Domino> chosen;
    assemble(options, 0, &chosen, &used, base, &assemblies);
    for (std::vector<Domino>& dominoes : assemblies) {
      auto prev = DominoTableau::try_make(t.rank(), std::move(dominoes));
      if (!prev) continue;
      InsertionTriple triple{dv.label, n, sign};
      if (insert_domino(triple, *prev) != t) continue;
      ReverseStep step{TableauPair(std::move(*prev), right_prev), triple};
      bool duplicate = false;
      for (const ReverseStep& f : found)
        if (f.pair == step.pair && f.triple == step.triple) duplicate = true;
      if (!duplicate) found.push_back(std::move(step));
    }
  }

  if (found.empty())
    throw Error("pair is not in the image of an insertion step");
  if (found.size() > 1) throw Error("internal: reverse insertion is ambiguous");
  return found.front();
}

SignedPermutation rs_inverse(const TableauPair& pair) {
  if (!pair.left().is_standard() || !pair.right().is_standard())
    throw Error("inverse correspondence requires a standard pair");
  std::vector<int> window(pair.size());
  TableauPair current = pair;
  for (int k = pair.size(); k >= 1; --k) {
    ReverseStep step = reverse_insert(current);
    if (step.triple.position != k)
      throw Error("internal: reverse step extracted position " +
                  std::to_string(step.triple.position));
    window[k - 1] = step.triple.value * step.triple.sign;
    current = step.pair;
  }
  return SignedPermutation::from_window(window);
}

}  // namespace domino
