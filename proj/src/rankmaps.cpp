#include "domino/rankmaps.hpp"

#include <algorithm>
#include <thread>

namespace domino {

namespace {

std::optional<std::string> relation_mismatch(const SignedPermutation& sigma,
                                             int rank) {
  try {
    TableauPair lifted = mmt(robinson_schensted(sigma, rank));
    TableauPair direct = robinson_schensted(sigma, rank + 1);
    if (lifted == direct) return std::nullopt;
    return "moving through gamma at rank " + std::to_string(rank) +
           " does not reproduce the rank " + std::to_string(rank + 1) +
           " pair";
  } catch (const Error& e) {
    return std::string(e.what());
  }
}

}  // namespace

bool verify_relation(const SignedPermutation& sigma, int rank) {
  if (rank < 0) throw Error("rank must be nonnegative");
  return !relation_mismatch(sigma, rank).has_value();
}

VerificationReport verify_all(int n, int rank, int threads) {
  if (rank < 0) throw Error("rank must be nonnegative");
  if (threads < 1) throw Error("thread count must be positive");
  HyperoctahedralGroup group(n);
  std::uint64_t order = group.order();

  VerificationReport report;
  report.n = n;
  report.rank = rank;
  report.checked = order;

  struct IndexedFailure {
    std::uint64_t index;
    VerificationFailure failure;
  };
  std::uint64_t workers =
      std::min<std::uint64_t>(static_cast<std::uint64_t>(threads),
                              std::max<std::uint64_t>(order, 1));
  std::vector<std::vector<IndexedFailure>> buckets(workers);

  auto scan = [&](std::uint64_t worker) {
    for (std::uint64_t index = worker; index < order; index += workers) {
      SignedPermutation sigma = group.element(index);
      if (auto mismatch = relation_mismatch(sigma, rank))
        buckets[worker].push_back({index, {sigma, *mismatch}});
    }
  };

  if (workers <= 1) {
    scan(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::uint64_t worker = 0; worker < workers; ++worker)
      pool.emplace_back(scan, worker);
    for (std::thread& t : pool) t.join();
  }

  std::vector<IndexedFailure> merged;
  for (auto& bucket : buckets)
    merged.insert(merged.end(), bucket.begin(), bucket.end());
  std::sort(merged.begin(), merged.end(),
            [](const IndexedFailure& a, const IndexedFailure& b) {
              return a.index < b.index;
            });
  for (auto& entry : merged) report.failures.push_back(std::move(entry.failure));
  return report;
}

DominoTableau t_step(const DominoTableau& tableau) {
  if (!tableau.core_extension().empty())
    throw Error("tableau must not extend into the core");
  std::vector<Cycle> delta = delta_cycles(tableau);
  for (const Cycle& c : delta)
    if (classify_cycle(tableau, c).kind == CycleKind::closed)
      throw Error("a closed cycle meets the diagonal next to the core");
  DominoTableau moved = move_through_set(tableau, delta);
  if (!moved.delta_squares().empty())
    throw Error("internal: moving through the diagonal cycles left the "
                "diagonal covered");
  return DominoTableau::make(tableau.rank() + 1, moved.dominoes());
}

DominoTableau t_map(const DominoTableau& tableau, int to_rank) {
  if (to_rank < 0) throw Error("rank must be nonnegative");
  if (!tableau.is_standard())
    throw Error("tableau must be standard");
  SignedPermutation sigma = rs_inverse(TableauPair(tableau, tableau));
  if (!sigma.is_involution())
    throw Error("internal: a diagonal pair must invert to an involution");
  return robinson_schensted(sigma, to_rank).left();
}

std::optional<int> stabilization_rank(int n, int ceiling) {
  if (n < 0) throw Error("degree must be nonnegative");
  if (ceiling < 0) ceiling = 2 * n;
  HyperoctahedralGroup group(n);
  std::uint64_t order = group.order();

  int from = ceiling + 1;
  for (int rank = ceiling; rank >= 0; --rank) {
    bool empty_everywhere = true;
    for (std::uint64_t index = 0; index < order; ++index) {
      if (!gamma(robinson_schensted(group.element(index), rank)).empty()) {
        empty_everywhere = false;
        break;
      }
    }
    if (!empty_everywhere) break;
    from = rank;
  }
  if (from > ceiling) return std::nullopt;
  return from;
}

}  // namespace domino
