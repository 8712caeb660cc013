#pragma once

// Exhaustive search for minimum good placements.
//
// A placement is good for threshold k when no line holds k queens and
// every unoccupied square lies on a line that already holds k-1. The
// search decides, for a fixed size q, whether a good placement of q
// queens exists; absence is a proof of nonexistence. m_k(n) is the least
// q for which one exists.

#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>

#include "queens/board.hpp"

namespace queens {

// Largest board the bitboard search handles (n^2 <= 128).
inline constexpr int kMaxSearchSide = 11;

struct SearchConfig {
  int k = 3;
  int workers = 1;
  std::optional<std::uint64_t> node_budget;
  bool symmetry_reduction = true;
  // Discard nodes where some square can no longer be covered with the
  // queens left. Off means plain exhaustive branching.
  bool dominance_prune = true;
  // Tree depth (queens placed) at which work is cut into queued tasks.
  int split_depth = 2;
  // Polled during the search; setting it makes the search inconclusive.
  const std::atomic<bool>* cancel = nullptr;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;
  std::uint64_t symmetry_prunes = 0;
  std::uint64_t dominance_prunes = 0;
  double elapsed_seconds = 0.0;

  SearchStats& operator+=(const SearchStats& o);
};

struct SearchResult {
  int n = 0;
  int k = 3;
  int minimum = 0;
  Placement witness{1};
  SearchStats stats;
};

// n, or n-1 when n = 3 (mod 4). Throws RangeError for n < 1.
int lower_bound(int n);

// ceil(n/2), from counting covered squares.
int naive_lower_bound(int n);

// Throws std::invalid_argument unless k >= 2 and workers >= 1, and
// RangeError unless 1 <= n <= kMaxSearchSide.
void validate(const SearchConfig& config, int n);

// Some good placement of exactly q queens, or nullopt if none exists.
// Throws InconclusiveError when the node budget runs out or the search is
// cancelled before the answer is known.
std::optional<Placement> exists_good_of_size(int n, int q, const SearchConfig& config,
                                             SearchStats* stats = nullptr);

// m_k(n) with a witness. q runs upward from lower_bound(n) for k = 3 and
// from 1 otherwise. On budget exhaustion throws InconclusiveError with the
// proven lower bound and the best upper bound found by greedy saturation.
SearchResult solve_min_good(int n, const SearchConfig& config);

// Calls `visit` on every good placement of size q (serialised; visit need
// not be thread-safe). With symmetry reduction on, at least one member of
// every dihedral orbit is visited; with `distinct_only` exactly the
// canonical member of each orbit is visited. Returns the visit count.
std::uint64_t for_each_good(int n, int q, const SearchConfig& config,
                            const std::function<void(const Placement&)>& visit,
                            bool distinct_only = false);

// Good placement built by adding queens in a random order until nothing is
// addable. Any such placement is good, so its size bounds m_k(n) above.
Placement greedy_good_placement(int n, int k, std::uint64_t seed);

// Smallest greedy placement over `trials` seeds.
Placement greedy_upper_bound(int n, int k, int trials, std::uint64_t seed = 1);

}  // namespace queens
