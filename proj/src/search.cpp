#include "queens/search.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <mutex>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>
#include <vector>

#include "mask.hpp"
#include "queens/errors.hpp"
#include "queens/verifier.hpp"

namespace queens {

using detail::Mask;

SearchStats& SearchStats::operator+=(const SearchStats& o) {
  nodes += o.nodes;
  leaves += o.leaves;
  symmetry_prunes += o.symmetry_prunes;
  dominance_prunes += o.dominance_prunes;
  return *this;
}

int lower_bound(int n) {
  require_side(n);
  return n % 4 == 3 ? n - 1 : n;
}

int naive_lower_bound(int n) {
  require_side(n);
  return (n + 1) / 2;
}

void validate(const SearchConfig& config, int n) {
  if (config.k < 2) throw std::invalid_argument("line threshold k must be at least 2");
  if (config.workers < 1) throw std::invalid_argument("worker count must be at least 1");
  if (config.split_depth < 1) throw std::invalid_argument("split depth must be at least 1");
  require_side(n);
  if (n > kMaxSearchSide)
    throw RangeError("search supports boards up to " + std::to_string(kMaxSearchSide) + "x" +
                     std::to_string(kMaxSearchSide));
}

namespace {

// Precomputed line tables for one board side.
struct Geometry {
  int n;
  int squares;
  int lines;
  Mask board;
  std::vector<std::array<std::uint8_t, 4>> line_ids;  // per square
  std::vector<Mask> line_mask;                        // per line id
  std::vector<Mask> reach;                            // union of the 4 lines through a square

  explicit Geometry(int side) : n(side), squares(side * side), lines(6 * side - 2) {
    LineIndex index(n);
    board = Mask::low(squares);
    line_ids.resize(squares);
    line_mask.resize(lines);
    reach.resize(squares);
    for (int i = 0; i < squares; ++i) {
      auto ids = index.ids_through(square(i));
      for (int j = 0; j < 4; ++j) {
        line_ids[i][j] = static_cast<std::uint8_t>(ids[j]);
        line_mask[ids[j]] |= Mask::bit(i);
      }
    }
    for (int i = 0; i < squares; ++i)
      for (auto id : line_ids[i]) reach[i] |= line_mask[id];
  }

  [[nodiscard]] Square square(int i) const { return {i / n + 1, i % n + 1}; }
  [[nodiscard]] int bit_of(Square s) const { return (s.x - 1) * n + (s.y - 1); }

  [[nodiscard]] Placement placement(Mask m) const {
    std::vector<Square> q;
    for (; m.any(); m.pop_first()) q.push_back(square(m.first()));
    return Placement(n, std::move(q));
  }
};

// Partial placement. `covered` holds every square on a line that already
// has k-1 queens; such squares can no longer take a queen. `forbidden`
// squares are excluded by earlier sibling branches.
struct Node {
  Mask occupied;
  Mask forbidden;
  Mask covered;
  std::array<std::uint8_t, 6 * kMaxSearchSide - 2> counts{};
  int remaining = 0;
  int depth = 0;
};

// First-queen squares that cover every dihedral orbit: some image of any
// placement has its (x,y)-least queen at (x,y) with x <= y <= ceil(n/2).
bool in_fundamental_domain(Square s, int n) { return s.x <= s.y && s.y <= (n + 1) / 2; }

class Engine {
 public:
  enum class Mode { Exists, Enumerate };

  Engine(const Geometry& geo, const SearchConfig& config, Mode mode)
      : geo_(geo), config_(config), mode_(mode), full_(static_cast<std::uint8_t>(config.k - 1)) {}

  // Roots are the choices of the (x,y)-least queen; all smaller squares
  // are forbidden under each root.
  std::vector<Node> roots(int q, SearchStats& stats) const {
    std::vector<Node> out;
    for (int i = 0; i < geo_.squares; ++i) {
      if (config_.symmetry_reduction && !in_fundamental_domain(geo_.square(i), geo_.n)) {
        ++stats.symmetry_prunes;
        continue;
      }
      Node node;
      node.remaining = q;
      node.forbidden = Mask::low(i);
      place(node, i);
      out.push_back(node);
    }
    return out;
  }

  void place(Node& node, int i) const {
    node.occupied |= Mask::bit(i);
    for (auto id : geo_.line_ids[i])
      if (++node.counts[id] == full_) node.covered |= geo_.line_mask[id];
    --node.remaining;
    ++node.depth;
  }

  // Expands `node`. When `split` is set, nodes at split depth go to `split`
  // instead of being searched.
  void search(Node node, SearchStats& stats, std::vector<Node>* split = nullptr) {
    if (stopped()) return;
    if (split && node.depth >= config_.split_depth) {
      split->push_back(node);
      return;
    }
    ++stats.nodes;
    if (++since_flush_ >= kFlushInterval) flush(stats);

    const Mask need = geo_.board & ~node.occupied & ~node.covered;
    if (node.remaining == 0 || need.none()) {
      ++stats.leaves;
      if (node.remaining == 0 && need.none()) report(node.occupied);
      return;
    }
    Mask addable = need & ~node.forbidden;

    // Branch on the needy square with the fewest candidates. Any good
    // completion puts a new queen on that square or on one of its lines.
    int best = -1;
    int best_count = 1 << 30;
    for (Mask m = need; m.any(); m.pop_first()) {
      const int s = m.first();
      const int c = (geo_.reach[s] & addable).count();
      if (c < best_count) {
        best = s;
        best_count = c;
        if (c == 0) break;
      }
      if (config_.dominance_prune && min_queens_to_cover(node, s, addable) > node.remaining) {
        ++stats.dominance_prunes;
        return;
      }
    }
    if (best_count == 0) return;

    Mask options = geo_.reach[best] & addable;
    for (; options.any(); options.pop_first()) {
      const int t = options.first();
      Node child = node;
      place(child, t);
      search(child, stats, split);
      if (stopped()) return;
      node.forbidden |= Mask::bit(t);
    }
  }

  void flush(SearchStats& stats) {
    since_flush_ = 0;
    const auto total = shared_->nodes.fetch_add(stats.nodes - flushed_, std::memory_order_relaxed) +
                       (stats.nodes - flushed_);
    flushed_ = stats.nodes;
    if (config_.node_budget && total > *config_.node_budget) {
      shared_->exhausted.store(true);
      shared_->stop.store(true);
    }
    if (config_.cancel && config_.cancel->load()) {
      shared_->cancelled.store(true);
      shared_->stop.store(true);
    }
  }

  struct Shared {
    std::atomic<bool> stop{false};
    std::atomic<bool> exhausted{false};
    std::atomic<bool> cancelled{false};
    std::atomic<std::uint64_t> nodes{0};
    std::mutex mutex;
    std::optional<Mask> witness;
    std::function<void(const Placement&)> visit;
    bool distinct_only = false;
    std::uint64_t visited = 0;
  };

  void attach(Shared& shared) { shared_ = &shared; }

 private:
  static constexpr int kFlushInterval = 4096;

  bool stopped() const { return shared_->stop.load(std::memory_order_relaxed); }

  // Fewest new queens that could make square s occupied or covered.
  int min_queens_to_cover(const Node& node, int s, Mask addable) const {
    if (addable.test(s)) return 1;
    int best = 1 << 20;
    for (auto id : geo_.line_ids[s]) {
      const int missing = full_ - node.counts[id];
      if (missing < best && (geo_.line_mask[id] & addable).count() >= missing) best = missing;
    }
    return best;
  }

  void report(Mask occupied) {
    std::lock_guard lock(shared_->mutex);
    if (mode_ == Mode::Exists) {
      if (!shared_->witness) shared_->witness = occupied;
      shared_->stop.store(true);
      return;
    }
    Placement p = geo_.placement(occupied);
    if (shared_->distinct_only && canonical_form(p) != p) return;
    ++shared_->visited;
    shared_->visit(p);
  }

  const Geometry& geo_;
  const SearchConfig& config_;
  Mode mode_;
  std::uint8_t full_;
  Shared* shared_ = nullptr;
  int since_flush_ = 0;
  std::uint64_t flushed_ = 0;
};

// Runs the search for size q over the work queue. Fills `shared`.
SearchStats run(const Geometry& geo, int q, const SearchConfig& config, Engine::Mode mode,
                Engine::Shared& shared) {
  const auto start = std::chrono::steady_clock::now();
  SearchStats total;

  Engine splitter(geo, config, mode);
  splitter.attach(shared);
  std::vector<Node> tasks;
  if (q == 0) {
    // The empty placement is never good on a nonempty board.
    ++total.nodes;
    ++total.leaves;
  } else {
    for (const Node& root : splitter.roots(q, total)) splitter.search(root, total, &tasks);
  }

  std::atomic<std::size_t> next{0};
  std::vector<SearchStats> per_worker(config.workers);
  auto work = [&](int w) {
    Engine engine(geo, config, mode);
    engine.attach(shared);
    for (;;) {
      if (shared.stop.load()) break;
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) break;
      engine.search(tasks[i], per_worker[w]);
    }
    engine.flush(per_worker[w]);
  };
  if (config.workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < config.workers; ++w) pool.emplace_back(work, w);
  }
  for (const auto& s : per_worker) total += s;
  total.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return total;
}

void throw_if_incomplete(const Engine::Shared& shared, int n, int q) {
  const std::string what = "search for " + std::to_string(q) + " queens on " + std::to_string(n) +
                           "x" + std::to_string(n);
  if (shared.cancelled.load()) throw InconclusiveError(what + " was cancelled", q);
  if (shared.exhausted.load()) throw InconclusiveError(what + " exhausted its node budget", q);
}

}  // namespace

std::optional<Placement> exists_good_of_size(int n, int q, const SearchConfig& config,
                                             SearchStats* stats) {
  validate(config, n);
  if (q < 0 || q > n * n) throw RangeError("queen count must be in [0, n^2]");
  const Geometry geo(n);
  Engine::Shared shared;
  SearchStats s = run(geo, q, config, Engine::Mode::Exists, shared);
  if (stats) {
    *stats += s;
    stats->elapsed_seconds += s.elapsed_seconds;
  }
  if (shared.witness) return geo.placement(*shared.witness);
  throw_if_incomplete(shared, n, q);
  return std::nullopt;
}

SearchResult solve_min_good(int n, const SearchConfig& config) {
  validate(config, n);
  SearchResult result;
  result.n = n;
  result.k = config.k;
  // No line may hold k queens, so each row holds at most k-1.
  const int max_q = std::min(n * n, (config.k - 1) * n);
  for (int q = config.k == 3 ? lower_bound(n) : 1; q <= max_q; ++q) {
    try {
      if (auto w = exists_good_of_size(n, q, config, &result.stats)) {
        result.minimum = q;
        result.witness = std::move(*w);
        return result;
      }
    } catch (InconclusiveError& e) {
      const Placement upper = greedy_upper_bound(n, config.k, 64);
      throw InconclusiveError(e.what(), q, upper.size());
    }
  }
  // Unreachable: a maximal placement always exists and is good.
  throw std::logic_error("no good placement found up to the row-capacity limit");
}

std::uint64_t for_each_good(int n, int q, const SearchConfig& config,
                            const std::function<void(const Placement&)>& visit,
                            bool distinct_only) {
  validate(config, n);
  if (q < 0 || q > n * n) throw RangeError("queen count must be in [0, n^2]");
  const Geometry geo(n);
  Engine::Shared shared;
  shared.visit = visit;
  shared.distinct_only = distinct_only;
  run(geo, q, config, Engine::Mode::Enumerate, shared);
  throw_if_incomplete(shared, n, q);
  return shared.visited;
}

Placement greedy_good_placement(int n, int k, std::uint64_t seed) {
  require_side(n);
  std::vector<Square> order;
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y) order.push_back({x, y});
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  LineCounts counts(n);
  std::vector<Square> chosen;
  for (Square s : order) {
    if (counts.max_through(s) <= k - 2) {
      counts.add(s);
      chosen.push_back(s);
    }
  }
  return Placement(n, std::move(chosen));
}

Placement greedy_upper_bound(int n, int k, int trials, std::uint64_t seed) {
  Placement best = greedy_good_placement(n, k, seed);
  for (int t = 1; t < trials; ++t) {
    Placement p = greedy_good_placement(n, k, seed + t);
    if (p.size() < best.size()) best = std::move(p);
  }
  return best;
}

}  // namespace queens
