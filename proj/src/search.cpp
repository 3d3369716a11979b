#include "ztile/search.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

#include "ztile/certify.hpp"
#include "ztile/numth.hpp"

namespace ztile {

namespace {

std::int64_t floor_mod(std::int64_t v, std::int64_t m) {
  std::int64_t r = v % m;
  return r < 0 ? r + m : r;
}

// Exact-cover backtracking: repeatedly pick the least uncovered residue
// and branch over the translates that cover it.
class ComplementEnumerator {
 public:
  ComplementEnumerator(std::vector<std::int64_t> reduced_tile, std::int64_t modulus)
      : tile_(std::move(reduced_tile)),
        modulus_(modulus),
        covered_(static_cast<std::size_t>(modulus), false) {}

  std::vector<CyclicSet> run() {
    descend(0);
    std::sort(results_.begin(), results_.end(),
              [](const CyclicSet& x, const CyclicSet& y) {
                return x.elements() < y.elements();
              });
    return results_;
  }

 private:
  void descend(std::int64_t scan_from) {
    std::int64_t g = scan_from;
    while (g < modulus_ && covered_[static_cast<std::size_t>(g)]) ++g;
    if (g == modulus_) {
      results_.push_back(CyclicSet(modulus_, chosen_));
      return;
    }
    std::vector<std::int64_t> branches;
    branches.reserve(tile_.size());
    for (std::int64_t a : tile_) branches.push_back(floor_mod(g - a, modulus_));
    std::sort(branches.begin(), branches.end());
    for (std::int64_t b : branches) {
      if (!translate_free(b)) continue;
      mark(b, true);
      chosen_.push_back(b);
      descend(g + 1);
      chosen_.pop_back();
      mark(b, false);
    }
  }

  bool translate_free(std::int64_t b) const {
    for (std::int64_t a : tile_)
      if (covered_[static_cast<std::size_t>((b + a) % modulus_)]) return false;
    return true;
  }

  void mark(std::int64_t b, bool value) {
    for (std::int64_t a : tile_)
      covered_[static_cast<std::size_t>((b + a) % modulus_)] = value;
  }

  std::vector<std::int64_t> tile_;
  std::int64_t modulus_;
  std::vector<bool> covered_;
  std::vector<std::int64_t> chosen_;
  std::vector<CyclicSet> results_;
};

// Lexicographically least complement with least period exactly M, if any.
std::optional<CyclicSet> nonperiodic_complement_at(const TileSet& tile,
                                                   std::int64_t modulus) {
  for (CyclicSet& complement : enumerate_complements(tile, modulus)) {
    if (least_period_cyclic(complement) == modulus) return std::move(complement);
  }
  return std::nullopt;
}

std::vector<std::vector<std::int64_t>> all_tiles_up_to(std::int64_t diameter) {
  std::vector<std::vector<std::int64_t>> tiles;
  tiles.reserve(std::size_t{1} << diameter);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << diameter); ++bits) {
    std::vector<std::int64_t> elems{0};
    for (std::int64_t i = 0; i < diameter; ++i)
      if (bits & (std::uint64_t{1} << i)) elems.push_back(i + 1);
    tiles.push_back(std::move(elems));
  }
  std::sort(tiles.begin(), tiles.end());
  return tiles;
}

}  // namespace

std::vector<CyclicSet> enumerate_complements(const TileSet& tile,
                                             std::int64_t modulus) {
  if (modulus < 1)
    throw std::invalid_argument("enumerate_complements: modulus must be >= 1");
  if (modulus % static_cast<std::int64_t>(tile.size()) != 0) return {};
  std::vector<std::int64_t> reduced;
  reduced.reserve(tile.size());
  for (std::int64_t a : tile.elements()) reduced.push_back(floor_mod(a, modulus));
  std::sort(reduced.begin(), reduced.end());
  if (std::adjacent_find(reduced.begin(), reduced.end()) != reduced.end())
    return {};  // tile elements collide mod M: no tiling possible
  return ComplementEnumerator(std::move(reduced), modulus).run();
}

std::optional<NonperiodicWitness> max_nonperiodic_modulus(const TileSet& tile,
                                                          std::int64_t cap) {
  std::vector<std::int64_t> candidates = nonperiodic_modulus_candidates(tile, cap);
  for (auto it = candidates.rbegin(); it != candidates.rend(); ++it) {
    if (auto complement = nonperiodic_complement_at(tile, *it))
      return NonperiodicWitness{*it, std::move(*complement)};
  }
  return std::nullopt;
}

std::optional<NonperiodicWitness> max_nonperiodic_modulus_unpruned(
    const TileSet& tile, std::int64_t cap) {
  if (cap < 1) throw std::invalid_argument("max_nonperiodic_modulus: cap must be >= 1");
  for (std::int64_t modulus = cap; modulus >= 1; --modulus) {
    if (auto complement = nonperiodic_complement_at(tile, modulus))
      return NonperiodicWitness{modulus, std::move(*complement)};
  }
  return std::nullopt;
}

SearchWitness compute_T(std::int64_t diameter, const SearchOptions& opts) {
  if (diameter < 1) throw std::invalid_argument("compute_T: diameter must be >= 1");
  if (diameter > opts.guard)
    throw std::invalid_argument("compute_T: diameter " + std::to_string(diameter) +
                                " exceeds the search guard " +
                                std::to_string(opts.guard) +
                                " (set ZTILE_GUARD_D or SearchOptions::guard to raise it)");
  auto full_cap = checked_pow2(static_cast<std::uint64_t>(diameter));
  std::int64_t cap;
  if (opts.cap) {
    cap = *opts.cap;
    if (cap < 1) throw std::invalid_argument("compute_T: cap must be >= 1");
  } else {
    if (!full_cap) throw std::invalid_argument("compute_T: 2^D exceeds 64 bits; pass an explicit cap");
    cap = static_cast<std::int64_t>(*full_cap);
  }
  bool exact = full_cap && static_cast<std::uint64_t>(cap) >= *full_cap;

  std::vector<std::vector<std::int64_t>> tiles = all_tiles_up_to(diameter);
  std::vector<std::optional<NonperiodicWitness>> results(tiles.size());

  auto worker = [&](std::size_t index) {
    TileSet tile(tiles[index]);
    results[index] = opts.unpruned ? max_nonperiodic_modulus_unpruned(tile, cap)
                                   : max_nonperiodic_modulus(tile, cap);
  };

  int jobs = std::max(1, opts.jobs);
  if (jobs == 1) {
    for (std::size_t i = 0; i < tiles.size(); ++i) worker(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(jobs));
    for (int j = 0; j < jobs; ++j) {
      pool.emplace_back([&]() {
        try {
          for (std::size_t i = next.fetch_add(1); i < tiles.size();
               i = next.fetch_add(1))
            worker(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
  }

  // Deterministic reduction: max modulus wins; ties keep the earliest
  // (lexicographically least) tile; per-tile complements are already
  // lexicographically least.
  std::optional<SearchWitness> best;
  for (std::size_t i = 0; i < tiles.size(); ++i) {
    if (!results[i]) continue;
    if (!best || results[i]->modulus > best->value) {
      best = SearchWitness{diameter, results[i]->modulus, TileSet(tiles[i]),
                           results[i]->complement, exact};
    }
  }
  if (!best) throw std::logic_error("compute_T: no witness found");  // {0} always yields one
  return *best;
}

std::vector<SearchWitness> emit_table(std::int64_t max_diameter,
                                      const SearchOptions& opts) {
  if (max_diameter < 1)
    throw std::invalid_argument("emit_table: max diameter must be >= 1");
  if (max_diameter > opts.guard)
    throw std::invalid_argument("emit_table: max diameter " +
                                std::to_string(max_diameter) +
                                " exceeds the search guard " + std::to_string(opts.guard));
  std::vector<SearchWitness> rows;
  rows.reserve(static_cast<std::size_t>(max_diameter));
  for (std::int64_t d = 1; d <= max_diameter; ++d)
    rows.push_back(compute_T(d, opts));
  return rows;
}

}  // namespace ztile
