#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace ztile {

/// A finite tile: strictly ascending non-negative integers whose least
/// element is 0. The diameter is the largest element.
class TileSet {
 public:
  explicit TileSet(std::vector<std::int64_t> elements);

  const std::vector<std::int64_t>& elements() const { return elems_; }
  std::int64_t diameter() const { return elems_.back(); }
  std::size_t size() const { return elems_.size(); }

  bool operator==(const TileSet&) const = default;

 private:
  std::vector<std::int64_t> elems_;
};

/// Translate an arbitrary nonempty integer set so its minimum is 0.
TileSet normalize_tile(const std::vector<std::int64_t>& raw);

/// A subset of Z_M. Elements are stored reduced to [0, M); inputs whose
/// reductions collide are rejected (they would not describe a set).
class CyclicSet {
 public:
  CyclicSet(std::int64_t modulus, std::vector<std::int64_t> elements);

  std::int64_t modulus() const { return modulus_; }
  const std::vector<std::int64_t>& elements() const { return elems_; }
  std::size_t size() const { return elems_.size(); }

  bool operator==(const CyclicSet&) const = default;

 private:
  std::int64_t modulus_;
  std::vector<std::int64_t> elems_;
};

/// A point covered the wrong number of times by a candidate tiling.
struct CoverageWitness {
  std::int64_t point = 0;
  std::int64_t count = 0;
};

/// nullopt iff tile (+) complement = Z_M; otherwise the first residue
/// covered a number of times != 1. Tile elements reduce mod M.
std::optional<CoverageWitness> cyclic_tiling_witness(const TileSet& tile,
                                                     const CyclicSet& complement);

bool verify_cyclic_tiling(const TileSet& tile, const CyclicSet& complement);

/// Least t >= 1 with S + t = S (mod M). Always divides M; returns M when
/// no smaller shift works. Conventions: empty set, full set, and M = 1
/// all give 1.
std::int64_t least_period_cyclic(const CyclicSet& s);

/// Whether S has a period below M. Modulus-1 sets count as periodic.
bool is_periodic_mod(const CyclicSet& s);

/// Check that every integer in [0, W) has exactly one representation
/// a + b with a in the tile and b in complement + M*Z, b >= -diameter.
/// Requires W >= M + diameter(tile).
bool verify_z_tiling_window(const TileSet& tile, const CyclicSet& complement,
                            std::int64_t window);

/// A verified tiling of Z_M; the constructor re-checks the cover and
/// throws std::invalid_argument when the pair does not tile.
class CyclicTiling {
 public:
  CyclicTiling(TileSet tile, CyclicSet complement);

  const TileSet& tile() const { return tile_; }
  const CyclicSet& complement() const { return complement_; }
  std::int64_t modulus() const { return complement_.modulus(); }

 private:
  TileSet tile_;
  CyclicSet complement_;
};

/// Candidate tiling of the interval [n] = {0, ..., n-1}. Plain data;
/// verify_interval_tiling decides whether it actually tiles.
struct IntervalTiling {
  std::int64_t n = 0;
  std::vector<std::int64_t> a;
  std::vector<std::int64_t> b;
};

/// Sorts and validates (n >= 1, non-negative elements, no duplicates).
IntervalTiling make_interval_tiling(std::int64_t n, std::vector<std::int64_t> a,
                                    std::vector<std::int64_t> b);

/// nullopt iff the multiset {a + b} equals [n] exactly; otherwise the
/// first point covered a number of times != 1 (points >= n included).
std::optional<CoverageWitness> interval_tiling_witness(const IntervalTiling& t);

bool verify_interval_tiling(const IntervalTiling& t);

}  // namespace ztile
