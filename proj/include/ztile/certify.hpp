#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ztile/tiling.hpp"

namespace ztile {

/// Cyclotomic period certificate of a tile A. Any tiling complement of A
/// mod M has lcm{ d | M : d in s_list } as a period, so a non-periodic
/// complement forces M itself to be such an lcm. t_lcm is the operative
/// bound; t_prod is the classical product form; newman_cap is 2^D.
/// nullopt fields mean "exceeds 64-bit width", never a wrapped value.
struct Certificate {
  TileSet tile;
  std::vector<std::int64_t> s_list;
  std::int64_t phi_sum = 0;
  std::optional<std::uint64_t> t_lcm;
  std::optional<std::uint64_t> t_prod;
  std::optional<std::uint64_t> newman_cap;
};

Certificate certificate(const TileSet& tile);

/// lcm of { d | M : d > 1, Phi_d divides mask(tile) }, or 1 when the set
/// is empty. Divides M, and is a period of every tiling complement of
/// the tile at modulus M.
std::int64_t forced_period(const TileSet& tile, std::int64_t modulus);

/// All moduli M <= cap at which a non-periodic complement of the tile
/// could exist: M must be an lcm of a subset of s_list, |tile| must
/// divide M, and M = 1 qualifies only for the singleton tile {0}.
std::vector<std::int64_t> nonperiodic_modulus_candidates(const TileSet& tile,
                                                         std::int64_t cap);

struct BoundsReport {
  std::int64_t diameter = 0;
  std::int64_t lower = 0;                     // 2D, realized by an explicit tiling
  std::optional<std::uint64_t> newman_cap;    // 2^D
  bool exhaustive = false;                    // tile scan completed
  std::optional<std::uint64_t> max_t_lcm;     // max certificate lcm over all tiles
  std::optional<TileSet> max_tile;
  std::string asymptotic_note;
};

/// Effective bounds on the largest least period achievable at diameter D.
/// The tile scan is exhaustive only up to max_exhaustive_diameter; beyond
/// that the report is flagged partial and carries no max.
BoundsReport report_bounds(std::int64_t diameter,
                           std::int64_t max_exhaustive_diameter = 16);

}  // namespace ztile
