#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "ztile/tiling.hpp"

namespace ztile {

/// Element of Z_{3p} x Z_{5q} x Z_2.
struct GroupElement {
  std::int64_t i = 0;  // mod 3p
  std::int64_t j = 0;  // mod 5q
  std::int64_t k = 0;  // mod 2

  auto operator<=>(const GroupElement&) const = default;
};

struct PrimePair {
  std::int64_t p = 0;
  std::int64_t q = 0;
};

/// Distinct primes p, q > 5 maximizing p*q subject to 24p + 20q <= D
/// (the exact diameter of the projected tile). Ties prefer smaller p.
/// nullopt when no pair fits (D < 388).
std::optional<PrimePair> choose_primes(std::int64_t diameter);

/// The 3x5 rectangle {(i, j, 0) : 0 <= i < 3, 0 <= j < 5}; 15 elements.
std::vector<GroupElement> build_rectangle(std::int64_t p, std::int64_t q);

/// The non-periodic complement: the lattice generated by (3,0,0), (0,5,0),
/// (0,0,1), with the b = 5 column of the lower level shifted by (1,0,0)
/// and the a = 3 row of the upper level shifted by (0,1,0). 2pq elements.
std::vector<GroupElement> build_complement(std::int64_t p, std::int64_t q);

/// The isomorphism Z_{3p} x Z_{5q} x Z_2 -> Z_{30pq}:
/// (i, j, k) -> i*10q + j*6p + k*15pq mod 30pq.
std::int64_t psi(std::int64_t p, std::int64_t q, const GroupElement& g);

/// A fully verified long-period construction at modulus M = 30pq.
struct Construction {
  std::int64_t p = 0;
  std::int64_t q = 0;
  std::int64_t modulus = 0;
  std::vector<GroupElement> rectangle;      // 15 elements
  std::vector<GroupElement> complement3d;   // 2pq elements
  TileSet tile;                             // psi image of the rectangle
  CyclicSet complement;                     // psi image of complement3d
};

/// Build and verify the quadratic-period construction for a diameter
/// budget D: tile of size 15 and diameter 24p + 20q <= D, complement with
/// least period exactly M = 30pq. All postconditions are checked; a
/// failed check throws std::logic_error. nullopt when D < 388.
std::optional<Construction> construct_long_period(std::int64_t diameter);

/// The 2D-period baseline: {0, D} tiles Z_{2D} with complement [D],
/// least period 2D. Verified before returning.
CyclicTiling construct_fallback(std::int64_t diameter);

struct BestConstruction {
  CyclicTiling tiling;
  std::int64_t least_period = 0;
  bool quadratic = false;  // false = 2D fallback
  std::optional<PrimePair> primes;
};

/// Whichever of the two constructions has the larger verified period.
BestConstruction construct_best(std::int64_t diameter);

}  // namespace ztile
