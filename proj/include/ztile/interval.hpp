#pragma once

#include <cstdint>
#include <vector>

#include "ztile/tiling.hpp"

namespace ztile {

enum class Side { A, B };

/// One level of the scaled decomposition of an interval tiling
/// A (+) B = [n]: for some divisor m >= 2 of n, one side (the filled
/// side, named by scaled_side) equals m*E + [m] and the other equals
/// m*Dset, with E (+) Dset = [n/m].
struct LongDecomposition {
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::vector<std::int64_t> e;     // base of the filled side
  std::vector<std::int64_t> dset;  // the scaled-only side divided by m
  Side scaled_side = Side::A;
};

/// Decompose a verified interval tiling with n > 1. Divisors m are tried
/// ascending (side A first at each m) and the first valid decomposition
/// is returned; at least one always exists.
LongDecomposition long_decompose(const IntervalTiling& t);

/// Full decomposition chain down to n/m = 1. Empty for n = 1. The m
/// values along the chain multiply to n.
std::vector<LongDecomposition> decomposition_tree(const IntervalTiling& t);

/// Which side has the strictly larger maximum (they are never equal),
/// with a verified period t < n of that side mod n. period is the least
/// such t by direct scan; decomposition_period is the product-of-m route
/// through the decomposition chain, verified independently.
struct DichotomyReport {
  Side larger = Side::A;
  std::int64_t max_a = 0;
  std::int64_t max_b = 0;
  std::int64_t period = 0;
  std::int64_t decomposition_period = 0;
};

DichotomyReport check_max_dichotomy(const IntervalTiling& t);

/// For a verified tiling with n > 2*diameter(A): the least period t of B
/// mod n (t < n, t | n) together with B intersected with [t], which
/// again tiles [t] with A. Rejects inputs violating the hypothesis.
struct SubTiling {
  std::int64_t t = 0;
  std::vector<std::int64_t> b_sub;
};

SubTiling extract_subtiling(const IntervalTiling& t);

/// Every tiling A (+) B = [n] with 0 in both sides, in lexicographic
/// order by A then B. Exhaustive backtracking over membership choices.
std::vector<IntervalTiling> enumerate_interval_tilings(std::int64_t n);

}  // namespace ztile
