#include "doctest.h"

#include <cstdint>
#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "ztile/tiling.hpp"

using namespace ztile;

TEST_SUITE_BEGIN("tiling");

TEST_CASE("tile construction and normalization") {
  CHECK(normalize_tile({3, 5}).elements() == std::vector<std::int64_t>{0, 2});
  CHECK(normalize_tile({0}).elements() == std::vector<std::int64_t>{0});
  CHECK(normalize_tile({-1, 0, 2}).elements() == std::vector<std::int64_t>{0, 1, 3});
  CHECK_THROWS_AS(normalize_tile({}), std::invalid_argument);
  CHECK_THROWS_AS(TileSet({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(TileSet({0, 2, 2}), std::invalid_argument);
  CHECK(TileSet({0, 2, 1}).elements() == std::vector<std::int64_t>{0, 1, 2});
}

TEST_CASE("cyclic set reduces mod M and rejects collisions") {
  CHECK(CyclicSet(4, {6, 1}).elements() == std::vector<std::int64_t>{1, 2});
  CHECK(CyclicSet(4, {-1}).elements() == std::vector<std::int64_t>{3});
  CHECK_THROWS_AS(CyclicSet(4, {0, 4}), std::invalid_argument);
  CHECK_THROWS_AS(CyclicSet(0, {0}), std::invalid_argument);
}

TEST_CASE("verify_cyclic_tiling") {
  CHECK(verify_cyclic_tiling(TileSet({0, 1}), CyclicSet(4, {0, 2})));
  CHECK_FALSE(verify_cyclic_tiling(TileSet({0, 1}), CyclicSet(4, {0, 1})));
  CHECK(verify_cyclic_tiling(TileSet({0}), CyclicSet(1, {0})));
  // tile elements reduce mod M; collisions mean double coverage
  CHECK_FALSE(verify_cyclic_tiling(TileSet({0, 4}), CyclicSet(4, {0, 1})));
  CHECK(verify_cyclic_tiling(TileSet({0, 3}), CyclicSet(2, {0})));

  auto witness = cyclic_tiling_witness(TileSet({0, 1}), CyclicSet(4, {0, 1}));
  REQUIRE(witness.has_value());
  CHECK(witness->point == 1);
  CHECK(witness->count == 2);
}

TEST_CASE("verify matches naive counting on random pairs") {
  std::mt19937 rng(7331);
  for (int trial = 0; trial < 300; ++trial) {
    std::int64_t m = std::uniform_int_distribution<std::int64_t>(1, 18)(rng);
    std::vector<std::int64_t> tile_elems{0};
    for (std::int64_t i = 1; i <= 5; ++i)
      if (std::bernoulli_distribution(0.4)(rng)) tile_elems.push_back(i);
    std::vector<std::int64_t> comp_elems;
    for (std::int64_t g = 0; g < m; ++g)
      if (std::bernoulli_distribution(0.4)(rng)) comp_elems.push_back(g);
    if (comp_elems.empty()) comp_elems.push_back(0);
    TileSet tile(tile_elems);
    CyclicSet comp(m, comp_elems);
    REQUIRE(verify_cyclic_tiling(tile, comp) == oracle::naive_cyclic_tiling(tile, comp));
  }
}

TEST_CASE("least periods") {
  CHECK(least_period_cyclic(CyclicSet(4, {0, 2})) == 2);
  CHECK(least_period_cyclic(CyclicSet(4, {0, 1})) == 4);
  CHECK(least_period_cyclic(CyclicSet(6, {0, 2, 4})) == 2);
  CHECK(least_period_cyclic(CyclicSet(6, {})) == 1);
  CHECK(least_period_cyclic(CyclicSet(6, {0, 1, 2, 3, 4, 5})) == 1);
  CHECK(least_period_cyclic(CyclicSet(1, {0})) == 1);
}

TEST_CASE("least period equals the full-shift-scan oracle and divides M") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 400; ++trial) {
    std::int64_t m = std::uniform_int_distribution<std::int64_t>(1, 30)(rng);
    std::vector<std::int64_t> elems;
    for (std::int64_t g = 0; g < m; ++g)
      if (std::bernoulli_distribution(0.5)(rng)) elems.push_back(g);
    CyclicSet s(m, elems);
    std::int64_t period = least_period_cyclic(s);
    REQUIRE(period == oracle::naive_least_period(s));
    REQUIRE(m % period == 0);
  }
}

TEST_CASE("is_periodic_mod, with the modulus-1 convention") {
  CHECK(is_periodic_mod(CyclicSet(4, {0, 2})));
  CHECK_FALSE(is_periodic_mod(CyclicSet(4, {0, 1})));
  CHECK_FALSE(is_periodic_mod(CyclicSet(6, {0, 1, 2})));
  CHECK(is_periodic_mod(CyclicSet(1, {0})));
  CHECK(is_periodic_mod(CyclicSet(1, {})));
}

TEST_CASE("window verification over Z") {
  CHECK(verify_z_tiling_window(TileSet({0, 1}), CyclicSet(2, {0}), 10));
  CHECK(verify_z_tiling_window(TileSet({0, 2}), CyclicSet(4, {0, 1}), 12));
  CHECK_FALSE(verify_z_tiling_window(TileSet({0, 1}), CyclicSet(4, {0, 1}), 12));
  CHECK_THROWS_AS(verify_z_tiling_window(TileSet({0, 5}), CyclicSet(2, {0}), 6),
                  std::invalid_argument);
}

TEST_CASE("cyclic and window verification agree at W = 3M, diameter <= 3, M <= 10") {
  for (std::uint64_t tile_bits = 0; tile_bits < 8; ++tile_bits) {
    std::vector<std::int64_t> tile_elems{0};
    for (std::int64_t i = 0; i < 3; ++i)
      if (tile_bits & (1u << i)) tile_elems.push_back(i + 1);
    TileSet tile(tile_elems);
    for (std::int64_t m = 1; m <= 10; ++m) {
      if (3 * m < m + tile.diameter()) continue;  // window precondition
      for (std::uint64_t set_bits = 0; set_bits < (1u << m); ++set_bits) {
        std::vector<std::int64_t> elems;
        for (std::int64_t g = 0; g < m; ++g)
          if (set_bits & (1u << g)) elems.push_back(g);
        CyclicSet comp(m, elems);
        REQUIRE(verify_cyclic_tiling(tile, comp) ==
                verify_z_tiling_window(tile, comp, 3 * m));
      }
    }
  }
}

TEST_CASE("translation invariance of cyclic verification") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 200; ++trial) {
    std::int64_t m = std::uniform_int_distribution<std::int64_t>(1, 16)(rng);
    std::vector<std::int64_t> tile_elems{0};
    for (std::int64_t i = 1; i <= 4; ++i)
      if (std::bernoulli_distribution(0.5)(rng)) tile_elems.push_back(i);
    std::vector<std::int64_t> comp_elems;
    for (std::int64_t g = 0; g < m; ++g)
      if (std::bernoulli_distribution(0.5)(rng)) comp_elems.push_back(g);
    if (comp_elems.empty()) comp_elems.push_back(0);
    std::int64_t shift = std::uniform_int_distribution<std::int64_t>(0, m - 1)(rng);
    std::vector<std::int64_t> shifted;
    for (std::int64_t v : comp_elems) shifted.push_back(v + shift);
    TileSet tile(tile_elems);
    REQUIRE(verify_cyclic_tiling(tile, CyclicSet(m, comp_elems)) ==
            verify_cyclic_tiling(tile, CyclicSet(m, shifted)));
  }
}

TEST_CASE("verified tilings satisfy |A| * |B'| = M") {
  CyclicTiling t(TileSet({0, 1}), CyclicSet(4, {0, 2}));
  CHECK(t.tile().size() * t.complement().size() == 4);
  CHECK_THROWS_AS(CyclicTiling(TileSet({0, 1}), CyclicSet(4, {0, 1})),
                  std::invalid_argument);
}

TEST_CASE("interval tilings") {
  CHECK(verify_interval_tiling(make_interval_tiling(4, {0, 1}, {0, 2})));
  CHECK(verify_interval_tiling(make_interval_tiling(1, {0}, {0})));
  CHECK_FALSE(verify_interval_tiling(make_interval_tiling(4, {0, 2}, {0, 2})));

  auto witness = interval_tiling_witness(make_interval_tiling(4, {0, 2}, {0, 2}));
  REQUIRE(witness.has_value());
  CHECK(witness->point == 1);
  CHECK(witness->count == 0);

  // all in-range points covered once, but a sum escapes the interval
  witness = interval_tiling_witness(make_interval_tiling(2, {0}, {0, 1, 2}));
  REQUIRE(witness.has_value());
  CHECK(witness->point == 2);
  CHECK(witness->count == 1);
}

TEST_SUITE_END();
