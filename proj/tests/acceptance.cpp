// Acceptance suite: end-to-end checks with their runtime budgets, one
// PASS/FAIL line each. Exit code 0 only when every criterion passes.
#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "ztile/certify.hpp"
#include "ztile/construct.hpp"
#include "ztile/interval.hpp"
#include "ztile/numth.hpp"
#include "ztile/poly.hpp"
#include "ztile/search.hpp"
#include "ztile/tiling.hpp"

using namespace ztile;

namespace {

std::vector<TileSet> tiles_up_to_diameter(std::int64_t d) {
  std::vector<std::vector<std::int64_t>> raw;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << d); ++bits) {
    std::vector<std::int64_t> elems{0};
    for (std::int64_t i = 0; i < d; ++i)
      if (bits & (std::uint64_t{1} << i)) elems.push_back(i + 1);
    raw.push_back(std::move(elems));
  }
  std::sort(raw.begin(), raw.end());
  std::vector<TileSet> tiles;
  tiles.reserve(raw.size());
  for (auto& elems : raw) tiles.emplace_back(std::move(elems));
  return tiles;
}

// All k-subsets of {0,...,m-1}, visited in lexicographic order.
template <typename Fn>
void for_each_subset_of_size(std::int64_t m, std::int64_t k, Fn&& fn) {
  if (k < 0 || k > m) return;
  std::vector<std::int64_t> idx(static_cast<std::size_t>(k));
  for (std::int64_t i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    fn(idx);
    std::int64_t pos = k - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == m - k + pos) --pos;
    if (pos < 0) break;
    ++idx[static_cast<std::size_t>(pos)];
    for (std::int64_t j = pos + 1; j < k; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

bool criterion_cyclotomic_identity(std::string& detail) {
  std::int64_t first_big_coeff = 0;
  for (std::int64_t n = 1; n <= 200; ++n) {
    IntPoly phi = cyclotomic(n);
    if (phi != oracle::cyclotomic_moebius(n)) {
      detail = "cyclotomic(" + std::to_string(n) + ") disagrees with the Moebius product";
      return false;
    }
    IntPoly prod = IntPoly::constant(1);
    for (std::int64_t d : divisors(n)) prod = poly_mul(prod, cyclotomic(d));
    if (prod != IntPoly::x_pow_minus_one(n)) {
      detail = "product over divisors of " + std::to_string(n) + " is not x^n - 1";
      return false;
    }
    if (first_big_coeff == 0) {
      for (std::int64_t c : phi.coeffs()) {
        if (c >= 2 || c <= -2) {
          first_big_coeff = n;
          break;
        }
      }
    }
  }
  if (first_big_coeff != 105) {
    detail = "first coefficient of magnitude >= 2 appears at n = " +
             std::to_string(first_big_coeff) + ", expected 105";
    return false;
  }
  return true;
}

bool criterion_extremal_table(std::string& detail) {
  const std::vector<std::int64_t> expected{2, 4, 6, 8};
  for (std::int64_t d = 1; d <= 4; ++d) {
    SearchOptions pruned;
    SearchWitness a = compute_T(d, pruned);
    SearchOptions brute;
    brute.unpruned = true;
    SearchWitness b = compute_T(d, brute);
    if (a.value != b.value || !(a.tile == b.tile) || !(a.complement == b.complement)) {
      detail = "pruned and unpruned searches disagree at D = " + std::to_string(d);
      return false;
    }
    if (a.value != expected[static_cast<std::size_t>(d - 1)]) {
      detail = "T(" + std::to_string(d) + ") = " + std::to_string(a.value) +
               ", expected " + std::to_string(expected[static_cast<std::size_t>(d - 1)]);
      return false;
    }
    if (!(a.value >= 2 * d && a.value <= (std::int64_t{1} << d))) {
      detail = "T(" + std::to_string(d) + ") violates 2D <= T <= 2^D";
      return false;
    }
  }
  return true;
}

bool criterion_quadratic_construction(std::string& detail) {
  for (std::int64_t d : {388, 572, 1000, 2000}) {
    auto c = construct_long_period(d);
    if (!c) {
      detail = "no construction at D = " + std::to_string(d);
      return false;
    }
    bool ok = c->tile.size() == 15 && c->tile.diameter() <= d &&
              c->modulus == 30 * c->p * c->q &&
              verify_cyclic_tiling(c->tile, c->complement) &&
              least_period_cyclic(c->complement) == c->modulus &&
              600 * c->modulus >= d * d;
    if (!ok) {
      detail = "postcondition failed at D = " + std::to_string(d);
      return false;
    }
  }
  return true;
}

bool criterion_forced_period_soundness(std::string& detail) {
  for (const TileSet& tile : tiles_up_to_diameter(5)) {
    for (std::int64_t m = 1; m <= 36; ++m) {
      std::int64_t forced = forced_period(tile, m);
      std::vector<std::int64_t> candidates = nonperiodic_modulus_candidates(tile, 36);
      for (const CyclicSet& complement : enumerate_complements(tile, m)) {
        std::vector<std::int64_t> shifted;
        for (std::int64_t b : complement.elements()) shifted.push_back(b + forced);
        if (!(CyclicSet(m, shifted) == complement)) {
          detail = "forced period does not fix a complement at M = " + std::to_string(m);
          return false;
        }
        if (least_period_cyclic(complement) == m &&
            !std::binary_search(candidates.begin(), candidates.end(), m)) {
          detail = "non-periodic complement at M = " + std::to_string(m) +
                   " missing from the candidate list";
          return false;
        }
      }
    }
  }
  return true;
}

bool criterion_interval_structure(std::string& detail) {
  for (std::int64_t n = 1; n <= 24; ++n) {
    for (const IntervalTiling& t : enumerate_interval_tilings(n)) {
      if (!verify_interval_tiling(t)) {
        detail = "enumerated non-tiling at n = " + std::to_string(n);
        return false;
      }
      if (n == 1) continue;
      if (t.a.back() == t.b.back()) {
        detail = "equal maxima at n = " + std::to_string(n);
        return false;
      }
      DichotomyReport r = check_max_dichotomy(t);
      if (r.period < 1 || r.period >= n) {
        detail = "larger side not periodic at n = " + std::to_string(n);
        return false;
      }
      if (n > 2 * t.a.back()) {
        SubTiling s = extract_subtiling(t);
        if (!(s.t < n && n % s.t == 0 &&
              verify_interval_tiling(IntervalTiling{s.t, t.a, s.b_sub}))) {
          detail = "sub-tiling extraction failed at n = " + std::to_string(n);
          return false;
        }
      }
    }
  }
  return true;
}

bool criterion_cyclic_window_roundtrip(std::string& detail) {
  long long checked = 0;
  for (const TileSet& tile : tiles_up_to_diameter(5)) {
    for (std::int64_t m = 1; m <= 20; ++m) {
      if (3 * m < m + tile.diameter()) continue;  // window precondition
      if (m % static_cast<std::int64_t>(tile.size()) != 0) continue;
      std::int64_t k = m / static_cast<std::int64_t>(tile.size());
      bool failed = false;
      for_each_subset_of_size(m, k, [&](const std::vector<std::int64_t>& subset) {
        if (failed) return;
        CyclicSet complement(m, subset);
        ++checked;
        if (verify_cyclic_tiling(tile, complement) !=
            verify_z_tiling_window(tile, complement, 3 * m))
          failed = true;
      });
      if (failed) {
        detail = "cyclic and window verification disagree at M = " + std::to_string(m);
        return false;
      }
    }
  }
  if (checked < 100000) {
    detail = "sweep unexpectedly small (" + std::to_string(checked) + " pairs)";
    return false;
  }
  return true;
}

bool criterion_certificate_properties(std::string& detail) {
  std::mt19937 rng(1618);
  std::uniform_int_distribution<std::int64_t> diam(1, 40);
  for (int trial = 0; trial < 200; ++trial) {
    TileSet tile = oracle::random_tile(rng, diam(rng));
    Certificate cert = certificate(tile);
    if (cert.phi_sum > tile.diameter()) {
      detail = "phi_sum exceeds the diameter";
      return false;
    }
    if (!cert.t_lcm || !cert.t_prod || *cert.t_prod % *cert.t_lcm != 0) {
      detail = "t_lcm does not divide t_prod";
      return false;
    }
  }
  for (std::int64_t d = 1; d <= 4; ++d) {
    BoundsReport report = report_bounds(d);
    SearchWitness w = compute_T(d);
    if (!report.exhaustive || !report.max_t_lcm ||
        *report.max_t_lcm < static_cast<std::uint64_t>(w.value)) {
      detail = "certificate bound below the searched value at D = " + std::to_string(d);
      return false;
    }
  }
  return true;
}

struct Criterion {
  int id;
  const char* label;
  double budget_seconds;
  std::function<bool(std::string&)> run;
};

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {1, "cyclotomic identity up to n = 200; first coefficient >= 2 at n = 105",
       5.0, criterion_cyclotomic_identity},
      {2, "extremal table T(1..4) = (2,4,6,8), pruned == unpruned brute force",
       60.0, criterion_extremal_table},
      {3, "quadratic construction verified at D in {388, 572, 1000, 2000}",
       30.0, criterion_quadratic_construction},
      {4, "forced periods fix every complement (diameter <= 5, M <= 36)",
       60.0, criterion_forced_period_soundness},
      {5, "interval structure sweep over all tilings with n <= 24",
       60.0, criterion_interval_structure},
      {6, "cyclic == windowed verification at W = 3M (diameter <= 5, M <= 20)",
       60.0, criterion_cyclic_window_roundtrip},
      {7, "certificate properties on 200 random tiles; bound >= T(D) for D <= 4",
       60.0, criterion_certificate_properties},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    std::string detail;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && seconds > c.budget_seconds) {
      ok = false;
      detail = "runtime " + std::to_string(seconds) + " s exceeds the " +
               std::to_string(c.budget_seconds) + " s budget";
    }
    std::printf("%s criterion %d: %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", c.id,
                c.label, seconds, detail.empty() ? "" : " — ", detail.c_str());
    if (!ok) ++failures;
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  else std::printf("all %zu criteria passed\n", criteria.size());
  return failures == 0 ? 0 : 1;
}
