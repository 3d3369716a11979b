#include "ztile/interval.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>

#include "ztile/numth.hpp"

namespace ztile {

namespace {

void require_tiling(const IntervalTiling& t, const char* who) {
  if (auto w = interval_tiling_witness(t))
    throw std::invalid_argument(std::string(who) + ": not a tiling of [n] (point " +
                                std::to_string(w->point) + " covered " +
                                std::to_string(w->count) + " times)");
}

// Try to read `filled` as m*E + [m] and `scaled` as m*Dset with
// E (+) Dset = [n/m].
std::optional<LongDecomposition> try_assignment(const IntervalTiling& t,
                                                std::int64_t m, Side filled_side) {
  const auto& filled = filled_side == Side::A ? t.a : t.b;
  const auto& scaled = filled_side == Side::A ? t.b : t.a;

  std::vector<std::int64_t> dset;
  dset.reserve(scaled.size());
  for (std::int64_t v : scaled) {
    if (v % m != 0) return std::nullopt;
    dset.push_back(v / m);
  }

  std::vector<std::int64_t> base;
  for (std::int64_t v : filled)
    if (v % m == 0) base.push_back(v / m);
  if (base.size() * static_cast<std::size_t>(m) != filled.size()) return std::nullopt;

  // Reconstruct m*E + [m] and compare; (e, r) pairs map to distinct values.
  std::vector<std::int64_t> rebuilt;
  rebuilt.reserve(filled.size());
  for (std::int64_t e : base)
    for (std::int64_t r = 0; r < m; ++r) rebuilt.push_back(m * e + r);
  std::sort(rebuilt.begin(), rebuilt.end());
  if (rebuilt != filled) return std::nullopt;

  IntervalTiling sub{t.n / m, base, dset};
  if (!verify_interval_tiling(sub)) return std::nullopt;
  return LongDecomposition{t.n, m, std::move(base), std::move(dset), filled_side};
}

}  // namespace

LongDecomposition long_decompose(const IntervalTiling& t) {
  require_tiling(t, "long_decompose");
  if (t.n <= 1) throw std::invalid_argument("long_decompose: requires n > 1");
  for (std::int64_t m : divisors(t.n)) {
    if (m < 2) continue;
    if (auto d = try_assignment(t, m, Side::A)) return *d;
    if (auto d = try_assignment(t, m, Side::B)) return *d;
  }
  throw std::logic_error("long_decompose: no decomposition found for a valid tiling");
}

std::vector<LongDecomposition> decomposition_tree(const IntervalTiling& t) {
  require_tiling(t, "decomposition_tree");
  std::vector<LongDecomposition> chain;
  IntervalTiling cur = t;
  while (cur.n > 1) {
    LongDecomposition d = long_decompose(cur);
    cur = IntervalTiling{cur.n / d.m, d.e, d.dset};
    chain.push_back(std::move(d));
  }
  return chain;
}

namespace {

bool shifts_onto_self_mod(const std::vector<std::int64_t>& elems, std::int64_t t,
                          std::int64_t n) {
  for (std::int64_t v : elems)
    if (!std::binary_search(elems.begin(), elems.end(), (v + t) % n)) return false;
  return true;
}

// The period of the larger-max side obtained by multiplying the m values
// down the decomposition chain, mirroring the inductive argument.
std::int64_t decomposition_route_period(const IntervalTiling& t) {
  LongDecomposition d = long_decompose(t);
  if (d.m == t.n) return 1;  // full side is [n], shifted onto itself by anything
  return d.m * decomposition_route_period(IntervalTiling{t.n / d.m, d.e, d.dset});
}

}  // namespace

DichotomyReport check_max_dichotomy(const IntervalTiling& t) {
  require_tiling(t, "check_max_dichotomy");
  if (t.n <= 1) throw std::invalid_argument("check_max_dichotomy: requires n > 1");
  DichotomyReport report;
  report.max_a = t.a.back();
  report.max_b = t.b.back();
  if (report.max_a == report.max_b)
    throw std::logic_error("check_max_dichotomy: equal maxima in a valid tiling");
  report.larger = report.max_a > report.max_b ? Side::A : Side::B;
  const auto& side = report.larger == Side::A ? t.a : t.b;

  report.period = 0;
  for (std::int64_t shift = 1; shift < t.n; ++shift) {
    if (shifts_onto_self_mod(side, shift, t.n)) {
      report.period = shift;
      break;
    }
  }
  if (report.period == 0)
    throw std::logic_error("check_max_dichotomy: larger side has no period below n");

  report.decomposition_period = decomposition_route_period(t);
  if (report.decomposition_period <= 0 || report.decomposition_period >= t.n ||
      !shifts_onto_self_mod(side, report.decomposition_period, t.n))
    throw std::logic_error("check_max_dichotomy: decomposition route gave a non-period");
  return report;
}

SubTiling extract_subtiling(const IntervalTiling& t) {
  require_tiling(t, "extract_subtiling");
  if (t.n <= 1)
    throw std::invalid_argument("extract_subtiling: requires n > 1");
  std::int64_t diam_a = t.a.back();
  if (t.n <= 2 * diam_a)
    throw std::invalid_argument(
        "extract_subtiling: requires n > 2*diameter(A) (got n = " +
        std::to_string(t.n) + ", diameter " + std::to_string(diam_a) + ")");
  // n > 2 diam(A) forces max B > max A, so B is periodic mod n; its least
  // period divides n and cuts out a sub-tiling.
  std::int64_t period = least_period_cyclic(CyclicSet(t.n, t.b));
  if (period >= t.n)
    throw std::logic_error("extract_subtiling: complement side is not periodic");
  std::vector<std::int64_t> b_sub;
  for (std::int64_t b : t.b)
    if (b < period) b_sub.push_back(b);
  IntervalTiling sub{period, t.a, b_sub};
  if (!verify_interval_tiling(sub))
    throw std::logic_error("extract_subtiling: truncated complement does not tile");
  return SubTiling{period, std::move(b_sub)};
}

namespace {

// Depth-first enumeration: decide membership of each x in 1..n-1 (in A,
// in B, or neither), keeping the pair-coverage counts exact as we go.
// Once x is decided every pair summing to x is known, so cover[x] == 1
// can be enforced immediately.
class IntervalEnumerator {
 public:
  explicit IntervalEnumerator(std::int64_t n) : n_(n), cover_(static_cast<std::size_t>(n), 0) {
    a_.push_back(0);
    b_.push_back(0);
    cover_[0] = 1;
  }

  std::vector<IntervalTiling> run() {
    descend(1);
    std::sort(results_.begin(), results_.end(),
              [](const IntervalTiling& x, const IntervalTiling& y) {
                return x.a != y.a ? x.a < y.a : x.b < y.b;
              });
    return results_;
  }

 private:
  void descend(std::int64_t x) {
    if (x == n_) {
      results_.push_back(IntervalTiling{n_, a_, b_});
      return;
    }
    if (cover_[static_cast<std::size_t>(x)] == 1) {
      descend(x + 1);  // x already covered: it can join neither side
      return;
    }
    // x uncovered: it must enter exactly one side, pairing with the 0 of
    // the other. All new sums x + v must land inside [n] and on
    // previously uncovered points.
    try_side(x, a_, b_);
    try_side(x, b_, a_);
  }

  void try_side(std::int64_t x, std::vector<std::int64_t>& mine,
                const std::vector<std::int64_t>& other) {
    for (std::int64_t v : other) {
      std::int64_t s = x + v;
      if (s >= n_ || (v > 0 && cover_[static_cast<std::size_t>(s)] != 0)) return;
    }
    for (std::int64_t v : other) ++cover_[static_cast<std::size_t>(x + v)];
    mine.push_back(x);
    descend(x + 1);
    mine.pop_back();
    for (std::int64_t v : other) --cover_[static_cast<std::size_t>(x + v)];
  }

  std::int64_t n_;
  std::vector<int> cover_;
  std::vector<std::int64_t> a_, b_;
  std::vector<IntervalTiling> results_;
};

}  // namespace

std::vector<IntervalTiling> enumerate_interval_tilings(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("enumerate_interval_tilings: n must be >= 1");
  return IntervalEnumerator(n).run();
}

}  // namespace ztile
