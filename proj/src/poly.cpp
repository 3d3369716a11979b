#include "ztile/poly.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "ztile/numth.hpp"

namespace ztile {

IntPoly::IntPoly(std::vector<std::int64_t> coeffs) : c_(std::move(coeffs)) {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::constant(std::int64_t c) { return IntPoly({c}); }

IntPoly IntPoly::x_pow_minus_one(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("x_pow_minus_one: n must be >= 1");
  std::vector<std::int64_t> c(static_cast<std::size_t>(n) + 1, 0);
  c.front() = -1;
  c.back() = 1;
  return IntPoly(std::move(c));
}

std::int64_t IntPoly::coeff(std::int64_t i) const {
  if (i < 0 || i >= static_cast<std::int64_t>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(i)];
}

std::int64_t IntPoly::leading() const {
  return c_.empty() ? 0 : c_.back();
}

std::string IntPoly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::int64_t i = degree(); i >= 0; --i) {
    std::int64_t v = coeff(i);
    if (v == 0) continue;
    if (first) {
      if (v < 0) out << "-";
    } else {
      out << (v < 0 ? " - " : " + ");
    }
    std::int64_t mag = v < 0 ? -v : v;
    if (mag != 1 || i == 0) out << mag;
    if (i >= 1) out << "x";
    if (i >= 2) out << "^" << i;
    first = false;
  }
  return out.str();
}

IntPoly mask_poly(const TileSet& tile) {
  std::vector<std::int64_t> c(static_cast<std::size_t>(tile.diameter()) + 1, 0);
  for (std::int64_t a : tile.elements()) c[static_cast<std::size_t>(a)] = 1;
  return IntPoly(std::move(c));
}

IntPoly poly_mul(const IntPoly& p, const IntPoly& q) {
  if (p.is_zero() || q.is_zero()) return IntPoly();
  std::vector<std::int64_t> out(p.coeffs().size() + q.coeffs().size() - 1, 0);
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    std::int64_t pi = p.coeffs()[i];
    if (pi == 0) continue;
    for (std::size_t j = 0; j < q.coeffs().size(); ++j)
      out[i + j] += pi * q.coeffs()[j];
  }
  return IntPoly(std::move(out));
}

DivRem poly_divrem(const IntPoly& p, const IntPoly& q) {
  if (q.is_zero()) throw std::invalid_argument("poly_divrem: zero divisor");
  if (q.leading() != 1) throw std::invalid_argument("poly_divrem: divisor must be monic");
  std::vector<std::int64_t> rem = p.coeffs();
  std::int64_t dq = q.degree();
  std::int64_t dp = p.degree();
  if (dp < dq) return {IntPoly(), p};
  std::vector<std::int64_t> quot(static_cast<std::size_t>(dp - dq) + 1, 0);
  for (std::int64_t i = dp; i >= dq; --i) {
    std::int64_t f = rem[static_cast<std::size_t>(i)];
    if (f == 0) continue;
    quot[static_cast<std::size_t>(i - dq)] = f;
    for (std::int64_t j = 0; j <= dq; ++j)
      rem[static_cast<std::size_t>(i - dq + j)] -= f * q.coeffs()[static_cast<std::size_t>(j)];
  }
  return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

namespace {

std::mutex cyclotomic_mutex;
std::map<std::int64_t, IntPoly>& cyclotomic_cache() {
  static std::map<std::int64_t, IntPoly> cache;
  return cache;
}

// Fills the cache for every divisor of n, smallest first, so each entry
// only depends on entries already present.
const IntPoly& cyclotomic_locked(std::int64_t n) {
  auto& cache = cyclotomic_cache();
  for (std::int64_t d : divisors(n)) {
    if (cache.count(d)) continue;
    IntPoly p = IntPoly::x_pow_minus_one(d);
    for (std::int64_t e : divisors(d)) {
      if (e == d) continue;
      DivRem dr = poly_divrem(p, cache.at(e));
      if (!dr.remainder.is_zero())
        throw std::logic_error("cyclotomic: inexact division");
      p = std::move(dr.quotient);
    }
    cache.emplace(d, std::move(p));
  }
  return cache.at(n);
}

}  // namespace

IntPoly cyclotomic(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("cyclotomic: n must be >= 1");
  std::lock_guard<std::mutex> lock(cyclotomic_mutex);
  return cyclotomic_locked(n);
}

bool divides_cyclotomic(std::int64_t s, const IntPoly& p) {
  if (s < 2) throw std::invalid_argument("divides_cyclotomic: s must be >= 2");
  if (p.is_zero()) throw std::invalid_argument("divides_cyclotomic: zero polynomial");
  IntPoly phi = cyclotomic(s);
  if (p.degree() < phi.degree()) return false;
  return poly_divrem(p, phi).remainder.is_zero();
}

std::vector<std::int64_t> cyclotomic_divisor_set(const TileSet& tile) {
  std::vector<std::int64_t> out;
  std::int64_t d = tile.diameter();
  if (d == 0) return out;
  // phi(s) <= D is necessary (degrees), and phi(s) >= sqrt(s/2) bounds
  // the candidates by 2*D^2 + 1.
  std::int64_t limit = 2 * d * d + 1;
  std::vector<std::int64_t> phi = euler_phi_table(limit);
  IntPoly mask = mask_poly(tile);
  for (std::int64_t s = 2; s <= limit; ++s) {
    if (phi[static_cast<std::size_t>(s)] > d) continue;
    if (divides_cyclotomic(s, mask)) out.push_back(s);
  }
  return out;
}

}  // namespace ztile
