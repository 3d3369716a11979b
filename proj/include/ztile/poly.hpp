#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ztile/tiling.hpp"

namespace ztile {

/// Exact integer-coefficient polynomial. coeffs()[i] is the coefficient
/// of x^i; the zero polynomial is the empty sequence, otherwise the
/// leading coefficient is nonzero.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<std::int64_t> coeffs);

  static IntPoly constant(std::int64_t c);
  static IntPoly x_pow_minus_one(std::int64_t n);  // x^n - 1

  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  std::int64_t degree() const { return static_cast<std::int64_t>(c_.size()) - 1; }
  std::int64_t coeff(std::int64_t i) const;
  std::int64_t leading() const;
  const std::vector<std::int64_t>& coeffs() const { return c_; }

  bool operator==(const IntPoly&) const = default;

  std::string to_string() const;

 private:
  std::vector<std::int64_t> c_;
};

/// Mask polynomial of a tile: coefficient i is 1 iff i is in the tile.
IntPoly mask_poly(const TileSet& tile);

IntPoly poly_mul(const IntPoly& p, const IntPoly& q);

struct DivRem {
  IntPoly quotient;
  IntPoly remainder;
};

/// Exact division with remainder over Z. q must be monic and nonzero.
DivRem poly_divrem(const IntPoly& p, const IntPoly& q);

/// n-th cyclotomic polynomial, built by repeated exact division of
/// x^n - 1 by the lower cyclotomics. Memoized; safe to call concurrently.
IntPoly cyclotomic(std::int64_t n);

/// Whether Phi_s divides p exactly over Z. Requires s >= 2 and p != 0.
bool divides_cyclotomic(std::int64_t s, const IntPoly& p);

/// All s > 1 with Phi_s dividing the tile's mask polynomial, ascending.
/// The scan covers s in [2, 2*D^2 + 1] filtered by phi(s) <= D, which is
/// exhaustive because phi(s) >= sqrt(s/2).
std::vector<std::int64_t> cyclotomic_divisor_set(const TileSet& tile);

}  // namespace ztile
