#pragma once

#include "confmax/laurent.hpp"
#include "confmax/rep_core.hpp"

namespace confmax {

/// Power series in x (truncated at `order`) whose coefficients are integer
/// Laurent polynomials in y.  All arithmetic is exact and respects the
/// truncation order.
class XYSeries {
public:
  static XYSeries zero(int order);
  /// 1 + r x^step + r^2 x^(2 step) + ... truncated at `order`.
  static XYSeries geometric(int order, int step, const LaurentPoly& ratio);

  int order() const { return order_; }
  const LaurentPoly& coeff(int xpow) const { return coeff_.at(xpow); }
  void set(int xpow, LaurentPoly p);

  XYSeries operator+(const XYSeries& o) const;
  XYSeries operator-(const XYSeries& o) const;
  XYSeries operator*(const XYSeries& o) const;
  bool operator==(const XYSeries& o) const;

private:
  int order_ = 0;
  std::vector<LaurentPoly> coeff_;
};

/// Character of Maxw_{2,0}^+ as a C x S cap K module:
/// sum_k chi_{k+2}(y) chi_k(y) x^(2k+4), truncated at `order`.
XYSeries maxw_character_series(int order);

/// Expansion of x^4 (y^4 - x^2 y^2 + y^2 + 1) /
/// ((1-x^2)(y^2-x^2)(1-x^2 y^2)) to `order`.
XYSeries rational_side_series(int order);

/// sum_{m>=1} chi_{2m}(y) x^(2m+2)/(1-x^2): the spherical-harmonics (x)
/// discrete-series ladder side of the branching identity.
XYSeries ladder_sum_series(int order);

/// Character of the mirrored family Maxw^- whose x-powers are inverted;
/// book-kept in the variable w = 1/x so all powers are nonnegative.
XYSeries mirrored_character_series(int order);

struct DualPairReport {
  int order = 0;
  bool ok = false;
  int first_mismatch = -1;  // -1 when ok
  int lowest_power = -1;    // lowest nonzero x-power of the character
};

/// Verifies Ch(Maxw_{2,0}^+) against the ladder decomposition to `order`.
DualPairReport dual_pair_decomposition_check(int order);

}  // namespace confmax
