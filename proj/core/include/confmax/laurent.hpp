#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "confmax/types.hpp"

namespace confmax {

/// Integer Laurent polynomial, dense coefficients with an explicit offset:
/// p(y) = sum_i c[i] * y^(lo+i).  All arithmetic is exact.
class LaurentPoly {
public:
  LaurentPoly() = default;
  LaurentPoly(int lo, std::vector<std::int64_t> c) : lo_(lo), c_(std::move(c)) {
    normalize();
  }

  static LaurentPoly monomial(std::int64_t coeff, int degree) {
    return LaurentPoly(degree, {coeff});
  }
  static LaurentPoly constant(std::int64_t v) { return monomial(v, 0); }

  bool is_zero() const { return c_.empty(); }
  int min_degree() const { return lo_; }
  int max_degree() const { return lo_ + int(c_.size()) - 1; }

  std::int64_t coeff(int degree) const {
    const int i = degree - lo_;
    if (i < 0 || i >= int(c_.size())) return 0;
    return c_[i];
  }

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  bool operator==(const LaurentPoly& o) const {
    return lo_ == o.lo_ && c_ == o.c_;
  }

  /// Substitute y -> 1/y.
  LaurentPoly inverted() const;

  Complex eval(Complex y) const;

  std::string to_string() const;

private:
  void normalize();

  int lo_ = 0;
  std::vector<std::int64_t> c_;
};

}  // namespace confmax
