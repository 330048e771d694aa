#include "confmax/branching.hpp"

#include <sstream>

namespace confmax {

void LaurentPoly::normalize() {
  size_t a = 0, b = c_.size();
  while (b > a && c_[b - 1] == 0) --b;
  while (a < b && c_[a] == 0) ++a;
  if (a > 0 || b < c_.size()) {
    c_ = std::vector<std::int64_t>(c_.begin() + a, c_.begin() + b);
    lo_ += int(a);
  }
  if (c_.empty()) lo_ = 0;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  const int lo = std::min(lo_, o.lo_);
  const int hi = std::max(max_degree(), o.max_degree());
  std::vector<std::int64_t> c(hi - lo + 1, 0);
  for (int d = lo; d <= hi; ++d) c[d - lo] = coeff(d) + o.coeff(d);
  return LaurentPoly(lo, std::move(c));
}

LaurentPoly LaurentPoly::operator-() const {
  std::vector<std::int64_t> c = c_;
  for (auto& v : c) v = -v;
  return LaurentPoly(lo_, std::move(c));
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  return *this + (-o);
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<std::int64_t> c(c_.size() + o.c_.size() - 1, 0);
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
  return LaurentPoly(lo_ + o.lo_, std::move(c));
}

LaurentPoly LaurentPoly::inverted() const {
  std::vector<std::int64_t> c(c_.rbegin(), c_.rend());
  return LaurentPoly(-max_degree(), std::move(c));
}

Complex LaurentPoly::eval(Complex y) const {
  Complex s = 0.0;
  for (size_t i = 0; i < c_.size(); ++i)
    s += double(c_[i]) * ipow(y, lo_ + int(i));
  return s;
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = int(c_.size()) - 1; i >= 0; --i) {
    const std::int64_t v = c_[i];
    if (v == 0) continue;
    const int d = lo_ + i;
    if (!first) os << (v > 0 ? " + " : " - ");
    else if (v < 0) os << "-";
    first = false;
    const std::int64_t a = v > 0 ? v : -v;
    if (a != 1 || d == 0) os << a;
    if (d != 0) {
      if (a != 1) os << "*";
      os << "y";
      if (d != 1) os << "^" << d;
    }
  }
  return os.str();
}

XYSeries XYSeries::zero(int order) {
  XYSeries s;
  s.order_ = order;
  s.coeff_.assign(order + 1, LaurentPoly{});
  return s;
}

XYSeries XYSeries::operator+(const XYSeries& o) const {
  XYSeries s = zero(std::min(order_, o.order_));
  for (int n = 0; n <= s.order_; ++n) s.coeff_[n] = coeff_[n] + o.coeff_[n];
  return s;
}

XYSeries XYSeries::operator-(const XYSeries& o) const {
  XYSeries s = zero(std::min(order_, o.order_));
  for (int n = 0; n <= s.order_; ++n) s.coeff_[n] = coeff_[n] - o.coeff_[n];
  return s;
}

XYSeries XYSeries::operator*(const XYSeries& o) const {
  XYSeries s = zero(std::min(order_, o.order_));
  for (int n = 0; n <= s.order_; ++n)
    for (int i = 0; i <= n; ++i)
      if (!coeff_[i].is_zero() && !o.coeff_[n - i].is_zero())
        s.coeff_[n] = s.coeff_[n] + coeff_[i] * o.coeff_[n - i];
  return s;
}

bool XYSeries::operator==(const XYSeries& o) const {
  if (order_ != o.order_) return false;
  for (int n = 0; n <= order_; ++n)
    if (!(coeff_[n] == o.coeff_[n])) return false;
  return true;
}

void XYSeries::set(int xpow, LaurentPoly p) {
  if (xpow < 0 || xpow > order_) return;
  coeff_[xpow] = std::move(p);
}

XYSeries XYSeries::geometric(int order, int step, const LaurentPoly& ratio) {
  // 1 + r x^step + r^2 x^(2 step) + ...
  XYSeries s = zero(order);
  LaurentPoly acc = LaurentPoly::constant(1);
  for (int n = 0; n <= order; n += step) {
    s.coeff_[n] = acc;
    acc = acc * ratio;
  }
  return s;
}

XYSeries maxw_character_series(int order) {
  if (order < 4) throw std::invalid_argument("maxw_character_series: N >= 4");
  XYSeries s = XYSeries::zero(order);
  for (int k = 0; 2 * k + 4 <= order; ++k)
    s.set(2 * k + 4, su2_character(k + 2) * su2_character(k));
  return s;
}

XYSeries rational_side_series(int order) {
  if (order < 4) throw std::invalid_argument("rational_side_series: N >= 4");
  // x^4 (y^4 - x^2 y^2 + y^2 + 1) / ((1-x^2)(y^2-x^2)(1-x^2 y^2))
  XYSeries num = XYSeries::zero(order);
  num.set(4, LaurentPoly(0, {1, 0, 1, 0, 1}));  // 1 + y^2 + y^4
  num.set(6, -LaurentPoly::monomial(1, 2));     // -x^2 y^2 shifted by x^4
  // 1/(1-x^2) = sum x^(2j)
  const XYSeries inv1 =
      XYSeries::geometric(order, 2, LaurentPoly::constant(1));
  // 1/(y^2-x^2) = y^(-2) sum (x^2 y^(-2))^j
  XYSeries inv2 = XYSeries::geometric(order, 2, LaurentPoly::monomial(1, -2));
  for (int n = 0; n <= order; ++n)
    inv2.set(n, inv2.coeff(n) * LaurentPoly::monomial(1, -2));
  // 1/(1-x^2 y^2) = sum (x^2 y^2)^j
  const XYSeries inv3 =
      XYSeries::geometric(order, 2, LaurentPoly::monomial(1, 2));
  return num * inv1 * inv2 * inv3;
}

XYSeries ladder_sum_series(int order) {
  // sum_{m>=1} chi_{2m}(y) x^(2m+2) / (1-x^2)
  XYSeries s = XYSeries::zero(order);
  for (int m = 1; 2 * m + 2 <= order; ++m) {
    const LaurentPoly ch = su2_character(2 * m);
    for (int n = 2 * m + 2; n <= order; n += 2)
      s.set(n, s.coeff(n) + ch);
  }
  return s;
}

DualPairReport dual_pair_decomposition_check(int order) {
  DualPairReport rep;
  rep.order = order;
  const XYSeries lhs = maxw_character_series(order);
  const XYSeries rhs = ladder_sum_series(order);
  rep.ok = true;
  rep.first_mismatch = -1;
  for (int n = 0; n <= order; ++n) {
    if (!(lhs.coeff(n) == rhs.coeff(n))) {
      rep.ok = false;
      rep.first_mismatch = n;
      break;
    }
  }
  // lowest nonzero power (the a^{-4} character on the Hilbert-space side)
  rep.lowest_power = -1;
  for (int n = 0; n <= order; ++n)
    if (!lhs.coeff(n).is_zero()) {
      rep.lowest_power = n;
      break;
    }
  return rep;
}

XYSeries mirrored_character_series(int order) {
  // Maxw^- carries the same character with the powers of x inverted; we
  // book-keep x^(-n) as x^n in an independent series.
  XYSeries s = XYSeries::zero(order);
  for (int k = 0; 2 * k + 4 <= order; ++k)
    s.set(2 * k + 4, su2_character(k + 2) * su2_character(k));
  return s;
}

}  // namespace confmax
