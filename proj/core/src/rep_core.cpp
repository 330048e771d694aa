#include "confmax/rep_core.hpp"

#include <algorithm>

namespace confmax {

Matrix2c sl2_e() {
  Matrix2c m;
  m << 0, 1, 0, 0;
  return m;
}

Matrix2c sl2_f() {
  Matrix2c m;
  m << 0, 0, 1, 0;
  return m;
}

Matrix2c sl2_h() {
  Matrix2c m;
  m << 1, 0, 0, -1;
  return m;
}

Matrix2c central_x4() { return kI * Matrix2c::Identity(); }

Eigen::MatrixXcd sym_power_matrix(int k, const Matrix2c& u) {
  if (k < 0) throw std::invalid_argument("sym_power_matrix: k < 0");
  Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(k + 1, k + 1);
  // Column a is the monomial expansion of
  //   (u11 z1 + u21 z2)^(k-a) (u12 z1 + u22 z2)^a.
  for (int a = 0; a <= k; ++a) {
    std::vector<Complex> poly{1.0};  // coefficients in z2-degree
    auto mul_linear = [&poly](Complex c1, Complex c2) {
      std::vector<Complex> out(poly.size() + 1, 0.0);
      for (size_t i = 0; i < poly.size(); ++i) {
        out[i] += poly[i] * c1;
        out[i + 1] += poly[i] * c2;
      }
      poly = std::move(out);
    };
    for (int t = 0; t < k - a; ++t) mul_linear(u(0, 0), u(1, 0));
    for (int t = 0; t < a; ++t) mul_linear(u(0, 1), u(1, 1));
    for (int b = 0; b <= k; ++b) s(b, a) = poly[b];
  }
  return s;
}

Eigen::MatrixXcd dsym_power(int k, const Matrix2c& x) {
  Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(k + 1, k + 1);
  // x acts as a derivation: z1 -> x11 z1 + x21 z2, z2 -> x12 z1 + x22 z2.
  // Basis index i is the monomial z1^(k-i) z2^i.
  for (int i = 0; i <= k; ++i) {
    const int p = k - i, q = i;
    d(i, i) += double(p) * x(0, 0) + double(q) * x(1, 1);
    if (i + 1 <= k) d(i + 1, i) += double(p) * x(1, 0);
    if (i - 1 >= 0) d(i - 1, i) += double(q) * x(0, 1);
  }
  return d;
}

Complex sym_power_inner(int k, const Eigen::VectorXcd& a,
                        const Eigen::VectorXcd& b) {
  Complex s = 0.0;
  for (int i = 0; i <= k; ++i) s += a(i) * std::conj(b(i)) / binomial(k, i);
  return s;
}

Complex MatrixCoeffFn::eval(const Matrix2c& v) const {
  const Complex d = ipow(v.determinant(), det_power);
  return d * sym_power_inner(k, sym_power_matrix(k, v) * left, right);
}

MatrixCoeffFn MatrixCoeffFn::derivative(const Matrix2c& x) const {
  // d/dt [det(u e^{tx})^m <S^k(u e^{tx}) L, R>]|_0
  //   = det(u)^m <S^k(u) (m tr(x) L + dS^k(x) L), R>.
  MatrixCoeffFn out = *this;
  out.left = double(det_power) * x.trace() * left + dsym_power(k, x) * left;
  return out;
}

MatrixCoeffFn MatrixCoeffFn::scaled(Complex c) const {
  MatrixCoeffFn out = *this;
  out.left = c * left;
  return out;
}

MatrixCoeffFn psi(int k, int l) {
  if (k < 0) throw std::invalid_argument("psi: k < 0");
  if (((l - k) % 2 + 2) % 2 != 0)
    throw std::invalid_argument("psi: requires l == k (mod 2)");
  MatrixCoeffFn f;
  f.k = k;
  f.det_power = (l - k) / 2;
  f.left = Eigen::VectorXcd::Zero(k + 1);
  f.right = Eigen::VectorXcd::Zero(k + 1);
  f.left(0) = 1.0;   // e1^k
  f.right(k) = 1.0;  // e2^k
  return f;
}

LaurentPoly su2_character(int k) {
  std::vector<std::int64_t> c;
  for (int j = 0; j <= 2 * k; ++j) c.push_back(j % 2 == 0 ? 1 : 0);
  return LaurentPoly(-k, std::move(c));
}

Complex su2_character(int k, Complex y) {
  Complex s = 0.0;
  for (int j = 0; j <= k; ++j) s += ipow(y, k - 2 * j);
  return s;
}

std::vector<KType> tensor_decompose(const KType& a, const KType& b) {
  std::vector<KType> out;
  for (int p = std::abs(a.p - b.p); p <= a.p + b.p; p += 2)
    for (int q = std::abs(a.q - b.q); q <= a.q + b.q; q += 2)
      out.emplace_back(p, q, a.r + b.r);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<MLabel> restrict_to_M(const KType& a) {
  std::vector<MLabel> out;
  for (int j = 0; j <= std::min(a.p, a.q); ++j)
    out.push_back({a.p + a.q - 2 * j, a.r});
  return out;
}

int omega1_multiplicity(const KType& a) {
  // Frobenius: dim Hom_M(F^{p,q,r}, F^{0,0}) + dim Hom_M(F^{p,q,r}, F^{2,0}),
  // each computed from the restriction formula.
  int mult = 0;
  for (const MLabel& m : restrict_to_M(a)) {
    if (m.n == 0) ++mult;
    if (m.n == 2) ++mult;
  }
  return mult;
}

int ker_d_multiplicity(const KType& a) {
  // The closed 1-forms account for one copy of each F^{p,p,r}; the rest of
  // Omega^1 maps bijectively onto ker d on 2-forms.
  return omega1_multiplicity(a) - (a.p == a.q ? 1 : 0);
}

std::vector<KType> ker_d_ktypes(int maxK, int rMax) {
  std::vector<KType> out;
  for (int k = 0; k <= maxK; ++k) {
    for (int r = -rMax; r <= rMax; ++r) {
      // each family carries the parity class r == q (mod 2)
      if (((r - k) % 2 + 2) % 2 == 0) {
        out.emplace_back(k + 2, k, r);
        out.emplace_back(k, k + 2, r);
      } else {
        out.emplace_back(k + 1, k + 1, r);
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace confmax
