#pragma once

#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

namespace confmax {

using Complex = std::complex<double>;
using Matrix2c = Eigen::Matrix2cd;
using Matrix4c = Eigen::Matrix4cd;
using Vector3d = Eigen::Vector3d;
using Vector3c = Eigen::Vector3cd;

inline constexpr Complex kI{0.0, 1.0};
inline constexpr double kPi = 3.14159265358979323846;

/// A point of compactified Minkowski space, stored as a 2x2 unitary matrix.
class U2Point {
public:
  explicit U2Point(const Matrix2c& m) : m_(m) {
    const double drift = (m * m.adjoint() - Matrix2c::Identity()).norm();
    if (drift > 1e-10) {
      throw std::invalid_argument("U2Point: matrix is not unitary (drift " +
                                  std::to_string(drift) + ")");
    }
  }

  static U2Point identity() { return U2Point(Matrix2c::Identity()); }

  const Matrix2c& matrix() const { return m_; }

private:
  Matrix2c m_;
};

/// Integer power of a complex number (supports negative exponents).
inline Complex ipow(Complex z, int n) {
  if (n < 0) return 1.0 / ipow(z, -n);
  Complex r = 1.0;
  while (n > 0) {
    if (n & 1) r *= z;
    z *= z;
    n >>= 1;
  }
  return r;
}

inline double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r = r * double(n - i) / double(i + 1);
  return r;
}

}  // namespace confmax
