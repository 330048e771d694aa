#pragma once

#include <array>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "confmax/types.hpp"

namespace confmax {

class FormField;

using Vector6c = Eigen::Matrix<Complex, 6, 1>;
using Matrix6c = Eigen::Matrix<Complex, 6, 6>;

// Pseudo-orthonormal frame of u(2): x1 = diag(i,-i), x2 = [[0,1],[-1,0]],
// x3 = [[0,i],[i,0]], x4 = iI, with signature (-1,-1,-1,+1).
const Matrix2c& frame_matrix(int j);  // j = 1..4
double frame_epsilon(int j);

/// Coordinates of an arbitrary complex 2x2 matrix in the frame x1..x4
/// (a basis of M_2(C) over C).
Eigen::Vector4cd frame_coordinates(const Matrix2c& m);

/// Complex-bilinear extension of the metric: polarization of -det.
Complex metric_bilinear(const Matrix2c& x, const Matrix2c& y);

/// The Lorentzian metric on tangent vectors at any point, transported to
/// u(2).  Inputs must be skew-Hermitian (checked to 1e-10).
double metric_on_tangent(const Matrix2c& x, const Matrix2c& y);

// 2-forms are stored as 6 coefficients against the ordered basis
// a1^a2, a1^a3, a1^a4, a2^a3, a2^a4, a3^a4 (a_j the invariant coframe).
int two_form_index(int a, int b);  // 1 <= a < b <= 4

/// The Hodge star J on 2-forms as a constant 6x6 matrix.
const Matrix6c& hodge_star_matrix();
Vector6c hodge_star(const Vector6c& v);

/// Projector onto the (+i) or (-i) eigenspace of J (sign = +1 or -1).
const Matrix6c& star_eigen_projector(int sign);

/// The basis B_{+i} / B_{-i} of the J-eigenspaces.
std::array<Vector6c, 3> star_eigen_basis(int sign);

/// Haar-uniform sampling on SU(2) and U(2).
class HaarSampler {
public:
  explicit HaarSampler(std::uint64_t seed) : rng_(seed) {}
  U2Point su2();
  U2Point u2();
  double uniform(double a, double b);
  double normal();

private:
  std::mt19937_64 rng_;
};

struct QuadratureNode {
  double phi, theta, psi;  // Euler angles
  double weight;           // weights sum to 1 (normalized Haar)
  Matrix2c u;
};

/// Deterministic Euler-angle product grid on SU(2): trapezoid nodes in the
/// two periodic angles, Gauss-Legendre in cos(theta).  Exact for matrix
/// coefficients of S^k with total degree k < order.
class Su2Grid {
public:
  explicit Su2Grid(int order);

  int order() const { return order_; }
  const std::vector<QuadratureNode>& nodes() const { return nodes_; }

  /// Grid average of f against normalized Haar measure.
  Complex average(const std::function<Complex(const U2Point&)>& f) const;

  /// JSON record of node angles and weights, for reproducibility.
  std::string to_json() const;

private:
  int order_;
  std::vector<QuadratureNode> nodes_;
};

/// Integral of a 3-form over SU(2), oriented so that
/// integral of a1^a2^a3 is +2 pi^2.
Complex integrate_threeform_su2(const FormField& w, const Su2Grid& grid);

/// Gauss-Legendre nodes/weights on [-1,1].
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w);

/// Number of worker threads (CONFMAX_THREADS env var, default 1x hardware).
int worker_threads();

}  // namespace confmax
