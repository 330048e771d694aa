#pragma once

#include <utility>

#include "confmax/fields.hpp"
#include "confmax/types.hpp"

namespace confmax {

enum class Realization { G, G1 };

/// Defining pairing matrix: [[0, iI],[-iI, 0]] for G, I_{2,2} for G1.
const Matrix4c& pairing_matrix(Realization r);

/// An element of the conformal group U(2,2) in one of its two realizations.
class ConformalElement {
public:
  ConformalElement(const Matrix4c& m, Realization r);

  static ConformalElement identity(Realization r);

  const Matrix4c& matrix() const { return m_; }
  Realization realization() const { return realization_; }

  ConformalElement operator*(const ConformalElement& o) const;
  ConformalElement inverse() const;

private:
  Matrix4c m_;
  Realization realization_;
};

Matrix4c cayley_matrix();  // L = (1/sqrt 2) [[I, iI],[I, -iI]]

/// sigma(g) = L g L*, the isomorphism G -> G1.
ConformalElement cayley(const ConformalElement& g);
/// sigma^{-1}(g) = L* g L, G1 -> G.
ConformalElement cayley_inverse(const ConformalElement& g);

/// [[I,0],[Y,I]] in G (Y Hermitian).
ConformalElement nbar(const Matrix2c& y);
/// [[I,Y],[0,I]] in G (Y Hermitian).
ConformalElement nupper(const Matrix2c& y);
/// diag(g1, g2) in G1 for g1, g2 in U(2); acts by Z -> g1 Z g2^{-1}.
ConformalElement k_element(const Matrix2c& g1, const Matrix2c& g2);
/// diag(aI, a^{-1}I) in G1 for |a| = 1 (the S cap K circle).
ConformalElement s_cap_k_element(Complex a);

// Lie algebra of G1: X I_{2,2} + I_{2,2} X^* = 0 for real directions.
bool in_lie_algebra_g1(const Matrix4c& x, double tol = 1e-10);
/// Real/imaginary parts of an arbitrary complex direction with respect to
/// the real form of G1.
std::pair<Matrix4c, Matrix4c> split_lie_algebra_g1(const Matrix4c& x);
/// Strictly upper-right (p^+) / lower-left (p^-) block generator with a
/// single 1 at position (i,j) of the off-diagonal block, i,j in 0..1.
Matrix4c p_plus_generator(int i, int j);
Matrix4c p_minus_generator(int i, int j);

struct MinkowskiPoint {
  double x1 = 0, x2 = 0, x3 = 0, t = 0;
};

/// Hermitian matrix [[t+x3, x1+ix2],[x1-ix2, t-x3]]; det = (x,x).
Matrix2c hermitian_matrix(const MinkowskiPoint& p);

/// Lorentzian inner product -z1 x1 - z2 x2 - z3 x3 + z4 t.
double minkowski_inner(const Eigen::Vector4d& z, const Eigen::Vector4d& x);

/// The conformal embedding F(p) = (I+iX)(I-iX)^{-1}.
U2Point embed_minkowski(const MinkowskiPoint& p);

/// Conformal factor of the embedding: 4 (1 + 2 sum x_i^2 + (x,x)^2)^{-1}.
double embedding_conformal_factor(const MinkowskiPoint& p);
/// The same factor in the form 4/det(I + X^2).
double embedding_conformal_factor_det(const MinkowskiPoint& p);

/// Tangent map of the embedding: dF_p(v) = F(p) * M, returns M.
Matrix2c embedding_tangent(const MinkowskiPoint& p, const Eigen::Vector4d& v);

/// Fractional-linear action of G1 on U(2): Z -> (AZ+B)(CZ+D)^{-1}.
/// Throws on ill-conditioned CZ+D (condition estimate > 1e8); re-unitarizes
/// small drift by polar projection.
U2Point act(const ConformalElement& g, const U2Point& z);

/// Condition estimate of CZ+D.
double act_condition(const ConformalElement& g, const U2Point& z);

/// Conformal factor det((AZ+B)^{-1}AZ - (CZ+D)^{-1}CZ).
Complex action_conformal_factor(const ConformalElement& g, const U2Point& z);
/// Equivalent expression det((AZ+B)^{-1}B - (CZ+D)^{-1}D).
Complex action_conformal_factor_alt(const ConformalElement& g,
                                    const U2Point& z);

/// Frame images under the action's tangent map: returns M_1..M_4 with
/// dphi_Z(Z x_j) = phi(Z) * M_j.
std::array<Matrix2c, 4> action_tangent_frame(const ConformalElement& g,
                                             const U2Point& z);

/// Pointwise-exact pullback of a form field through the action of g
/// (closed-form tangent map; result is a sampled field).  The potential, if
/// any, is pulled back alongside.
FormField pullback(const ConformalElement& g, const FormField& w);

/// dpi(X) w = -(d/dt)|_0 (exp(tX))^* w by Richardson-extrapolated central
/// differences; complex directions by linearity.
FormField infinitesimal_action(const Matrix4c& x, const FormField& w,
                               double step = 1e-4);

/// Pulls w back through the Minkowski embedding at p and reads off the
/// electric and magnetic field vectors of the 2-form dictionary.
std::pair<Vector3c, Vector3c> extract_EH(const FormField& w,
                                         const MinkowskiPoint& p);

struct PlaneWave {
  Vector3d wave_vec;  // u
  double freq = 0;    // omega, freq^2 = |u|^2
  Vector3c E0, H0;

  Complex phase(const MinkowskiPoint& x) const;
  Vector3c E(const MinkowskiPoint& x) const;
  Vector3c H(const MinkowskiPoint& x) const;
};

/// Builds the plane wave with H0 = -(u x E0)/freq; validates the null and
/// transversality constraints.
PlaneWave plane_wave(const Vector3d& u, double freq, const Vector3c& e0);

/// Value of the light-cone functional z = (k1,k2,k3,omega) on the
/// generator [[0,0],[xI,0]] of Lie(S cap Nbar): the q-coefficient of
/// (1/2) det(Z + q x I); equals omega * x.
double light_cone_functional(const Eigen::Vector4d& z, double x);

}  // namespace confmax
