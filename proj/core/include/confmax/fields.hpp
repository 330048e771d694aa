#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "confmax/geometry.hpp"
#include "confmax/rep_core.hpp"
#include "confmax/types.hpp"

namespace confmax {

/// A smooth function on U(2): either an exact finite sum of matrix
/// coefficients (closed under left-invariant differentiation) or a
/// black-box evaluator.
class ScalarField {
public:
  ScalarField() = default;  // zero
  ScalarField(MatrixCoeffFn term) : terms_{std::move(term)} {}
  explicit ScalarField(std::vector<MatrixCoeffFn> terms)
      : terms_(std::move(terms)) {}

  static ScalarField constant(Complex c);
  static ScalarField generic(std::function<Complex(const U2Point&)> f);

  bool is_exact() const { return !generic_; }
  bool is_zero() const { return is_exact() && terms_.empty(); }
  /// True when the field is an exact constant; fills *value if non-null.
  bool constant_value(Complex* value) const;

  Complex eval(const U2Point& u) const;

  /// Exact left-invariant derivative x^L (throws on black-box fields).
  ScalarField derivative(const Matrix2c& x) const;

  ScalarField conjugated() const;

  ScalarField operator+(const ScalarField& o) const;
  ScalarField operator*(const ScalarField& o) const;
  ScalarField scaled(Complex c) const;

private:
  std::vector<MatrixCoeffFn> terms_;
  std::function<Complex(const U2Point&)> generic_;
};

/// Lexicographically ordered multi-index masks for a given grade
/// (bit j-1 set means the coframe axis alpha_j participates).
const std::vector<unsigned>& grade_masks(int grade);

/// Sign of alpha_{maskA} ^ alpha_{maskB}; returns 0 when they collide.
int wedge_sign(unsigned maskA, unsigned maskB);

/// A complex form field on U(2) given by coefficients against the invariant
/// coframe, either exact (matrix-coefficient functions) or sampled
/// (black-box pointwise evaluator, used for pullbacks).
class FormField {
public:
  FormField() = default;  // zero 0-form

  static FormField exact(int grade, std::map<unsigned, ScalarField> coeffs);
  static FormField sampled(
      int grade, std::function<Eigen::VectorXcd(const U2Point&)> eval);

  int grade() const { return grade_; }
  bool has_exact_coeffs() const { return !sampler_; }

  /// Coefficient vector in the canonical basis order of grade_masks(grade).
  Eigen::VectorXcd coefficients(const U2Point& u) const;

  const std::map<unsigned, ScalarField>& exact_coeffs() const;

  /// Value on tangent vectors given by their frame-coordinate rows.
  Complex value_on(const U2Point& u,
                   const std::vector<Eigen::Vector4cd>& vectors) const;

  FormField operator+(const FormField& o) const;
  FormField scaled(Complex c) const;
  FormField conjugated() const;

  /// Optional exact/transported potential (d potential = this field).
  std::shared_ptr<const FormField> potential;

private:
  int grade_ = 0;
  std::map<unsigned, ScalarField> coeffs_;
  std::function<Eigen::VectorXcd(const U2Point&)> sampler_;
};

/// Transforms coefficients under a linear tangent map: c(j,i) holds the
/// frame coordinates of the image of frame vector j.
Eigen::VectorXcd transform_coefficients(int grade,
                                        const Eigen::VectorXcd& coeffs,
                                        const Matrix4c& c);

// The invariant coframe and the derived sl2-dual combinations
// alpha_h^L = i a1, alpha_f^L = -(a2 - i a3), alpha_e^L = a2 + i a3.
FormField coframe_alpha(int j);
FormField coframe_h_L();
FormField coframe_f_L();
FormField coframe_e_L();

/// One-form f * alpha  for an exact scalar f and an exact one-form alpha
/// with constant coefficients.
FormField scalar_times(const ScalarField& f, const FormField& alpha);

/// Exterior derivative; exact path only (throws a "needs finite
/// differences" error on sampled coefficients).
FormField exterior_derivative(const FormField& w);

/// Graded wedge product (pointwise; result is a sampled field unless one
/// factor has constant coefficients).
FormField wedge(const FormField& a, const FormField& b);

/// Pullback through the inversion eta(u) = u^{-1}.
FormField inversion_pullback(const FormField& w);

struct MaxwellBasisLabel {
  int k = 0;
  enum class Side { L, R } side = Side::L;
  int sign = +1;  // l = sign * (k+2)

  KType ktype() const {
    return side == Side::L ? KType(k, k + 2, sign * (k + 2))
                           : KType(k + 2, k, sign * (k + 2));
  }
  /// J-eigenvalue sign on this family: +1 for Maxw_i, -1 for Maxw_{-i}.
  int eigen_sign() const { return side == Side::L ? -sign : sign; }
};

/// Basis solution for the given label, with the potential attached.
/// Side R is realized as the inversion pullback of the matching side-L
/// solution.
FormField maxwell_basis(const MaxwellBasisLabel& label);

/// The full (3-dimensional) k=0 isotypic component of the labeled family;
/// each element carries its potential.
std::vector<FormField> maxwell_k0_ktype_basis(MaxwellBasisLabel::Side side,
                                              int sign);

struct JClassification {
  bool is_maxwell = false;
  int eigen_sign = 0;  // +1 / -1 when is_maxwell
  double residual_plus = 0.0;
  double residual_minus = 0.0;
};

/// Classifies d(psi_{k,l} alpha_f^L) by its J-eigenspace projections at
/// sampled points.
JClassification j_classification(int k, int l, int samples = 25,
                                 double tol = 1e-10);

/// Same pointwise classification for an arbitrary 2-form field.
JClassification classify_two_form(const FormField& w, int samples = 25,
                                  double tol = 1e-10,
                                  std::uint64_t seed = 12345);

}  // namespace confmax
