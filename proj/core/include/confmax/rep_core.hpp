#pragma once

#include <vector>

#include "confmax/laurent.hpp"
#include "confmax/types.hpp"

namespace confmax {

/// Label (p,q,r) of the irreducible K_1 = SU(2) x U(2) representation
/// tau_{p,q,r} on S^p(C^2) (x) S^q(C^2), with the lifting condition
/// r == q (mod 2).
struct KType {
  int p = 0;
  int q = 0;
  int r = 0;

  KType() = default;
  KType(int p_, int q_, int r_) : p(p_), q(q_), r(r_) {
    if (p < 0 || q < 0) throw std::invalid_argument("KType: p,q must be >= 0");
    if (((r - q) % 2 + 2) % 2 != 0)
      throw std::invalid_argument("KType: requires r == q (mod 2)");
  }

  int dim() const { return (p + 1) * (q + 1); }

  bool operator==(const KType& o) const {
    return p == o.p && q == o.q && r == o.r;
  }
  bool operator<(const KType& o) const {
    if (p != o.p) return p < o.p;
    if (q != o.q) return q < o.q;
    return r < o.r;
  }
};

/// Label (n, r) of the SU(2) x S^1 representation F^{n,r}.
struct MLabel {
  int n = 0;
  int r = 0;
  bool operator==(const MLabel& o) const { return n == o.n && r == o.r; }
  bool operator<(const MLabel& o) const {
    return n != o.n ? n < o.n : r < o.r;
  }
};

// Standard sl(2,C) basis obtained from the frame:
// e = (x2 - i x3)/2, f = -(x2 + i x3)/2, h = -i x1, plus the central x4 = iI.
Matrix2c sl2_e();
Matrix2c sl2_f();
Matrix2c sl2_h();
Matrix2c central_x4();

/// Matrix of S^k(u) in the monomial basis z1^(k-i) z2^i, i = 0..k.
/// Multiplicative in u; u need not be unitary.
Eigen::MatrixXcd sym_power_matrix(int k, const Matrix2c& u);

/// Infinitesimal action dS^k(x) in the same basis.
Eigen::MatrixXcd dsym_power(int k, const Matrix2c& x);

/// Inner product on S^k(C^2) restricted from the tensor-product inner
/// product: the monomial basis is orthogonal with
/// ||z1^(k-i) z2^i||^2 = 1/binomial(k,i).
Complex sym_power_inner(int k, const Eigen::VectorXcd& a,
                        const Eigen::VectorXcd& b);

/// A function on U(2) of the form  v -> det(v)^m <S^k(v) left, right>,
/// closed under left-invariant differentiation.
struct MatrixCoeffFn {
  int k = 0;
  int det_power = 0;  // m
  Eigen::VectorXcd left, right;

  Complex eval(const Matrix2c& v) const;

  /// Exact left-invariant derivative x^L in the direction of an arbitrary
  /// complex 2x2 matrix x (complex-linear in x).
  MatrixCoeffFn derivative(const Matrix2c& x) const;

  MatrixCoeffFn scaled(Complex c) const;
};

/// Highest weight vector psi_{k,l}(v) = det(v)^((l-k)/2) * v_21^k of
/// C^inf(U(2))_{k,k,l}.  Requires l == k (mod 2).
MatrixCoeffFn psi(int k, int l);

/// chi_k(y) = y^k + y^(k-2) + ... + y^(-k), the SU(2) character of S^k.
LaurentPoly su2_character(int k);
Complex su2_character(int k, Complex y);

/// Clebsch-Gordan decomposition of F^a (x) F^b into K-types (sorted).
std::vector<KType> tensor_decompose(const KType& a, const KType& b);

/// Restriction to M = diag(SU(2)) x S^1:
/// F^{p,q,r}|_M = (+)_{j=0..min(p,q)} F^{p+q-2j, r}.
std::vector<MLabel> restrict_to_M(const KType& a);

/// Multiplicity of F^{p,q,r} in Omega^1(U(2)) by Frobenius reciprocity.
int omega1_multiplicity(const KType& a);

/// Multiplicity of F^{p,q,r} in ker d on Omega^2(U(2)).
int ker_d_multiplicity(const KType& a);

/// Enumerates the K-types {F^{k+2,k,r}, F^{k,k+2,r}, F^{k+1,k+1,r}} of
/// ker d on 2-forms for k <= maxK and |r| <= rMax (r in the parity class).
std::vector<KType> ker_d_ktypes(int maxK, int rMax);

}  // namespace confmax
