#include <doctest.h>

#include <unsupported/Eigen/MatrixFunctions>

#include "confmax/geometry.hpp"
#include "confmax/rep_core.hpp"

using namespace confmax;

TEST_CASE("psi closed form") {
  HaarSampler sampler(1);
  const U2Point u = sampler.u2();
  CHECK(std::abs(psi(0, 0).eval(u.matrix()) - 1.0) < 1e-14);
  for (int k = 1; k <= 4; ++k)
    CHECK(std::abs(psi(k, k).eval(Matrix2c::Identity())) < 1e-14);
  // psi_{k,k}(u) = u21^k on SU(2); also equals <S^k(u) e1^k, e2^k>
  const U2Point s = sampler.su2();
  for (int k = 1; k <= 4; ++k) {
    const Complex expect = ipow(s.matrix()(1, 0), k);
    CHECK(std::abs(psi(k, k).eval(s.matrix()) - expect) < 1e-12);
    Eigen::VectorXcd e1k = Eigen::VectorXcd::Zero(k + 1);
    Eigen::VectorXcd e2k = Eigen::VectorXcd::Zero(k + 1);
    e1k(0) = 1.0;
    e2k(k) = 1.0;
    const Complex coeff =
        sym_power_inner(k, Eigen::VectorXcd(sym_power_matrix(k, s.matrix()) * e1k), e2k);
    CHECK(std::abs(coeff - expect) < 1e-12);
  }
  CHECK_THROWS_AS(psi(1, 2), std::invalid_argument);
}

TEST_CASE("sym power matrix basics") {
  // S^2 of a diagonal unitary in the monomial basis z1^2, z1 z2, z2^2
  const Complex w = std::exp(kI * 0.7);
  Matrix2c d;
  d << w, 0, 0, std::conj(w);
  const Eigen::MatrixXcd s2 = sym_power_matrix(2, d);
  CHECK(std::abs(s2(0, 0) - w * w) < 1e-14);
  CHECK(std::abs(s2(1, 1) - 1.0) < 1e-14);
  CHECK(std::abs(s2(2, 2) - std::conj(w) * std::conj(w)) < 1e-14);
  CHECK(s2.cwiseAbs().sum() == doctest::Approx(3.0).epsilon(1e-12));

  HaarSampler sampler(2);
  for (int k = 0; k <= 6; ++k) {
    const Matrix2c u = sampler.u2().matrix();
    const Matrix2c v = sampler.u2().matrix();
    CHECK((sym_power_matrix(k, u * v) -
           sym_power_matrix(k, u) * sym_power_matrix(k, v))
              .norm() < 1e-12);
    // unitarity w.r.t. the weighted monomial inner product
    Eigen::VectorXcd a(k + 1), b(k + 1);
    for (int i = 0; i <= k; ++i) {
      a(i) = Complex(sampler.normal(), sampler.normal());
      b(i) = Complex(sampler.normal(), sampler.normal());
    }
    const Eigen::MatrixXcd s = sym_power_matrix(k, u);
    CHECK(std::abs(sym_power_inner(k, Eigen::VectorXcd(s * a), Eigen::VectorXcd(s * b)) -
                   sym_power_inner(k, a, b)) < 1e-12);
  }
}

TEST_CASE("left invariant derivative") {
  HaarSampler sampler(3);
  const U2Point u = sampler.u2();
  for (int k = 0; k <= 4; ++k)
    for (int l : {k, -k, k + 2, -(k + 2)}) {
      const MatrixCoeffFn f = psi(k, l);
      const Complex base = f.eval(u.matrix());
      CHECK(std::abs(f.derivative(sl2_e()).eval(u.matrix())) < 1e-12);
      CHECK(std::abs(f.derivative(sl2_h()).eval(u.matrix()) -
                     double(k) * base) < 1e-12);
      CHECK(std::abs(f.derivative(central_x4()).eval(u.matrix()) -
                     kI * double(l) * base) < 1e-12);
      // finite-difference oracle in the frame directions
      for (int j = 1; j <= 4; ++j) {
        const Matrix2c x = frame_matrix(j);
        const double h = 1e-5;
        auto at = [&](double t) {
          return f.eval(u.matrix() * Matrix2c((t * x).exp()));
        };
        const Complex fd = (at(h) - at(-h)) / (2.0 * h);
        const Complex exact = f.derivative(x).eval(u.matrix());
        CHECK(std::abs(fd - exact) <= 1e-8 * (1.0 + std::abs(exact)));
      }
    }
}

TEST_CASE("su2 characters") {
  CHECK(su2_character(0) == LaurentPoly::constant(1));
  CHECK(su2_character(2) == LaurentPoly(-2, {1, 0, 1, 0, 1}));
  CHECK(su2_character(3, 1.0).real() == doctest::Approx(4.0));
  for (int a = 1; a <= 10; ++a)
    CHECK(su2_character(a) * su2_character(1) ==
          su2_character(a + 1) + su2_character(a - 1));
}

TEST_CASE("clebsch gordan decomposition") {
  const auto d1 = tensor_decompose(KType(1, 1, -1), KType(2, 0, 2));
  CHECK(d1 == std::vector<KType>{KType(1, 1, 1), KType(3, 1, 1)});
  const auto d2 = tensor_decompose(KType(0, 0, 0), KType(2, 1, 3));
  CHECK(d2 == std::vector<KType>{KType(2, 1, 3)});
  const auto d3 = tensor_decompose(KType(1, 1, 1), KType(0, 2, -2));
  CHECK(d3 == std::vector<KType>{KType(1, 1, -1), KType(1, 3, -1)});
}

TEST_CASE("restriction to M") {
  CHECK(restrict_to_M(KType(1, 1, 1)) ==
        std::vector<MLabel>{MLabel{2, 1}, MLabel{0, 1}});
  CHECK(restrict_to_M(KType(0, 3, 1)) == std::vector<MLabel>{MLabel{3, 1}});
  CHECK(restrict_to_M(KType(2, 2, 0)) ==
        std::vector<MLabel>{MLabel{4, 0}, MLabel{2, 0}, MLabel{0, 0}});
}

TEST_CASE("multiplicities in forms") {
  CHECK(omega1_multiplicity(KType(1, 1, 1)) == 2);
  CHECK(omega1_multiplicity(KType(2, 2, 0)) == 2);
  CHECK(omega1_multiplicity(KType(0, 0, 0)) == 1);
  CHECK(ker_d_multiplicity(KType(3, 0, 2)) == 0);
  CHECK(ker_d_multiplicity(KType(2, 0, 2)) >= 1);
  CHECK(ker_d_multiplicity(KType(0, 2, -2)) >= 1);
  const auto kt = ker_d_ktypes(0, 2);
  CHECK(std::find(kt.begin(), kt.end(), KType(2, 0, 0)) != kt.end());
  CHECK(std::find(kt.begin(), kt.end(), KType(0, 2, 0)) != kt.end());
  CHECK(std::find(kt.begin(), kt.end(), KType(1, 1, 1)) != kt.end());
}

TEST_CASE("ktype validation") {
  CHECK_THROWS_AS(KType(1, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(KType(-1, 0, 0), std::invalid_argument);
  CHECK(KType(2, 3, 1).dim() == 12);
}
