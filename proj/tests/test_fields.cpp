#include <doctest.h>

#include "confmax/fields.hpp"
#include "confmax/geometry.hpp"

using namespace confmax;

namespace {

Eigen::VectorXcd coeffs_at(const FormField& w, const U2Point& u) {
  return w.coefficients(u);
}

}  // namespace

TEST_CASE("scalar field algebra") {
  HaarSampler sampler(11);
  const U2Point u = sampler.u2();
  const ScalarField c = ScalarField::constant(Complex(2.0, -1.0));
  CHECK(std::abs(c.eval(u) - Complex(2.0, -1.0)) < 1e-15);
  Complex v;
  CHECK(c.constant_value(&v));
  CHECK(std::abs(v - Complex(2.0, -1.0)) < 1e-15);

  const ScalarField f{psi(2, 2)};
  const ScalarField g{psi(1, 1)};
  CHECK(std::abs((f + g).eval(u) - (f.eval(u) + g.eval(u))) < 1e-14);
  CHECK(std::abs((f * g).eval(u) - f.eval(u) * g.eval(u)) < 1e-14);
  CHECK(std::abs(f.conjugated().eval(u) - std::conj(f.eval(u))) < 1e-14);
  CHECK(std::abs(f.scaled(kI).eval(u) - kI * f.eval(u)) < 1e-14);

  const ScalarField bb = ScalarField::generic(
      [](const U2Point& p) { return p.matrix()(0, 0); });
  CHECK_FALSE(bb.is_exact());
  CHECK_THROWS_AS(bb.derivative(sl2_h()), std::logic_error);
}

TEST_CASE("wedge signs") {
  // (12)^(34) = +1, (13)^(24) = -1, (14)^(23) = +1; overlaps vanish
  CHECK(wedge_sign(0b0011u, 0b1100u) == 1);
  CHECK(wedge_sign(0b0101u, 0b1010u) == -1);
  CHECK(wedge_sign(0b1001u, 0b0110u) == 1);
  CHECK(wedge_sign(0b0011u, 0b0110u) == 0);
  CHECK(grade_masks(2).size() == 6);
  CHECK(grade_masks(0) == std::vector<unsigned>{0u});
}

TEST_CASE("structure equations of the coframe") {
  HaarSampler sampler(12);
  const U2Point u = sampler.u2();
  // d a1 = -2 a2^a3, d a2 = 2 a1^a3, d a3 = -2 a1^a2, d a4 = 0
  auto two_form = [](int a, int b, Complex c) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(6);
    v(two_form_index(a, b)) = c;
    return v;
  };
  CHECK((coeffs_at(exterior_derivative(coframe_alpha(1)), u) -
         two_form(2, 3, -2.0))
            .norm() < 1e-14);
  CHECK((coeffs_at(exterior_derivative(coframe_alpha(2)), u) -
         two_form(1, 3, 2.0))
            .norm() < 1e-14);
  CHECK((coeffs_at(exterior_derivative(coframe_alpha(3)), u) -
         two_form(1, 2, -2.0))
            .norm() < 1e-14);
  CHECK(coeffs_at(exterior_derivative(coframe_alpha(4)), u).norm() < 1e-14);
}

TEST_CASE("exterior derivative squares to zero") {
  HaarSampler sampler(13);
  std::map<unsigned, ScalarField> c0;
  c0.emplace(0u, ScalarField{psi(2, 2)});
  const FormField f = FormField::exact(0, std::move(c0));
  const FormField ddf = exterior_derivative(exterior_derivative(f));
  for (int i = 0; i < 5; ++i)
    CHECK(coeffs_at(ddf, sampler.u2()).norm() < 1e-12);
}

TEST_CASE("form field evaluation and wedge") {
  HaarSampler sampler(14);
  const U2Point u = sampler.u2();
  // alpha_j eats frame vector e_j
  for (int j = 1; j <= 4; ++j)
    for (int l = 1; l <= 4; ++l) {
      Eigen::Vector4cd row = Eigen::Vector4cd::Zero();
      row(l - 1) = 1.0;
      const Complex val = coframe_alpha(j).value_on(u, {row});
      CHECK(std::abs(val - (j == l ? 1.0 : 0.0)) < 1e-14);
    }
  // wedge agrees with the sign table
  const FormField w = wedge(coframe_alpha(1), coframe_alpha(3));
  Eigen::VectorXcd c = coeffs_at(w, u);
  CHECK(std::abs(c(two_form_index(1, 3)) - 1.0) < 1e-14);
  c(two_form_index(1, 3)) = 0.0;
  CHECK(c.norm() < 1e-14);
  const FormField top =
      wedge(wedge(coframe_alpha(1), coframe_alpha(4)),
            wedge(coframe_alpha(2), coframe_alpha(3)));
  CHECK(top.grade() == 4);
  CHECK(std::abs(coeffs_at(top, u)(0) - 1.0) < 1e-14);
}

TEST_CASE("transform coefficients") {
  HaarSampler sampler(15);
  Eigen::VectorXcd c(6);
  for (int i = 0; i < 6; ++i) c(i) = Complex(sampler.normal(), sampler.normal());
  CHECK((transform_coefficients(2, c, Matrix4c::Identity()) - c).norm() <
        1e-14);
  // scaling every frame direction by s multiplies a 2-form by s^2
  const Complex s(0.3, 0.8);
  CHECK((transform_coefficients(2, c, Matrix4c(s * Matrix4c::Identity())) -
         s * s * c)
            .norm() < 1e-13);
}

TEST_CASE("inversion pullback is an involution") {
  const FormField w = maxwell_basis({2, MaxwellBasisLabel::Side::L, +1});
  const FormField ww = inversion_pullback(inversion_pullback(w));
  HaarSampler sampler(16);
  for (int i = 0; i < 5; ++i) {
    const U2Point u = sampler.u2();
    CHECK((coeffs_at(w, u) - coeffs_at(ww, u)).norm() <
          1e-12 * (1.0 + coeffs_at(w, u).norm()));
  }
}

TEST_CASE("maxwell basis solutions") {
  HaarSampler sampler(17);
  for (int k : {0, 1, 3}) {
    for (int sign : {+1, -1}) {
      const MaxwellBasisLabel lab{k, MaxwellBasisLabel::Side::L, sign};
      const FormField w = maxwell_basis(lab);
      REQUIRE(w.potential);
      // closed: d w = 0 (exact computation on side L)
      const FormField dw = exterior_derivative(w);
      // d(potential) = w
      const FormField dpot = exterior_derivative(*w.potential);
      for (int i = 0; i < 4; ++i) {
        const U2Point u = sampler.u2();
        CHECK(coeffs_at(dw, u).norm() < 1e-11);
        CHECK((coeffs_at(dpot, u) - coeffs_at(w, u)).norm() < 1e-11);
        // J-eigenspace membership
        const Eigen::VectorXcd c = coeffs_at(w, u);
        const Vector6c jc = hodge_star(Vector6c(c));
        CHECK((jc - double(lab.eigen_sign()) * kI * Vector6c(c)).norm() <
              1e-11 * (1.0 + c.norm()));
      }
    }
  }
  // side R via inversion: same check pointwise
  const MaxwellBasisLabel rlab{1, MaxwellBasisLabel::Side::R, +1};
  const FormField wr = maxwell_basis(rlab);
  for (int i = 0; i < 4; ++i) {
    const U2Point u = sampler.u2();
    const Eigen::VectorXcd c = coeffs_at(wr, u);
    const Vector6c jc = hodge_star(Vector6c(c));
    CHECK((jc - double(rlab.eigen_sign()) * kI * Vector6c(c)).norm() <
          1e-11 * (1.0 + c.norm()));
  }
}

TEST_CASE("j classification of d(psi alpha_f)") {
  const JClassification plus = j_classification(2, 4);
  CHECK(plus.is_maxwell);
  CHECK(plus.eigen_sign == -1);  // side L, sign +1
  const JClassification minus = j_classification(2, -4);
  CHECK(minus.is_maxwell);
  CHECK(minus.eigen_sign == +1);
  const JClassification off = j_classification(2, 2);
  CHECK_FALSE(off.is_maxwell);
  CHECK(off.residual_plus > 1e-3);
  CHECK(off.residual_minus > 1e-3);
}

TEST_CASE("k0 isotypic basis") {
  const auto fam = maxwell_k0_ktype_basis(MaxwellBasisLabel::Side::L, +1);
  CHECK(fam.size() == 3);
  HaarSampler sampler(18);
  const U2Point u = sampler.u2();
  for (const FormField& w : fam) {
    REQUIRE(w.potential);
    const Eigen::VectorXcd c = coeffs_at(w, u);
    const Vector6c jc = hodge_star(Vector6c(c));
    CHECK((jc + kI * Vector6c(c)).norm() < 1e-11 * (1.0 + c.norm()));
  }
}
