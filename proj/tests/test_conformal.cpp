#include <doctest.h>

#include <unsupported/Eigen/MatrixFunctions>

#include "confmax/conformal.hpp"
#include "confmax/geometry.hpp"

using namespace confmax;

namespace {

Matrix2c random_hermitian(HaarSampler& s) {
  Matrix2c m;
  m << Complex(s.normal(), 0), Complex(s.normal(), s.normal()),
      Complex(0, 0), Complex(s.normal(), 0);
  m(1, 0) = std::conj(m(0, 1));
  return m;
}

}  // namespace

TEST_CASE("group elements and realizations") {
  HaarSampler sampler(21);
  const Matrix2c y = random_hermitian(sampler);
  const ConformalElement n = nbar(y);
  CHECK(n.realization() == Realization::G);
  // defining relation g* P g = P
  const Matrix4c& p = pairing_matrix(Realization::G);
  CHECK((n.matrix().adjoint() * p * n.matrix() - p).norm() < 1e-12);

  const ConformalElement g1 = cayley(n);
  CHECK(g1.realization() == Realization::G1);
  const Matrix4c& p1 = pairing_matrix(Realization::G1);
  CHECK((g1.matrix().adjoint() * p1 * g1.matrix() - p1).norm() < 1e-12);
  CHECK((cayley_inverse(g1).matrix() - n.matrix()).norm() < 1e-12);

  // inverse and composition
  const ConformalElement gi = g1 * g1.inverse();
  CHECK((gi.matrix() - Matrix4c::Identity()).norm() < 1e-12);
  CHECK_THROWS_AS(ConformalElement(2.0 * Matrix4c::Identity(), Realization::G1),
                  std::invalid_argument);
  CHECK_THROWS_AS(nbar(Matrix2c(kI * Matrix2c::Identity())),
                  std::invalid_argument);
  CHECK_THROWS_AS(s_cap_k_element(Complex(2.0, 0.0)), std::invalid_argument);
}

TEST_CASE("lie algebra of g1") {
  CHECK(in_lie_algebra_g1(Matrix4c(kI * Matrix4c::Identity())));
  CHECK_FALSE(in_lie_algebra_g1(Matrix4c::Identity()));
  const Matrix4c pp = p_plus_generator(0, 1);
  const auto [re, im] = split_lie_algebra_g1(pp);
  CHECK(in_lie_algebra_g1(re));
  CHECK(in_lie_algebra_g1(im));
  CHECK((re + kI * im - pp).norm() < 1e-14);
  // p^+ and p^- generators live in the off-diagonal blocks
  CHECK(pp.block<2, 2>(0, 0).norm() == 0.0);
  CHECK(p_minus_generator(1, 0).block<2, 2>(0, 2).norm() == 0.0);
}

TEST_CASE("minkowski embedding") {
  const MinkowskiPoint origin{};
  CHECK((embed_minkowski(origin).matrix() - Matrix2c::Identity()).norm() <
        1e-14);
  CHECK(embedding_conformal_factor(origin) == doctest::Approx(4.0));

  HaarSampler sampler(22);
  for (int i = 0; i < 5; ++i) {
    const MinkowskiPoint p{sampler.uniform(-2, 2), sampler.uniform(-2, 2),
                           sampler.uniform(-2, 2), sampler.uniform(-2, 2)};
    // det of the Hermitian matrix is the Minkowski square
    const Eigen::Vector4d z(p.x1, p.x2, p.x3, p.t);
    CHECK(std::abs(hermitian_matrix(p).determinant().real() -
                   minkowski_inner(z, z)) < 1e-12);
    CHECK(embedding_conformal_factor(p) ==
          doctest::Approx(embedding_conformal_factor_det(p)).epsilon(1e-12));

    // embedding realized by the group action: F(p) = cayley(nbar(X)) . I
    const Matrix2c x = hermitian_matrix(p);
    const U2Point via_action = act(cayley(nbar(x)), U2Point::identity());
    CHECK((via_action.matrix() - embed_minkowski(p).matrix()).norm() < 1e-12);

    // tangent map against a finite-difference oracle, and the conformal
    // relation  g(dF(v), dF(w)) = factor * <v, w>
    const double h = 1e-6;
    for (int a = 0; a < 4; ++a) {
      Eigen::Vector4d v = Eigen::Vector4d::Zero();
      v(a) = 1.0;
      auto shift = [&](double t) {
        MinkowskiPoint q = p;
        (a == 0 ? q.x1 : a == 1 ? q.x2 : a == 2 ? q.x3 : q.t) += t;
        return embed_minkowski(q).matrix();
      };
      const Matrix2c fd = (shift(h) - shift(-h)) / (2.0 * h);
      const Matrix2c exact =
          embed_minkowski(p).matrix() * embedding_tangent(p, v);
      CHECK((fd - exact).norm() < 1e-8);
      for (int b = 0; b < 4; ++b) {
        Eigen::Vector4d w = Eigen::Vector4d::Zero();
        w(b) = 1.0;
        const double lhs = metric_on_tangent(embedding_tangent(p, v),
                                             embedding_tangent(p, w));
        const double rhs =
            embedding_conformal_factor(p) * minkowski_inner(v, w);
        CHECK(std::abs(lhs - rhs) < 1e-10);
      }
    }
  }
}

TEST_CASE("fractional linear action") {
  HaarSampler sampler(23);
  const U2Point z = sampler.u2();
  // k_element acts by Z -> g1 Z g2^{-1}
  const Matrix2c g1m = sampler.u2().matrix();
  const Matrix2c g2m = sampler.u2().matrix();
  const ConformalElement ke = k_element(g1m, g2m);
  CHECK((act(ke, z).matrix() - g1m * z.matrix() * g2m.inverse()).norm() <
        1e-12);

  // composition law
  const ConformalElement g = cayley(nbar(random_hermitian(sampler)));
  const ConformalElement gh = g * ke;
  CHECK((act(gh, z).matrix() - act(g, act(ke, z)).matrix()).norm() < 1e-11);

  // both conformal-factor expressions agree
  CHECK(std::abs(action_conformal_factor(g, z) -
                 action_conformal_factor_alt(g, z)) < 1e-12);
  CHECK(act_condition(ke, z) < 100.0);

  // tangent frame against finite differences
  const auto frames = action_tangent_frame(g, z);
  const double h = 1e-6;
  for (int j = 1; j <= 4; ++j) {
    auto at = [&](double t) {
      const Matrix2c m = z.matrix() * Matrix2c((t * frame_matrix(j)).exp());
      return act(g, U2Point(m)).matrix();
    };
    const Matrix2c fd = (at(h) - at(-h)) / (2.0 * h);
    const Matrix2c exact = act(g, z).matrix() * frames[j - 1];
    CHECK((fd - exact).norm() < 1e-7);
  }
}

TEST_CASE("pullback of forms") {
  HaarSampler sampler(24);
  const FormField w = maxwell_basis({1, MaxwellBasisLabel::Side::L, +1});
  // identity pullback
  const FormField wi = pullback(ConformalElement::identity(Realization::G1), w);
  // contravariance: (g h)^* w = h^* (g^* w)
  const ConformalElement g = cayley(nbar(random_hermitian(sampler)));
  const ConformalElement k = k_element(sampler.u2().matrix(),
                                       sampler.u2().matrix());
  const FormField lhs = pullback(g * k, w);
  const FormField rhs = pullback(k, pullback(g, w));
  for (int i = 0; i < 4; ++i) {
    const U2Point u = sampler.u2();
    CHECK((wi.coefficients(u) - w.coefficients(u)).norm() < 1e-12);
    CHECK((lhs.coefficients(u) - rhs.coefficients(u)).norm() <
          1e-9 * (1.0 + lhs.coefficients(u).norm()));
  }
  REQUIRE(lhs.potential);
  // the transported potential still satisfies d(potential) = pulled-back form
  // (checked through the pairing machinery elsewhere; here check grade)
  CHECK(lhs.potential->grade() == 1);
}

TEST_CASE("infinitesimal action") {
  HaarSampler sampler(25);
  std::map<unsigned, ScalarField> c0;
  c0.emplace(0u, ScalarField{psi(2, 2)});
  const FormField f = FormField::exact(0, std::move(c0));

  // central direction acts trivially
  const FormField cen = infinitesimal_action(Matrix4c(kI * Matrix4c::Identity()), f);
  // right translation by exp(t x) (x skew-Hermitian) differentiates to x^L
  const Matrix2c x = frame_matrix(2);
  Matrix4c big = Matrix4c::Zero();
  big.block<2, 2>(2, 2) = x;
  REQUIRE(in_lie_algebra_g1(big));
  const FormField der = infinitesimal_action(big, f);
  const ScalarField xl = ScalarField{psi(2, 2)}.derivative(x);
  for (int i = 0; i < 5; ++i) {
    const U2Point u = sampler.u2();
    CHECK(std::abs(cen.coefficients(u)(0)) < 1e-9);
    CHECK(std::abs(der.coefficients(u)(0) - xl.eval(u)) < 1e-8);
  }
}

TEST_CASE("plane waves") {
  const Vector3d u(0, 0, 1);
  const Vector3c e0(1, 0, 0);
  const PlaneWave pw = plane_wave(u, 1.0, e0);
  CHECK((pw.H0 - Vector3c(0, -1, 0)).norm() < 1e-14);
  // u x H0 = freq E0
  const Vector3c uc = u.cast<Complex>();
  CHECK((uc.cross(pw.H0) - pw.freq * pw.E0).norm() < 1e-13);
  CHECK(std::abs(pw.phase(MinkowskiPoint{}) - 1.0) < 1e-14);
  const MinkowskiPoint q{0.2, -0.4, 0.7, 0.3};
  const Complex expect =
      std::exp(kI * (-u.dot(Vector3d(q.x1, q.x2, q.x3)) + 1.0 * q.t));
  CHECK(std::abs(pw.phase(q) - expect) < 1e-14);
  CHECK((pw.E(q) - pw.E0 * pw.phase(q)).norm() < 1e-14);

  CHECK_THROWS_AS(plane_wave(u, 2.0, e0), std::invalid_argument);
  CHECK_THROWS_AS(plane_wave(u, 1.0, Vector3c(0, 0, 1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(plane_wave(Vector3d::Zero(), 0.0, e0),
                  std::invalid_argument);

  // light-cone functional
  const Eigen::Vector4d z(0.3, -1.2, 0.5, std::sqrt(0.09 + 1.44 + 0.25));
  CHECK(light_cone_functional(z, 2.5) ==
        doctest::Approx(z(3) * 2.5).epsilon(1e-12));
}
