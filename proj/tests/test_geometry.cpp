#include <doctest.h>

#include "confmax/fields.hpp"
#include "confmax/geometry.hpp"
#include "confmax/rep_core.hpp"

using namespace confmax;

TEST_CASE("frame and metric") {
  for (int j = 1; j <= 4; ++j)
    for (int k = 1; k <= 4; ++k) {
      const double want = j == k ? frame_epsilon(j) : 0.0;
      CHECK(metric_on_tangent(frame_matrix(j), frame_matrix(k)) ==
            doctest::Approx(want).epsilon(1e-14));
    }
  // null vector x1 + x4
  CHECK(metric_on_tangent(frame_matrix(1) + frame_matrix(4),
                          frame_matrix(1) + frame_matrix(4)) ==
        doctest::Approx(0.0).epsilon(1e-14));
  CHECK_THROWS_AS(metric_on_tangent(Matrix2c::Identity(), frame_matrix(1)),
                  std::domain_error);

  // frame_coordinates inverts the frame expansion
  HaarSampler sampler(5);
  Eigen::Vector4cd c;
  for (int i = 0; i < 4; ++i) c(i) = Complex(sampler.normal(), sampler.normal());
  Matrix2c m = Matrix2c::Zero();
  for (int j = 1; j <= 4; ++j) m += c(j - 1) * frame_matrix(j);
  CHECK((frame_coordinates(m) - c).norm() < 1e-14);
}

TEST_CASE("two form indexing") {
  CHECK(two_form_index(1, 2) == 0);
  CHECK(two_form_index(2, 3) == 3);
  CHECK(two_form_index(3, 4) == 5);
  CHECK_THROWS_AS(two_form_index(2, 2), std::out_of_range);
}

TEST_CASE("hodge star table") {
  Vector6c v = Vector6c::Zero();
  v(two_form_index(1, 2)) = 1.0;
  Vector6c sv = hodge_star(v);
  CHECK(std::abs(sv(two_form_index(3, 4)) - 1.0) < 1e-15);
  CHECK(sv.norm() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK((hodge_star_matrix() * hodge_star_matrix() + Matrix6c::Identity())
            .norm() < 1e-15);
  // a1^a4 + i a2^a3 is an i-eigenvector
  Vector6c b = Vector6c::Zero();
  b(two_form_index(1, 4)) = 1.0;
  b(two_form_index(2, 3)) = kI;
  CHECK((hodge_star(b) - kI * b).norm() < 1e-15);
  // eigenbasis sanity and projector idempotence
  for (int s : {+1, -1}) {
    const Matrix6c& p = star_eigen_projector(s);
    CHECK((p * p - p).norm() < 1e-15);
    for (const auto& e : star_eigen_basis(s))
      CHECK((hodge_star(e) - double(s) * kI * e).norm() < 1e-15);
  }
}

TEST_CASE("opposite eigenspaces wedge to zero") {
  const auto& masks = grade_masks(2);
  for (const auto& mu : star_eigen_basis(+1))
    for (const auto& nu : star_eigen_basis(-1)) {
      Complex total = 0.0;
      for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
          total += mu(i) * nu(j) * double(wedge_sign(masks[i], masks[j]));
      CHECK(std::abs(total) < 1e-15);
    }
}

TEST_CASE("haar sampler") {
  HaarSampler sampler(7);
  for (int i = 0; i < 20; ++i) {
    const Matrix2c s = sampler.su2().matrix();
    CHECK(std::abs(s.determinant() - 1.0) < 1e-12);
    const Matrix2c u = sampler.u2().matrix();
    CHECK((u * u.adjoint() - Matrix2c::Identity()).norm() < 1e-12);
  }
  // E[|u11|^2] = 1/2 over SU(2) (Monte-Carlo oracle)
  double acc = 0.0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) acc += std::norm(sampler.su2().matrix()(0, 0));
  CHECK(std::abs(acc / n - 0.5) < 1e-2);
}

TEST_CASE("su2 quadrature grid") {
  CHECK_THROWS_AS(Su2Grid(0), std::domain_error);
  const Su2Grid grid(8);
  CHECK(std::abs(grid.average([](const U2Point&) { return Complex(1.0); }) -
                 1.0) < 1e-14);
  const ScalarField p22{psi(2, 2)};
  CHECK(std::abs(grid.average(
            [&](const U2Point& u) { return p22.eval(u); })) < 1e-14);
  CHECK(grid.to_json().find("\"order\":8") != std::string::npos);

  // Schur norms via the 3-form integral, exact grid
  for (int k : {1, 3}) {
    const ScalarField f{psi(k, k)};
    std::map<unsigned, ScalarField> coeffs;
    coeffs.emplace(0b0111u, ScalarField::generic([f](const U2Point& u) {
                     return f.eval(u) * std::conj(f.eval(u));
                   }));
    const FormField w = FormField::exact(3, std::move(coeffs));
    const Complex val = integrate_threeform_su2(w, Su2Grid(2 * k + 4));
    CHECK(std::abs(val - 2.0 * kPi * kPi / (k + 1.0)) < 1e-12);
  }
  // orientation normalization
  std::map<unsigned, ScalarField> one;
  one.emplace(0b0111u, ScalarField::constant(1.0));
  CHECK(std::abs(integrate_threeform_su2(FormField::exact(3, std::move(one)),
                                         grid) -
                 2.0 * kPi * kPi) < 1e-12);
}

TEST_CASE("gauss legendre") {
  std::vector<double> x, w;
  gauss_legendre(3, x, w);
  double s = 0.0;
  for (int i = 0; i < 3; ++i) s += w[i] * x[i] * x[i] * x[i] * x[i];
  CHECK(s == doctest::Approx(0.4).epsilon(1e-13));
}
