#include <doctest.h>

#include "confmax/pairing.hpp"

using namespace confmax;

namespace {

MaxwellBasisLabel lab(int k, MaxwellBasisLabel::Side side, int sign) {
  return {k, side, sign};
}

}  // namespace

TEST_CASE("norms of basis solutions") {
  // ||w_k||^2 = -(4k+8)/(k+1) pi^2 on side L, the opposite sign on side R
  for (int k : {0, 2}) {
    const auto l = lab(k, MaxwellBasisLabel::Side::L, +1);
    const FormField w = maxwell_basis(l);
    const PairingResult r = hermitian_pair(w, w, l.eigen_sign(), 2 * k + 10);
    const double expect = -(4.0 * k + 8.0) / (k + 1.0) * kPi * kPi;
    CHECK(std::abs(r.value - expect) < 1e-10 * std::abs(expect));
    CHECK(std::abs(r.value.imag()) < 1e-10);
    CHECK(r.estimated_error < 1e-8);
  }
  const auto lr = lab(0, MaxwellBasisLabel::Side::R, +1);
  const FormField wr = maxwell_basis(lr);
  const PairingResult rr = hermitian_pair(wr, wr, lr.eigen_sign(), 12);
  CHECK(std::abs(rr.value - 8.0 * kPi * kPi) < 1e-8);
}

TEST_CASE("pairing input validation") {
  const auto l = lab(0, MaxwellBasisLabel::Side::L, +1);
  const FormField w = maxwell_basis(l);
  // wrong eigenspace sign is rejected
  CHECK_THROWS_AS(hermitian_pair(w, w, -l.eigen_sign(), 10),
                  std::invalid_argument);
  CHECK_THROWS_AS(hermitian_pair(w, w, 0, 10), std::invalid_argument);
  // missing potential is rejected
  FormField bare = w;
  bare.potential.reset();
  CHECK_THROWS_AS(hermitian_pair(bare, w, l.eigen_sign(), 10),
                  std::invalid_argument);
  CHECK_THROWS_AS(gram_matrix({}), std::invalid_argument);
  CHECK_THROWS_AS(gram_matrix({lab(0, MaxwellBasisLabel::Side::L, +1),
                               lab(0, MaxwellBasisLabel::Side::L, -1)}),
                  std::invalid_argument);
}

TEST_CASE("gram matrix structure") {
  std::vector<MaxwellBasisLabel> labels;
  for (int k = 0; k <= 2; ++k)
    labels.push_back(lab(k, MaxwellBasisLabel::Side::L, +1));
  const GramResult g = gram_matrix(labels);
  REQUIRE(g.matrix.rows() == 3);
  for (int i = 0; i < 3; ++i) {
    const double expect = -(4.0 * i + 8.0) / (i + 1.0) * kPi * kPi;
    CHECK(std::abs(g.matrix(i, i) - expect) < 1e-8);
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      CHECK(std::abs(g.matrix(i, j)) < 1e-8);
    }
  }
  // Hermitian as a matrix
  CHECK((g.matrix - g.matrix.adjoint()).norm() < 1e-8);
}

TEST_CASE("invariance under the maximal compact subgroup") {
  HaarSampler sampler(31);
  const auto l = lab(1, MaxwellBasisLabel::Side::L, +1);
  const FormField w = maxwell_basis(l);
  const ConformalElement g =
      k_element(sampler.u2().matrix(), sampler.u2().matrix());
  const InvarianceReport rep = invariance_check(g, w, w, l.eigen_sign(), 14);
  CHECK(rep.rel_error < 1e-9);
  CHECK(std::abs(rep.before - rep.after) <
        1e-9 * (1.0 + std::abs(rep.before)));
}

TEST_CASE("adaptive order selection converges") {
  const auto l = lab(0, MaxwellBasisLabel::Side::L, +1);
  const FormField w = maxwell_basis(l);
  const PairingResult r = hermitian_pair(w, w, l.eigen_sign());  // adaptive
  CHECK(std::abs(r.value + 8.0 * kPi * kPi) < 1e-6);
  CHECK(r.quadrature_order >= 8);
}
