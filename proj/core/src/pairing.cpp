#include "confmax/pairing.hpp"

#include <cmath>

namespace confmax {

namespace {

void check_eigenspace(const FormField& w, int eigen_sign, const char* what) {
  if (w.grade() != 2)
    throw std::invalid_argument(std::string("hermitian_pair: ") + what +
                                " must be a 2-form");
  HaarSampler sampler(987654321);
  for (int i = 0; i < 5; ++i) {
    const U2Point u = sampler.u2();
    const Eigen::VectorXcd c = w.coefficients(u);
    const double res = (star_eigen_projector(-eigen_sign) * c).norm();
    if (res > 1e-6 * std::max(1.0, c.norm()))
      throw std::invalid_argument(std::string("hermitian_pair: ") + what +
                                  " is not in the requested J-eigenspace "
                                  "(residual " +
                                  std::to_string(res) + ")");
  }
}

Complex pair_at_order(const FormField& alpha, const FormField& mu,
                      int order) {
  const Su2Grid grid(order);
  const double vol = 2.0 * kPi * kPi;
  // alpha ^ conj(mu) restricted to SU(2): the a1^a2^a3 coefficient is
  // a1 m23~ - a2 m13~ + a3 m12~.
  return vol * grid.average([&](const U2Point& u) {
           const Eigen::VectorXcd a = alpha.coefficients(u);
           const Eigen::VectorXcd m = mu.coefficients(u);
           return a(0) * std::conj(m(3)) - a(1) * std::conj(m(1)) +
                  a(2) * std::conj(m(0));
         });
}

}  // namespace

PairingResult hermitian_pair(const FormField& omega, const FormField& mu,
                             int eigen_sign, int order) {
  if (eigen_sign != 1 && eigen_sign != -1)
    throw std::invalid_argument("hermitian_pair: eigen_sign must be +-1");
  if (!omega.potential)
    throw std::invalid_argument(
        "hermitian_pair: first argument carries no potential");
  check_eigenspace(omega, eigen_sign, "omega");
  check_eigenspace(mu, eigen_sign, "mu");
  const FormField& alpha = *omega.potential;
  if (alpha.grade() != 1)
    throw std::invalid_argument("hermitian_pair: potential must be a 1-form");

  PairingResult r;
  if (order > 0) {
    const Complex v0 = pair_at_order(alpha, mu, order);
    const Complex v1 = pair_at_order(alpha, mu, order + 4);
    r.value = v1;
    r.quadrature_order = order;
    r.estimated_error = std::abs(v1 - v0);
    return r;
  }
  Complex prev = pair_at_order(alpha, mu, 8);
  int n = 8;
  while (n < 128) {
    n *= 2;
    const Complex cur = pair_at_order(alpha, mu, n);
    const double change = std::abs(cur - prev);
    prev = cur;
    if (change < 1e-4 * std::max(1.0, std::abs(cur))) {
      r.estimated_error = change;
      break;
    }
    r.estimated_error = change;
  }
  r.value = prev;
  r.quadrature_order = n;
  return r;
}

GramResult gram_matrix(const std::vector<MaxwellBasisLabel>& labels,
                       int order) {
  if (labels.empty()) throw std::invalid_argument("gram_matrix: no labels");
  const int sign = labels.front().eigen_sign();
  int max_k = 0;
  for (const auto& l : labels) {
    if (l.eigen_sign() != sign)
      throw std::invalid_argument(
          "gram_matrix: labels mix the two J-eigenspaces");
    max_k = std::max(max_k, l.k);
  }
  // Integrands are matrix coefficients of total degree <= 2k+4.
  const int use_order = order > 0 ? order : 2 * max_k + 8;
  std::vector<FormField> basis;
  basis.reserve(labels.size());
  for (const auto& l : labels) basis.push_back(maxwell_basis(l));

  GramResult g;
  g.labels = labels;
  g.quadrature_order = use_order;
  const int n = int(labels.size());
  g.matrix.resize(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const PairingResult p =
          hermitian_pair(basis[i], basis[j], sign, use_order);
      g.matrix(i, j) = p.value;
      g.estimated_error = std::max(g.estimated_error, p.estimated_error);
    }
  return g;
}

InvarianceReport invariance_check(const ConformalElement& g,
                                  const FormField& omega, const FormField& mu,
                                  int eigen_sign, int order) {
  InvarianceReport r;
  r.before = hermitian_pair(omega, mu, eigen_sign, order).value;
  const FormField gw = pullback(g, omega);
  const FormField gm = pullback(g, mu);
  r.after = hermitian_pair(gw, gm, eigen_sign, order).value;
  r.rel_error = std::abs(r.after - r.before) /
                std::max(1.0, std::abs(r.before));
  return r;
}

}  // namespace confmax
