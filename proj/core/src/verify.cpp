#include "confmax/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <unsupported/Eigen/MatrixFunctions>

#include "confmax/branching.hpp"
#include "confmax/conformal.hpp"
#include "confmax/fields.hpp"
#include "confmax/geometry.hpp"
#include "confmax/pairing.hpp"
#include "confmax/rep_core.hpp"

namespace confmax {

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.passed; });
}

std::string SuiteReport::to_json() const {
  std::ostringstream os;
  os.precision(17);
  os << "{\"suite\":\"" << suite
     << "\",\"passed\":" << (passed() ? "true" : "false") << ",\"checks\":[";
  for (size_t i = 0; i < checks.size(); ++i) {
    const auto& c = checks[i];
    if (i) os << ",";
    os << "{\"name\":\"" << c.name
       << "\",\"passed\":" << (c.passed ? "true" : "false")
       << ",\"observed\":" << c.observed << ",\"threshold\":" << c.threshold
       << ",\"detail\":\"" << c.detail << "\"}";
  }
  os << "]}";
  return os.str();
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "geometry",   "ktypes",    "maxwell",   "conformal", "pairing",
      "lie-action", "branching", "planewave", "all"};
  return names;
}

namespace {

void add_check(SuiteReport& r, const std::string& name, double observed,
               double threshold, const std::string& detail = "") {
  CheckResult c;
  c.name = name;
  c.observed = observed;
  c.threshold = threshold;
  c.passed = observed <= threshold;
  c.detail = detail;
  r.checks.push_back(std::move(c));
}

void add_flag(SuiteReport& r, const std::string& name, bool ok,
              const std::string& detail = "") {
  CheckResult c;
  c.name = name;
  c.observed = ok ? 0.0 : 1.0;
  c.threshold = 0.5;
  c.passed = ok;
  c.detail = detail;
  r.checks.push_back(std::move(c));
}

FormField apply_star(const FormField& w) {
  if (w.grade() != 2)
    throw std::invalid_argument("apply_star: expects a 2-form");
  FormField wv = w;
  return FormField::sampled(2, [wv](const U2Point& u) {
    return Eigen::VectorXcd(hodge_star_matrix() * wv.coefficients(u));
  });
}

/// exp of a random element of the real Lie algebra of G1, entries O(scale).
ConformalElement random_g1(HaarSampler& sampler, double scale) {
  Matrix4c x;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      x(i, j) = Complex(sampler.normal(), sampler.normal());
  const Matrix4c xr = split_lie_algebra_g1(x).first * scale;
  return ConformalElement(Matrix4c(xr.exp()), Realization::G1);
}

MinkowskiPoint random_point(HaarSampler& sampler, double half_width) {
  return {sampler.uniform(-half_width, half_width),
          sampler.uniform(-half_width, half_width),
          sampler.uniform(-half_width, half_width),
          sampler.uniform(-half_width, half_width)};
}

// ---------------------------------------------------------------- geometry

SuiteReport geometry_suite(const SuiteConfig& cfg) {
  SuiteReport r;
  r.suite = "geometry";
  const double tol = cfg.tol("exact", 1e-12);
  HaarSampler sampler(cfg.seed);

  // Maurer-Cartan structure equations against their expected constants.
  {
    Eigen::Matrix<double, 4, 6> expected;
    expected.setZero();
    expected(0, 3) = -2.0;  // d a1 = -2 a2^a3
    expected(1, 1) = +2.0;  // d a2 = +2 a1^a3
    expected(2, 0) = -2.0;  // d a3 = -2 a1^a2
    double worst = 0.0;
    const U2Point u = sampler.u2();
    for (int j = 1; j <= 4; ++j) {
      const Eigen::VectorXcd c =
          exterior_derivative(coframe_alpha(j)).coefficients(u);
      for (int i = 0; i < 6; ++i)
        worst = std::max(worst, std::abs(c(i) - expected(j - 1, i)));
    }
    add_check(r, "structure_equations", worst, tol);
  }

  // Star table re-derived from eta ^ (star w) = g(eta, w) gamma with
  // gamma = a1^a2^a3^a4, against the implemented matrix.
  {
    Matrix6c oracle = Matrix6c::Zero();
    const auto& masks = grade_masks(2);
    for (size_t i = 0; i < masks.size(); ++i) {
      int a = 0, b = 0;
      for (int axis = 1; axis <= 4; ++axis)
        if (masks[i] & (1u << (axis - 1))) (a == 0 ? a : b) = axis;
      const double g2 = frame_epsilon(a) * frame_epsilon(b);
      const unsigned comp = 0xFu & ~masks[i];
      const int sgn = wedge_sign(masks[i], comp);
      const size_t ci =
          std::find(masks.begin(), masks.end(), comp) - masks.begin();
      oracle(ci, i) = g2 / double(sgn);
    }
    add_check(r, "star_table_vs_defining_relation",
              (hodge_star_matrix() - oracle).norm(), tol);
    add_check(r, "star_squared_is_minus_identity",
              (hodge_star_matrix() * hodge_star_matrix() +
               Matrix6c::Identity())
                  .norm(),
              tol);
    add_check(r, "star_projectors_resolve_identity",
              (star_eigen_projector(+1) + star_eigen_projector(-1) -
               Matrix6c::Identity())
                  .norm(),
              tol);
    double basis_res = 0.0;
    for (int s : {+1, -1})
      for (const auto& v : star_eigen_basis(s))
        basis_res = std::max(
            basis_res, (hodge_star_matrix() * v - double(s) * kI * v).norm());
    add_check(r, "star_eigen_bases", basis_res, tol);
  }

  // Ad-invariance of the metric.
  {
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
      const Matrix2c u = sampler.u2().matrix();
      for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b) {
          const Complex lhs = metric_bilinear(
              u * frame_matrix(a) * u.adjoint(),
              u * frame_matrix(b) * u.adjoint());
          const Complex rhs = metric_bilinear(frame_matrix(a),
                                              frame_matrix(b));
          worst = std::max(worst, std::abs(lhs - rhs));
        }
    }
    add_check(r, "metric_ad_invariance", worst, tol);
  }
  return r;
}

// ------------------------------------------------------------------ ktypes

SuiteReport ktypes_suite(const SuiteConfig& cfg) {
  SuiteReport r;
  r.suite = "ktypes";
  HaarSampler sampler(cfg.seed);

  // Character recursion chi_a chi_1 = chi_{a+1} + chi_{a-1}, exact.
  {
    bool ok = true;
    for (int a = 1; a <= 2 * cfg.k_max + 4; ++a)
      ok = ok && (su2_character(a) * su2_character(1) ==
                  su2_character(a + 1) + su2_character(a - 1));
    for (int a = 0; a <= 2 * cfg.k_max + 4; ++a)
      ok = ok && su2_character(a).eval(1.0) == Complex(double(a + 1));
    add_flag(r, "character_recursion_and_dims", ok);
  }

  // S^k is multiplicative and dS^k is its derivative.
  {
    double worst = 0.0;
    for (int k = 0; k <= 6; ++k) {
      const Matrix2c u = sampler.u2().matrix();
      const Matrix2c v = sampler.u2().matrix();
      worst = std::max(
          worst, (sym_power_matrix(k, u * v) -
                  sym_power_matrix(k, u) * sym_power_matrix(k, v))
                     .norm());
    }
    add_check(r, "sym_power_multiplicative", worst, cfg.tol("exact", 1e-12));

    double fd_worst = 0.0;
    const double h = 1e-4;
    for (int k = 1; k <= 4; ++k) {
      const Matrix2c u = sampler.u2().matrix();
      for (int j = 1; j <= 4; ++j) {
        const Matrix2c x = frame_matrix(j);
        auto at = [&](double t) {
          return Eigen::MatrixXcd(
              sym_power_matrix(k, u * Matrix2c((t * x).exp())));
        };
        const Eigen::MatrixXcd d1 = (at(h) - at(-h)) / (2.0 * h);
        const Eigen::MatrixXcd d2 = (at(h / 2) - at(-h / 2)) / h;
        const Eigen::MatrixXcd fd = (4.0 * d2 - d1) / 3.0;
        fd_worst = std::max(
            fd_worst,
            (fd - sym_power_matrix(k, u) * dsym_power(k, x)).norm());
      }
    }
    add_check(r, "dsym_power_fd_oracle", fd_worst, cfg.tol("fd", 1e-8));
  }

  // psi_{k,l} is a highest weight vector of weight (k, il).
  {
    double worst = 0.0;
    for (int k = 0; k <= cfg.k_max + 2; ++k)
      for (int l : {k + 2, -(k + 2), k, -k}) {
        const ScalarField f{psi(k, l)};
        const U2Point u = sampler.u2();
        worst = std::max(worst,
                         std::abs(f.derivative(sl2_e()).eval(u)));
        worst = std::max(
            worst, std::abs(f.derivative(sl2_h()).eval(u) -
                            double(k) * f.eval(u)));
        worst = std::max(
            worst, std::abs(f.derivative(central_x4()).eval(u) -
                            kI * double(l) * f.eval(u)));
      }
    add_check(r, "psi_highest_weight", worst, cfg.tol("exact", 1e-12));
  }

  // Clebsch-Gordan bookkeeping: dimensions add up; restriction to M is
  // dimension-preserving; the ker d K-types carry positive multiplicity.
  {
    bool ok = true;
    for (int i = 0; i < 10; ++i) {
      const int p1 = int(sampler.uniform(0, 4)), q1 = int(sampler.uniform(0, 4));
      const int p2 = int(sampler.uniform(0, 4)), q2 = int(sampler.uniform(0, 4));
      const KType a(p1, q1, q1), b(p2, q2, q2);
      long total = 0;
      for (const KType& t : tensor_decompose(a, b)) total += t.dim();
      ok = ok && total == long(a.dim()) * b.dim();
      long rdim = 0;
      for (const MLabel& m : restrict_to_M(a)) rdim += m.n + 1;
      ok = ok && rdim == a.dim();
    }
    for (const KType& t : ker_d_ktypes(cfg.k_max, cfg.k_max + 4))
      ok = ok && ker_d_multiplicity(t) >= 1;
    for (int k = 0; k <= cfg.k_max; ++k)
      ok = ok && ker_d_multiplicity(KType(k + 2, k, k + 2)) >= 1 &&
           ker_d_multiplicity(KType(k, k + 2, -(k + 2))) >= 1;
    add_flag(r, "tensor_and_restriction_bookkeeping", ok);
  }
  return r;
}

// ----------------------------------------------------------------- maxwell

SuiteReport maxwell_suite(const SuiteConfig& cfg) {
  SuiteReport r;
  r.suite = "maxwell";
  const double tol = cfg.tol("classification", 1e-10);
  const int kk = std::max(cfg.k_max, 5);

  bool families_ok = true;
  double worst = 0.0;
  std::string first_bad;
  for (int k = 0; k <= kk; ++k)
    for (int sign : {+1, -1}) {
      const JClassification left =
          j_classification(k, sign * (k + 2), cfg.samples, tol);
      const JClassification right = classify_two_form(
          maxwell_basis({k, MaxwellBasisLabel::Side::R, sign}), cfg.samples,
          tol, cfg.seed);
      const MaxwellBasisLabel ll{k, MaxwellBasisLabel::Side::L, sign};
      const MaxwellBasisLabel rl{k, MaxwellBasisLabel::Side::R, sign};
      if (!left.is_maxwell || left.eigen_sign != ll.eigen_sign()) {
        families_ok = false;
        if (first_bad.empty())
          first_bad = "L k=" + std::to_string(k) +
                      " sign=" + std::to_string(sign);
      }
      if (!right.is_maxwell || right.eigen_sign != rl.eigen_sign()) {
        families_ok = false;
        if (first_bad.empty())
          first_bad = "R k=" + std::to_string(k) +
                      " sign=" + std::to_string(sign);
      }
      worst = std::max(
          {worst,
           left.eigen_sign > 0 ? left.residual_plus : left.residual_minus,
           right.eigen_sign > 0 ? right.residual_plus
                                : right.residual_minus});
    }
  add_flag(r, "theorem11_families_classified", families_ok, first_bad);
  add_check(r, "theorem11_in_eigenspace_residual", worst, tol);

  bool none_ok = true;
  for (int k = 0; k <= kk && none_ok; ++k)
    for (int l = -(k + 6); l <= k + 6; ++l) {
      if (((l - k) % 2 + 2) % 2 != 0 || std::abs(l) == k + 2) continue;
      if (j_classification(k, l, cfg.samples, tol).is_maxwell) {
        none_ok = false;
        break;
      }
    }
  add_flag(r, "theorem11_non_solutions_rejected", none_ok);
  return r;
}

// --------------------------------------------------------------- conformal

std::pair<Vector3c, Vector3c> eh_at(const FormField& w, double x1, double x2,
                                    double x3, double t) {
  return extract_EH(w, {x1, x2, x3, t});
}

SuiteReport conformal_suite(const SuiteConfig& cfg) {
  SuiteReport r;
  r.suite = "conformal";
  HaarSampler sampler(cfg.seed);

  // Lemma 1 factor: analytic formula vs a finite-difference metric ratio.
  {
    double worst = 0.0, form_diff = 0.0;
    const double h = 1e-5;
    for (int i = 0; i < 100; ++i) {
      const MinkowskiPoint p = random_point(sampler, 2.0);
      Eigen::Vector4d v;
      double vv = 0.0;
      do {
        for (int a = 0; a < 4; ++a) v(a) = sampler.normal();
        vv = minkowski_inner(v, v);
      } while (std::abs(vv) < 0.2 * v.squaredNorm());
      auto at = [&](double s) {
        return Matrix2c(embed_minkowski({p.x1 + s * v(0), p.x2 + s * v(1),
                                         p.x3 + s * v(2), p.t + s * v(3)})
                            .matrix());
      };
      const Matrix2c d1 = (at(h) - at(-h)) / (2.0 * h);
      const Matrix2c d2 = (at(h / 2) - at(-h / 2)) / h;
      const Matrix2c tang = (4.0 * d2 - d1) / 3.0;
      const Matrix2c q = embed_minkowski(p).matrix();
      const Complex g = metric_bilinear(q.adjoint() * tang, q.adjoint() * tang);
      const double ratio = (g / vv).real();
      const double factor = embedding_conformal_factor(p);
      worst = std::max(worst, std::abs(ratio - factor) / factor);
      form_diff = std::max(
          form_diff,
          std::abs(factor - embedding_conformal_factor_det(p)) / factor);
    }
    add_check(r, "lemma1_factor_fd_ratio", worst, cfg.tol("lemma1", 1e-6));
    add_check(r, "lemma1_factor_two_forms_agree", form_diff, 1e-12);
    add_check(r, "lemma1_factor_at_origin",
              std::abs(embedding_conformal_factor({}) - 4.0), 0.0);
  }

  // Lemma 2: pulled-back frame Gram = scalar * diag(-1,-1,-1,1), scalar
  // matching both determinant expressions of the conformal factor.
  {
    double off_worst = 0.0, factor_worst = 0.0;
    for (int i = 0; i < 50; ++i) {
      const ConformalElement g = random_g1(sampler, 0.4);
      const U2Point z = sampler.u2();
      const auto frames = action_tangent_frame(g, z);
      Matrix4c gram;
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
          gram(a, b) = metric_bilinear(frames[a], frames[b]);
      const Complex scalar = gram(3, 3);
      const double scale = std::abs(scalar);
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
          const Complex want =
              a == b ? scalar * frame_epsilon(a + 1) : Complex(0.0);
          off_worst =
              std::max(off_worst, std::abs(gram(a, b) - want) / scale);
        }
      factor_worst = std::max(
          factor_worst,
          std::abs(action_conformal_factor(g, z) - scalar) / scale);
      factor_worst = std::max(
          factor_worst,
          std::abs(action_conformal_factor_alt(g, z) - scalar) / scale);
    }
    add_check(r, "lemma2_gram_diagonal", off_worst, cfg.tol("lemma2", 1e-8));
    add_check(r, "lemma2_factor_both_expressions", factor_worst,
              cfg.tol("lemma2", 1e-8));
  }

  // Classical vacuum Maxwell equations for the pulled-back E/H fields,
  // by central differences, plus the star duality at evaluation points.
  {
    double pde_worst = 0.0, dual_worst = 0.0;
    const double h = 1e-3;
    const double tol_pde = cfg.tol("maxwell_fd", 1e-4);
    for (int k = 0; k <= std::min(cfg.k_max, 2); ++k)
      for (auto side :
           {MaxwellBasisLabel::Side::L, MaxwellBasisLabel::Side::R})
        for (int sign : {+1, -1}) {
          const FormField w = maxwell_basis({k, side, sign});
          // The classical duality (E,H) -> (H,-E) belongs to the Minkowski
          // star taken with the time-first volume form dt^dx1^dx2^dx3; the
          // embedding preserves the (x1,x2,x3,t)-ordered orientation, so
          // that star pulls back to -J.
          const FormField sw = apply_star(w).scaled(-1.0);
          const int pts = std::max(4, 50 / (2 * (std::min(cfg.k_max, 2) + 1)));
          for (int i = 0; i < pts; ++i) {
            const MinkowskiPoint p = random_point(sampler, 1.0);
            // stencil of E/H values: center and +-h along each coordinate
            std::array<std::pair<Vector3c, Vector3c>, 9> st;
            st[0] = eh_at(w, p.x1, p.x2, p.x3, p.t);
            const double d[4][4] = {{h, 0, 0, 0},
                                    {0, h, 0, 0},
                                    {0, 0, h, 0},
                                    {0, 0, 0, h}};
            for (int a = 0; a < 4; ++a) {
              st[1 + 2 * a] = eh_at(w, p.x1 + d[a][0], p.x2 + d[a][1],
                                    p.x3 + d[a][2], p.t + d[a][3]);
              st[2 + 2 * a] = eh_at(w, p.x1 - d[a][0], p.x2 - d[a][1],
                                    p.x3 - d[a][2], p.t - d[a][3]);
            }
            double scale = 0.0;
            for (const auto& s : st)
              scale = std::max({scale, s.first.norm(), s.second.norm()});
            auto dE = [&](int a) {
              return Vector3c(
                  (st[1 + 2 * a].first - st[2 + 2 * a].first) / (2.0 * h));
            };
            auto dH = [&](int a) {
              return Vector3c(
                  (st[1 + 2 * a].second - st[2 + 2 * a].second) / (2.0 * h));
            };
            auto curl = [](const Vector3c& d1, const Vector3c& d2,
                           const Vector3c& d3) {
              return Vector3c(d2(2) - d3(1), d3(0) - d1(2), d1(1) - d2(0));
            };
            const Vector3c curlE = curl(dE(0), dE(1), dE(2));
            const Vector3c curlH = curl(dH(0), dH(1), dH(2));
            const Complex divE = dE(0)(0) + dE(1)(1) + dE(2)(2);
            const Complex divH = dH(0)(0) + dH(1)(1) + dH(2)(2);
            const double res =
                std::max({(dE(3) + curlH).norm(), (dH(3) - curlE).norm(),
                          std::abs(divE), std::abs(divH)});
            pde_worst = std::max(pde_worst, res / std::max(1e-12, scale));
            // star duality: (E,H) -> (H,-E)
            const auto [e2, h2] = eh_at(sw, p.x1, p.x2, p.x3, p.t);
            const double dres =
                std::max((e2 - st[0].second).norm(),
                         (h2 + st[0].first).norm());
            dual_worst = std::max(dual_worst, dres / std::max(1e-12, scale));
          }
        }
    add_check(r, "classical_maxwell_fd_residual", pde_worst, tol_pde);
    add_check(r, "star_duality_E_to_H", dual_worst, cfg.tol("duality", 1e-10));
  }
  return r;
}

// ----------------------------------------------------------------- pairing

SuiteReport pairing_suite(const SuiteConfig& cfg) {
  SuiteReport r;
  r.suite = "pairing";
  HaarSampler sampler(cfg.seed);

  // Schur normalization: grid average of |psi_{k,k}|^2 over SU(2).
  {
    double worst = 0.0;
    for (int k = 0; k <= 6; ++k) {
      const Su2Grid grid(2 * k + 4);
      const ScalarField f{psi(k, k)};
      const Complex avg = grid.average([&](const U2Point& u) {
        const Complex v = f.eval(u);
        return v * std::conj(v);
      });
      worst = std::max(worst, std::abs(avg - 1.0 / double(k + 1)));
    }
    add_check(r, "schur_normalization", worst, cfg.tol("schur", 1e-10));
  }

  // Closed-form norms on the left families.
  {
    double worst = 0.0;
    for (int k = 0; k <= 5; ++k)
      for (int sign : {+1, -1}) {
        const MaxwellBasisLabel label{k, MaxwellBasisLabel::Side::L, sign};
        const FormField w = maxwell_basis(label);
        const PairingResult p =
            hermitian_pair(w, w, label.eigen_sign(), 2 * k + 8);
        const double want = -(4.0 * k + 8.0) / (k + 1.0) * kPi * kPi;
        worst = std::max(worst,
                         std::abs(p.value - want) / std::abs(want));
      }
    add_check(r, "norm_formula", worst, cfg.tol("norm", 1e-8));
  }

  // Invariance of the pairing under K and under generic group elements.
  {
    const MaxwellBasisLabel la{0, MaxwellBasisLabel::Side::L, +1};
    const MaxwellBasisLabel lb{1, MaxwellBasisLabel::Side::L, +1};
    const FormField wa = maxwell_basis(la);
    const FormField wb = maxwell_basis(lb);
    double worst_k = 0.0, worst_g = 0.0;
    for (int i = 0; i < 10; ++i) {
      const ConformalElement g =
          k_element(sampler.u2().matrix(), sampler.u2().matrix());
      const InvarianceReport rep =
          invariance_check(g, wa, wa, la.eigen_sign(), 14);
      worst_k = std::max(worst_k, rep.rel_error);
    }
    for (int i = 0; i < 10; ++i) {
      const ConformalElement g = random_g1(sampler, 0.15);
      const InvarianceReport rep =
          invariance_check(g, wb, wb, lb.eigen_sign(), 0);
      worst_g = std::max(worst_g, rep.rel_error);
    }
    add_check(r, "invariance_under_K", worst_k, cfg.tol("inv_k", 1e-6));
    add_check(r, "invariance_generic", worst_g, cfg.tol("inv_g", 1e-3));
  }

  // Theorem 19 sign pattern on all four families, k <= 3.
  {
    bool signs_ok = true;
    double off_worst = 0.0, diag_worst = 0.0;
    for (auto side : {MaxwellBasisLabel::Side::L, MaxwellBasisLabel::Side::R})
      for (int sign : {+1, -1}) {
        std::vector<MaxwellBasisLabel> labels;
        for (int k = 0; k <= std::min(cfg.k_max, 3); ++k)
          labels.push_back({k, side, sign});
        const GramResult g = gram_matrix(labels);
        double scale = 0.0;
        for (int i = 0; i < g.matrix.rows(); ++i)
          scale = std::max(scale, std::abs(g.matrix(i, i)));
        for (int i = 0; i < g.matrix.rows(); ++i) {
          const double diag = g.matrix(i, i).real();
          const double want_sign =
              side == MaxwellBasisLabel::Side::R ? 1.0 : -1.0;
          if (diag * want_sign <= 0.0) signs_ok = false;
          diag_worst = std::max(diag_worst,
                                std::abs(g.matrix(i, i).imag()) / scale);
          for (int j = 0; j < g.matrix.cols(); ++j)
            if (i != j)
              off_worst =
                  std::max(off_worst, std::abs(g.matrix(i, j)) / scale);
        }
      }
    add_flag(r, "gram_sign_pattern", signs_ok);
    add_check(r, "gram_off_diagonals", off_worst, cfg.tol("gram", 1e-8));
    add_check(r, "gram_diagonals_real", diag_worst, cfg.tol("gram", 1e-8));
  }

  // Potential independence: alpha -> alpha + df + c a1 leaves the value
  // unchanged for mu in the eigenspace.
  {
    const MaxwellBasisLabel label{1, MaxwellBasisLabel::Side::L, +1};
    FormField w = maxwell_basis(label);
    const PairingResult base =
        hermitian_pair(w, w, label.eigen_sign(), 2 * 1 + 8);
    // shifted potential: alpha + d(psi_{2,2}) + 0.7 a1
    FormField shift =
        *w.potential +
        exterior_derivative(
            FormField::exact(0, {{0u, ScalarField(psi(2, 2))}})) +
        coframe_alpha(1).scaled(0.7);
    FormField w2 = w;
    w2.potential = std::make_shared<FormField>(std::move(shift));
    const PairingResult shifted =
        hermitian_pair(w2, w, label.eigen_sign(), 2 * 2 + 8);
    add_check(r, "potential_independence",
              std::abs(shifted.value - base.value), 1e-9 * kPi * kPi);
  }
  return r;
}

// -------------------------------------------------------------- lie-action

SuiteReport lie_action_suite(const SuiteConfig& cfg) {
  SuiteReport r;
  r.suite = "lie-action";
  HaarSampler sampler(cfg.seed);

  // Lemma 18: p^+ annihilates the lowest K-type of the (2,0,2) family and
  // p^- the one of (2,0,-2).
  {
    double worst = 0.0;
    for (int sign : {+1, -1}) {
      const auto basis =
          maxwell_k0_ktype_basis(MaxwellBasisLabel::Side::R, sign);
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
          const Matrix4c x = sign > 0 ? p_plus_generator(i, j)
                                      : p_minus_generator(i, j);
          for (const FormField& w : basis) {
            const FormField dw = infinitesimal_action(x, w);
            HaarSampler pts(cfg.seed + 17);
            double num = 0.0, den = 0.0;
            for (int s = 0; s < 10; ++s) {
              const U2Point u = pts.u2();
              num = std::max(num, dw.coefficients(u).norm());
              den = std::max(den, w.coefficients(u).norm());
            }
            worst = std::max(worst, num / den);
          }
        }
    }
    add_check(r, "lemma18_annihilation", worst, cfg.tol("annihilation", 1e-4));
  }

  // S cap K frequencies: pi(s(theta)) scales the side-R families by
  // exp(-i (2k+4) theta) (sign +) and exp(+i (2k+4) theta) (sign -).
  {
    double worst = 0.0;
    bool ints_ok = true;
    const double theta = 0.01;
    const ConformalElement s =
        s_cap_k_element(std::exp(kI * theta));
    for (int sign : {+1, -1})
      for (int k = 0; k <= std::min(cfg.k_max, 3); ++k) {
        const FormField w =
            maxwell_basis({k, MaxwellBasisLabel::Side::R, sign});
        const FormField pw = pullback(s.inverse(), w);  // pi(s) w
        const int want = -sign * (2 * k + 4);
        for (int i = 0; i < 5; ++i) {
          const U2Point u = sampler.u2();
          const Eigen::VectorXcd a = w.coefficients(u);
          const Eigen::VectorXcd b = pw.coefficients(u);
          int imax = 0;
          a.cwiseAbs().maxCoeff(&imax);
          const Complex lambda = b(imax) / a(imax);
          worst = std::max(worst, (b - lambda * a).norm() / a.norm());
          worst = std::max(worst, std::abs(std::abs(lambda) - 1.0));
          const double m = std::arg(lambda) / theta;
          if (std::lround(m) != want) ints_ok = false;
          worst = std::max(worst, std::abs(m - double(want)));
        }
      }
    add_flag(r, "s_cap_k_exponents_integer", ints_ok);
    add_check(r, "s_cap_k_exponent_error", worst, cfg.tol("exponent", 1e-8));
  }
  return r;
}

// --------------------------------------------------------------- branching

SuiteReport branching_suite(const SuiteConfig& cfg) {
  SuiteReport r;
  r.suite = "branching";
  const int n = cfg.order > 0 ? cfg.order : 40;

  const XYSeries sum_side = maxw_character_series(n);
  const XYSeries rat_side = rational_side_series(n);
  add_flag(r, "character_sum_equals_rational", sum_side == rat_side);

  // (1 - x^2) * rational = x^4 sum_k chi_{2k+2} x^{2k}
  {
    XYSeries one_minus = XYSeries::zero(n);
    one_minus.set(0, LaurentPoly::constant(1));
    one_minus.set(2, LaurentPoly::constant(-1));
    XYSeries rhs = XYSeries::zero(n);
    for (int k = 0; 2 * k + 4 <= n; ++k)
      rhs.set(2 * k + 4, su2_character(2 * k + 2));
    add_flag(r, "cleared_denominator_form", one_minus * rat_side == rhs);
  }

  // Coefficient spot checks and symmetries.
  {
    bool ok = sum_side.coeff(5).is_zero() &&
              sum_side.coeff(4) == su2_character(2) &&
              sum_side.coeff(6) == su2_character(3) * su2_character(1);
    for (int p = 0; p <= n; ++p)
      ok = ok && sum_side.coeff(p).inverted() == sum_side.coeff(p);
    for (int k = 0; 2 * k + 4 <= n; ++k)
      ok = ok && sum_side.coeff(2 * k + 4).eval(1.0) ==
                     Complex(double((k + 3) * (k + 1)));
    add_flag(r, "coefficients_and_symmetry", ok);
  }

  const DualPairReport rep = dual_pair_decomposition_check(n);
  add_flag(r, "dual_pair_decomposition", rep.ok,
           rep.ok ? "" : "first mismatch at x^" +
                             std::to_string(rep.first_mismatch));
  add_flag(r, "lowest_s_cap_k_power", rep.lowest_power == 4);
  add_flag(r, "mirrored_family_series",
           mirrored_character_series(n) == sum_side);
  return r;
}

// --------------------------------------------------------------- planewave

SuiteReport planewave_suite(const SuiteConfig& cfg) {
  SuiteReport r;
  r.suite = "planewave";
  HaarSampler sampler(cfg.seed);
  const double tol = cfg.tol("planewave", 1e-12);

  double constraint_worst = 0.0, triad_worst = 0.0, cone_worst = 0.0;
  for (int i = 0; i < std::max(cfg.samples, 20); ++i) {
    Vector3d u;
    u << sampler.normal(), sampler.normal(), sampler.normal();
    if (u.norm() < 0.1) u << 1.0, 0.0, 0.0;
    const double freq = (i % 2 == 0 ? 1.0 : -1.0) * u.norm();
    Vector3c v;
    v << Complex(sampler.normal(), sampler.normal()),
        Complex(sampler.normal(), sampler.normal()),
        Complex(sampler.normal(), sampler.normal());
    const Vector3c uc = u.cast<Complex>();
    const Complex uv = uc(0) * v(0) + uc(1) * v(1) + uc(2) * v(2);
    Vector3c e0 = v - (uv / u.squaredNorm()) * uc;
    const PlaneWave pw = plane_wave(u, freq, e0);
    const double scale = std::max(1.0, u.norm() * e0.norm());
    constraint_worst = std::max(
        {constraint_worst,
         (uc.cross(pw.E0) + freq * pw.H0).norm() / scale,
         (uc.cross(pw.H0) - freq * pw.E0).norm() / scale,
         std::abs(freq * freq - u.squaredNorm()) / std::max(1.0, u.squaredNorm()),
         std::abs(uc(0) * pw.E0(0) + uc(1) * pw.E0(1) + uc(2) * pw.E0(2)) /
             scale});
    if (freq > 0) {
      // right-handed triad (u, H0, E0) for a real polarization
      Vector3c re;
      re << v(0).real(), v(1).real(), v(2).real();
      const Complex uvr = uc(0) * re(0) + uc(1) * re(1) + uc(2) * re(2);
      const Vector3c e0r = re - (uvr / u.squaredNorm()) * uc;
      const PlaneWave pr = plane_wave(u, freq, e0r);
      Eigen::Matrix3d triad;
      triad.row(0) = u / u.norm();
      triad.row(1) = pr.H0.real() / pr.H0.norm();
      triad.row(2) = pr.E0.real() / pr.E0.norm();
      triad_worst =
          std::max(triad_worst, std::abs(triad.determinant() - 1.0));
    }
    const double x = sampler.uniform(-2.0, 2.0);
    const Eigen::Vector4d z(u(0), u(1), u(2), freq);
    cone_worst = std::max(cone_worst,
                          std::abs(light_cone_functional(z, x) - freq * x) /
                              std::max(1.0, std::abs(freq * x)));
  }
  add_check(r, "plane_wave_constraints", constraint_worst, tol);
  add_check(r, "right_handed_triad", triad_worst, tol);
  add_check(r, "light_cone_functional", cone_worst, tol);
  return r;
}

}  // namespace

SuiteReport run_suite(const std::string& name, const SuiteConfig& config) {
  if (name == "geometry") return geometry_suite(config);
  if (name == "ktypes") return ktypes_suite(config);
  if (name == "maxwell") return maxwell_suite(config);
  if (name == "conformal") return conformal_suite(config);
  if (name == "pairing") return pairing_suite(config);
  if (name == "lie-action") return lie_action_suite(config);
  if (name == "branching") return branching_suite(config);
  if (name == "planewave") return planewave_suite(config);
  if (name == "all") {
    SuiteReport all;
    all.suite = "all";
    for (const std::string& s : suite_names()) {
      if (s == "all") continue;
      SuiteReport sub = run_suite(s, config);
      for (CheckResult& c : sub.checks) {
        c.name = s + "/" + c.name;
        all.checks.push_back(std::move(c));
      }
    }
    return all;
  }
  throw std::invalid_argument("run_suite: unknown suite " + name);
}

}  // namespace confmax
