#include "confmax/conformal.hpp"

#include <cmath>

#include <unsupported/Eigen/MatrixFunctions>

namespace confmax {

const Matrix4c& pairing_matrix(Realization r) {
  static const Matrix4c jg = [] {
    Matrix4c m = Matrix4c::Zero();
    m.block<2, 2>(0, 2) = kI * Matrix2c::Identity();
    m.block<2, 2>(2, 0) = -kI * Matrix2c::Identity();
    return m;
  }();
  static const Matrix4c i22 = [] {
    Matrix4c m = Matrix4c::Identity();
    m(2, 2) = m(3, 3) = -1.0;
    return m;
  }();
  return r == Realization::G ? jg : i22;
}

ConformalElement::ConformalElement(const Matrix4c& m, Realization r)
    : m_(m), realization_(r) {
  const Matrix4c& j = pairing_matrix(r);
  const double drift = (m * j * m.adjoint() - j).norm();
  if (drift > 1e-10 * std::max(1.0, m.squaredNorm()))
    throw std::invalid_argument(
        "ConformalElement: matrix does not preserve the pairing (drift " +
        std::to_string(drift) + ")");
}

ConformalElement ConformalElement::identity(Realization r) {
  return ConformalElement(Matrix4c::Identity(), r);
}

ConformalElement ConformalElement::operator*(const ConformalElement& o) const {
  if (realization_ != o.realization_)
    throw std::invalid_argument("ConformalElement: realization mismatch");
  return ConformalElement(m_ * o.m_, realization_);
}

ConformalElement ConformalElement::inverse() const {
  // g^{-1} = J g* J since g J g* = J and J^2 = I in both realizations.
  const Matrix4c& j = pairing_matrix(realization_);
  return ConformalElement(j * m_.adjoint() * j, realization_);
}

Matrix4c cayley_matrix() {
  Matrix4c l = Matrix4c::Zero();
  const double s = 1.0 / std::sqrt(2.0);
  l.block<2, 2>(0, 0) = s * Matrix2c::Identity();
  l.block<2, 2>(0, 2) = s * kI * Matrix2c::Identity();
  l.block<2, 2>(2, 0) = s * Matrix2c::Identity();
  l.block<2, 2>(2, 2) = -s * kI * Matrix2c::Identity();
  return l;
}

ConformalElement cayley(const ConformalElement& g) {
  if (g.realization() != Realization::G)
    throw std::invalid_argument("cayley: expects the G realization");
  const Matrix4c l = cayley_matrix();
  return ConformalElement(l * g.matrix() * l.adjoint(), Realization::G1);
}

ConformalElement cayley_inverse(const ConformalElement& g) {
  if (g.realization() != Realization::G1)
    throw std::invalid_argument("cayley_inverse: expects the G1 realization");
  const Matrix4c l = cayley_matrix();
  return ConformalElement(l.adjoint() * g.matrix() * l, Realization::G);
}

namespace {

void check_hermitian(const Matrix2c& y, const char* where) {
  if ((y - y.adjoint()).norm() > 1e-10 * (1.0 + y.norm()))
    throw std::invalid_argument(std::string(where) + ": matrix not Hermitian");
}

ConformalElement to_g1(const ConformalElement& g) {
  return g.realization() == Realization::G1 ? g : cayley(g);
}

}  // namespace

ConformalElement nbar(const Matrix2c& y) {
  check_hermitian(y, "nbar");
  Matrix4c m = Matrix4c::Identity();
  m.block<2, 2>(2, 0) = y;
  return ConformalElement(m, Realization::G);
}

ConformalElement nupper(const Matrix2c& y) {
  check_hermitian(y, "nupper");
  Matrix4c m = Matrix4c::Identity();
  m.block<2, 2>(0, 2) = y;
  return ConformalElement(m, Realization::G);
}

ConformalElement k_element(const Matrix2c& g1, const Matrix2c& g2) {
  (void)U2Point(g1);  // validate unitarity
  (void)U2Point(g2);
  Matrix4c m = Matrix4c::Zero();
  m.block<2, 2>(0, 0) = g1;
  m.block<2, 2>(2, 2) = g2;
  return ConformalElement(m, Realization::G1);
}

ConformalElement s_cap_k_element(Complex a) {
  if (std::abs(std::abs(a) - 1.0) > 1e-10)
    throw std::invalid_argument("s_cap_k_element: |a| must be 1");
  return k_element(a * Matrix2c::Identity(),
                   (1.0 / a) * Matrix2c::Identity());
}

bool in_lie_algebra_g1(const Matrix4c& x, double tol) {
  const Matrix4c& j = pairing_matrix(Realization::G1);
  return (x * j + j * x.adjoint()).norm() <= tol * (1.0 + x.norm());
}

std::pair<Matrix4c, Matrix4c> split_lie_algebra_g1(const Matrix4c& x) {
  const Matrix4c& j = pairing_matrix(Realization::G1);
  const Matrix4c xr = (x - j * x.adjoint() * j) / 2.0;
  const Matrix4c xi = (x + j * x.adjoint() * j) / (2.0 * kI);
  return {xr, xi};
}

Matrix4c p_plus_generator(int i, int j) {
  if (i < 0 || i > 1 || j < 0 || j > 1)
    throw std::out_of_range("p_plus_generator");
  Matrix4c m = Matrix4c::Zero();
  m(i, 2 + j) = 1.0;
  return m;
}

Matrix4c p_minus_generator(int i, int j) {
  if (i < 0 || i > 1 || j < 0 || j > 1)
    throw std::out_of_range("p_minus_generator");
  Matrix4c m = Matrix4c::Zero();
  m(2 + i, j) = 1.0;
  return m;
}

Matrix2c hermitian_matrix(const MinkowskiPoint& p) {
  Matrix2c x;
  x << Complex(p.t + p.x3, 0.0), Complex(p.x1, p.x2), Complex(p.x1, -p.x2),
      Complex(p.t - p.x3, 0.0);
  return x;
}

double minkowski_inner(const Eigen::Vector4d& z, const Eigen::Vector4d& x) {
  return -z(0) * x(0) - z(1) * x(1) - z(2) * x(2) + z(3) * x(3);
}

U2Point embed_minkowski(const MinkowskiPoint& p) {
  const Matrix2c x = hermitian_matrix(p);
  const Matrix2c id = Matrix2c::Identity();
  return U2Point((id + kI * x) * (id - kI * x).inverse());
}

double embedding_conformal_factor(const MinkowskiPoint& p) {
  const double s2 = p.x1 * p.x1 + p.x2 * p.x2 + p.x3 * p.x3 + p.t * p.t;
  const double xx = p.t * p.t - p.x1 * p.x1 - p.x2 * p.x2 - p.x3 * p.x3;
  return 4.0 / (1.0 + 2.0 * s2 + xx * xx);
}

double embedding_conformal_factor_det(const MinkowskiPoint& p) {
  const Matrix2c x = hermitian_matrix(p);
  const Complex d = (Matrix2c::Identity() + x * x).determinant();
  return 4.0 / d.real();
}

Matrix2c embedding_tangent(const MinkowskiPoint& p, const Eigen::Vector4d& v) {
  const Matrix2c x = hermitian_matrix(p);
  const MinkowskiPoint vp{v(0), v(1), v(2), v(3)};
  const Matrix2c vh = hermitian_matrix(vp);
  const Matrix2c id = Matrix2c::Identity();
  return 2.0 * kI * (id + kI * x).inverse() * vh * (id - kI * x).inverse();
}

namespace {

struct ActionBlocks {
  Matrix2c a, b, c, d;
  Matrix2c den;     // c z + d
  Matrix2c den_inv;
  double cond;
};

ActionBlocks action_blocks(const ConformalElement& g0, const U2Point& z) {
  const ConformalElement g = to_g1(g0);
  ActionBlocks r;
  r.a = g.matrix().block<2, 2>(0, 0);
  r.b = g.matrix().block<2, 2>(0, 2);
  r.c = g.matrix().block<2, 2>(2, 0);
  r.d = g.matrix().block<2, 2>(2, 2);
  r.den = r.c * z.matrix() + r.d;
  const Eigen::JacobiSVD<Matrix2c> svd(r.den);
  const double smin = svd.singularValues().minCoeff();
  r.cond = smin <= 0.0 ? std::numeric_limits<double>::infinity()
                       : svd.singularValues().maxCoeff() / smin;
  if (r.cond > 1e8)
    throw std::runtime_error(
        "act: the point is too close to the singular set of g (condition " +
        std::to_string(r.cond) + ")");
  r.den_inv = r.den.inverse();
  return r;
}

}  // namespace

double act_condition(const ConformalElement& g, const U2Point& z) {
  const ConformalElement g1 = to_g1(g);
  const Matrix2c den = g1.matrix().block<2, 2>(2, 0) * z.matrix() +
                       g1.matrix().block<2, 2>(2, 2);
  const Eigen::JacobiSVD<Matrix2c> svd(den);
  const double smin = svd.singularValues().minCoeff();
  return smin <= 0.0 ? std::numeric_limits<double>::infinity()
                     : svd.singularValues().maxCoeff() / smin;
}

U2Point act(const ConformalElement& g, const U2Point& z) {
  const ActionBlocks bl = action_blocks(g, z);
  const Matrix2c w = (bl.a * z.matrix() + bl.b) * bl.den_inv;
  const double drift = (w * w.adjoint() - Matrix2c::Identity()).norm();
  if (drift <= 1e-12) return U2Point(w);
  if (drift <= 1e-8) {
    Eigen::JacobiSVD<Matrix2c> svd(w,
                                   Eigen::ComputeFullU | Eigen::ComputeFullV);
    return U2Point(svd.matrixU() * svd.matrixV().adjoint());
  }
  throw std::runtime_error("act: unitarity drift " + std::to_string(drift) +
                           " exceeds the re-unitarization threshold");
}

Complex action_conformal_factor(const ConformalElement& g, const U2Point& z) {
  const ActionBlocks bl = action_blocks(g, z);
  const Matrix2c num = bl.a * z.matrix() + bl.b;
  return (num.inverse() * bl.a * z.matrix() -
          bl.den_inv * bl.c * z.matrix())
      .determinant();
}

Complex action_conformal_factor_alt(const ConformalElement& g,
                                    const U2Point& z) {
  const ActionBlocks bl = action_blocks(g, z);
  const Matrix2c num = bl.a * z.matrix() + bl.b;
  return (num.inverse() * bl.b - bl.den_inv * bl.d).determinant();
}

std::array<Matrix2c, 4> action_tangent_frame(const ConformalElement& g,
                                             const U2Point& z) {
  const ActionBlocks bl = action_blocks(g, z);
  const Matrix2c w = (bl.a * z.matrix() + bl.b) * bl.den_inv;
  const Matrix2c w_inv = w.inverse();
  std::array<Matrix2c, 4> out;
  for (int j = 1; j <= 4; ++j) {
    const Matrix2c zx = z.matrix() * frame_matrix(j);
    out[j - 1] = w_inv * (bl.a * zx - w * bl.c * zx) * bl.den_inv;
  }
  return out;
}

FormField pullback(const ConformalElement& g0, const FormField& w) {
  const ConformalElement g = to_g1(g0);
  FormField wv = w;
  const int grade = w.grade();
  FormField out = FormField::sampled(grade, [g, wv, grade](const U2Point& u) {
    const U2Point img = act(g, u);
    const auto frames = action_tangent_frame(g, u);
    Matrix4c c;
    for (int j = 0; j < 4; ++j)
      c.row(j) = frame_coordinates(frames[j]).transpose();
    return transform_coefficients(grade, wv.coefficients(img), c);
  });
  if (w.potential)
    out.potential = std::make_shared<FormField>(pullback(g, *w.potential));
  return out;
}

namespace {

ConformalElement exp_g1(const Matrix4c& x) {
  return ConformalElement(Matrix4c(x.exp()), Realization::G1);
}

// -(d/dt)|_0 (exp(tY))^* w for a real direction Y, by central differences
// with one Richardson level.
FormField fd_action(const Matrix4c& y, const FormField& w, double h) {
  const FormField p1 = pullback(exp_g1(h * y), w);
  const FormField m1 = pullback(exp_g1(-h * y), w);
  const FormField p2 = pullback(exp_g1((h / 2.0) * y), w);
  const FormField m2 = pullback(exp_g1((-h / 2.0) * y), w);
  const FormField d1 = (p1 + m1.scaled(-1.0)).scaled(1.0 / (2.0 * h));
  const FormField d2 = (p2 + m2.scaled(-1.0)).scaled(1.0 / h);
  return (d2.scaled(4.0 / 3.0) + d1.scaled(-1.0 / 3.0)).scaled(-1.0);
}

}  // namespace

FormField infinitesimal_action(const Matrix4c& x, const FormField& w,
                               double step) {
  const auto [xr, xi] = split_lie_algebra_g1(x);
  std::vector<std::pair<Complex, Matrix4c>> parts;
  if (xr.norm() > 1e-14 * (1.0 + x.norm())) parts.emplace_back(1.0, xr);
  if (xi.norm() > 1e-14 * (1.0 + x.norm())) parts.emplace_back(kI, xi);
  FormField out;
  if (parts.empty()) {
    const int grade = w.grade();
    out = FormField::sampled(grade, [grade](const U2Point&) {
      return Eigen::VectorXcd(
          Eigen::VectorXcd::Zero(grade_masks(grade).size()));
    });
  } else {
    bool first = true;
    for (const auto& [c, y] : parts) {
      FormField term = fd_action(y, w, step).scaled(c);
      out = first ? std::move(term) : out + term;
      first = false;
    }
  }
  if (w.potential)
    out.potential =
        std::make_shared<FormField>(infinitesimal_action(x, *w.potential, step));
  return out;
}

std::pair<Vector3c, Vector3c> extract_EH(const FormField& w,
                                         const MinkowskiPoint& p) {
  if (w.grade() != 2)
    throw std::invalid_argument("extract_EH: expects a 2-form");
  const U2Point q = embed_minkowski(p);
  Matrix4c c;
  for (int a = 0; a < 4; ++a) {
    Eigen::Vector4d v = Eigen::Vector4d::Zero();
    v(a) = 1.0;
    c.row(a) = frame_coordinates(embedding_tangent(p, v)).transpose();
  }
  // Pulled-back coefficients against dx-axes (x1,x2,x3,t) in the order
  // (12),(13),(14),(23),(24),(34); the 2-form dictionary is
  // w = h1 dx23 - h2 dx13 + h3 dx12 - e1 dx1^dt - e2 dx2^dt - e3 dx3^dt.
  const Eigen::VectorXcd f = transform_coefficients(2, w.coefficients(q), c);
  Vector3c e, h;
  h << f(3), -f(1), f(0);
  e << -f(2), -f(4), -f(5);
  return {e, h};
}

Complex PlaneWave::phase(const MinkowskiPoint& x) const {
  const double v = -(wave_vec(0) * x.x1 + wave_vec(1) * x.x2 +
                     wave_vec(2) * x.x3) +
                   freq * x.t;
  return std::exp(kI * v);
}

Vector3c PlaneWave::E(const MinkowskiPoint& x) const { return phase(x) * E0; }

Vector3c PlaneWave::H(const MinkowskiPoint& x) const { return phase(x) * H0; }

PlaneWave plane_wave(const Vector3d& u, double freq, const Vector3c& e0) {
  const double n2 = u.squaredNorm();
  if (n2 < 1e-28) throw std::invalid_argument("plane_wave: zero wave vector");
  if (std::abs(freq * freq - n2) > 1e-12 * std::max(1.0, n2))
    throw std::invalid_argument("plane_wave: freq^2 != |u|^2");
  const Vector3c uc = u.cast<Complex>();
  const Complex transversal =
      uc(0) * e0(0) + uc(1) * e0(1) + uc(2) * e0(2);  // bilinear, no conj
  if (std::abs(transversal) > 1e-12 * std::max(1.0, u.norm() * e0.norm()))
    throw std::invalid_argument("plane_wave: E0 not transversal to u");
  PlaneWave pw;
  pw.wave_vec = u;
  pw.freq = freq;
  pw.E0 = e0;
  pw.H0 = -uc.cross(e0) / freq;
  return pw;
}

double light_cone_functional(const Eigen::Vector4d& z, double x) {
  const MinkowskiPoint zp{z(0), z(1), z(2), z(3)};
  const Matrix2c zh = hermitian_matrix(zp);
  auto p = [&](double q) {
    return 0.5 * (zh + q * x * Matrix2c::Identity()).determinant().real();
  };
  return (p(1.0) - p(-1.0)) / 2.0;
}

}  // namespace confmax
