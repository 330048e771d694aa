#include "confmax/geometry.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "confmax/fields.hpp"

namespace confmax {

const Matrix2c& frame_matrix(int j) {
  static const std::array<Matrix2c, 4> frames = [] {
    std::array<Matrix2c, 4> f;
    f[0] << kI, 0, 0, -kI;
    f[1] << 0, 1, -1, 0;
    f[2] << 0, kI, kI, 0;
    f[3] << kI, 0, 0, kI;
    return f;
  }();
  if (j < 1 || j > 4) throw std::out_of_range("frame_matrix: j in 1..4");
  return frames[j - 1];
}

double frame_epsilon(int j) {
  if (j < 1 || j > 4) throw std::out_of_range("frame_epsilon: j in 1..4");
  return j == 4 ? 1.0 : -1.0;
}

Eigen::Vector4cd frame_coordinates(const Matrix2c& m) {
  Eigen::Vector4cd c;
  c(0) = (m(0, 0) - m(1, 1)) / (2.0 * kI);
  c(1) = (m(0, 1) - m(1, 0)) / 2.0;
  c(2) = (m(0, 1) + m(1, 0)) / (2.0 * kI);
  c(3) = (m(0, 0) + m(1, 1)) / (2.0 * kI);
  return c;
}

Complex metric_bilinear(const Matrix2c& x, const Matrix2c& y) {
  return (-(x + y).determinant() + x.determinant() + y.determinant()) / 2.0;
}

double metric_on_tangent(const Matrix2c& x, const Matrix2c& y) {
  const double sx = (x + x.adjoint()).norm();
  const double sy = (y + y.adjoint()).norm();
  if (sx > 1e-10 * (1.0 + x.norm()) || sy > 1e-10 * (1.0 + y.norm()))
    throw std::domain_error("metric_on_tangent: input not skew-Hermitian");
  return metric_bilinear(x, y).real();
}

int two_form_index(int a, int b) {
  static const int idx[5][5] = {{-1, -1, -1, -1, -1},
                                {-1, -1, 0, 1, 2},
                                {-1, -1, -1, 3, 4},
                                {-1, -1, -1, -1, 5},
                                {-1, -1, -1, -1, -1}};
  if (a < 1 || b > 4 || a >= b) throw std::out_of_range("two_form_index");
  return idx[a][b];
}

const Matrix6c& hodge_star_matrix() {
  static const Matrix6c m = [] {
    Matrix6c j = Matrix6c::Zero();
    // J(12)=34, J(13)=-24, J(14)=-23, J(23)=14, J(24)=13, J(34)=-12
    j(5, 0) = 1;
    j(4, 1) = -1;
    j(3, 2) = -1;
    j(2, 3) = 1;
    j(1, 4) = 1;
    j(0, 5) = -1;
    return j;
  }();
  return m;
}

Vector6c hodge_star(const Vector6c& v) { return hodge_star_matrix() * v; }

const Matrix6c& star_eigen_projector(int sign) {
  static const Matrix6c plus =
      (Matrix6c::Identity() - kI * hodge_star_matrix()) / 2.0;
  static const Matrix6c minus =
      (Matrix6c::Identity() + kI * hodge_star_matrix()) / 2.0;
  return sign > 0 ? plus : minus;
}

std::array<Vector6c, 3> star_eigen_basis(int sign) {
  const Complex s = sign > 0 ? kI : -kI;
  std::array<Vector6c, 3> b;
  for (auto& v : b) v.setZero();
  b[0](2) = 1;
  b[0](3) = s;  // a1^a4 +- i a2^a3
  b[1](4) = 1;
  b[1](1) = -s;  // a2^a4 -+ i a1^a3
  b[2](5) = 1;
  b[2](0) = s;  // a3^a4 +- i a1^a2
  return b;
}

double HaarSampler::uniform(double a, double b) {
  return std::uniform_real_distribution<double>(a, b)(rng_);
}

double HaarSampler::normal() {
  return std::normal_distribution<double>(0.0, 1.0)(rng_);
}

U2Point HaarSampler::su2() {
  double a, b, c, d, n2;
  do {
    a = normal();
    b = normal();
    c = normal();
    d = normal();
    n2 = a * a + b * b + c * c + d * d;
  } while (n2 < 1e-12);
  const double s = 1.0 / std::sqrt(n2);
  a *= s;
  b *= s;
  c *= s;
  d *= s;
  Matrix2c u;
  u << Complex(a, b), Complex(c, d), Complex(-c, d), Complex(a, -b);
  return U2Point(u);
}

U2Point HaarSampler::u2() {
  const double t = uniform(0.0, 2.0 * kPi);
  return U2Point(Complex(std::cos(t), std::sin(t)) * su2().matrix());
}

void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
  x.assign(n, 0.0);
  w.assign(n, 0.0);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    x[i] = -z;
    x[n - 1 - i] = z;
    w[i] = w[n - 1 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
  }
}

namespace {

Matrix2c euler_su2(double phi, double theta, double psi) {
  auto rz = [](double a) {
    Matrix2c m;
    m << std::exp(-kI * (a / 2.0)), 0, 0, std::exp(kI * (a / 2.0));
    return m;
  };
  Matrix2c ry;
  const double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
  ry << c, -s, s, c;
  return rz(phi) * ry * rz(psi);
}

}  // namespace

Su2Grid::Su2Grid(int order) : order_(order) {
  if (order < 1) throw std::domain_error("Su2Grid: order must be >= 1");
  const int na = order;  // trapezoid nodes in each periodic angle
  const int nt = order / 2 + 1;
  std::vector<double> gx, gw;
  gauss_legendre(nt, gx, gw);
  nodes_.reserve(size_t(na) * na * nt);
  for (int i = 0; i < na; ++i) {
    const double phi = 4.0 * kPi * i / na;
    for (int j = 0; j < nt; ++j) {
      const double theta = std::acos(gx[j]);
      for (int l = 0; l < na; ++l) {
        const double psi = 4.0 * kPi * l / na;
        QuadratureNode node;
        node.phi = phi;
        node.theta = theta;
        node.psi = psi;
        node.weight = gw[j] / 2.0 / double(na) / double(na);
        node.u = euler_su2(phi, theta, psi);
        nodes_.push_back(std::move(node));
      }
    }
  }
}

int worker_threads() {
  if (const char* env = std::getenv("CONFMAX_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : int(hw);
}

Complex Su2Grid::average(
    const std::function<Complex(const U2Point&)>& f) const {
  // Fixed chunking keeps the compensated reduction order-independent of the
  // thread count.
  const size_t n = nodes_.size();
  const size_t chunk = 4096;
  const size_t nchunks = (n + chunk - 1) / chunk;
  std::vector<Complex> partial(nchunks, Complex(0.0));
  auto run_chunk = [&](size_t ci) {
    const size_t lo = ci * chunk, hi = std::min(n, lo + chunk);
    Complex sum = 0.0, comp = 0.0;  // Kahan
    for (size_t i = lo; i < hi; ++i) {
      const Complex term =
          nodes_[i].weight * f(U2Point(nodes_[i].u)) - comp;
      const Complex t = sum + term;
      comp = (t - sum) - term;
      sum = t;
    }
    partial[ci] = sum;
  };
  const int nthreads = std::min<int>(worker_threads(), int(nchunks));
  if (nthreads <= 1) {
    for (size_t ci = 0; ci < nchunks; ++ci) run_chunk(ci);
  } else {
    std::vector<std::thread> pool;
    std::atomic<size_t> next{0};
    for (int t = 0; t < nthreads; ++t)
      pool.emplace_back([&] {
        for (size_t ci = next++; ci < nchunks; ci = next++) run_chunk(ci);
      });
    for (auto& th : pool) th.join();
  }
  Complex sum = 0.0, comp = 0.0;
  for (const Complex& p : partial) {
    const Complex term = p - comp;
    const Complex t = sum + term;
    comp = (t - sum) - term;
    sum = t;
  }
  return sum;
}

std::string Su2Grid::to_json() const {
  std::ostringstream os;
  os.precision(17);
  os << "{\"order\":" << order_ << ",\"nodes\":[";
  for (size_t i = 0; i < nodes_.size(); ++i) {
    const auto& nd = nodes_[i];
    if (i) os << ",";
    os << "{\"phi\":" << nd.phi << ",\"theta\":" << nd.theta
       << ",\"psi\":" << nd.psi << ",\"weight\":" << nd.weight << "}";
  }
  os << "]}";
  return os.str();
}

Complex integrate_threeform_su2(const FormField& w, const Su2Grid& grid) {
  if (w.grade() != 3)
    throw std::invalid_argument("integrate_threeform_su2: grade must be 3");
  const double vol = 2.0 * kPi * kPi;
  return vol * grid.average([&](const U2Point& u) {
           const Complex v = w.coefficients(u)(0);  // a1^a2^a3 component
           if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
             throw std::runtime_error(
                 "integrate_threeform_su2: non-finite integrand");
           return v;
         });
}

}  // namespace confmax
