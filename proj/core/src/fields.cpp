#include "confmax/fields.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace confmax {

ScalarField ScalarField::constant(Complex c) {
  MatrixCoeffFn f;
  f.k = 0;
  f.det_power = 0;
  f.left = Eigen::VectorXcd::Constant(1, c);
  f.right = Eigen::VectorXcd::Constant(1, 1.0);
  return ScalarField(f);
}

ScalarField ScalarField::generic(std::function<Complex(const U2Point&)> f) {
  ScalarField s;
  s.generic_ = std::move(f);
  return s;
}

bool ScalarField::constant_value(Complex* value) const {
  if (!is_exact()) return false;
  Complex v = 0.0;
  for (const auto& t : terms_) {
    if (t.k != 0 || t.det_power != 0) return false;
    v += t.left(0) * std::conj(t.right(0));
  }
  if (value) *value = v;
  return true;
}

Complex ScalarField::eval(const U2Point& u) const {
  if (generic_) return generic_(u);
  Complex s = 0.0;
  for (const auto& t : terms_) s += t.eval(u.matrix());
  return s;
}

ScalarField ScalarField::derivative(const Matrix2c& x) const {
  if (!is_exact())
    throw std::logic_error(
        "ScalarField::derivative: black-box coefficient needs finite "
        "differences");
  std::vector<MatrixCoeffFn> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back(t.derivative(x));
  return ScalarField(std::move(out));
}

ScalarField ScalarField::conjugated() const {
  ScalarField self = *this;
  return generic([self](const U2Point& u) { return std::conj(self.eval(u)); });
}

ScalarField ScalarField::operator+(const ScalarField& o) const {
  if (is_exact() && o.is_exact()) {
    std::vector<MatrixCoeffFn> terms = terms_;
    terms.insert(terms.end(), o.terms_.begin(), o.terms_.end());
    return ScalarField(std::move(terms));
  }
  ScalarField a = *this, b = o;
  return generic([a, b](const U2Point& u) { return a.eval(u) + b.eval(u); });
}

ScalarField ScalarField::operator*(const ScalarField& o) const {
  Complex c;
  if (o.constant_value(&c)) return scaled(c);
  if (constant_value(&c)) return o.scaled(c);
  ScalarField a = *this, b = o;
  return generic([a, b](const U2Point& u) { return a.eval(u) * b.eval(u); });
}

ScalarField ScalarField::scaled(Complex c) const {
  if (is_exact()) {
    std::vector<MatrixCoeffFn> terms;
    terms.reserve(terms_.size());
    for (const auto& t : terms_) terms.push_back(t.scaled(c));
    return ScalarField(std::move(terms));
  }
  ScalarField a = *this;
  return generic([a, c](const U2Point& u) { return c * a.eval(u); });
}

const std::vector<unsigned>& grade_masks(int grade) {
  static const std::array<std::vector<unsigned>, 5> tables = [] {
    std::array<std::vector<unsigned>, 5> t;
    for (int g = 0; g <= 4; ++g) {
      // combinations of {1,2,3,4} choose g in lexicographic order
      std::vector<int> axes(g);
      std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == g) {
          unsigned m = 0;
          for (int a : axes) m |= 1u << (a - 1);
          t[g].push_back(m);
          return;
        }
        for (int a = start; a <= 4; ++a) {
          axes[depth] = a;
          rec(a + 1, depth + 1);
        }
      };
      rec(1, 0);
    }
    return t;
  }();
  if (grade < 0 || grade > 4) throw std::out_of_range("grade_masks");
  return tables[grade];
}

int wedge_sign(unsigned maskA, unsigned maskB) {
  if (maskA & maskB) return 0;
  int sign = 1;
  for (int a = 1; a <= 4; ++a) {
    if (!(maskA & (1u << (a - 1)))) continue;
    // count axes of B smaller than a that must be jumped over
    int cnt = 0;
    for (int b = 1; b < a; ++b)
      if (maskB & (1u << (b - 1))) ++cnt;
    if (cnt % 2) sign = -sign;
  }
  return sign;
}

namespace {

int mask_position(int grade, unsigned mask) {
  const auto& masks = grade_masks(grade);
  const auto it = std::find(masks.begin(), masks.end(), mask);
  if (it == masks.end()) throw std::logic_error("mask_position: bad mask");
  return int(it - masks.begin());
}

// d alpha_j expansion from the Maurer-Cartan structure equations:
// d a1 = -2 a2^a3, d a2 = 2 a1^a3, d a3 = -2 a1^a2, d a4 = 0.
const std::vector<std::pair<double, unsigned>>& dalpha(int j) {
  static const std::array<std::vector<std::pair<double, unsigned>>, 4> t = {{
      {{-2.0, (1u << 1) | (1u << 2)}},  // a2^a3
      {{+2.0, (1u << 0) | (1u << 2)}},  // a1^a3
      {{-2.0, (1u << 0) | (1u << 1)}},  // a1^a2
      {},
  }};
  return t[j - 1];
}

}  // namespace

FormField FormField::exact(int grade, std::map<unsigned, ScalarField> coeffs) {
  FormField f;
  f.grade_ = grade;
  f.coeffs_ = std::move(coeffs);
  return f;
}

FormField FormField::sampled(
    int grade, std::function<Eigen::VectorXcd(const U2Point&)> eval) {
  FormField f;
  f.grade_ = grade;
  f.sampler_ = std::move(eval);
  return f;
}

Eigen::VectorXcd FormField::coefficients(const U2Point& u) const {
  if (sampler_) return sampler_(u);
  const auto& masks = grade_masks(grade_);
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(masks.size());
  for (const auto& [mask, f] : coeffs_)
    out(mask_position(grade_, mask)) = f.eval(u);
  return out;
}

const std::map<unsigned, ScalarField>& FormField::exact_coeffs() const {
  if (sampler_)
    throw std::logic_error("FormField: sampled field has no exact coeffs");
  return coeffs_;
}

Complex FormField::value_on(
    const U2Point& u, const std::vector<Eigen::Vector4cd>& vectors) const {
  if (int(vectors.size()) != grade_)
    throw std::invalid_argument("FormField::value_on: arity mismatch");
  Matrix4c c = Matrix4c::Zero();
  for (int j = 0; j < grade_; ++j) c.row(j) = vectors[j].transpose();
  const Eigen::VectorXcd w = coefficients(u);
  const auto& masks = grade_masks(grade_);
  Complex s = 0.0;
  for (size_t i = 0; i < masks.size(); ++i) {
    // minor of c over the axes of masks[i]
    Eigen::MatrixXcd sub(grade_, grade_);
    int col = 0;
    for (int a = 1; a <= 4; ++a) {
      if (!(masks[i] & (1u << (a - 1)))) continue;
      for (int r = 0; r < grade_; ++r) sub(r, col) = c(r, a - 1);
      ++col;
    }
    s += w(i) * sub.determinant();
  }
  return s;
}

FormField FormField::operator+(const FormField& o) const {
  if (grade_ != o.grade_)
    throw std::invalid_argument("FormField::operator+: grade mismatch");
  if (has_exact_coeffs() && o.has_exact_coeffs()) {
    std::map<unsigned, ScalarField> coeffs = coeffs_;
    for (const auto& [mask, f] : o.coeffs_) {
      auto it = coeffs.find(mask);
      if (it == coeffs.end())
        coeffs.emplace(mask, f);
      else
        it->second = it->second + f;
    }
    return exact(grade_, std::move(coeffs));
  }
  FormField a = *this, b = o;
  return sampled(grade_, [a, b](const U2Point& u) {
    return Eigen::VectorXcd(a.coefficients(u) + b.coefficients(u));
  });
}

FormField FormField::scaled(Complex c) const {
  if (has_exact_coeffs()) {
    std::map<unsigned, ScalarField> coeffs;
    for (const auto& [mask, f] : coeffs_) coeffs.emplace(mask, f.scaled(c));
    return exact(grade_, std::move(coeffs));
  }
  FormField a = *this;
  return sampled(grade_, [a, c](const U2Point& u) {
    return Eigen::VectorXcd(c * a.coefficients(u));
  });
}

FormField FormField::conjugated() const {
  if (has_exact_coeffs()) {
    std::map<unsigned, ScalarField> coeffs;
    for (const auto& [mask, f] : coeffs_) coeffs.emplace(mask, f.conjugated());
    return exact(grade_, std::move(coeffs));
  }
  FormField a = *this;
  return sampled(grade_, [a](const U2Point& u) {
    return Eigen::VectorXcd(a.coefficients(u).conjugate());
  });
}

Eigen::VectorXcd transform_coefficients(int grade,
                                        const Eigen::VectorXcd& coeffs,
                                        const Matrix4c& c) {
  const auto& masks = grade_masks(grade);
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(masks.size());
  for (size_t ai = 0; ai < masks.size(); ++ai) {
    std::vector<int> rows;
    for (int a = 1; a <= 4; ++a)
      if (masks[ai] & (1u << (a - 1))) rows.push_back(a - 1);
    Complex s = 0.0;
    for (size_t ii = 0; ii < masks.size(); ++ii) {
      std::vector<int> cols;
      for (int a = 1; a <= 4; ++a)
        if (masks[ii] & (1u << (a - 1))) cols.push_back(a - 1);
      Eigen::MatrixXcd sub(grade, grade);
      for (int r = 0; r < grade; ++r)
        for (int q = 0; q < grade; ++q) sub(r, q) = c(rows[r], cols[q]);
      s += coeffs(ii) * sub.determinant();
    }
    out(ai) = s;
  }
  return out;
}

FormField coframe_alpha(int j) {
  if (j < 1 || j > 4) throw std::out_of_range("coframe_alpha");
  std::map<unsigned, ScalarField> coeffs;
  coeffs.emplace(1u << (j - 1), ScalarField::constant(1.0));
  return FormField::exact(1, std::move(coeffs));
}

FormField coframe_h_L() { return coframe_alpha(1).scaled(kI); }

FormField coframe_f_L() {
  return coframe_alpha(2).scaled(-1.0) + coframe_alpha(3).scaled(kI);
}

FormField coframe_e_L() { return coframe_alpha(2) + coframe_alpha(3); }

FormField scalar_times(const ScalarField& f, const FormField& alpha) {
  std::map<unsigned, ScalarField> coeffs;
  for (const auto& [mask, g] : alpha.exact_coeffs())
    coeffs.emplace(mask, f * g);
  return FormField::exact(alpha.grade(), std::move(coeffs));
}

FormField exterior_derivative(const FormField& w) {
  if (w.grade() >= 4)
    throw std::invalid_argument("exterior_derivative: grade must be <= 3");
  if (!w.has_exact_coeffs())
    throw std::logic_error(
        "exterior_derivative: sampled coefficients need finite differences");
  std::map<unsigned, ScalarField> out;
  auto add = [&out](unsigned mask, const ScalarField& f) {
    auto it = out.find(mask);
    if (it == out.end())
      out.emplace(mask, f);
    else
      it->second = it->second + f;
  };
  for (const auto& [mask, f] : w.exact_coeffs()) {
    // df ^ alpha_mask, with df = sum_j (x_j^L f) alpha_j
    for (int j = 1; j <= 4; ++j) {
      const unsigned jm = 1u << (j - 1);
      const int sign = wedge_sign(jm, mask);
      if (sign == 0) continue;
      add(jm | mask, f.derivative(frame_matrix(j)).scaled(double(sign)));
    }
    // f * d(alpha_mask) from the structure equations
    int pos = 0;
    for (int i = 1; i <= 4; ++i) {
      const unsigned im = 1u << (i - 1);
      if (!(mask & im)) continue;
      const unsigned rest = mask & ~im;
      const double psign = (pos % 2 == 0) ? 1.0 : -1.0;
      for (const auto& [c, dm] : dalpha(i)) {
        const int ws = wedge_sign(dm, rest);
        if (ws == 0) continue;
        add(dm | rest, f.scaled(psign * c * double(ws)));
      }
      ++pos;
    }
  }
  return FormField::exact(w.grade() + 1, std::move(out));
}

FormField wedge(const FormField& a, const FormField& b) {
  const int g = a.grade() + b.grade();
  if (g > 4) throw std::invalid_argument("wedge: grade overflow");
  const auto& amasks = grade_masks(a.grade());
  const auto& bmasks = grade_masks(b.grade());
  const auto& omasks = grade_masks(g);
  FormField av = a, bv = b;
  return FormField::sampled(g, [av, bv, amasks, bmasks, omasks,
                                g](const U2Point& u) {
    const Eigen::VectorXcd ac = av.coefficients(u);
    const Eigen::VectorXcd bc = bv.coefficients(u);
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(omasks.size());
    for (size_t i = 0; i < amasks.size(); ++i) {
      if (ac(i) == Complex(0.0)) continue;
      for (size_t j = 0; j < bmasks.size(); ++j) {
        const int s = wedge_sign(amasks[i], bmasks[j]);
        if (s == 0) continue;
        const unsigned m = amasks[i] | bmasks[j];
        out(int(std::find(omasks.begin(), omasks.end(), m) -
                omasks.begin())) += double(s) * ac(i) * bc(j);
      }
    }
    return out;
  });
}

FormField inversion_pullback(const FormField& w) {
  FormField wv = w;
  const int g = w.grade();
  FormField out = FormField::sampled(g, [wv, g](const U2Point& u) {
    const Matrix2c ui = u.matrix().adjoint();  // u^{-1}
    // d eta_u (u x_j) = u^{-1} M_j with M_j = -u x_j u^{-1}
    Matrix4c c;
    for (int j = 1; j <= 4; ++j) {
      const Matrix2c m = -u.matrix() * frame_matrix(j) * ui;
      c.row(j - 1) = frame_coordinates(m).transpose();
    }
    return transform_coefficients(g, wv.coefficients(U2Point(ui)), c);
  });
  if (w.potential)
    out.potential =
        std::make_shared<FormField>(inversion_pullback(*w.potential));
  return out;
}

FormField maxwell_basis(const MaxwellBasisLabel& label) {
  if (label.k < 0 || (label.sign != 1 && label.sign != -1))
    throw std::invalid_argument("maxwell_basis: invalid label");
  if (label.side == MaxwellBasisLabel::Side::L) {
    const int l = label.sign * (label.k + 2);
    FormField alpha = scalar_times(ScalarField(psi(label.k, l)),
                                   coframe_f_L());
    FormField omega = exterior_derivative(alpha);
    omega.potential = std::make_shared<FormField>(std::move(alpha));
    return omega;
  }
  // Side R via the inversion:  eta* Maxw_{k,k+2,-l} = Maxw_{k+2,k,l}.
  MaxwellBasisLabel mirror{label.k, MaxwellBasisLabel::Side::L, -label.sign};
  return inversion_pullback(maxwell_basis(mirror));
}

std::vector<FormField> maxwell_k0_ktype_basis(MaxwellBasisLabel::Side side,
                                              int sign) {
  // k = 0: Omega^1_{0,2,l} = psi_{0,l} span(alpha_e^L, alpha_f^L, alpha_h^L),
  // so d of those three spans the 3-dimensional K-type.  Side R by eta*.
  std::vector<FormField> out;
  const int l =
      (side == MaxwellBasisLabel::Side::L ? sign : -sign) * 2;
  for (const FormField& a : {coframe_f_L(), coframe_h_L(), coframe_e_L()}) {
    FormField alpha = scalar_times(ScalarField(psi(0, l)), a);
    FormField omega = exterior_derivative(alpha);
    omega.potential = std::make_shared<FormField>(std::move(alpha));
    if (side == MaxwellBasisLabel::Side::R)
      omega = inversion_pullback(omega);
    out.push_back(std::move(omega));
  }
  return out;
}

JClassification classify_two_form(const FormField& w, int samples, double tol,
                                  std::uint64_t seed) {
  HaarSampler sampler(seed);
  JClassification r;
  double scale = 0.0;
  for (int i = 0; i < samples; ++i) {
    const U2Point u = sampler.u2();
    const Vector6c c = w.coefficients(u);
    r.residual_plus =
        std::max(r.residual_plus, (star_eigen_projector(-1) * c).norm());
    r.residual_minus =
        std::max(r.residual_minus, (star_eigen_projector(+1) * c).norm());
    scale = std::max(scale, c.norm());
  }
  // is_maxwell when exactly one projection vanishes identically
  const double floor = tol * std::max(1.0, scale);
  const bool plus = r.residual_plus < floor;   // lies in the +i eigenspace
  const bool minus = r.residual_minus < floor;
  if (plus != minus && scale > floor) {
    r.is_maxwell = true;
    r.eigen_sign = plus ? +1 : -1;
  }
  return r;
}

JClassification j_classification(int k, int l, int samples, double tol) {
  if (((l - k) % 2 + 2) % 2 != 0)
    throw std::invalid_argument("j_classification: requires l == k (mod 2)");
  const FormField omega = exterior_derivative(
      scalar_times(ScalarField(psi(k, l)), coframe_f_L()));
  return classify_two_form(omega, samples, tol);
}

}  // namespace confmax
