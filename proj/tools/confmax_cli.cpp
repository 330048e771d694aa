#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "confmax/branching.hpp"
#include "confmax/conformal.hpp"
#include "confmax/fields.hpp"
#include "confmax/pairing.hpp"
#include "confmax/verify.hpp"

namespace {

using namespace confmax;

int write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text << "\n";
    return 0;
  }
  std::ofstream out(path);
  if (!out) {
    std::cerr << "error: cannot open output file " << path << "\n";
    return 2;
  }
  out << text << "\n";
  return 0;
}

SuiteConfig make_config(int k_max, int samples, std::uint64_t seed, int order,
                        const std::vector<std::string>& tols) {
  SuiteConfig cfg;
  cfg.k_max = k_max;
  cfg.samples = samples;
  cfg.seed = seed;
  cfg.order = order;
  for (const std::string& t : tols) {
    const auto eq = t.find('=');
    if (eq == std::string::npos)
      throw CLI::ValidationError("--tol expects name=value, got " + t);
    cfg.tolerances[t.substr(0, eq)] = std::stod(t.substr(eq + 1));
  }
  return cfg;
}

std::string config_json(const SuiteConfig& cfg) {
  std::ostringstream os;
  os.precision(17);
  os << "{\"kMax\":" << cfg.k_max << ",\"samples\":" << cfg.samples
     << ",\"seed\":" << cfg.seed << ",\"order\":" << cfg.order
     << ",\"tolerances\":{";
  bool first = true;
  for (const auto& [k, v] : cfg.tolerances) {
    if (!first) os << ",";
    os << "\"" << k << "\":" << v;
    first = false;
  }
  os << "}}";
  return os.str();
}

MaxwellBasisLabel parse_label(int k, const std::string& side, int sign) {
  if (k < 0) throw CLI::ValidationError("--k must be >= 0");
  if (sign != 1 && sign != -1)
    throw CLI::ValidationError("--sign must be +1 or -1");
  if (side != "L" && side != "R")
    throw CLI::ValidationError("--side must be L or R");
  return {k,
          side == "L" ? MaxwellBasisLabel::Side::L : MaxwellBasisLabel::Side::R,
          sign};
}

std::string laurent_json(const LaurentPoly& p) {
  std::ostringstream os;
  os << "{\"minDegree\":" << p.min_degree() << ",\"coeffs\":[";
  if (!p.is_zero())
    for (int d = p.min_degree(); d <= p.max_degree(); ++d) {
      if (d > p.min_degree()) os << ",";
      os << p.coeff(d);
    }
  os << "]}";
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Conformal Maxwell toolkit on compactified Minkowski space"};
  app.require_subcommand(1);

  int k_max = 3, samples = 25, order = 0;
  std::uint64_t seed = 12345;
  std::vector<std::string> tols;
  std::string output, format = "json";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--k-max", k_max, "Largest k index exercised");
    sub->add_option("--samples", samples, "Number of sample points");
    sub->add_option("--seed", seed, "RNG seed");
    sub->add_option("--order", order, "Quadrature/series order (0 = auto)");
    sub->add_option("--tol", tols, "Tolerance override name=value");
    sub->add_option("--output", output, "Output file (default: stdout)");
    sub->add_option("--format", format, "Output format: json|csv");
  };

  // verify
  auto* verify = app.add_subcommand("verify", "Run a named verification suite");
  std::string suite = "all";
  verify->add_option("--suite", suite, "Suite name");
  add_common(verify);

  // gram
  auto* gram = app.add_subcommand("gram", "Gram matrix of basis solutions");
  std::string gram_side = "L";
  int gram_sign = 1;
  gram->add_option("--side", gram_side, "Family side: L or R");
  gram->add_option("--sign", gram_sign, "Family sign: +1 or -1");
  add_common(gram);

  // character
  auto* character =
      app.add_subcommand("character", "Branching character series tables");
  add_common(character);

  // export-field
  auto* exportf =
      app.add_subcommand("export-field", "Sample E/H fields on a Minkowski grid");
  int ef_k = 0, ef_sign = 1, ef_n = 5;
  std::string ef_side = "L";
  double ef_half = 1.0;
  exportf->add_option("--k", ef_k, "Family index k");
  exportf->add_option("--side", ef_side, "Family side: L or R");
  exportf->add_option("--sign", ef_sign, "Family sign: +1 or -1");
  exportf->add_option("--grid", ef_n, "Points per axis");
  exportf->add_option("--half-width", ef_half, "Box half-width");
  add_common(exportf);

  // planewave
  auto* pwc = app.add_subcommand("planewave", "Plane-wave constraint report");
  std::vector<double> pw_u = {1.0, 0.0, 0.0};
  double pw_freq = 0.0;
  std::vector<double> pw_e0 = {0.0, 1.0, 0.0};
  pwc->add_option("--u", pw_u, "Wave vector (3 reals)")->expected(3);
  pwc->add_option("--freq", pw_freq, "Frequency (default |u|)");
  pwc->add_option("--e0", pw_e0, "Polarization E0 (3 reals)")->expected(3);
  add_common(pwc);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage errors exit 2, --help exits 0
  }

  try {
    const SuiteConfig cfg = make_config(k_max, samples, seed, order, tols);

    if (verify->parsed()) {
      const auto& names = suite_names();
      if (std::find(names.begin(), names.end(), suite) == names.end()) {
        std::cerr << "error: unknown suite '" << suite << "'\n";
        return 2;
      }
      const SuiteReport report = run_suite(suite, cfg);
      std::ostringstream os;
      os << "{\"config\":" << config_json(cfg)
         << ",\"report\":" << report.to_json() << "}";
      const int io = write_output(os.str(), output);
      if (io) return io;
      return report.passed() ? 0 : 1;
    }

    if (gram->parsed()) {
      std::vector<MaxwellBasisLabel> labels;
      for (int k = 0; k <= k_max; ++k)
        labels.push_back(parse_label(k, gram_side, gram_sign));
      const GramResult g = gram_matrix(labels, order);
      std::ostringstream os;
      os.precision(17);
      os << "{\"config\":" << config_json(cfg) << ",\"labels\":[";
      for (size_t i = 0; i < labels.size(); ++i) {
        if (i) os << ",";
        os << "{\"k\":" << labels[i].k << ",\"side\":\"" << gram_side
           << "\",\"sign\":" << labels[i].sign << "}";
      }
      auto matrix_json = [&](double scale) {
        std::ostringstream m;
        m.precision(17);
        m << "[";
        for (int i = 0; i < g.matrix.rows(); ++i) {
          if (i) m << ",";
          m << "[";
          for (int j = 0; j < g.matrix.cols(); ++j) {
            if (j) m << ",";
            m << "[" << g.matrix(i, j).real() / scale << ","
              << g.matrix(i, j).imag() / scale << "]";
          }
          m << "]";
        }
        m << "]";
        return m.str();
      };
      os << "],\"matrixPiSquared\":" << matrix_json(kPi * kPi)
         << ",\"matrixRaw\":" << matrix_json(1.0)
         << ",\"quadratureOrder\":" << g.quadrature_order
         << ",\"estimatedError\":" << g.estimated_error << "}";
      return write_output(os.str(), output);
    }

    if (character->parsed()) {
      const int n = order > 0 ? order : 40;
      const XYSeries sum_side = maxw_character_series(n);
      const XYSeries rat_side = rational_side_series(n);
      std::ostringstream os;
      os << "{\"config\":" << config_json(cfg) << ",\"order\":" << n;
      auto table = [&](const XYSeries& s) {
        std::ostringstream t;
        t << "[";
        for (int p = 0; p <= n; ++p) {
          if (p) t << ",";
          t << laurent_json(s.coeff(p));
        }
        t << "]";
        return t.str();
      };
      const bool match = sum_side == rat_side;
      os << ",\"sumSide\":" << table(sum_side)
         << ",\"rationalSide\":" << table(rat_side)
         << ",\"match\":" << (match ? "true" : "false") << "}";
      const int io = write_output(os.str(), output);
      if (io) return io;
      return match ? 0 : 1;
    }

    if (exportf->parsed()) {
      const MaxwellBasisLabel label = parse_label(ef_k, ef_side, ef_sign);
      if (ef_n < 1 || !(ef_half > 0))
        throw CLI::ValidationError("export-field: invalid grid spec");
      const FormField w = maxwell_basis(label);
      std::ostringstream os;
      os.precision(17);
      os << "# confmax field export schema v1\n"
         << "x1,x2,x3,t,ReE1,ImE1,ReE2,ImE2,ReE3,ImE3,ReH1,ImH1,ReH2,ImH2,"
            "ReH3,ImH3\n";
      auto node = [&](int i) {
        return ef_n == 1 ? 0.0
                         : -ef_half + 2.0 * ef_half * i / double(ef_n - 1);
      };
      for (int i1 = 0; i1 < ef_n; ++i1)
        for (int i2 = 0; i2 < ef_n; ++i2)
          for (int i3 = 0; i3 < ef_n; ++i3)
            for (int i4 = 0; i4 < ef_n; ++i4) {
              const MinkowskiPoint p{node(i1), node(i2), node(i3), node(i4)};
              const auto [e, h] = extract_EH(w, p);
              os << p.x1 << "," << p.x2 << "," << p.x3 << "," << p.t;
              for (int c = 0; c < 3; ++c)
                os << "," << e(c).real() << "," << e(c).imag();
              for (int c = 0; c < 3; ++c)
                os << "," << h(c).real() << "," << h(c).imag();
              os << "\n";
            }
      std::string text = os.str();
      text.pop_back();  // trailing newline re-added by write_output
      return write_output(text, output);
    }

    if (pwc->parsed()) {
      Vector3d u(pw_u[0], pw_u[1], pw_u[2]);
      const double freq = pw_freq != 0.0 ? pw_freq : u.norm();
      Vector3c e0(pw_e0[0], pw_e0[1], pw_e0[2]);
      const PlaneWave pw = plane_wave(u, freq, e0);
      const Eigen::Vector4d z(u(0), u(1), u(2), freq);
      std::ostringstream os;
      os.precision(17);
      os << "{\"config\":" << config_json(cfg) << ",\"u\":[" << u(0) << ","
         << u(1) << "," << u(2) << "],\"freq\":" << freq << ",\"E0\":[";
      for (int c = 0; c < 3; ++c) {
        if (c) os << ",";
        os << "[" << pw.E0(c).real() << "," << pw.E0(c).imag() << "]";
      }
      os << "],\"H0\":[";
      for (int c = 0; c < 3; ++c) {
        if (c) os << ",";
        os << "[" << pw.H0(c).real() << "," << pw.H0(c).imag() << "]";
      }
      os << "],\"lightConeFunctionalAtX1\":" << light_cone_functional(z, 1.0)
         << "}";
      return write_output(os.str(), output);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
