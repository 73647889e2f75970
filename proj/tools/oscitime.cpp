// oscitime — phase-representation time operator for the harmonic
// oscillator: matrix builders and the end-to-end commutator check.

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "oscitime/integrals.hpp"
#include "oscitime/json_io.hpp"
#include "oscitime/matrices.hpp"
#include "oscitime/operators.hpp"
#include "oscitime/phase_function.hpp"

namespace {

using namespace oscitime;

constexpr const char* version_line = "# oscitime 1.0";

constexpr int exit_ok = 0;
constexpr int exit_numerical = 1;
constexpr int exit_usage = 2;

struct CommonOpts {
  std::string window = "0:15";
  double hbar = 1.0;
  double omega = 1.0;
  std::string format = "table";
  std::string quadrature;
  std::string out_path;
  bool allow_negative = false;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--window", o.window, "Fock window a:b, inclusive (default 0:15)");
  cmd->add_option("--hbar", o.hbar, "action constant, > 0 (default 1)");
  cmd->add_option("--omega", o.omega, "oscillator frequency, > 0 (default 1)");
  cmd->add_option("--format", o.format, "table | csv | json")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  cmd->add_option("--quadrature", o.quadrature, "PxN: P panels of N Gauss-Legendre nodes");
  cmd->add_option("--out", o.out_path, "write output to PATH instead of stdout");
  cmd->add_flag("--allow-negative-n", o.allow_negative, "permit windows with n < 0");
}

FockWindow parse_window(const std::string& text, bool allow_negative) {
  const auto colon = text.find(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 == text.size())
    throw std::invalid_argument("window must be a:b, got '" + text + "'");
  std::size_t used_lo = 0, used_hi = 0;
  const std::string lo_text = text.substr(0, colon), hi_text = text.substr(colon + 1);
  const int lo = std::stoi(lo_text, &used_lo);
  const int hi = std::stoi(hi_text, &used_hi);
  if (used_lo != lo_text.size() || used_hi != hi_text.size())
    throw std::invalid_argument("window must be a:b with integer bounds, got '" + text + "'");
  return FockWindow{lo, hi, allow_negative};
}

QuadratureSpec parse_quadrature(const std::string& text) {
  if (text.empty()) return {};
  const auto x = text.find('x');
  if (x == std::string::npos || x == 0 || x + 1 == text.size())
    throw std::invalid_argument("quadrature must be PxN, got '" + text + "'");
  std::size_t used_p = 0, used_n = 0;
  const std::string p_text = text.substr(0, x), n_text = text.substr(x + 1);
  const int panels = std::stoi(p_text, &used_p);
  const int nodes = std::stoi(n_text, &used_n);
  if (used_p != p_text.size() || used_n != n_text.size())
    throw std::invalid_argument("quadrature must be PxN with integer parts, got '" + text + "'");
  return QuadratureSpec{panels, nodes};
}

std::size_t window_cap() {
  if (const char* env = std::getenv("OSCITIME_MAX_WINDOW")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || value < 1)
      throw std::invalid_argument("OSCITIME_MAX_WINDOW must be a positive integer");
    return static_cast<std::size_t>(value);
  }
  return default_window_cap;
}

// Output goes to --out PATH when given, stdout otherwise.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw std::invalid_argument("cannot open output path '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::string human_complex(Complex v) {
  const double re = v.real() == 0.0 ? 0.0 : v.real();  // display -0 as 0
  const double im = v.imag() == 0.0 ? 0.0 : v.imag();
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g%+.6gi", re, im);
  return buf;
}

std::string machine_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void emit_matrix_table(std::ostream& os, const OperatorMatrix& matrix,
                       const std::vector<std::string>& notes) {
  const auto& w = matrix.window();
  os << version_line << "\n";
  os << "# " << matrix.label() << "  window [" << w.n_min() << ", " << w.n_max() << "]  hbar "
     << matrix.constants().hbar() << "  omega " << matrix.constants().omega() << "\n";
  for (const auto& note : notes) os << "# " << note << "\n";
  os << "#   m    n  value\n";
  char buf[32];
  for (int m = w.n_min(); m <= w.n_max(); ++m) {
    for (int n = w.n_min(); n <= w.n_max(); ++n) {
      std::snprintf(buf, sizeof buf, "%5d %4d  ", m, n);
      os << buf << human_complex(matrix.at(m, n)) << "\n";
    }
  }
}

void emit_matrix(Sink& sink, const CommonOpts& o, const OperatorMatrix& matrix,
                 const std::vector<std::string>& notes) {
  auto& os = sink.stream();
  if (o.format == "csv") {
    os << to_csv(matrix);
  } else if (o.format == "json") {
    os << to_json(matrix).dump(2) << "\n";
  } else {
    emit_matrix_table(os, matrix, notes);
  }
}

int cmd_phase_elements(const CommonOpts& o) {
  const FockWindow w = parse_window(o.window, o.allow_negative);
  const PhysicalConstants c{o.hbar, o.omega};
  const OperatorMatrix matrix = phase_matrix(w, c, window_cap());
  Sink sink{o.out_path};
  emit_matrix(sink, o, matrix,
              {"off-diagonal <m|phi|n> = -i/(m-n): purely imaginary; the factor i makes",
               "(m-n)*hbar*<m|phi|n> cancel the i*hbar boundary term off the diagonal.",
               "diagonal <n|phi|n> = pi over [0, 2*pi]; recentered intervals would shift it."});
  return exit_ok;
}

int cmd_time_elements(const CommonOpts& o) {
  const FockWindow w = parse_window(o.window, o.allow_negative);
  const PhysicalConstants c{o.hbar, o.omega};
  const OperatorMatrix matrix = time_matrix(w, c, window_cap());
  Sink sink{o.out_path};
  emit_matrix(sink, o, matrix,
              {"convention: omega*chi = (pi/2)*1 - phi, no additive function of H."});
  return exit_ok;
}

struct Check {
  std::string name;
  double value;
  double tolerance;
};

int cmd_verify(const CommonOpts& o) {
  const FockWindow w = parse_window(o.window, o.allow_negative);
  const PhysicalConstants c{o.hbar, o.omega};
  const QuadratureSpec quad = parse_quadrature(o.quadrature);
  const std::size_t cap = window_cap();

  const OperatorMatrix correct = commutator_matrix_correct(w, c, cap);
  const OperatorMatrix gap = paradox_gap(w, c, cap);
  const OperatorMatrix defect = hermiticity_defect_matrix(w, c, cap);
  const OperatorMatrix phase_cf = phase_matrix(w, c, cap);
  const OperatorMatrix phase_q = phase_matrix_quadrature(w, quad, c, cap);

  const Complex ihbar{0.0, c.hbar()};
  double gap_dev = 0.0, cross_dev = 0.0, quad_dev = 0.0;
  for (int m = w.n_min(); m <= w.n_max(); ++m) {
    for (int n = w.n_min(); n <= w.n_max(); ++n) {
      gap_dev = std::max(gap_dev, std::abs(gap.at(m, n) - ihbar));
      cross_dev = std::max(cross_dev, std::abs(defect.at(m, n) - c.omega() * gap.at(m, n)));
      quad_dev = std::max(quad_dev, std::abs(phase_cf.at(m, n) - phase_q.at(m, n)));
    }
  }

  const Check checks[] = {
      {"correct commutator vs i*hbar*I",
       residual_report(correct, ResidualTarget::ihbar_identity).max_abs_deviation, 1e-10},
      {"gap uniform at i*hbar", gap_dev, 1e-10},
      {"defect equals omega*gap", cross_dev, 1e-10},
      {"quadrature phase matrix match", quad_dev, 1e-8},
  };

  Sink sink{o.out_path};
  auto& os = sink.stream();
  os << version_line << "\n";
  os << "# verify  window [" << w.n_min() << ", " << w.n_max() << "]  hbar " << c.hbar()
     << "  omega " << c.omega() << "  quadrature " << quad.panels() << "x"
     << quad.nodes_per_panel() << "\n";
  os << "# convention: omega*chi = (pi/2)*1 - phi, no additive function of H.\n";
  bool all_ok = true;
  char buf[160];
  for (const auto& check : checks) {
    const bool ok = check.value <= check.tolerance;
    all_ok = all_ok && ok;
    std::snprintf(buf, sizeof buf, "%-34s max dev %11.4e   tol %7.1e   %s\n", check.name.c_str(),
                  check.value, check.tolerance, ok ? "ok" : "FAIL");
    os << buf;
  }
  os << (all_ok ? "verify: PASS\n" : "verify: FAIL\n");
  return all_ok ? exit_ok : exit_numerical;
}

int cmd_paradox(const CommonOpts& o) {
  const FockWindow w = parse_window(o.window, o.allow_negative);
  const PhysicalConstants c{o.hbar, o.omega};
  const std::size_t cap = window_cap();
  const OperatorMatrix naive = commutator_matrix_naive(w, c, cap);
  const OperatorMatrix correct = commutator_matrix_correct(w, c, cap);
  const OperatorMatrix gap = paradox_gap(w, c, cap);

  Sink sink{o.out_path};
  auto& os = sink.stream();
  if (o.format == "json") {
    nlohmann::ordered_json j{
        {"naive", to_json(naive)}, {"correct", to_json(correct)}, {"gap", to_json(gap)}};
    os << j.dump(2) << "\n";
  } else if (o.format == "csv") {
    os << "m,n,naive_re,naive_im,correct_re,correct_im,gap_re,gap_im\n";
    for (int m = w.n_min(); m <= w.n_max(); ++m)
      for (int n = w.n_min(); n <= w.n_max(); ++n) {
        os << m << "," << n;
        for (const Complex v : {naive.at(m, n), correct.at(m, n), gap.at(m, n)})
          os << "," << machine_double(v.real()) << "," << machine_double(v.imag());
        os << "\n";
      }
  } else {
    os << version_line << "\n";
    os << "# spectrum-inserted vs honest commutator matrix elements <m|[chi,H]|n>\n";
    os << "# window [" << w.n_min() << ", " << w.n_max() << "]  hbar " << c.hbar() << "  omega "
       << c.omega() << "\n";
    os << "#   m    n  naive            correct          gap\n";
    char buf[32];
    for (int m = w.n_min(); m <= w.n_max(); ++m)
      for (int n = w.n_min(); n <= w.n_max(); ++n) {
        std::snprintf(buf, sizeof buf, "%5d %4d  ", m, n);
        os << buf;
        char cell[64];
        std::snprintf(cell, sizeof cell, "%-16s ", human_complex(naive.at(m, n)).c_str());
        os << cell;
        std::snprintf(cell, sizeof cell, "%-16s ", human_complex(correct.at(m, n)).c_str());
        os << cell;
        os << human_complex(gap.at(m, n)) << "\n";
      }
  }
  return exit_ok;
}

int cmd_defect(const CommonOpts& o) {
  const FockWindow w = parse_window(o.window, o.allow_negative);
  const PhysicalConstants c{o.hbar, o.omega};
  const std::size_t cap = window_cap();
  const OperatorMatrix defect = hermiticity_defect_matrix(w, c, cap);

  // Periodic-pair control: defect of (e_m, e_n), identically zero.
  OperatorMatrix control{w, c, "periodic_control"};
  for (int m = w.n_min(); m <= w.n_max(); ++m)
    for (int n = w.n_min(); n <= w.n_max(); ++n)
      control.at(m, n) = hermiticity_defect(fock_eigenfunction(m), fock_eigenfunction(n), c);

  Sink sink{o.out_path};
  auto& os = sink.stream();
  if (o.format == "json") {
    nlohmann::ordered_json j{{"defect", to_json(defect)}, {"control", to_json(control)}};
    os << j.dump(2) << "\n";
  } else if (o.format == "csv") {
    os << "m,n,defect_re,defect_im,control_re,control_im\n";
    for (int m = w.n_min(); m <= w.n_max(); ++m)
      for (int n = w.n_min(); n <= w.n_max(); ++n) {
        os << m << "," << n;
        for (const Complex v : {defect.at(m, n), control.at(m, n)})
          os << "," << machine_double(v.real()) << "," << machine_double(v.imag());
        os << "\n";
      }
  } else {
    os << version_line << "\n";
    os << "# hermiticity defect <e_m|H(phi e_n)> - <H e_m|phi e_n>  (= i*hbar*omega)\n";
    os << "# control column: defect of the periodic pair (e_m, e_n)  (= 0)\n";
    os << "# window [" << w.n_min() << ", " << w.n_max() << "]  hbar " << c.hbar() << "  omega "
       << c.omega() << "\n";
    os << "#   m    n  defect           control\n";
    char buf[32];
    for (int m = w.n_min(); m <= w.n_max(); ++m)
      for (int n = w.n_min(); n <= w.n_max(); ++n) {
        std::snprintf(buf, sizeof buf, "%5d %4d  ", m, n);
        os << buf;
        char cell[64];
        std::snprintf(cell, sizeof cell, "%-16s ", human_complex(defect.at(m, n)).c_str());
        os << cell;
        os << human_complex(control.at(m, n)) << "\n";
      }
  }
  return exit_ok;
}

struct DumpOpts {
  int fock = 0;
  bool mul_phase = false;
  std::string apply;  // hamiltonian | phase | time
  double prune_eps = -1.0;
};

int cmd_dump_function(const CommonOpts& o, const DumpOpts& d) {
  const PhysicalConstants c{o.hbar, o.omega};
  PhasePolyFourier f = fock_eigenfunction(d.fock);
  if (d.mul_phase) f = mul_by_phase(f);
  if (d.apply == "hamiltonian")
    f = apply_hamiltonian(f, c);
  else if (d.apply == "phase")
    f = apply_phase(f);
  else if (d.apply == "time")
    f = apply_time(f, c);
  else if (!d.apply.empty())
    throw std::invalid_argument("--apply must be hamiltonian, phase, or time");
  if (d.prune_eps >= 0.0) f = prune(f, d.prune_eps);

  Sink sink{o.out_path};
  sink.stream() << to_json(f).dump(2) << "\n";
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"phase-representation time operator toolkit for the harmonic oscillator"};
  app.require_subcommand(1);

  CommonOpts phase_opts, time_opts, verify_opts, paradox_opts, defect_opts, dump_opts;
  DumpOpts dump_extra;

  auto* phase_cmd =
      app.add_subcommand("phase-elements", "matrix elements <m|phi|n> over [0, 2*pi]");
  add_common(phase_cmd, phase_opts);
  auto* time_cmd = app.add_subcommand("time-elements", "matrix elements <m|chi|n>");
  add_common(time_cmd, time_opts);
  auto* verify_cmd =
      app.add_subcommand("verify", "end-to-end check that <m|[chi,H]|n> = i*hbar*delta_mn");
  add_common(verify_cmd, verify_opts);
  auto* paradox_cmd =
      app.add_subcommand("paradox", "naive vs honest commutator matrices, side by side");
  add_common(paradox_cmd, paradox_opts);
  auto* defect_cmd =
      app.add_subcommand("defect", "hermiticity-defect matrix with periodic control");
  add_common(defect_cmd, defect_opts);
  auto* dump_cmd = app.add_subcommand("dump-function", "emit a basis function as JSON");
  add_common(dump_cmd, dump_opts);
  dump_cmd->add_option("--fock", dump_extra.fock, "quantum number n of e_n (default 0)");
  dump_cmd->add_flag("--mul-phase", dump_extra.mul_phase, "multiply by phi first");
  dump_cmd->add_option("--apply", dump_extra.apply, "apply hamiltonian | phase | time");
  dump_cmd->add_option("--prune", dump_extra.prune_eps, "drop coefficients with |c| <= EPS");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (phase_cmd->parsed()) return cmd_phase_elements(phase_opts);
    if (time_cmd->parsed()) return cmd_time_elements(time_opts);
    if (verify_cmd->parsed()) return cmd_verify(verify_opts);
    if (paradox_cmd->parsed()) return cmd_paradox(paradox_opts);
    if (defect_cmd->parsed()) return cmd_defect(defect_opts);
    if (dump_cmd->parsed()) return cmd_dump_function(dump_opts, dump_extra);
  } catch (const oscitime::inconsistency_error& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return exit_numerical;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const oscitime::support_overflow_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_numerical;
  }
  return exit_usage;
}
