// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Tolerances are fixed here, not tunable from the command line.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <random>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "oscitime/integrals.hpp"
#include "oscitime/json_io.hpp"
#include "oscitime/matrices.hpp"
#include "oscitime/operators.hpp"
#include "test_support.hpp"

using namespace oscitime;

namespace {

constexpr double pi = std::numbers::pi;

int failures = 0;

void report(int criterion, const std::string& name, bool ok, const std::string& detail) {
  std::printf("criterion %d  %-4s %s (%s)\n", criterion, ok ? "PASS" : "FAIL", name.c_str(),
              detail.c_str());
  if (!ok) ++failures;
}

std::string eng(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

double max_deviation_from(const OperatorMatrix& matrix,
                          const std::function<Complex(int, int)>& want) {
  double worst = 0.0;
  const auto& w = matrix.window();
  for (int m = w.n_min(); m <= w.n_max(); ++m)
    for (int n = w.n_min(); n <= w.n_max(); ++n)
      worst = std::max(worst, std::abs(matrix.at(m, n) - want(m, n)));
  return worst;
}

// --- criterion 1: honest commutator equals i*hbar*identity ----------------

void criterion_commutator_identity() {
  const FockWindow w{0, 15};
  const PhysicalConstants c{};
  const auto closed = commutator_matrix_correct(w, c);
  const double closed_dev =
      residual_report(closed, ResidualTarget::ihbar_identity).max_abs_deviation;

  const auto quad = commutator_matrix_correct_quadrature(w, c, QuadratureSpec{16, 24});
  const double quad_dev = residual_report(quad, ResidualTarget::ihbar_identity).max_abs_deviation;

  report(1, "commutator matrix equals i*hbar*I on [0,15]",
         closed_dev <= 1e-12 && quad_dev <= 1e-8,
         "closed " + eng(closed_dev) + " <= 1e-12, quadrature " + eng(quad_dev) + " <= 1e-8");
}

// --- criterion 2: the apparent paradox and its uniform gap ----------------

void criterion_paradox() {
  bool ok = true;
  std::string detail;
  const PhysicalConstants c{};
  for (const auto& w : {FockWindow{0, 3}, FockWindow{0, 15}}) {
    const auto naive = commutator_matrix_naive(w, c);
    const double naive_dev = max_deviation_from(naive, [&](int m, int n) {
      return m == n ? Complex{} : Complex{0.0, -c.hbar()};
    });

    const auto gap = paradox_gap(w, c);
    double max_mag = 0.0, min_mag = 1e300, gap_dev = 0.0;
    for (int m = w.n_min(); m <= w.n_max(); ++m)
      for (int n = w.n_min(); n <= w.n_max(); ++n) {
        const double mag = std::abs(gap.at(m, n));
        max_mag = std::max(max_mag, mag);
        min_mag = std::min(min_mag, mag);
        gap_dev = std::max(gap_dev, std::abs(gap.at(m, n) - Complex{0.0, c.hbar()}));
      }
    const double spread = max_mag - min_mag;
    ok = ok && naive_dev <= 1e-12 && spread <= 1e-10 && gap_dev <= 1e-10;
    if (w.n_max() == 15)
      detail = "naive dev " + eng(naive_dev) + ", gap spread " + eng(spread) +
               " <= 1e-10, gap vs i*hbar " + eng(gap_dev);
  }
  report(2, "naive diag 0 / off-diag -i*hbar; gap uniformly i*hbar", ok, detail);
}

// --- criterion 3: boundary term both ways ----------------------------------

void criterion_boundary_term() {
  const PhysicalConstants c{};
  const Complex expected{0.0, c.hbar() * c.omega()};
  double route_gap = 0.0, value_dev = 0.0, control_dev = 0.0;
  for (int m = 0; m <= 6; ++m) {
    for (int n = 0; n <= 6; ++n) {
      const auto bra = fock_eigenfunction(m);
      const auto ket = mul_by_phase(fock_eigenfunction(n));
      const Complex by_difference =
          inner_product(bra, apply_hamiltonian(ket, c)) -
          inner_product(apply_hamiltonian(bra, c), ket);
      const Complex by_boundary = Complex(0.0, c.hbar() * c.omega()) * boundary_term(bra, ket);
      route_gap = std::max(route_gap, std::abs(by_difference - by_boundary));
      value_dev = std::max(value_dev, std::abs(by_boundary - expected));
      value_dev = std::max(value_dev, std::abs(by_difference - expected));
      control_dev = std::max(
          control_dev, std::abs(hermiticity_defect(bra, fock_eigenfunction(n), c)));
    }
  }
  report(3, "hermiticity defect is i*hbar*omega by both routes on [0,6]^2",
         route_gap <= 1e-12 && value_dev <= 1e-12 && control_dev <= 1e-13,
         "route gap " + eng(route_gap) + " <= 1e-12, value dev " + eng(value_dev) +
             ", periodic control " + eng(control_dev) + " <= 1e-13");
}

// --- criterion 4: the phase matrix element closed form ----------------------

void criterion_phase_elements() {
  const QuadratureSpec spec{16, 24};
  double closed_vs_quad = 0.0, closed_vs_formula = 0.0, diag_dev = 0.0;
  for (int m = 0; m <= 10; ++m) {
    for (int n = 0; n <= 10; ++n) {
      const auto bra = fock_eigenfunction(m);
      const auto ket = mul_by_phase(fock_eigenfunction(n));
      const Complex closed = inner_product(bra, ket);
      const Complex quad = inner_product_quadrature(bra, ket, spec);
      closed_vs_quad = std::max(closed_vs_quad, std::abs(closed - quad));
      if (m == n) {
        diag_dev = std::max(diag_dev, std::abs(closed - pi));
      } else {
        closed_vs_formula =
            std::max(closed_vs_formula, std::abs(closed - Complex(0.0, -1.0 / (m - n))));
      }
    }
  }
  report(4, "<m|phi|n> = -i/(m-n) off-diagonal, pi diagonal, quadrature-confirmed",
         closed_vs_quad <= 1e-9 && closed_vs_formula <= 1e-9 && diag_dev <= 1e-12,
         "quad gap " + eng(closed_vs_quad) + " <= 1e-9, formula gap " + eng(closed_vs_formula) +
             ", diagonal " + eng(diag_dev));
}

// --- criterion 5: spectrum ---------------------------------------------------

void criterion_spectrum() {
  const PhysicalConstants settings[] = {{1.0, 1.0}, {1.0, 2.5}, {0.5, 3.0}};
  double worst = 0.0;
  for (const auto& c : settings)
    for (int n = 0; n <= 12; ++n) {
      const auto en = fock_eigenfunction(n);
      worst = std::max(worst, testsupport::max_relative_coeff_error(
                                  apply_hamiltonian(en, c),
                                  scale(en, (n + 0.5) * c.hbar() * c.omega())));
    }
  report(5, "H e_n = (n + 1/2) hbar omega e_n for n in [0,12], three settings", worst <= 1e-14,
         "relative coefficient error " + eng(worst) + " <= 1e-14");
}

// --- criterion 6: pointwise conjugacy ---------------------------------------

void criterion_pointwise_conjugacy() {
  std::mt19937 rng{1234};
  const PhysicalConstants c{};
  const auto phase_op = PhaseRepOperator::phase();
  const auto ham_op = PhaseRepOperator::hamiltonian(c);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto f = testsupport::random_function(rng, 3, 16);
    const auto actual = commutator_action(phase_op, ham_op, f);
    const auto expected = scale(f, Complex(0.0, -c.hbar() * c.omega()));
    worst = std::max(worst, testsupport::max_relative_coeff_error(actual, expected));
  }
  report(6, "[phi, H] f = -i*hbar*omega f on 100 random functions", worst <= 1e-14,
         "relative coefficient error " + eng(worst) + " <= 1e-14");
}

// --- criterion 7: the naive relation holds for window-confined operators ----

void criterion_window_confined() {
  const PhysicalConstants c{};
  const FockWindow w{0, 7};
  const auto b = phase_matrix(w, c);
  const int dim = static_cast<int>(w.size());
  double worst = 0.0;
  for (int m = 0; m < dim; ++m)
    for (int n = 0; n < dim; ++n) {
      Complex acc{};
      for (int k = 0; k < dim; ++k) {
        const double hk = (k + 0.5) * c.hbar() * c.omega();
        acc += b.at(m, k) * (k == n ? hk : 0.0) - (k == m ? hk : 0.0) * b.at(k, n);
      }
      worst = std::max(worst, std::abs(acc - (n - m) * c.hbar() * c.omega() * b.at(m, n)));
    }
  report(7, "[B, H_w] = (n-m) hbar omega B_mn for the truncated phase matrix", worst <= 1e-13,
         "max deviation " + eng(worst) + " <= 1e-13");
}

// --- criterion 8: oracle equivalence -----------------------------------------

void criterion_oracle(double elapsed_seconds_so_far) {
  std::mt19937 rng{777};
  const QuadratureSpec spec{16, 24};
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto f = testsupport::random_function(rng, 2, 12);
    const auto g = testsupport::random_function(rng, 2, 12);
    const Complex closed = inner_product(f, g);
    const Complex quad = inner_product_quadrature(f, g, spec);
    worst = std::max(worst, std::abs(closed - quad) / (1.0 + std::abs(closed)));
  }
  report(8, "200 random inner products, closed form vs quadrature", worst <= 1e-9,
         "relative error " + eng(worst) + " <= 1e-9, elapsed " + eng(elapsed_seconds_so_far) +
             " s < 10 s");
  if (elapsed_seconds_so_far >= 10.0) {
    std::printf("criterion 8  FAIL suite exceeded the 10 s budget\n");
    ++failures;
  }
}

// --- criterion 9: CLI contract ------------------------------------------------

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const char* bin = std::getenv("OSCITIME_BIN");
  RunResult result;
  if (bin == nullptr) return result;
  const std::string command = std::string(bin) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return result;
  char buffer[4096];
  std::size_t got = 0;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.out.append(buffer, got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

void criterion_cli() {
  if (std::getenv("OSCITIME_BIN") == nullptr) {
    report(9, "CLI contract", false, "OSCITIME_BIN not set; run through ctest");
    return;
  }
  const auto verify = run_cli("verify");
  const bool verify_ok = verify.exit_code == 0;

  const auto json_run = run_cli("phase-elements --window 0:7 --format json");
  bool round_trip_ok = false;
  if (json_run.exit_code == 0) {
    const auto parsed = matrix_from_json(nlohmann::ordered_json::parse(json_run.out));
    round_trip_ok = parsed == phase_matrix(FockWindow{0, 7});
  }
  const auto csv_run = run_cli("phase-elements --window 0:7 --format csv");
  if (csv_run.exit_code == 0 && round_trip_ok) {
    const auto parsed = matrix_from_csv(csv_run.out, {}, "phase");
    round_trip_ok = parsed == phase_matrix(FockWindow{0, 7});
  }

  const auto repeat_a = run_cli("verify --window 0:6");
  const auto repeat_b = run_cli("verify --window 0:6");
  const bool deterministic =
      !repeat_a.out.empty() && repeat_a.out == repeat_b.out && json_run.out == run_cli("phase-elements --window 0:7 --format json").out;

  report(9, "CLI: verify exits 0, machine formats round-trip, bytes deterministic",
         verify_ok && round_trip_ok && deterministic,
         std::string("verify exit ") + std::to_string(verify.exit_code) + ", round-trip " +
             (round_trip_ok ? "ok" : "broken") + ", determinism " +
             (deterministic ? "ok" : "broken"));
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  criterion_commutator_identity();
  criterion_paradox();
  criterion_boundary_term();
  criterion_phase_elements();
  criterion_spectrum();
  criterion_pointwise_conjugacy();
  criterion_window_confined();
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  criterion_oracle(elapsed);
  criterion_cli();
  if (failures == 0) {
    std::printf("acceptance: all criteria PASS\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) FAILED\n", failures);
  return 1;
}
