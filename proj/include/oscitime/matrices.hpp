#pragma once

#include <string>
#include <vector>

#include "oscitime/integrals.hpp"
#include "oscitime/phase_function.hpp"

namespace oscitime {

// Dense windows beyond this size are rejected: closed forms make large
// windows pointless and these matrices have no sparsity to exploit.
inline constexpr std::size_t default_window_cap = 512;

// Contiguous range [n_min, n_max] of oscillator quantum numbers.  The
// spectrum has n >= 0, so negative n_min requires the explicit override.
class FockWindow {
 public:
  FockWindow(int n_min, int n_max, bool allow_negative = false);

  int n_min() const { return n_min_; }
  int n_max() const { return n_max_; }
  std::size_t size() const { return static_cast<std::size_t>(n_max_ - n_min_) + 1; }
  bool contains(int n) const { return n >= n_min_ && n <= n_max_; }

  bool operator==(const FockWindow&) const = default;

 private:
  int n_min_;
  int n_max_;
};

// Dense complex matrix indexed by quantum-number pairs of a Fock window,
// entry (m, n) = <m|.|n> for row state m, column state n.  Write-once by
// the builders, then treated as immutable.
class OperatorMatrix {
 public:
  OperatorMatrix(FockWindow window, PhysicalConstants constants, std::string label);

  const FockWindow& window() const { return window_; }
  const PhysicalConstants& constants() const { return constants_; }
  const std::string& label() const { return label_; }
  std::size_t dim() const { return window_.size(); }

  Complex& at(int m, int n);
  const Complex& at(int m, int n) const;

  bool operator==(const OperatorMatrix&) const;

 private:
  FockWindow window_;
  PhysicalConstants constants_;
  std::string label_;
  std::vector<Complex> entries_;  // row-major, m outer
};

// <m|phi|n> = <e_m | phi e_n> over [0, 2*pi]: -i/(m-n) off the diagonal,
// pi on it.  Constants are metadata only; phi itself is dimensionless.
OperatorMatrix phase_matrix(const FockWindow& w, const PhysicalConstants& c = {},
                            std::size_t max_states = default_window_cap);

// Same matrix with every integral done by quadrature instead of the
// closed form.
OperatorMatrix phase_matrix_quadrature(const FockWindow& w, const QuadratureSpec& spec,
                                       const PhysicalConstants& c = {},
                                       std::size_t max_states = default_window_cap);

// <m|chi|n> = (1/omega) ((pi/2) delta_mn - <m|phi|n>)
OperatorMatrix time_matrix(const FockWindow& w, const PhysicalConstants& c,
                           std::size_t max_states = default_window_cap);

// <m|[chi,H]|n> evaluated honestly: the H phi term is an integral of e_m
// against H applied to the aperiodic function phi e_n, never an insertion
// of the spectrum on the bra side.  Equals i*hbar*delta_mn.
OperatorMatrix commutator_matrix_correct(const FockWindow& w, const PhysicalConstants& c,
                                         std::size_t max_states = default_window_cap);
OperatorMatrix commutator_matrix_correct_quadrature(const FockWindow& w,
                                                    const PhysicalConstants& c,
                                                    const QuadratureSpec& spec,
                                                    std::size_t max_states = default_window_cap);

// (n-m)*hbar*omega*<m|chi|n>: what the spectrum-insertion shortcut would
// give.  Diagonal 0, off-diagonal -i*hbar.
OperatorMatrix commutator_matrix_naive(const FockWindow& w, const PhysicalConstants& c,
                                       std::size_t max_states = default_window_cap);

// correct - naive, entry-wise; the constant i*hbar at every entry.
OperatorMatrix paradox_gap(const FockWindow& w, const PhysicalConstants& c,
                           std::size_t max_states = default_window_cap);

// Entry (m, n) = hermiticity_defect(e_m, phi e_n) = i*hbar*omega,
// uniformly in (m, n).
OperatorMatrix hermiticity_defect_matrix(const FockWindow& w, const PhysicalConstants& c,
                                         std::size_t max_states = default_window_cap);

enum class ResidualTarget { ihbar_identity, zero };

struct ResidualReport {
  double max_abs_deviation = 0.0;
  double frobenius_deviation = 0.0;
  int worst_m = 0;
  int worst_n = 0;
};

ResidualReport residual_report(const OperatorMatrix& matrix, ResidualTarget target);

// CSV with header "m,n,re,im", one row per entry, m outer ascending.
// %.17g fields round-trip doubles bit-for-bit.
std::string to_csv(const OperatorMatrix& matrix);

// Rebuilds entries and window from CSV text; constants and label are not
// part of the CSV schema and come from the arguments.
OperatorMatrix matrix_from_csv(const std::string& text, const PhysicalConstants& c = {},
                               const std::string& label = "");

}  // namespace oscitime
