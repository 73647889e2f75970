#include "oscitime/matrices.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <utility>

#include "oscitime/operators.hpp"

namespace oscitime {

namespace {

void check_cap(const FockWindow& w, std::size_t max_states) {
  if (w.size() > max_states)
    throw std::invalid_argument("window holds " + std::to_string(w.size()) +
                                " states, cap is " + std::to_string(max_states));
}

template <typename EntryFn>
OperatorMatrix build(const FockWindow& w, const PhysicalConstants& c, std::string label,
                     std::size_t max_states, EntryFn entry) {
  check_cap(w, max_states);
  OperatorMatrix matrix{w, c, std::move(label)};
  for (int m = w.n_min(); m <= w.n_max(); ++m)
    for (int n = w.n_min(); n <= w.n_max(); ++n) matrix.at(m, n) = entry(m, n);
  return matrix;
}

}  // namespace

FockWindow::FockWindow(int n_min, int n_max, bool allow_negative) : n_min_(n_min), n_max_(n_max) {
  if (n_min > n_max)
    throw std::invalid_argument("window n_min " + std::to_string(n_min) + " exceeds n_max " +
                                std::to_string(n_max));
  if (n_min < 0 && !allow_negative)
    throw std::invalid_argument("negative quantum numbers need the explicit override");
}

OperatorMatrix::OperatorMatrix(FockWindow window, PhysicalConstants constants, std::string label)
    : window_(window),
      constants_(constants),
      label_(std::move(label)),
      entries_(window.size() * window.size()) {}

Complex& OperatorMatrix::at(int m, int n) {
  if (!window_.contains(m) || !window_.contains(n))
    throw std::out_of_range("matrix index outside Fock window");
  const auto row = static_cast<std::size_t>(m - window_.n_min());
  const auto col = static_cast<std::size_t>(n - window_.n_min());
  return entries_[row * dim() + col];
}

const Complex& OperatorMatrix::at(int m, int n) const {
  return const_cast<OperatorMatrix*>(this)->at(m, n);
}

bool OperatorMatrix::operator==(const OperatorMatrix& other) const {
  return window_ == other.window_ && label_ == other.label_ &&
         constants_.hbar() == other.constants_.hbar() &&
         constants_.omega() == other.constants_.omega() && entries_ == other.entries_;
}

OperatorMatrix phase_matrix(const FockWindow& w, const PhysicalConstants& c,
                            std::size_t max_states) {
  return build(w, c, "phase", max_states, [&](int m, int n) {
    return inner_product(fock_eigenfunction(m), mul_by_phase(fock_eigenfunction(n)));
  });
}

OperatorMatrix phase_matrix_quadrature(const FockWindow& w, const QuadratureSpec& spec,
                                       const PhysicalConstants& c, std::size_t max_states) {
  return build(w, c, "phase", max_states, [&](int m, int n) {
    return inner_product_quadrature(fock_eigenfunction(m), mul_by_phase(fock_eigenfunction(n)),
                                    spec);
  });
}

OperatorMatrix time_matrix(const FockWindow& w, const PhysicalConstants& c,
                           std::size_t max_states) {
  return build(w, c, "time", max_states, [&](int m, int n) {
    const Complex half_pi = (m == n) ? Complex{std::numbers::pi / 2.0, 0.0} : Complex{};
    return (half_pi - inner_product(fock_eigenfunction(m), mul_by_phase(fock_eigenfunction(n)))) /
           c.omega();
  });
}

OperatorMatrix commutator_matrix_correct(const FockWindow& w, const PhysicalConstants& c,
                                         std::size_t max_states) {
  return build(w, c, "commutator_correct", max_states, [&](int m, int n) {
    const auto bra = fock_eigenfunction(m);
    const auto phi_ket = mul_by_phase(fock_eigenfunction(n));
    const Complex phase_mn = inner_product(bra, phi_ket);
    const Complex h_phi_mn = inner_product(bra, apply_hamiltonian(phi_ket, c));
    return -(n + 0.5) * c.hbar() * phase_mn + h_phi_mn / c.omega();
  });
}

OperatorMatrix commutator_matrix_correct_quadrature(const FockWindow& w,
                                                    const PhysicalConstants& c,
                                                    const QuadratureSpec& spec,
                                                    std::size_t max_states) {
  return build(w, c, "commutator_correct", max_states, [&](int m, int n) {
    const auto bra = fock_eigenfunction(m);
    const auto phi_ket = mul_by_phase(fock_eigenfunction(n));
    const Complex phase_mn = inner_product_quadrature(bra, phi_ket, spec);
    const Complex h_phi_mn = inner_product_quadrature(bra, apply_hamiltonian(phi_ket, c), spec);
    return -(n + 0.5) * c.hbar() * phase_mn + h_phi_mn / c.omega();
  });
}

OperatorMatrix commutator_matrix_naive(const FockWindow& w, const PhysicalConstants& c,
                                       std::size_t max_states) {
  const OperatorMatrix chi = time_matrix(w, c, max_states);
  return build(w, c, "commutator_naive", max_states, [&](int m, int n) {
    return (n - m) * c.hbar() * c.omega() * chi.at(m, n);
  });
}

OperatorMatrix paradox_gap(const FockWindow& w, const PhysicalConstants& c,
                           std::size_t max_states) {
  const OperatorMatrix correct = commutator_matrix_correct(w, c, max_states);
  const OperatorMatrix naive = commutator_matrix_naive(w, c, max_states);
  return build(w, c, "paradox_gap", max_states,
               [&](int m, int n) { return correct.at(m, n) - naive.at(m, n); });
}

OperatorMatrix hermiticity_defect_matrix(const FockWindow& w, const PhysicalConstants& c,
                                         std::size_t max_states) {
  return build(w, c, "hermiticity_defect", max_states, [&](int m, int n) {
    return hermiticity_defect(fock_eigenfunction(m), mul_by_phase(fock_eigenfunction(n)), c);
  });
}

ResidualReport residual_report(const OperatorMatrix& matrix, ResidualTarget target) {
  const auto& w = matrix.window();
  ResidualReport report;
  report.worst_m = w.n_min();
  report.worst_n = w.n_min();
  double frob_sq = 0.0;
  for (int m = w.n_min(); m <= w.n_max(); ++m) {
    for (int n = w.n_min(); n <= w.n_max(); ++n) {
      Complex want{};
      if (target == ResidualTarget::ihbar_identity && m == n)
        want = Complex(0.0, matrix.constants().hbar());
      const double dev = std::abs(matrix.at(m, n) - want);
      frob_sq += dev * dev;
      if (dev > report.max_abs_deviation) {
        report.max_abs_deviation = dev;
        report.worst_m = m;
        report.worst_n = n;
      }
    }
  }
  report.frobenius_deviation = std::sqrt(frob_sq);
  return report;
}

std::string to_csv(const OperatorMatrix& matrix) {
  const auto& w = matrix.window();
  std::string out = "m,n,re,im\n";
  char buf[128];
  for (int m = w.n_min(); m <= w.n_max(); ++m) {
    for (int n = w.n_min(); n <= w.n_max(); ++n) {
      const Complex v = matrix.at(m, n);
      std::snprintf(buf, sizeof buf, "%d,%d,%.17g,%.17g\n", m, n, v.real(), v.imag());
      out += buf;
    }
  }
  return out;
}

OperatorMatrix matrix_from_csv(const std::string& text, const PhysicalConstants& c,
                               const std::string& label) {
  std::istringstream lines{text};
  std::string line;
  if (!std::getline(lines, line) || line != "m,n,re,im")
    throw std::invalid_argument("CSV must start with header m,n,re,im");

  struct Row {
    int m, n;
    Complex v;
  };
  std::vector<Row> rows;
  int lo = 0, hi = 0;
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    Row row{};
    double re = 0.0, im = 0.0;
    if (std::sscanf(line.c_str(), "%d,%d,%lg,%lg", &row.m, &row.n, &re, &im) != 4)
      throw std::invalid_argument("bad CSV row: " + line);
    row.v = {re, im};
    if (rows.empty()) {
      lo = std::min(row.m, row.n);
      hi = std::max(row.m, row.n);
    } else {
      lo = std::min({lo, row.m, row.n});
      hi = std::max({hi, row.m, row.n});
    }
    rows.push_back(row);
  }
  if (rows.empty()) throw std::invalid_argument("CSV has no entries");
  OperatorMatrix matrix{FockWindow{lo, hi, true}, c, label};
  for (const auto& row : rows) matrix.at(row.m, row.n) = row.v;
  return matrix;
}

}  // namespace oscitime
