#include "oscitime/integrals.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "oscitime/operators.hpp"

namespace oscitime {

QuadratureSpec::QuadratureSpec(int panels, int nodes_per_panel)
    : panels_(panels), nodes_(nodes_per_panel) {
  if (panels < 1) throw std::invalid_argument("quadrature panels must be >= 1");
  if (nodes_per_panel < 2 || nodes_per_panel > 64)
    throw std::invalid_argument("quadrature nodes per panel must be in [2, 64]");
}

GaussLegendreRule gauss_legendre_rule(int n) {
  if (n < 2 || n > 64) throw std::invalid_argument("Gauss-Legendre order must be in [2, 64]");
  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Newton on P_n from the Chebyshev-like initial guess.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= n; ++j) {
        const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double step = p1 / dp;
      x -= step;
      if (std::abs(step) < 1e-15) break;
    }
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

Complex monomial_integral(int degree, int harmonic) {
  if (degree < 0 || degree > max_monomial_degree)
    throw std::invalid_argument("monomial degree out of range [0, " +
                                std::to_string(max_monomial_degree) + "]");
  if (harmonic == 0) {
    double pw = two_pi;
    for (int j = 0; j < degree; ++j) pw *= two_pi;
    return pw / (degree + 1.0);
  }
  // Upward integration-by-parts recurrence; the full-period exponential
  // kills I_0 exactly.
  const Complex ik(0.0, static_cast<double>(harmonic));
  Complex integral{};
  double pw = 1.0;  // (2*pi)^j
  for (int j = 1; j <= degree; ++j) {
    pw *= two_pi;
    integral = pw / ik - (static_cast<double>(j) / ik) * integral;
  }
  return integral;
}

Complex inner_product(const PhasePolyFourier& f, const PhasePolyFourier& g) {
  Complex acc{};
  for (const auto& [da, sa] : f.terms())
    for (const auto& [db, sb] : g.terms())
      for (const auto& [ka, ca] : sa.coeffs())
        for (const auto& [kb, cb] : sb.coeffs())
          acc += std::conj(ca) * cb * monomial_integral(da + db, kb - ka);
  return acc;
}

Complex inner_product_quadrature(const PhasePolyFourier& f, const PhasePolyFourier& g,
                                 const QuadratureSpec& spec) {
  const GaussLegendreRule rule = gauss_legendre_rule(spec.nodes_per_panel());
  const double width = two_pi / spec.panels();
  Complex acc{};
  for (int p = 0; p < spec.panels(); ++p) {
    const double mid = (p + 0.5) * width;
    for (int i = 0; i < spec.nodes_per_panel(); ++i) {
      const double x = mid + 0.5 * width * rule.nodes[i];
      acc += (0.5 * width * rule.weights[i]) * std::conj(evaluate(f, x)) * evaluate(g, x);
    }
  }
  return acc;
}

Complex boundary_term(const PhasePolyFourier& f, const PhasePolyFourier& g) {
  return std::conj(evaluate(f, two_pi)) * evaluate(g, two_pi) -
         std::conj(evaluate(f, 0.0)) * evaluate(g, 0.0);
}

Complex hermiticity_defect(const PhasePolyFourier& f, const PhasePolyFourier& g,
                           const PhysicalConstants& c) {
  const Complex fg = inner_product(f, apply_hamiltonian(g, c));
  const Complex hfg = inner_product(apply_hamiltonian(f, c), g);
  const Complex by_difference = fg - hfg;
  const Complex closed = Complex(0.0, c.hbar() * c.omega()) * boundary_term(f, g);
  // 1e-12 at unit hbar*omega and O(1) operands; the difference route
  // cancels the two inner products, so its error floor scales with their
  // magnitudes.
  const double scale =
      std::max(1.0, c.hbar() * c.omega()) * (1.0 + std::abs(fg) + std::abs(hfg));
  if (std::abs(by_difference - closed) > 1e-12 * scale)
    throw inconsistency_error("hermiticity defect: inner-product route " +
                              std::to_string(std::abs(by_difference - closed)) +
                              " away from boundary closed form");
  return closed;
}

}  // namespace oscitime
