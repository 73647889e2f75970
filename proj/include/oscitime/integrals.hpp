#pragma once

#include <vector>

#include "oscitime/phase_function.hpp"

namespace oscitime {

// Composite Gauss-Legendre layout for integrals over [0, 2*pi].
// Gauss-Legendre rather than trapezoid: the integrands phi^d e^{ik phi}
// are not periodic for d >= 1, so spectral trapezoid accuracy does not
// apply.
class QuadratureSpec {
 public:
  QuadratureSpec() = default;  // 16 panels x 24 nodes
  QuadratureSpec(int panels, int nodes_per_panel);

  int panels() const { return panels_; }
  int nodes_per_panel() const { return nodes_; }

 private:
  int panels_ = 16;
  int nodes_ = 24;
};

// Nodes and weights on [-1, 1]; deterministic for fixed n in [2, 64].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussLegendreRule gauss_legendre_rule(int n);

// Monomial degrees up to twice the function degree bound arise when two
// in-bound functions meet under an inner product.
inline constexpr int max_monomial_degree = 2 * limits::max_degree;

// integral over [0, 2*pi] of phi^d e^{ik phi} d phi, in closed form:
//   k == 0:  (2*pi)^(d+1) / (d+1)
//   k != 0:  I_d = (2*pi)^d/(ik) - (d/(ik)) I_{d-1},  I_0 = 0
Complex monomial_integral(int degree, int harmonic);

// <f|g> = integral over [0, 2*pi] of conj(f(phi)) g(phi) d phi, expanded
// term-wise into monomial integrals.
Complex inner_product(const PhasePolyFourier& f, const PhasePolyFourier& g);

// Same integral by composite Gauss-Legendre; the independent oracle.
Complex inner_product_quadrature(const PhasePolyFourier& f, const PhasePolyFourier& g,
                                 const QuadratureSpec& spec);

// (conj(f) g)(2*pi) - (conj(f) g)(0)
Complex boundary_term(const PhasePolyFourier& f, const PhasePolyFourier& g);

// D = <f|Hg> - <Hf|g>.  Computed both as the difference of inner
// products and by the closed form i*hbar*omega * boundary_term(f, g);
// disagreement beyond tolerance raises inconsistency_error.  Zero
// whenever f and g are both periodic.
Complex hermiticity_defect(const PhasePolyFourier& f, const PhasePolyFourier& g,
                           const PhysicalConstants& c);

}  // namespace oscitime
