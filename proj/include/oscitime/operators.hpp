#pragma once

#include "oscitime/phase_function.hpp"

namespace oscitime {

// H f = i*hbar*omega f' + (hbar*omega/2) f
PhasePolyFourier apply_hamiltonian(const PhasePolyFourier& f, const PhysicalConstants& c);

// phi f  (alias of mul_by_phase)
PhasePolyFourier apply_phase(const PhasePolyFourier& f);

// chi f = (1/omega) ((pi/2) f - phi f).
// Convention: omega*chi = (pi/2)*1 - phi with no additive function of H;
// any such function commutes with H and drops out of every commutator.
PhasePolyFourier apply_time(const PhasePolyFourier& f, const PhysicalConstants& c);

enum class OperatorKind { hamiltonian, phase, time, custom };

// One of the three operators of the problem, or a custom first-order
// operator  f -> a f' + m(phi) f.  Acts on the full phi^d-times-Fourier
// space, periodic or not.
class PhaseRepOperator {
 public:
  static PhaseRepOperator hamiltonian(PhysicalConstants c);
  static PhaseRepOperator phase();
  static PhaseRepOperator time(PhysicalConstants c);
  static PhaseRepOperator custom(Complex derivative_coeff, PhasePolyFourier multiplier);

  OperatorKind kind() const { return kind_; }
  const PhysicalConstants& constants() const { return constants_; }

  PhasePolyFourier operator()(const PhasePolyFourier& f) const;

 private:
  PhaseRepOperator(OperatorKind kind, PhysicalConstants constants)
      : kind_(kind), constants_(constants) {}

  OperatorKind kind_;
  PhysicalConstants constants_;
  Complex derivative_coeff_{};   // custom only
  PhasePolyFourier multiplier_;  // custom only
};

// A(B f) - B(A f)
PhasePolyFourier commutator_action(const PhaseRepOperator& a, const PhaseRepOperator& b,
                                   const PhasePolyFourier& f);

}  // namespace oscitime
