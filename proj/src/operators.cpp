#include "oscitime/operators.hpp"

#include <numbers>
#include <utility>

namespace oscitime {

PhasePolyFourier apply_hamiltonian(const PhasePolyFourier& f, const PhysicalConstants& c) {
  const double hw = c.hbar() * c.omega();
  return add(scale(differentiate(f), Complex(0.0, hw)), scale(f, 0.5 * hw));
}

PhasePolyFourier apply_phase(const PhasePolyFourier& f) { return mul_by_phase(f); }

PhasePolyFourier apply_time(const PhasePolyFourier& f, const PhysicalConstants& c) {
  const PhasePolyFourier linear =
      add(scale(f, std::numbers::pi / 2.0), scale(mul_by_phase(f), -1.0));
  return scale(linear, 1.0 / c.omega());
}

PhaseRepOperator PhaseRepOperator::hamiltonian(PhysicalConstants c) {
  return {OperatorKind::hamiltonian, c};
}

PhaseRepOperator PhaseRepOperator::phase() { return {OperatorKind::phase, {}}; }

PhaseRepOperator PhaseRepOperator::time(PhysicalConstants c) { return {OperatorKind::time, c}; }

PhaseRepOperator PhaseRepOperator::custom(Complex derivative_coeff, PhasePolyFourier multiplier) {
  PhaseRepOperator op{OperatorKind::custom, {}};
  op.derivative_coeff_ = derivative_coeff;
  op.multiplier_ = std::move(multiplier);
  return op;
}

PhasePolyFourier PhaseRepOperator::operator()(const PhasePolyFourier& f) const {
  switch (kind_) {
    case OperatorKind::hamiltonian:
      return apply_hamiltonian(f, constants_);
    case OperatorKind::phase:
      return apply_phase(f);
    case OperatorKind::time:
      return apply_time(f, constants_);
    case OperatorKind::custom:
      return add(scale(differentiate(f), derivative_coeff_), multiply(multiplier_, f));
  }
  throw std::logic_error("unreachable operator kind");
}

PhasePolyFourier commutator_action(const PhaseRepOperator& a, const PhaseRepOperator& b,
                                   const PhasePolyFourier& f) {
  return add(a(b(f)), scale(b(a(f)), -1.0));
}

}  // namespace oscitime
