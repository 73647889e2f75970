#include "oscitime/phase_function.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace oscitime {

namespace {

// Degree -> (harmonic -> coefficient) accumulator used by every algebra
// operation; canonicalized once at the end.
using Acc = std::map<int, std::map<int, Complex>>;

void check_degree(int d) {
  if (d < 0) throw std::invalid_argument("phase-poly degree must be >= 0");
  if (d > limits::max_degree)
    throw support_overflow_error("degree " + std::to_string(d) + " exceeds bound " +
                                 std::to_string(limits::max_degree));
}

PhasePolyFourier canonicalize(Acc&& acc) {
  PhasePolyFourier::Terms terms;
  for (auto& [d, series] : acc) {
    check_degree(d);
    auto fs = FourierSeries::from_coeffs(std::move(series));
    if (!fs.is_zero()) terms.emplace(d, std::move(fs));
  }
  return PhasePolyFourier::from_terms(std::move(terms));
}

}  // namespace

PhysicalConstants::PhysicalConstants(double hbar, double omega) : hbar_(hbar), omega_(omega) {
  if (!(hbar > 0.0) || !std::isfinite(hbar))
    throw std::invalid_argument("hbar must be positive and finite");
  if (!(omega > 0.0) || !std::isfinite(omega))
    throw std::invalid_argument("omega must be positive and finite");
}

FourierSeries FourierSeries::from_coeffs(Coeffs coeffs) {
  FourierSeries out;
  for (auto it = coeffs.begin(); it != coeffs.end();) {
    if (it->second == Complex{}) {
      it = coeffs.erase(it);
      continue;
    }
    const int k = it->first;
    if (k > limits::max_abs_harmonic || k < -limits::max_abs_harmonic)
      throw support_overflow_error("harmonic " + std::to_string(k) + " exceeds bound " +
                                   std::to_string(limits::max_abs_harmonic));
    ++it;
  }
  if (coeffs.size() > limits::max_support)
    throw support_overflow_error("series support " + std::to_string(coeffs.size()) +
                                 " exceeds bound " + std::to_string(limits::max_support));
  out.coeffs_ = std::move(coeffs);
  return out;
}

FourierSeries FourierSeries::harmonic(int k, Complex c) {
  return from_coeffs({{k, c}});
}

PhasePolyFourier PhasePolyFourier::from_terms(Terms terms) {
  PhasePolyFourier out;
  for (auto it = terms.begin(); it != terms.end();) {
    check_degree(it->first);
    if (it->second.is_zero()) {
      it = terms.erase(it);
    } else {
      ++it;
    }
  }
  out.terms_ = std::move(terms);
  return out;
}

PhasePolyFourier PhasePolyFourier::constant(Complex c) {
  if (c == Complex{}) return {};
  return from_terms({{0, FourierSeries::harmonic(0, c)}});
}

PhasePolyFourier fock_eigenfunction(int n) {
  const double norm = 1.0 / std::sqrt(two_pi);
  return PhasePolyFourier::from_terms({{0, FourierSeries::harmonic(-n, norm)}});
}

PhasePolyFourier add(const PhasePolyFourier& f, const PhasePolyFourier& g) {
  Acc acc;
  for (const auto& [d, s] : f.terms())
    for (const auto& [k, c] : s.coeffs()) acc[d][k] += c;
  for (const auto& [d, s] : g.terms())
    for (const auto& [k, c] : s.coeffs()) acc[d][k] += c;
  return canonicalize(std::move(acc));
}

PhasePolyFourier scale(const PhasePolyFourier& f, Complex c) {
  Acc acc;
  for (const auto& [d, s] : f.terms())
    for (const auto& [k, ck] : s.coeffs()) acc[d][k] = c * ck;
  return canonicalize(std::move(acc));
}

PhasePolyFourier mul_by_phase(const PhasePolyFourier& f) {
  PhasePolyFourier::Terms terms;
  for (const auto& [d, s] : f.terms()) {
    check_degree(d + 1);
    terms.emplace(d + 1, s);
  }
  return PhasePolyFourier::from_terms(std::move(terms));
}

PhasePolyFourier differentiate(const PhasePolyFourier& f) {
  Acc acc;
  for (const auto& [d, s] : f.terms()) {
    for (const auto& [k, c] : s.coeffs()) {
      if (d > 0) acc[d - 1][k] += static_cast<double>(d) * c;
      if (k != 0) acc[d][k] += Complex(0.0, static_cast<double>(k)) * c;
    }
  }
  return canonicalize(std::move(acc));
}

PhasePolyFourier conjugate(const PhasePolyFourier& f) {
  Acc acc;
  for (const auto& [d, s] : f.terms())
    for (const auto& [k, c] : s.coeffs()) acc[d][-k] = std::conj(c);
  return canonicalize(std::move(acc));
}

Complex evaluate(const PhasePolyFourier& f, double phi) {
  if (!std::isfinite(phi)) throw std::invalid_argument("evaluate: phi must be finite");
  Complex total{};
  for (const auto& [d, s] : f.terms()) {
    Complex periodic{};
    for (const auto& [k, c] : s.coeffs()) periodic += c * std::polar(1.0, k * phi);
    total += std::pow(phi, d) * periodic;
  }
  return total;
}

PhasePolyFourier mul_by_fourier(const PhasePolyFourier& f, const FourierSeries& g) {
  Acc acc;
  for (const auto& [d, s] : f.terms())
    for (const auto& [ka, ca] : s.coeffs())
      for (const auto& [kb, cb] : g.coeffs()) acc[d][ka + kb] += ca * cb;
  return canonicalize(std::move(acc));
}

PhasePolyFourier multiply(const PhasePolyFourier& f, const PhasePolyFourier& g) {
  Acc acc;
  for (const auto& [da, sa] : f.terms())
    for (const auto& [db, sb] : g.terms())
      for (const auto& [ka, ca] : sa.coeffs())
        for (const auto& [kb, cb] : sb.coeffs()) acc[da + db][ka + kb] += ca * cb;
  return canonicalize(std::move(acc));
}

PhasePolyFourier prune(const PhasePolyFourier& f, double eps) {
  Acc acc;
  for (const auto& [d, s] : f.terms())
    for (const auto& [k, c] : s.coeffs())
      if (std::abs(c) > eps) acc[d][k] = c;
  return canonicalize(std::move(acc));
}

}  // namespace oscitime
