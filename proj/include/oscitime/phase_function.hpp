#pragma once

#include <complex>
#include <map>

#include "oscitime/errors.hpp"

namespace oscitime {

using Complex = std::complex<double>;

inline constexpr double two_pi = 6.283185307179586476925286766559;

// hbar (units of action) and omega (1/time).  Both strictly positive
// and finite; violations throw std::invalid_argument.
class PhysicalConstants {
 public:
  PhysicalConstants() = default;
  PhysicalConstants(double hbar, double omega);

  double hbar() const { return hbar_; }
  double omega() const { return omega_; }

 private:
  double hbar_ = 1.0;
  double omega_ = 1.0;
};

namespace limits {
// Growth guards for repeated operator application.  Exceeding any of
// these throws support_overflow_error.
inline constexpr int max_degree = 8;
inline constexpr int max_abs_harmonic = 2048;
inline constexpr std::size_t max_support = 4096;
}  // namespace limits

// Finite Fourier series  sum_k c_k e^{ik phi}  with integer harmonics.
// Canonical form: no stored coefficient is exactly zero.
class FourierSeries {
 public:
  using Coeffs = std::map<int, Complex>;

  FourierSeries() = default;

  // Canonicalizes (drops exact zeros) and enforces the harmonic and
  // support bounds.
  static FourierSeries from_coeffs(Coeffs coeffs);
  static FourierSeries harmonic(int k, Complex c);

  const Coeffs& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  bool operator==(const FourierSeries&) const = default;

 private:
  Coeffs coeffs_;
};

// sum_d phi^d * (Fourier series): the function space closed under the
// Hamiltonian, multiplication by phi, and the time operator.  The phase
// variable lives on the fundamental interval [0, 2*pi].  Canonical form:
// every stored series is nonzero.  Values are immutable once built.
class PhasePolyFourier {
 public:
  using Terms = std::map<int, FourierSeries>;  // degree -> series

  PhasePolyFourier() = default;  // the zero function

  static PhasePolyFourier from_terms(Terms terms);
  static PhasePolyFourier constant(Complex c);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Highest phi power present; 0 for the zero function.  degree_max == 0
  // exactly when the function is 2*pi-periodic.
  int degree_max() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

  bool operator==(const PhasePolyFourier&) const = default;

 private:
  Terms terms_;
};

// <phi|n> = e^{-in phi} / sqrt(2*pi), the normalized periodic
// eigenfunction of the Hamiltonian.  Any integer n is accepted.
PhasePolyFourier fock_eigenfunction(int n);

PhasePolyFourier add(const PhasePolyFourier& f, const PhasePolyFourier& g);
PhasePolyFourier scale(const PhasePolyFourier& f, Complex c);

// f -> phi * f: shifts every degree up by one, Fourier content unchanged.
PhasePolyFourier mul_by_phase(const PhasePolyFourier& f);

// Term-wise product rule:
//   d/dphi [phi^d S(phi)] = d*phi^(d-1) S + phi^d S'.
PhasePolyFourier differentiate(const PhasePolyFourier& f);

// Complex conjugate: coefficients conjugated, harmonics negated.
PhasePolyFourier conjugate(const PhasePolyFourier& f);

// Pointwise value sum_d phi^d sum_k c_k e^{ik phi}.
Complex evaluate(const PhasePolyFourier& f, double phi);

// Degree-wise harmonic convolution with a periodic factor.
PhasePolyFourier mul_by_fourier(const PhasePolyFourier& f, const FourierSeries& g);

// General product; degrees add, harmonics convolve.
PhasePolyFourier multiply(const PhasePolyFourier& f, const PhasePolyFourier& g);

// Display helper: drops coefficients with |c| <= eps.  Canonical form
// itself never prunes, so algebraic cancellation stays exact.
PhasePolyFourier prune(const PhasePolyFourier& f, double eps);

}  // namespace oscitime
