#pragma once

// The beta-adic Monna map phi_beta (digit reversal into [0,1)), its greedy
// pseudo-inverse, and the induced interval transformation
// T = phi_beta o tau o phi_beta^+.  The Fibonacci specialization of T is the
// Kakutani-Fibonacci map.

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "numeration.hpp"
#include "odometer.hpp"

namespace betaseq {

inline void require_unit_interval(const NumerationSystem& sys) {
  if (!sys.classification().unit_interval())
    throw std::domain_error("system " + sys.name() +
                            " is NotUnitIntervalOrNotDense; Monna image may leave [0,1)");
}

// phi_beta(sum eps_j G_j) = sum eps_j beta^{-j-1}, evaluated by Horner from
// the highest digit.  Digits are assumed admissible.
inline double monna_map(const DigitString& ds, const NumerationSystem& sys) {
  require_unit_interval(sys);
  const double beta = sys.beta();
  double acc = 0.0;
  for (int j = ds.top_index(); j >= 0; --j) acc = (acc + ds.digits[j]) / beta;
  return acc;
}

// First `depth` digits of the greedy beta-expansion of x: iterate
// eps_j = floor(y*beta), y <- y*beta - eps_j.  A y*beta within 1e-12 below an
// integer is rounded up so float noise cannot drop a digit at an expansion
// boundary (then y is clamped at 0).
inline DigitString pseudo_inverse(double x, const NumerationSystem& sys, int depth) {
  if (depth < 1) throw std::invalid_argument("pseudo_inverse depth must be >= 1");
  if (!(x >= 0.0 && x < 1.0)) throw std::domain_error("pseudo_inverse requires x in [0,1)");
  const double beta = sys.beta();
  DigitString out;
  out.digits.assign(static_cast<std::size_t>(depth), 0);
  double y = x;
  for (int j = 0; j < depth; ++j) {
    double t = y * beta;
    int e = static_cast<int>(std::floor(t + 1e-12));
    out.digits[static_cast<std::size_t>(j)] = e;
    y = t - e;
    if (y < 0.0) y = 0.0;
  }
  return out;
}

// T(x) = phi_beta(tau(phi_beta^+(x))).  Exact (up to float rounding) when x
// has a finite beta-expansion shorter than `depth`; otherwise the truncation
// contributes at most beta^{-depth}/(1 - 1/beta) plus carry effects.
inline double interval_transform(double x, const NumerationSystem& sys, int depth) {
  require_unit_interval(sys);
  if (depth < sys.degree() + 2) throw std::invalid_argument("depth must be >= d + 2");
  if (depth + 1 > sys.max_index())
    throw std::out_of_range("transform depth exceeds precomputed base-sequence range");
  DigitString digits = pseudo_inverse(x, sys, depth);
  return monna_map(successor(digits, sys), sys);
}

// Shared immutable Fibonacci system (a = (1,1), beta the golden ratio); range
// comfortably covers depth-64 transforms.
inline const NumerationSystem& fibonacci_system() {
  static const NumerationSystem sys = NumerationSystem::build({1, 1}, 72);
  return sys;
}

inline double kakutani_fibonacci(double x) {
  return interval_transform(x, fibonacci_system(), 64);
}

}  // namespace betaseq
