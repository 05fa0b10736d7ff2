#pragma once

#include "iaqc/angle.hpp"
#include "iaqc/rng.hpp"

namespace iaqc {

enum class Bit : int { zero = 0, one = 1 };

inline Bit flip(Bit b) { return b == Bit::zero ? Bit::one : Bit::zero; }
inline int bit_value(Bit b) { return static_cast<int>(b); }

// A pure linear-polarization qubit cos(psi)|0> + sin(psi)|1>, parameterized
// by the single angle psi. All protocol transformations are planar rotations,
// so this representation is exact: inverse rotations cancel without any
// matrix round-off.
struct PolarizationState {
  Angle psi;
};

// Planar rotation by theta. Composition is additive in the angle.
struct RotationOp {
  Angle theta;
};

inline RotationOp compose(RotationOp a, RotationOp b) {
  return {a.theta + b.theta};
}

inline RotationOp inverse(RotationOp r) { return {-r.theta}; }

inline PolarizationState rotate(PolarizationState s, RotationOp r) {
  return {s.psi + r.theta};
}

// Orthogonal encoding: 0 -> |0>, 1 -> |pi/2> (= |1>).
inline PolarizationState bit_to_state(Bit x) {
  return {Angle(x == Bit::zero ? 0.0 : kHalfPi)};
}

// Born rule: probability of the basis-aligned outcome (bit 0).
inline double outcome_zero_probability(PolarizationState s, Angle basis) {
  const double c = std::cos(s.psi.radians() - basis.radians());
  return c * c;
}

// Samples a measurement of `s` in the basis {basis, basis + pi/2}.
// Consumes exactly one uniform draw per call.
Bit measure(PolarizationState s, Angle basis, RandomStream& rng);

struct MeasureResult {
  Bit outcome;
  PolarizationState state;  // collapsed: basis or basis + pi/2
};

MeasureResult measure_collapse(PolarizationState s, Angle basis,
                               RandomStream& rng);

}  // namespace iaqc
