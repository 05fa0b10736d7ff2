#include "iaqc/quantum.hpp"

namespace iaqc {

Bit measure(PolarizationState s, Angle basis, RandomStream& rng) {
  const double p0 = outcome_zero_probability(s, basis);
  return rng.uniform01() < p0 ? Bit::zero : Bit::one;
}

MeasureResult measure_collapse(PolarizationState s, Angle basis,
                               RandomStream& rng) {
  const Bit outcome = measure(s, basis, rng);
  const Angle collapsed =
      outcome == Bit::zero ? basis : basis + Angle(kHalfPi);
  return {outcome, {collapsed}};
}

}  // namespace iaqc
