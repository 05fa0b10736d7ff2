#pragma once

#include <cmath>

namespace iaqc {

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;
inline constexpr double kHalfPi = 0.5 * kPi;

// Canonical tolerance for angle equality after canonicalization.
inline constexpr double kAngleTol = 1e-12;

// Plane angle with a canonical representative in [0, 2pi). Polarization
// measurement statistics only depend on the angle mod pi, so two angles that
// differ by a multiple of pi are "polarization-equivalent".
class Angle {
 public:
  constexpr Angle() = default;
  explicit Angle(double radians) : radians_(canonical(radians)) {}

  double radians() const { return radians_; }

  // Representative of the polarization class, in [0, pi).
  double mod_pi() const {
    double r = radians_;
    if (r >= kPi) r -= kPi;
    if (r >= kPi) r = 0.0;  // guard a rounding landing exactly on pi
    return r;
  }

  Angle operator+(Angle o) const { return Angle(radians_ + o.radians_); }
  Angle operator-(Angle o) const { return Angle(radians_ - o.radians_); }
  Angle operator-() const { return Angle(-radians_); }

  bool almost_equal(Angle o, double tol = kAngleTol) const {
    return circular_distance(radians_, o.radians_, kTwoPi) <= tol;
  }

  // Equality of the polarization class (mod pi).
  bool pol_equivalent(Angle o, double tol = kAngleTol) const {
    return circular_distance(radians_, o.radians_, kPi) <= tol;
  }

  static double canonical(double r) {
    r = std::fmod(r, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    if (r >= kTwoPi) r = 0.0;
    return r;
  }

  // Shortest distance between two angles on a circle of the given period.
  static double circular_distance(double a, double b, double period) {
    double d = std::fmod(std::fabs(a - b), period);
    return d > 0.5 * period ? period - d : d;
  }

 private:
  double radians_ = 0.0;
};

}  // namespace iaqc
