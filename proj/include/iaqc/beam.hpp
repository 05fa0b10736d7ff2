#pragma once

#include <cstdint>
#include <vector>

#include "iaqc/quantum.hpp"

namespace iaqc {

// Intensity accounting mode, fixed per session.
//  - photon_count: beams are integer collections, beam splitters and lossy
//    links act per photon (Bernoulli), intensity = photon count.
//  - expected_value: deterministic real-valued bookkeeping; a splitter sends
//    exactly fraction k of the weight each way. Reproduces the I(1-k)^n
//    intensity algebra without sampling noise.
enum class IntensityMode { photon_count, expected_value };

enum class Origin : std::uint8_t { legitimate, eve_injected };

struct Photon {
  PolarizationState state;
  Origin origin = Origin::legitimate;
  // Which pass injected this photon (1..3); 0 for legitimate photons.
  std::int8_t inject_pass = 0;
  // Net count of Alice / Bob forward rotations applied so far. Hidden
  // bookkeeping for the symbolic transcript ledger and for test oracles;
  // protocol decisions never read these.
  std::int8_t alice_turns = 0;
  std::int8_t bob_turns = 0;
};

// An ordered collection of photons. In expected_value mode every photon in
// the beam carries the same fractional weight; in photon_count mode the
// weight is pinned to 1.
class Beam {
 public:
  Beam() = default;
  Beam(IntensityMode mode, double photon_weight)
      : mode_(mode),
        photon_weight_(mode == IntensityMode::photon_count ? 1.0
                                                           : photon_weight) {}

  static Beam source(std::size_t count, PolarizationState state,
                     IntensityMode mode);

  IntensityMode mode() const { return mode_; }
  double photon_weight() const { return photon_weight_; }
  std::size_t size() const { return photons_.size(); }
  bool empty() const { return photons_.empty(); }

  double intensity() const {
    return static_cast<double>(photons_.size()) * photon_weight_;
  }

  std::vector<Photon>& photons() { return photons_; }
  const std::vector<Photon>& photons() const { return photons_; }

  void scale_weight(double factor) { photon_weight_ *= factor; }

 private:
  IntensityMode mode_ = IntensityMode::photon_count;
  double photon_weight_ = 1.0;
  std::vector<Photon> photons_;
};

struct SplitResult {
  Beam tapped;
  Beam through;
};

// Beam-splitter tap diverting `fraction` of the incoming beam.
// photon_count: each photon independently goes to the tap with probability
// `fraction`. expected_value: the tap carries exactly intensity*fraction and
// the through beam intensity*(1-fraction); no randomness is consumed.
// fraction 0 and 1 are handled exactly and consume no randomness in either
// mode. Throws std::invalid_argument for fraction outside [0, 1].
SplitResult split(const Beam& beam, double fraction, RandomStream& rng);

// Lossy transmission: each photon survives with probability 1-loss
// (photon_count) or the intensity scales by 1-loss (expected_value).
// loss == 0 returns the beam unchanged. Throws for loss outside [0, 1].
Beam transmit(const Beam& beam, double loss, RandomStream& rng);

enum class TapStage : int { bob_first = 0, alice_second = 1, bob_third = 2 };

const char* tap_stage_name(TapStage stage);

// One intensity observation. The tap pair is what the diverted detector arm
// reads; the arrival pair books the full beam reaching the party against the
// announced baseline, and is what the eavesdropping check evaluates (in
// expected_value mode the two ratios coincide; in photon_count mode the tap
// count is binomially noisy while arrival accounting is exact).
struct TapReading {
  TapStage stage = TapStage::bob_first;
  double expected_tap = 0.0;
  double observed_tap = 0.0;
  double expected_arrival = 0.0;
  double observed_arrival = 0.0;

  bool operator==(const TapReading&) const = default;
};

// Detection condition: a reading fails when a genuine deficit exists and the
// intensity reduction factor reaches the detector resolution. A resolution-r
// detector flags observed*r <= expected (so a reduction exactly at the
// detector's limit, e.g. a halving seen by an r=2 detector, is detected);
// r must be >= 1 and r=1 models an ideal detector that flags any deficit.
// Comparisons use a 1e-9 relative slack so exact-ratio boundaries are stable
// under floating-point chain arithmetic. Returns true when the reading
// passes. Throws std::invalid_argument for resolution < 1.
bool intensity_check(double expected, double observed, double resolution);

inline bool intensity_check(const TapReading& reading, double resolution) {
  return intensity_check(reading.expected_arrival, reading.observed_arrival,
                         resolution);
}

}  // namespace iaqc
