#pragma once

#include <vector>

#include "vecpr/aperture.hpp"
#include "vecpr/image.hpp"

namespace vecpr {

/// m intensity measurements r_d with their phase diversities phi_d.
/// Intensities are nonnegative (noisy pixels are clipped at zero for
/// projector consumption); the raw noise realization, when present, is
/// kept in noise_record for diagnostics.
struct MeasurementSet {
  std::vector<RealImage> intensities;   // r_d >= 0
  std::vector<RealImage> diversities;   // phi_d, zero off mask
  std::vector<RealImage> noise_record;  // raw w_d, empty when noiseless
  std::vector<double> energy_scale;     // divisor applied per image for unit energy

  int m() const { return static_cast<int>(intensities.size()); }
  int n() const { return intensities.empty() ? 0 : intensities[0].n(); }

  void validate() const;
};

/// Simulates a measurement stack from ground truth: r_d is the vectorial
/// PSF at each diversity, scaled to unit total energy (noise is added
/// separately). energy_scale records the divisors.
MeasurementSet simulate_stack(const ApertureModel& ap, const RealImage& phase,
                              const std::vector<RealImage>& diversities);

/// The GPF amplitude consistent with the stack's unit-energy scaling:
/// A / sqrt(mean energy_scale). The ground-truth field embed_pupil(ahat *
/// exp(j*phase)) then satisfies every intensity constraint of a noiseless
/// stack.
RealImage scaled_amplitude(const ApertureModel& ap, const MeasurementSet& ms);

}  // namespace vecpr
