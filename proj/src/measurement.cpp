#include "vecpr/measurement.hpp"

#include <stdexcept>

#include "vecpr/psf.hpp"

namespace vecpr {

void MeasurementSet::validate() const {
  if (intensities.empty()) throw std::invalid_argument("MeasurementSet: m must be >= 1");
  if (diversities.size() != intensities.size())
    throw std::invalid_argument("MeasurementSet: diversity count mismatch");
  const int nn = intensities[0].n();
  for (const auto& r : intensities) {
    if (r.n() != nn) throw std::invalid_argument("MeasurementSet: grid mismatch");
    for (double v : r)
      if (!(v >= 0.0)) throw std::invalid_argument("MeasurementSet: negative intensity");
  }
  for (const auto& phi : diversities)
    if (phi.n() != nn) throw std::invalid_argument("MeasurementSet: grid mismatch");
}

MeasurementSet simulate_stack(const ApertureModel& ap, const RealImage& phase,
                              const std::vector<RealImage>& diversities) {
  if (diversities.empty()) throw std::invalid_argument("simulate_stack: need m >= 1 diversities");
  MeasurementSet ms;
  ms.diversities = diversities;
  ms.intensities.reserve(diversities.size());
  ms.energy_scale.reserve(diversities.size());
  for (const auto& phi_d : diversities) {
    RealImage r = vectorial_psf(ap, phase, phi_d);
    const double energy = sum(r);
    if (!(energy > 0.0)) throw std::runtime_error("simulate_stack: zero-energy image");
    for (double& v : r) v /= energy;
    ms.energy_scale.push_back(energy);
    ms.intensities.push_back(std::move(r));
  }
  return ms;
}

RealImage scaled_amplitude(const ApertureModel& ap, const MeasurementSet& ms) {
  double mean_energy = 0;
  if (ms.energy_scale.empty()) {
    mean_energy = 1.0;
  } else {
    for (double e : ms.energy_scale) mean_energy += e;
    mean_energy /= static_cast<double>(ms.energy_scale.size());
  }
  RealImage ahat = ap.amplitude;
  const double s = 1.0 / std::sqrt(mean_energy);
  for (double& v : ahat) v *= s;
  return ahat;
}

}  // namespace vecpr
