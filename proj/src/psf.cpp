#include "vecpr/psf.hpp"

#include <stdexcept>

#include "vecpr/fft.hpp"

namespace vecpr {

namespace {

ComplexImage masked_gpf(const ApertureModel& ap, const RealImage& phase,
                        const RealImage& diversity) {
  if (phase.n() != ap.n || diversity.n() != ap.n)
    throw std::invalid_argument("psf: phase/diversity grid mismatch");
  ComplexImage gpf(ap.n);
  for (int i = 0; i < ap.n; ++i)
    for (int j = 0; j < ap.n; ++j)
      if (ap.on_mask(i, j))
        gpf(i, j) = std::polar(ap.amplitude(i, j), phase(i, j) + diversity(i, j));
  return gpf;
}

}  // namespace

RealImage vectorial_psf(const ApertureModel& ap, const RealImage& phase,
                        const RealImage& diversity) {
  const ComplexImage gpf = masked_gpf(ap, phase, diversity);
  RealImage intensity(ap.n);
  ComplexImage weighted(ap.n);
  for (size_t c = 0; c < 6; ++c) {
    const RealImage& e = ap.E[c];
    for (size_t i = 0; i < weighted.size(); ++i) weighted[i] = e[i] * gpf[i];
    const ComplexImage spec = fft2_centered(weighted);
    for (size_t i = 0; i < intensity.size(); ++i) intensity[i] += std::norm(spec[i]);
  }
  return intensity;
}

RealImage scalar_psf(const ApertureModel& ap, const RealImage& phase,
                     const RealImage& diversity) {
  const ComplexImage spec = fft2_centered(masked_gpf(ap, phase, diversity));
  RealImage intensity(ap.n);
  for (size_t i = 0; i < intensity.size(); ++i) intensity[i] = std::norm(spec[i]);
  return intensity;
}

}  // namespace vecpr
