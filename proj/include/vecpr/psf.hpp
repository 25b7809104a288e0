#pragma once

#include "vecpr/aperture.hpp"

namespace vecpr {

/// Vectorial PSF: I = sum_c |F(E_c * A * exp(j*(phase + diversity)))|^2.
/// The six constituent PSFs are added incoherently (unpolarised light).
/// Total energy equals 2*||A||^2 under the unitary FFT.
RealImage vectorial_psf(const ApertureModel& ap, const RealImage& phase,
                        const RealImage& diversity);

/// Scalar (Fresnel) PSF: |F(A * exp(j*(phase + diversity)))|^2, energy ||A||^2.
RealImage scalar_psf(const ApertureModel& ap, const RealImage& phase,
                     const RealImage& diversity);

}  // namespace vecpr
