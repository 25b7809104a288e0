#pragma once

#include <array>

#include "vecpr/field.hpp"
#include "vecpr/image.hpp"

namespace vecpr {

/// Amplitude of the generalized pupil function on the aperture.
struct AmplitudeSpec {
  enum class Kind {
    Uniform,             // 1 on the mask
    TruncatedGaussian,   // isotropic Gaussian, 1 at center, 0.5 at the rim
    Custom,              // user-supplied nonnegative image
  };
  Kind kind = Kind::TruncatedGaussian;
  RealImage custom;

  static AmplitudeSpec uniform() { return {Kind::Uniform, {}}; }
  static AmplitudeSpec truncated_gaussian() { return {Kind::TruncatedGaussian, {}}; }
  static AmplitudeSpec custom_image(RealImage img) { return {Kind::Custom, std::move(img)}; }
};

/// Pupil-plane geometry of a high-NA system: the aperture disk of radius
/// NA in normalized coordinates, the unit wave vector (kx, ky, kz) at
/// each aperture point, the six polarisation maps E_c derived from it,
/// and the GPF amplitude. All maps are zero off the mask.
struct ApertureModel {
  int n = 0;
  double na = 0;
  double wavelength = 0;  // um
  double pixel_size = 0;  // um, image-plane sampling; metadata only
  double fill = 0.5;      // fraction of the grid spanned by the mask diameter
  double delta = 0;       // pupil-plane step per pixel

  MaskImage mask;
  RealImage kx, ky, kz;
  std::array<RealImage, 6> E;  // indexed by Channel
  RealImage amplitude;

  const RealImage& pol(Channel c) const { return E[static_cast<size_t>(c)]; }

  bool on_mask(int i, int j) const { return mask(i, j) != 0; }
  int mask_pixel_count() const;

  /// Axial depth of focus, the diversity spacing unit.
  double depth_of_focus() const { return wavelength / (na * na); }
};

/// Builds the aperture geometry. Pupil coordinates are scaled so the
/// mask disk x^2 + y^2 <= NA^2 spans `fill` of the grid diameter; on the
/// mask kx = x, ky = y, kz = sqrt(1 - x^2 - y^2).
ApertureModel build_aperture(int n, double na, double wavelength, double pixel_size,
                             const AmplitudeSpec& amplitude = {}, double fill = 0.5);

/// Defocus phase at axial offset z (um): (2*pi/lambda) * z * kz on the
/// mask, zero outside.
RealImage defocus_diversity(const ApertureModel& ap, double z_um);

/// Diversity maps for m planes spaced one step_dof apart and centered on
/// focus: z_d = (d - (m-1)/2) * step_dof * DOF.
std::vector<RealImage> defocus_stack(const ApertureModel& ap, int m, double step_dof = 1.0);

/// Lifts a scalar pupil into H: channel c = E_c * pupil. The result lies
/// in the subspace Omega_0 by construction.
SixChannelField embed_pupil(const ApertureModel& ap, const ComplexImage& pupil);

}  // namespace vecpr
